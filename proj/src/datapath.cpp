/*
 * Copyright 2026 The tdescope Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "tdescope/datapath.hpp"

#include <sstream>

#include "tdescope/errors.hpp"

namespace tdescope::sim {

namespace {

// Encryption rotates the key halves left by the published schedule. The
// decryption walk starts from C16 = C0 (the rotations sum to 28) and
// rotates right, so round i reproduces subkey 17-i without precomputing
// the schedule.
constexpr std::array<int, 16> kDecryptRotations = {0, 1, 2, 2, 2, 2, 2, 2,
                                                   1, 2, 2, 2, 2, 2, 2, 1};

constexpr uint32_t rotl28(uint32_t half, int amount) {
    return amount == 0 ? half : ((half << amount) | (half >> (28 - amount))) & 0x0FFFFFFFu;
}

constexpr uint32_t rotr28(uint32_t half, int amount) {
    return amount == 0 ? half : ((half >> amount) | (half << (28 - amount))) & 0x0FFFFFFFu;
}

}  // namespace

std::string_view to_string(Operation operation) {
    switch (operation) {
        case Operation::DesEncrypt: return "des-encrypt";
        case Operation::DesDecrypt: return "des-decrypt";
        case Operation::TdeaEncrypt: return "tdea-encrypt";
        default: return "tdea-decrypt";
    }
}

DatapathEngine::DatapathEngine(const EngineConfig& config, Block64 block)
    : operation_(config.operation) {
    const bool wants_single = config.operation == Operation::DesEncrypt ||
                              config.operation == Operation::DesDecrypt;
    if (wants_single != std::holds_alternative<Key64>(config.key_material)) {
        throw UsageError(std::string(to_string(config.operation)) +
                         (wants_single ? " requires a single key" : " requires a three-key bundle"));
    }

    switch (config.operation) {
        case Operation::DesEncrypt:
            stages_ = {{std::get<Key64>(config.key_material), false}};
            break;
        case Operation::DesDecrypt:
            stages_ = {{std::get<Key64>(config.key_material), true}};
            break;
        case Operation::TdeaEncrypt: {
            const auto& b = std::get<TdeaKeyBundle>(config.key_material);
            const bool ede = b.sequence == TdeaSequence::EDE;
            stages_ = {{b.k1, false}, {b.k2, ede}, {b.k3, false}};
            break;
        }
        case Operation::TdeaDecrypt: {
            const auto& b = std::get<TdeaKeyBundle>(config.key_material);
            const bool ede = b.sequence == TdeaSequence::EDE;
            stages_ = {{b.k3, true}, {b.k2, !ede}, {b.k1, true}};
            break;
        }
    }

    trace_.states.reserve(stages_.size() * 17);
    load_stage(block);
}

void DatapathEngine::load_stage(Block64 block) {
    const uint64_t ip = initial_permutation(block).bits;
    l_ = static_cast<uint32_t>(ip >> 32);
    r_ = static_cast<uint32_t>(ip);

    const uint64_t cd =
        permute({stages_[static_cast<size_t>(stage_ - 1)].key.bits, 64}, tables::permuted_choice_1())
            .bits;
    c_ = static_cast<uint32_t>(cd >> 28);
    d_ = static_cast<uint32_t>(cd) & 0x0FFFFFFFu;
    subkey_ = Subkey48{0};
    round_ = 0;
    trace_.states.push_back(current_state());
}

RoundRegisterState DatapathEngine::current_state() const {
    return RoundRegisterState{round_, stage_, Half32{l_}, Half32{r_}, c_, d_, subkey_};
}

void DatapathEngine::apply_fault(std::string_view signal, uint64_t& value, int width) {
    if (!fault_) return;
    const int global_round = (stage_ - 1) * 16 + round_;
    if (fault_->round != global_round || fault_->signal != signal) return;
    if (fault_->bit < 1 || fault_->bit > width) {
        throw EngineError("fault bit " + std::to_string(fault_->bit) + " outside 1.." +
                          std::to_string(width));
    }
    value ^= uint64_t{1} << (width - fault_->bit);
}

RoundRegisterState DatapathEngine::step() {
    if (done_) {
        throw EngineError("engine complete: " + std::string(to_string(operation_)) +
                          " consumed all " + std::to_string(cycles_) + " rounds");
    }

    ++round_;
    const StagePlan& plan = stages_[static_cast<size_t>(stage_ - 1)];
    if (plan.decrypt) {
        const int amount = kDecryptRotations[static_cast<size_t>(round_ - 1)];
        c_ = rotr28(c_, amount);
        d_ = rotr28(d_, amount);
    } else {
        const int amount = tables::rotation_schedule()[static_cast<size_t>(round_ - 1)];
        c_ = rotl28(c_, amount);
        d_ = rotl28(d_, amount);
    }
    const uint64_t merged = (static_cast<uint64_t>(c_) << 28) | d_;
    uint64_t subkey = permute({merged, 56}, tables::permuted_choice_2()).bits;
    apply_fault("SUBKEY", subkey, 48);
    subkey_ = Subkey48{subkey};

    uint64_t next_r = l_ ^ feistel_f(Half32{r_}, subkey_).bits;
    uint64_t next_l = r_;
    apply_fault("L", next_l, 32);
    apply_fault("R", next_r, 32);
    l_ = static_cast<uint32_t>(next_l);
    r_ = static_cast<uint32_t>(next_r);

    ++cycles_;
    trace_.states.push_back(current_state());

    if (round_ == 16) {
        if (stage_ < static_cast<int>(stages_.size())) {
            // Combinational handoff: FP of this pass feeds the next pass's
            // IP within the same cycle, and the key path switches to the
            // next key's PC-1 output.
            const uint64_t preoutput = (static_cast<uint64_t>(r_) << 32) | l_;
            const Block64 intermediate = final_permutation(Block64{preoutput});
            ++stage_;
            load_stage(intermediate);
        } else {
            done_ = true;
            trace_.preoutput = Block64{(static_cast<uint64_t>(r_) << 32) | l_};
            trace_.output = final_permutation(trace_.preoutput);
            trace_.cycles = cycles_;
        }
    }
    return trace_.states.back();
}

std::pair<Block64, DatapathTrace> DatapathEngine::run_to_completion() {
    while (!done_) step();
    return {trace_.output, trace_};
}

SignalValue DatapathEngine::probe(std::string_view signal_name) const {
    if (signal_name == "L") return {"L", l_, 32};
    if (signal_name == "R") return {"R", r_, 32};
    if (signal_name == "C") return {"C", c_, 28};
    if (signal_name == "D") return {"D", d_, 28};
    if (signal_name == "SUBKEY") return {"SUBKEY", subkey_.bits, 48};
    if (signal_name == "ROUND") return {"ROUND", static_cast<uint64_t>(round_), 0};
    if (signal_name == "STAGE") return {"STAGE", static_cast<uint64_t>(stage_), 0};
    if (signal_name == "CYCLES") return {"CYCLES", static_cast<uint64_t>(cycles_), 0};
    if (signal_name == "DONE") return {"DONE", done_ ? 1u : 0u, 1};
    throw EngineError("unknown signal '" + std::string(signal_name) +
                      "'; valid signals: L, R, C, D, SUBKEY, ROUND, STAGE, CYCLES, DONE");
}

std::string trace_to_text(const DatapathTrace& trace) {
    std::ostringstream os;
    for (const RoundRegisterState& s : trace.states) {
        os << "round=" << (s.round < 10 ? "0" : "") << s.round << " stage=" << s.stage
           << " l=" << to_hex(s.l) << " r=" << to_hex(s.r) << " c=" << to_hex(s.c, 7)
           << " d=" << to_hex(s.d, 7) << " subkey=" << to_hex(s.subkey) << '\n';
    }
    os << "preoutput=" << to_hex(trace.preoutput) << '\n';
    os << "output=" << to_hex(trace.output) << '\n';
    os << "cycles=" << trace.cycles << '\n';
    return os.str();
}

nlohmann::json trace_to_json(const DatapathTrace& trace) {
    nlohmann::json states = nlohmann::json::array();
    for (const RoundRegisterState& s : trace.states) {
        states.push_back({{"round", s.round},
                          {"stage", s.stage},
                          {"l", to_hex(s.l)},
                          {"r", to_hex(s.r)},
                          {"c", to_hex(s.c, 7)},
                          {"d", to_hex(s.d, 7)},
                          {"subkey", to_hex(s.subkey)}});
    }
    return nlohmann::json{{"states", std::move(states)},
                          {"preoutput", to_hex(trace.preoutput)},
                          {"output", to_hex(trace.output)},
                          {"cycles", trace.cycles}};
}

}  // namespace tdescope::sim
