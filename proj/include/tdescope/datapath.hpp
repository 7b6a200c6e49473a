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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tdescope/tdes.hpp"

namespace tdescope::sim {

// Clocked model of the iterative cipher datapath: one Feistel round per
// step, with the key registers rotating alongside, so every internal
// signal of the round loop is observable between clock edges. A compound
// three-key operation runs as three chained 16-round passes; the
// final-permutation / initial-permutation handoff between passes is
// combinational and consumes no cycle.

enum class Operation { DesEncrypt, DesDecrypt, TdeaEncrypt, TdeaDecrypt };

std::string_view to_string(Operation operation);

struct EngineConfig {
    Operation operation = Operation::DesEncrypt;
    std::variant<Key64, TdeaKeyBundle> key_material;

    static EngineConfig des_encrypt(Key64 key) { return {Operation::DesEncrypt, key}; }
    static EngineConfig des_decrypt(Key64 key) { return {Operation::DesDecrypt, key}; }
    static EngineConfig tdea_encrypt(TdeaKeyBundle bundle) {
        return {Operation::TdeaEncrypt, std::move(bundle)};
    }
    static EngineConfig tdea_decrypt(TdeaKeyBundle bundle) {
        return {Operation::TdeaDecrypt, std::move(bundle)};
    }
};

/// Registers after one clock edge. Round 0 holds the post-IP halves and
/// the post-PC-1 key halves; the subkey register reads zero there.
struct RoundRegisterState {
    int round = 0;       // 0..16 within the pass
    int stage = 1;       // which single-key pass of a compound operation
    Half32 l{}, r{};
    uint32_t c = 0;      // 28-bit
    uint32_t d = 0;      // 28-bit
    Subkey48 subkey{};
    friend bool operator==(const RoundRegisterState&, const RoundRegisterState&) = default;
};

struct DatapathTrace {
    std::vector<RoundRegisterState> states;  // 17 per pass
    Block64 preoutput{};                     // R16 || L16 of the final pass
    Block64 output{};
    int cycles = 0;
};

/// Test hook: flip one bit of a named signal when the given global round
/// (1..16 per pass, counted across passes) is computed.
struct FaultSpec {
    std::string signal;  // "L", "R", or "SUBKEY"
    int round = 0;       // global round index
    int bit = 0;         // 1-based, MSB-first within the signal width
};

/// A probed register value; width 0 means the signal is a plain counter.
struct SignalValue {
    std::string name;
    uint64_t value = 0;
    int width = 0;
};

class DatapathEngine {
  public:
    /// Loads the engine to round 0: block through IP, stage-1 key through
    /// PC-1, cycle counter cleared. Throws UsageError when the key
    /// material kind does not match the operation.
    DatapathEngine(const EngineConfig& config, Block64 block);

    /// Advances exactly one round (one clock cycle) and returns the
    /// registers after the edge. At a pass boundary of a compound
    /// operation the handoff to the next pass happens combinationally
    /// within the same cycle, so the returned state is the next pass's
    /// round 0. Throws EngineError once the operation is complete.
    RoundRegisterState step();

    /// Steps until complete and returns the output with the full trace.
    std::pair<Block64, DatapathTrace> run_to_completion();

    /// Reads a named signal without advancing. Valid names: L, R, C, D,
    /// SUBKEY, ROUND, STAGE, CYCLES, DONE. Throws EngineError for
    /// anything else, listing the valid names.
    SignalValue probe(std::string_view signal_name) const;

    void inject_fault(FaultSpec fault) { fault_ = std::move(fault); }

    bool done() const { return done_; }
    int cycles() const { return cycles_; }
    const DatapathTrace& trace() const { return trace_; }

  private:
    struct StagePlan {
        Key64 key;
        bool decrypt = false;
    };

    RoundRegisterState current_state() const;
    void load_stage(Block64 block);
    void apply_fault(std::string_view signal, uint64_t& value, int width);

    std::vector<StagePlan> stages_;
    Operation operation_;
    int stage_ = 1;
    int round_ = 0;
    uint32_t l_ = 0, r_ = 0;
    uint32_t c_ = 0, d_ = 0;
    Subkey48 subkey_{};
    int cycles_ = 0;
    bool done_ = false;
    DatapathTrace trace_;
    std::optional<FaultSpec> fault_;
};

inline DatapathEngine load(const EngineConfig& config, Block64 block) {
    return DatapathEngine(config, block);
}

/// One state per line (`round= stage= l= r= c= d= subkey=`, fixed-width
/// hex) followed by preoutput, output, and cycles lines.
std::string trace_to_text(const DatapathTrace& trace);

/// Structured rendering with the same field names as the text form.
nlohmann::json trace_to_json(const DatapathTrace& trace);

}  // namespace tdescope::sim
