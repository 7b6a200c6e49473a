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

#include "tdescope/harness.hpp"

#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "tdescope/bulk.hpp"
#include "tdescope/errors.hpp"
#include "tdescope/fast.hpp"

namespace tdescope::vio {

namespace {

struct StageRef {
    KeySchedule schedule;
    bool decrypt = false;
};

std::vector<StageRef> reference_stages(const kat::TestVector& v) {
    if (v.algorithm == kat::Algorithm::Des) {
        return {{derive_subkeys(v.keys[0]), v.direction == kat::Direction::Decrypt}};
    }
    const KeySchedule s1 = derive_subkeys(v.keys[0]);
    const KeySchedule s2 = derive_subkeys(v.keys[1]);
    const KeySchedule s3 = derive_subkeys(v.keys[2]);
    const bool ede = v.sequence == TdeaSequence::EDE;
    if (v.direction == kat::Direction::Encrypt) {
        return {{s1, false}, {s2, ede}, {s3, false}};
    }
    return {{s3, true}, {s2, !ede}, {s1, true}};
}

Block64 golden_output(const kat::TestVector& v) {
    if (v.algorithm == kat::Algorithm::Des) {
        const KeySchedule schedule = derive_subkeys(v.keys[0]);
        return v.direction == kat::Direction::Encrypt ? des_encrypt_block(v.input, schedule)
                                                      : des_decrypt_block(v.input, schedule);
    }
    const TdeaKeyBundle bundle = make_bundle(v.keys[0], v.keys[1], v.keys[2], v.sequence);
    return v.direction == kat::Direction::Encrypt ? tdea_encrypt_block(v.input, bundle)
                                                  : tdea_decrypt_block(v.input, bundle);
}

sim::EngineConfig engine_config(const kat::TestVector& v) {
    if (v.algorithm == kat::Algorithm::Des) {
        return v.direction == kat::Direction::Encrypt
                   ? sim::EngineConfig::des_encrypt(v.keys[0])
                   : sim::EngineConfig::des_decrypt(v.keys[0]);
    }
    TdeaKeyBundle bundle = make_bundle(v.keys[0], v.keys[1], v.keys[2], v.sequence);
    return v.direction == kat::Direction::Encrypt
               ? sim::EngineConfig::tdea_encrypt(std::move(bundle))
               : sim::EngineConfig::tdea_decrypt(std::move(bundle));
}

std::string vector_label(const kat::TestVector& v) {
    std::string label{kat::to_string(v.algorithm)};
    if (v.algorithm == kat::Algorithm::Tdes) {
        label += v.sequence == TdeaSequence::EDE ? "-ede" : "-eee";
    }
    label += '/';
    label += kat::to_string(v.direction);
    return label;
}

// Replays the rounds with precomputed schedules (the opposite route to the
// engine's on-the-fly key rotations) and reports the first global round
// whose (L, R, subkey) disagree with the trace.
std::optional<int> first_divergent_round(const kat::TestVector& v, const sim::DatapathTrace& trace) {
    std::vector<sim::RoundRegisterState> round_states;
    round_states.reserve(trace.states.size());
    for (const auto& state : trace.states) {
        if (state.round >= 1) round_states.push_back(state);
    }

    int global_round = 0;
    Block64 block = v.input;
    for (const StageRef& stage : reference_stages(v)) {
        const uint64_t ip = initial_permutation(block).bits;
        uint32_t l = static_cast<uint32_t>(ip >> 32);
        uint32_t r = static_cast<uint32_t>(ip);
        for (int round = 1; round <= 16; ++round) {
            const size_t key_index = static_cast<size_t>(stage.decrypt ? 16 - round : round - 1);
            const Subkey48 subkey = stage.schedule.subkeys[key_index];
            const uint32_t next = l ^ feistel_f(Half32{r}, subkey).bits;
            l = r;
            r = next;

            const auto& observed = round_states[static_cast<size_t>(global_round)];
            ++global_round;
            if (observed.l.bits != l || observed.r.bits != r || observed.subkey != subkey) {
                return global_round;
            }
        }
        block = final_permutation(Block64{(static_cast<uint64_t>(r) << 32) | l});
    }
    return std::nullopt;
}

constexpr uint64_t kBenchSeed = 0x5EEDB10C0DE5ull;

TdeaKeyBundle bench_bundle() {
    return make_bundle(Key64{0x0123456789ABCDEFull}, Key64{0x23456789ABCDEF01ull},
                       Key64{0x456789ABCDEF0123ull}, TdeaSequence::EDE);
}

// One pass of the requested engine over the workload; returns the XOR of
// the outputs so no iteration can be optimized away.
uint64_t bench_pass(sim::Operation operation, BenchEngine engine,
                    const std::vector<Block64>& blocks, const KeySchedule& schedule,
                    const TdeaKeyBundle& bundle, std::vector<Block64>& scratch) {
    const bool tdea = operation == sim::Operation::TdeaEncrypt ||
                      operation == sim::Operation::TdeaDecrypt;
    const bool decrypt = operation == sim::Operation::DesDecrypt ||
                         operation == sim::Operation::TdeaDecrypt;

    uint64_t checksum = 0;
    switch (engine) {
        case BenchEngine::OneShot:
            for (const Block64 block : blocks) {
                const Block64 out =
                    tdea ? (decrypt ? tdea_decrypt_block(block, bundle)
                                    : tdea_encrypt_block(block, bundle))
                         : (decrypt ? des_decrypt_block(block, schedule)
                                    : des_encrypt_block(block, schedule));
                checksum ^= out.bits;
            }
            break;
        case BenchEngine::Fast:
            for (const Block64 block : blocks) {
                const Block64 out =
                    tdea ? (decrypt ? fast::tdea_decrypt_block(block, bundle)
                                    : fast::tdea_encrypt_block(block, bundle))
                         : (decrypt ? fast::decrypt_block(block, schedule)
                                    : fast::encrypt_block(block, schedule));
                checksum ^= out.bits;
            }
            break;
        case BenchEngine::BulkOmp:
            scratch.resize(blocks.size());
            if (tdea) {
                decrypt ? bulk::tdea_ecb_decrypt(blocks, scratch, bundle)
                        : bulk::tdea_ecb_encrypt(blocks, scratch, bundle);
            } else {
                decrypt ? bulk::ecb_decrypt(blocks, scratch, schedule)
                        : bulk::ecb_encrypt(blocks, scratch, schedule);
            }
            for (const Block64 out : scratch) checksum ^= out.bits;
            break;
        case BenchEngine::Datapath:
            for (const Block64 block : blocks) {
                sim::EngineConfig config = tdea ? sim::EngineConfig{operation, bundle}
                                                : sim::EngineConfig{operation, schedule.source_key};
                sim::DatapathEngine engine_instance(config, block);
                checksum ^= engine_instance.run_to_completion().first.bits;
            }
            break;
    }
    return checksum;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Pass: return "pass";
        case Verdict::GoldenMismatch: return "golden-mismatch";
        default: return "expectation-mismatch";
    }
}

ReportEntry drive_and_observe(const kat::TestVector& vector,
                              const std::optional<sim::FaultSpec>& fault) {
    ReportEntry entry;
    entry.ordinal = vector.ordinal;
    entry.count = vector.count;
    entry.label = vector_label(vector);
    entry.expected = vector.expected;
    entry.golden_output = golden_output(vector);

    sim::DatapathEngine engine(engine_config(vector), vector.input);
    if (fault) engine.inject_fault(*fault);
    auto [output, trace] = engine.run_to_completion();
    entry.datapath_output = output;

    if (entry.datapath_output != entry.golden_output) {
        entry.verdict = Verdict::GoldenMismatch;
        entry.first_divergent_round = first_divergent_round(vector, trace);
    } else if (vector.expected && *vector.expected != entry.golden_output) {
        entry.verdict = Verdict::ExpectationMismatch;
    } else {
        entry.verdict = Verdict::Pass;
    }
    return entry;
}

EquivalenceReport run_vectors(const std::vector<kat::TestVector>& vectors) {
    EquivalenceReport report;
    report.entries.resize(vectors.size());

    const auto n = static_cast<std::int64_t>(vectors.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        report.entries[static_cast<size_t>(i)] = drive_and_observe(vectors[static_cast<size_t>(i)]);
    }

    report.total = static_cast<int>(vectors.size());
    for (const ReportEntry& entry : report.entries) {
        switch (entry.verdict) {
            case Verdict::Pass: ++report.passed; break;
            case Verdict::GoldenMismatch: ++report.golden_mismatches; break;
            case Verdict::ExpectationMismatch: ++report.expectation_mismatches; break;
        }
    }
    return report;
}

EquivalenceReport run_kat_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open KAT file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return run_vectors(kat::parse_kat(buffer.str()));
}

std::string_view to_string(BenchEngine engine) {
    switch (engine) {
        case BenchEngine::OneShot: return "one-shot";
        case BenchEngine::Fast: return "fast";
        case BenchEngine::BulkOmp: return "bulk-omp";
        default: return "datapath";
    }
}

std::optional<BenchEngine> bench_engine_from_string(std::string_view name) {
    if (name == "one-shot") return BenchEngine::OneShot;
    if (name == "fast") return BenchEngine::Fast;
    if (name == "bulk-omp") return BenchEngine::BulkOmp;
    if (name == "datapath") return BenchEngine::Datapath;
    return std::nullopt;
}

BenchmarkReport run_benchmark(sim::Operation operation, std::int64_t block_count,
                              BenchEngine engine) {
    if (block_count < 1) throw UsageError("benchmark needs block_count >= 1");

    std::mt19937_64 rng(kBenchSeed);
    std::vector<Block64> blocks(static_cast<size_t>(block_count));
    for (Block64& block : blocks) block = Block64{rng()};

    const KeySchedule schedule = derive_subkeys(Key64{0x133457799BBCDFF1ull});
    const TdeaKeyBundle bundle = bench_bundle();
    std::vector<Block64> scratch;

    // Warm-up over a prefix of the workload, excluded from the timing.
    const auto warmup_count = std::min<std::int64_t>(block_count, 2048);
    std::vector<Block64> warmup(blocks.begin(), blocks.begin() + warmup_count);
    (void)bench_pass(operation, engine, warmup, schedule, bundle, scratch);

    const auto start = std::chrono::steady_clock::now();
    const uint64_t checksum = bench_pass(operation, engine, blocks, schedule, bundle, scratch);
    const auto stop = std::chrono::steady_clock::now();

    BenchmarkReport report;
    report.operation = sim::to_string(operation);
    report.engine = to_string(engine);
    report.blocks = block_count;
    report.seconds = std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
    report.blocks_per_second = static_cast<double>(block_count) / report.seconds;
    report.bits_per_second = 64.0 * report.blocks_per_second;
    report.checksum = checksum;
    return report;
}

}  // namespace tdescope::vio
