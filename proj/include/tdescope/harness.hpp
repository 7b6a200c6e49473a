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

#include <cstdint>
#include <optional>
#include <string>

#include "tdescope/datapath.hpp"
#include "tdescope/kat.hpp"

namespace tdescope::vio {

// Drive-and-observe harness: every vector is pushed through both the
// one-shot cipher (the golden model) and the clocked datapath engine, the
// outputs are compared with each other and with the vector's expectation,
// and a golden mismatch is localized to the first divergent round by
// replaying the rounds side by side against a schedule-precomputed
// reference.

enum class Verdict { Pass, GoldenMismatch, ExpectationMismatch };

std::string_view to_string(Verdict verdict);

struct ReportEntry {
    int ordinal = 0;
    int count = 0;
    std::string label;  // e.g. "des/encrypt", "tdes-ede/decrypt"
    Block64 golden_output{};
    Block64 datapath_output{};
    std::optional<Block64> expected;
    Verdict verdict = Verdict::Pass;
    std::optional<int> first_divergent_round;  // present iff GoldenMismatch
};

struct EquivalenceReport {
    std::vector<ReportEntry> entries;
    int total = 0;
    int passed = 0;
    int golden_mismatches = 0;
    int expectation_mismatches = 0;

    bool all_pass() const { return passed == total; }
};

/// Evaluates one vector. The fault hook, when set, is installed into the
/// datapath engine only; it exists so the divergence localization can be
/// exercised deliberately.
ReportEntry drive_and_observe(const kat::TestVector& vector,
                              const std::optional<sim::FaultSpec>& fault = std::nullopt);

/// Evaluates every vector of an already-parsed corpus. Vectors are
/// independent and are processed in parallel; entries keep file order.
EquivalenceReport run_vectors(const std::vector<kat::TestVector>& vectors);

/// parse_kat + run_vectors over a file. Throws IoError when the file
/// cannot be read; parse errors propagate as KatParseError.
EquivalenceReport run_kat_file(const std::string& path);

enum class BenchEngine { OneShot, Fast, BulkOmp, Datapath };

std::string_view to_string(BenchEngine engine);
std::optional<BenchEngine> bench_engine_from_string(std::string_view name);

struct BenchmarkReport {
    std::string operation;
    std::string engine;
    std::int64_t blocks = 0;
    double seconds = 0.0;
    double blocks_per_second = 0.0;
    double bits_per_second = 0.0;  // 64 x blocks_per_second
    uint64_t checksum = 0;         // XOR of all outputs; keeps the loop live
};

/// Times the chosen engine over block_count random blocks under fixed
/// keys. A warm-up pass runs first and is excluded from the timing.
BenchmarkReport run_benchmark(sim::Operation operation, std::int64_t block_count,
                              BenchEngine engine);

}  // namespace tdescope::vio
