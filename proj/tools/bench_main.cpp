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

// Side-by-side throughput comparison: table-driven reference, compiled
// fast path, OpenMP bulk kernel, and the clocked datapath model.

#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "tdescope/harness.hpp"

int main(int argc, char** argv) {
    CLI::App app{"engine throughput comparison"};
    std::int64_t blocks = 200000;
    std::int64_t datapath_blocks = 20000;
    app.add_option("--count", blocks, "blocks per engine (default 200000)");
    app.add_option("--datapath-count", datapath_blocks,
                   "blocks for the datapath engine (default 20000; it keeps full traces)");
    CLI11_PARSE(app, argc, argv);

    using tdescope::sim::Operation;
    using tdescope::vio::BenchEngine;
    using tdescope::vio::BenchmarkReport;
    using tdescope::vio::run_benchmark;

#ifdef _OPENMP
    std::printf("# OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("# OpenMP not enabled; bulk kernels run serially\n");
#endif
    std::printf("# %-14s %-9s %12s %10s %14s %10s\n", "operation", "engine", "blocks", "seconds",
                "blocks/s", "vs ref");

    for (Operation operation : {Operation::DesEncrypt, Operation::TdeaEncrypt}) {
        double reference_rate = 0.0;
        for (BenchEngine engine : {BenchEngine::OneShot, BenchEngine::Fast, BenchEngine::BulkOmp,
                                   BenchEngine::Datapath}) {
            const std::int64_t n = engine == BenchEngine::Datapath ? datapath_blocks : blocks;
            const BenchmarkReport report = run_benchmark(operation, n, engine);
            if (engine == BenchEngine::OneShot) reference_rate = report.blocks_per_second;
            std::printf("%-16s %-9s %12lld %10.4f %14.0f %9.2fx\n", report.operation.c_str(),
                        report.engine.c_str(), static_cast<long long>(report.blocks),
                        report.seconds, report.blocks_per_second,
                        report.blocks_per_second / reference_rate);
        }
    }
    return EXIT_SUCCESS;
}
