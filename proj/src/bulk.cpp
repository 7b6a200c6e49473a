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

#include "tdescope/bulk.hpp"

#include <cassert>
#include <cstdint>

namespace tdescope::bulk {

namespace {

using EcbFn = Block64 (*)(Block64, const KeySchedule&);
using TdeaEcbFn = Block64 (*)(Block64, const TdeaKeyBundle&);

// Touch the lazily compiled lookup tables once before entering a parallel
// region so worker threads never contend on the first-use initialization.
void warm_tables(const KeySchedule& schedule) {
    (void)fast::encrypt_block(Block64{0}, schedule);
}

}  // namespace

void ecb_encrypt(std::span<const Block64> in, std::span<Block64> out,
                 const KeySchedule& schedule) {
    assert(in.size() == out.size());
    warm_tables(schedule);
    const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = fast::encrypt_block(in[static_cast<size_t>(i)], schedule);
    }
}

void ecb_decrypt(std::span<const Block64> in, std::span<Block64> out,
                 const KeySchedule& schedule) {
    assert(in.size() == out.size());
    warm_tables(schedule);
    const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = fast::decrypt_block(in[static_cast<size_t>(i)], schedule);
    }
}

void tdea_ecb_encrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle) {
    assert(in.size() == out.size());
    warm_tables(bundle.schedule1);
    const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = fast::tdea_encrypt_block(in[static_cast<size_t>(i)], bundle);
    }
}

void tdea_ecb_decrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle) {
    assert(in.size() == out.size());
    warm_tables(bundle.schedule1);
    const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<size_t>(i)] = fast::tdea_decrypt_block(in[static_cast<size_t>(i)], bundle);
    }
}

void cbc_encrypt(std::span<const Block64> in, std::span<Block64> out, const KeySchedule& schedule,
                 Block64 iv) {
    assert(in.size() == out.size());
    Block64 feedback = iv;
    for (size_t i = 0; i < in.size(); ++i) {
        feedback = fast::encrypt_block(Block64{in[i].bits ^ feedback.bits}, schedule);
        out[i] = feedback;
    }
}

void tdea_cbc_encrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle, Block64 iv) {
    assert(in.size() == out.size());
    Block64 feedback = iv;
    for (size_t i = 0; i < in.size(); ++i) {
        feedback = fast::tdea_encrypt_block(Block64{in[i].bits ^ feedback.bits}, bundle);
        out[i] = feedback;
    }
}

void cbc_decrypt(std::span<const Block64> in, std::span<Block64> out, const KeySchedule& schedule,
                 Block64 iv) {
    assert(in.size() == out.size());
    warm_tables(schedule);
    const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const size_t idx = static_cast<size_t>(i);
        const uint64_t previous = idx == 0 ? iv.bits : in[idx - 1].bits;
        out[idx] = Block64{fast::decrypt_block(in[idx], schedule).bits ^ previous};
    }
}

void tdea_cbc_decrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle, Block64 iv) {
    assert(in.size() == out.size());
    warm_tables(bundle.schedule1);
    const auto n = static_cast<std::int64_t>(in.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const size_t idx = static_cast<size_t>(i);
        const uint64_t previous = idx == 0 ? iv.bits : in[idx - 1].bits;
        out[idx] = Block64{fast::tdea_decrypt_block(in[idx], bundle).bits ^ previous};
    }
}

}  // namespace tdescope::bulk
