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

#include <span>

#include "tdescope/fast.hpp"

namespace tdescope::bulk {

// OpenMP-parallel kernels over arrays of independent blocks. Every kernel
// produces output bit-identical to a serial loop over the reference
// single-block routines; the test suite compares the two paths directly.
// The ECB kernels accept in and out being the same span; the CBC routines
// require distinct storage because each output overwrites an input block
// a neighboring iteration still reads.

void ecb_encrypt(std::span<const Block64> in, std::span<Block64> out, const KeySchedule& schedule);
void ecb_decrypt(std::span<const Block64> in, std::span<Block64> out, const KeySchedule& schedule);

void tdea_ecb_encrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle);
void tdea_ecb_decrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle);

/// CBC encryption is a sequential recurrence; kept here so both modes live
/// behind one interface.
void cbc_encrypt(std::span<const Block64> in, std::span<Block64> out, const KeySchedule& schedule,
                 Block64 iv);
void tdea_cbc_encrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle, Block64 iv);

/// CBC decryption parallelizes: each plaintext block depends only on two
/// ciphertext blocks.
void cbc_decrypt(std::span<const Block64> in, std::span<Block64> out, const KeySchedule& schedule,
                 Block64 iv);
void tdea_cbc_decrypt(std::span<const Block64> in, std::span<Block64> out,
                      const TdeaKeyBundle& bundle, Block64 iv);

}  // namespace tdescope::bulk
