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

#include "tdescope/bits.hpp"
#include "tdescope/tables.hpp"

namespace tdescope {

/// Table-driven bit selection. Output bit j is input bit sources[j].
/// Throws std::invalid_argument when the input width does not match the
/// table's input width.
BitWord permute(BitWord input, const tables::PermutationSpec& spec);

Block64 initial_permutation(Block64 block);
Block64 final_permutation(Block64 block);

/// E expansion, 32 -> 48 bits.
uint64_t expand(Half32 half);

/// Eight 6-bit groups through S1..S8, concatenated MSB-first. The high 16
/// bits of the input must be zero.
Half32 sbox_layer(uint64_t input48);

/// P permutation of a 32-bit word.
Half32 round_permutation(Half32 half);

/// The round function: P(S(E(r) ^ k)).
Half32 feistel_f(Half32 r, Subkey48 k);

/// Per-byte odd-parity verdicts. A report, never a rejection.
struct ParityReport {
    std::array<bool, 8> byte_ok{};  // byte 0 holds bits 1..8
    bool all_ok = false;
};

ParityReport key_parity_check(Key64 key);

/// Adjust the parity bit of each byte so its population count is odd.
/// The 56 key bits are untouched, so the schedule is unchanged.
Key64 fix_parity(Key64 key);

/// PC-1, sixteen rotations, PC-2. Parity bits are ignored by construction.
KeySchedule derive_subkeys(Key64 key);

Block64 des_encrypt_block(Block64 block, const KeySchedule& schedule);
Block64 des_decrypt_block(Block64 block, const KeySchedule& schedule);

/// The four keys whose schedules are sixteen copies of one subkey, making
/// encryption an involution. Comparison ignores parity bits.
std::span<const Key64, 4> weak_keys();

/// The twelve keys forming six pairs whose schedules are reverses of each
/// other. Comparison ignores parity bits.
std::span<const Key64, 12> semiweak_keys();

bool is_weak_key(Key64 key);
bool is_semiweak_key(Key64 key);

}  // namespace tdescope
