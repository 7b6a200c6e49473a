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

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace tdescope::tables {

/// A table-driven bit selection: output bit j is input bit sources[j-1].
/// Bijective tables (IP, FP, P) are permutations of 1..input_width;
/// selection tables (E, PC-1, PC-2) may repeat or drop positions.
struct PermutationSpec {
    std::string_view name;
    int input_width;
    int output_width;
    std::span<const uint8_t> sources;
};

/// One 6-bit to 4-bit substitution box: 4 rows x 16 columns. The row is
/// addressed by the outer two input bits, the column by the inner four.
struct SBox {
    int index;  // 1..8
    std::array<uint8_t, 64> entries;  // row-major
    uint8_t lookup(int row, int col) const {
        return entries[static_cast<size_t>(row * 16 + col)];
    }
};

const PermutationSpec& initial_permutation();  // IP, 64 -> 64
const PermutationSpec& final_permutation();    // FP = IP^-1, 64 -> 64
const PermutationSpec& expansion();            // E, 32 -> 48
const PermutationSpec& round_permutation();    // P, 32 -> 32
const PermutationSpec& permuted_choice_1();    // PC-1, 64 -> 56
const PermutationSpec& permuted_choice_2();    // PC-2, 56 -> 48

/// Left-rotation amounts for rounds 1..16 of the key schedule.
std::span<const int, 16> rotation_schedule();

const std::array<SBox, 8>& sboxes();

/// Canonical text rendering of every table above. data/fips_tables.txt
/// holds exactly this text; its CRC-32 is pinned in the file header and
/// re-verified by the test suite.
std::string canonical_text();
uint32_t canonical_crc32();

}  // namespace tdescope::tables
