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
#include <vector>

// Straight-line reference implementation used only by the tests. It walks
// the published tables index by index over vectors of single bits and
// shares no machinery with the library's cipher path, so the two can be
// compared as independent routes to the same function.

namespace tdescope::test_oracle {

struct RoundTrace {
    uint64_t ip_output = 0;
    std::array<uint32_t, 17> l{};       // L0..L16
    std::array<uint32_t, 17> r{};       // R0..R16
    std::array<uint32_t, 17> c{};       // C0..C16 (28-bit)
    std::array<uint32_t, 17> d{};       // D0..D16 (28-bit)
    std::array<uint64_t, 16> subkey{};  // K1..K16 (48-bit)
    uint64_t preoutput = 0;             // R16 || L16
    uint64_t output = 0;
};

std::vector<int> to_bits(uint64_t value, int width);
uint64_t from_bits(const std::vector<int>& bits);

std::array<uint64_t, 16> subkeys(uint64_t key);

uint64_t encrypt(uint64_t key, uint64_t plaintext, RoundTrace* trace = nullptr);
uint64_t decrypt(uint64_t key, uint64_t ciphertext);

// Compound three-key operations, chained through the single-block routines.
uint64_t ede_encrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block);
uint64_t ede_decrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block);
uint64_t eee_encrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block);
uint64_t eee_decrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block);

}  // namespace tdescope::test_oracle
