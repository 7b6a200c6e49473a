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

// Frozen values computed by the straight-line oracle (tests/support/oracle.cpp)
// before the library was written, cross-checked against published vectors.
// The worked-example trace pins every round register, so the classic
// off-by-one mistakes (final swap, round-1 subkey timing) cannot pass.

namespace tdescope::fixtures {

// DES worked example: key 0x133457799BBCDFF1, plaintext 0x0123456789ABCDEF.
inline constexpr uint64_t kWorkedKey = 0x133457799BBCDFF1ull;
inline constexpr uint64_t kWorkedPlaintext = 0x0123456789ABCDEFull;
inline constexpr uint64_t kWorkedCiphertext = 0x85E813540F0AB405ull;
inline constexpr uint64_t kWorkedIpOutput = 0xCC00CCFFF0AAF0AAull;
inline constexpr uint64_t kWorkedPreoutput = 0x0A4CD99543423234ull;

inline constexpr std::array<uint32_t, 17> kWorkedL = {
    0xCC00CCFF, 0xF0AAF0AA, 0xEF4A6544, 0xCC017709, 0xA25C0BF4, 0x77220045,
    0x8A4FA637, 0xE967CD69, 0x064ABA10, 0xD5694B90, 0x247CC67A, 0xB7D5D7B2,
    0xC5783C78, 0x75BD1858, 0x18C3155A, 0xC28C960D, 0x43423234};

inline constexpr std::array<uint32_t, 17> kWorkedR = {
    0xF0AAF0AA, 0xEF4A6544, 0xCC017709, 0xA25C0BF4, 0x77220045, 0x8A4FA637,
    0xE967CD69, 0x064ABA10, 0xD5694B90, 0x247CC67A, 0xB7D5D7B2, 0xC5783C78,
    0x75BD1858, 0x18C3155A, 0xC28C960D, 0x43423234, 0x0A4CD995};

inline constexpr std::array<uint32_t, 17> kWorkedC = {
    0xF0CCAAF, 0xE19955F, 0xC332ABF, 0x0CCAAFF, 0x332ABFC, 0xCCAAFF0,
    0x32ABFC3, 0xCAAFF0C, 0x2ABFC33, 0x557F866, 0x55FE199, 0x57F8665,
    0x5FE1995, 0x7F86655, 0xFE19955, 0xF866557, 0xF0CCAAF};

inline constexpr std::array<uint32_t, 17> kWorkedD = {
    0x556678F, 0xAACCF1E, 0x5599E3D, 0x56678F5, 0x599E3D5, 0x6678F55,
    0x99E3D55, 0x678F556, 0x9E3D559, 0x3C7AAB3, 0xF1EAACC, 0xC7AAB33,
    0x1EAACCF, 0x7AAB33C, 0xEAACCF1, 0xAAB33C7, 0x556678F};

inline constexpr std::array<uint64_t, 16> kWorkedSubkeys = {
    0x1B02EFFC7072ull, 0x79AED9DBC9E5ull, 0x55FC8A42CF99ull, 0x72ADD6DB351Dull,
    0x7CEC07EB53A8ull, 0x63A53E507B2Full, 0xEC84B7F618BCull, 0xF78A3AC13BFBull,
    0xE0DBEBEDE781ull, 0xB1F347BA464Full, 0x215FD3DED386ull, 0x7571F59467E9ull,
    0x97C5D1FABA41ull, 0x5F43B7F2E73Aull, 0xBF918D3D3F0Aull, 0xCB3D8B0E17F5ull};

// All-zero key normalized to odd parity, all-zero plaintext.
inline constexpr uint64_t kZeroKeyFixed = 0x0101010101010101ull;
inline constexpr uint64_t kZeroCiphertext = 0x8CA64DE9C1B123A7ull;

// Three-key EDE fixture: the user-facing compound operation chained through
// the oracle, matching the published three-key vectors.
inline constexpr uint64_t kTdeaK1 = 0x0123456789ABCDEFull;
inline constexpr uint64_t kTdeaK2 = 0x23456789ABCDEF01ull;
inline constexpr uint64_t kTdeaK3 = 0x456789ABCDEF0123ull;
inline constexpr uint64_t kTdeaPlaintext = 0x5468652071756663ull;
inline constexpr uint64_t kTdeaEdeCiphertext = 0xA826FD8CE53B855Full;

// Published single-DES known answers used as an extra transcription guard.
struct PublishedKat {
    uint64_t key;
    uint64_t plaintext;
    uint64_t ciphertext;
};

inline constexpr std::array<PublishedKat, 3> kPublishedKats = {{
    {0x0101010101010101ull, 0x8000000000000000ull, 0x95F8A5E5DD31D900ull},
    {0x8001010101010101ull, 0x0000000000000000ull, 0x95A8D72813DAA94Dull},
    {0x7CA110454A1A6E57ull, 0x01A1D6D039776742ull, 0x690F5B0D9A26939Bull},
}};

}  // namespace tdescope::fixtures
