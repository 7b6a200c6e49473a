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
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace tdescope {

// Bit positions follow the convention of the published cipher tables:
// bit 1 is the most significant bit of a W-bit word, bit W the least
// significant. All hex I/O is big-endian, so the first hex byte of a
// rendered block holds bits 1..8.

constexpr uint64_t width_mask(int width) {
    return width >= 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
}

/// Extract bit `pos` (1-based, MSB-first) from a `width`-bit word.
constexpr uint64_t get_bit(uint64_t word, int width, int pos) {
    return (word >> (width - pos)) & uint64_t{1};
}

/// Return `word` with bit `pos` (1-based, MSB-first) set to `bit`.
constexpr uint64_t set_bit(uint64_t word, int width, int pos, uint64_t bit) {
    const uint64_t m = uint64_t{1} << (width - pos);
    return bit ? (word | m) : (word & ~m);
}

/// A bit string of explicit width, the operand type of the generic
/// table-driven permute.
struct BitWord {
    uint64_t bits = 0;
    int width = 0;
    friend bool operator==(const BitWord&, const BitWord&) = default;
};

/// 64-bit cipher block.
struct Block64 {
    uint64_t bits = 0;
    friend auto operator<=>(const Block64&, const Block64&) = default;
};

/// 32-bit half block (L or R register).
struct Half32 {
    uint32_t bits = 0;
    friend auto operator<=>(const Half32&, const Half32&) = default;
};

/// 64-bit key including the 8 parity bits (bits 8, 16, ..., 64).
struct Key64 {
    uint64_t bits = 0;
    friend auto operator<=>(const Key64&, const Key64&) = default;
};

/// 48-bit round subkey, stored in the low 48 bits.
struct Subkey48 {
    uint64_t bits = 0;
    friend auto operator<=>(const Subkey48&, const Subkey48&) = default;
};

/// The 16 round subkeys derived from one key, in encryption order.
/// Equality compares the derived subkeys only: keys differing in parity
/// bits produce equal schedules.
struct KeySchedule {
    std::array<Subkey48, 16> subkeys{};
    Key64 source_key{};

    friend bool operator==(const KeySchedule& a, const KeySchedule& b) {
        return a.subkeys == b.subkeys;
    }
};

/// Fixed-width uppercase hex rendering.
std::string to_hex(uint64_t value, int digits);

inline std::string to_hex(Block64 b) { return to_hex(b.bits, 16); }
inline std::string to_hex(Key64 k) { return to_hex(k.bits, 16); }
inline std::string to_hex(Half32 h) { return to_hex(h.bits, 8); }
inline std::string to_hex(Subkey48 k) { return to_hex(k.bits, 12); }

/// True iff `text` consists only of hex digits (either case).
bool is_hex(std::string_view text);

/// Parse exactly `digits` hex digits (case-insensitive). Throws
/// std::invalid_argument on bad characters or wrong length.
uint64_t parse_hex(std::string_view text, int digits);

inline Block64 block_from_hex(std::string_view text) { return Block64{parse_hex(text, 16)}; }
inline Key64 key_from_hex(std::string_view text) { return Key64{parse_hex(text, 16)}; }

/// First byte carries bits 1..8, matching the hex rendering.
Block64 block_from_bytes(std::span<const uint8_t, 8> bytes);
void block_to_bytes(Block64 block, std::span<uint8_t, 8> out);

}  // namespace tdescope
