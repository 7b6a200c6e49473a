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

#include "tdescope/bits.hpp"

#include <stdexcept>

namespace tdescope {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(uint64_t value, int digits) {
    static const char* kDigits = "0123456789ABCDEF";
    std::string out(static_cast<size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
        out[static_cast<size_t>(i)] = kDigits[value & 0xF];
        value >>= 4;
    }
    return out;
}

bool is_hex(std::string_view text) {
    if (text.empty()) return false;
    for (char c : text) {
        if (hex_value(c) < 0) return false;
    }
    return true;
}

uint64_t parse_hex(std::string_view text, int digits) {
    if (static_cast<int>(text.size()) != digits) {
        throw std::invalid_argument("expected " + std::to_string(digits) +
                                    " hex digits, got " + std::to_string(text.size()));
    }
    uint64_t value = 0;
    for (char c : text) {
        const int v = hex_value(c);
        if (v < 0) throw std::invalid_argument(std::string("invalid hex digit '") + c + "'");
        value = (value << 4) | static_cast<uint64_t>(v);
    }
    return value;
}

Block64 block_from_bytes(std::span<const uint8_t, 8> bytes) {
    uint64_t v = 0;
    for (uint8_t b : bytes) v = (v << 8) | b;
    return Block64{v};
}

void block_to_bytes(Block64 block, std::span<uint8_t, 8> out) {
    for (int i = 7; i >= 0; --i) {
        out[static_cast<size_t>(i)] = static_cast<uint8_t>(block.bits & 0xFF);
        block.bits >>= 8;
    }
}

}  // namespace tdescope
