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
#include <span>
#include <variant>
#include <vector>

#include "tdescope/bulk.hpp"

namespace tdescope::modes {

enum class BlockMode { Ecb, Cbc };
enum class Padding { Pkcs7, None };

/// Key material for byte-stream operations: one schedule or a three-key
/// bundle, chosen once per stream.
struct CipherKeys {
    std::variant<KeySchedule, TdeaKeyBundle> material;

    static CipherKeys single(Key64 key) { return {derive_subkeys(key)}; }
    static CipherKeys triple(Key64 k1, Key64 k2, Key64 k3, TdeaSequence sequence) {
        return {make_bundle(k1, k2, k3, sequence)};
    }
};

/// PKCS#7: appends 1..8 bytes of value n; an aligned input gains a full
/// block of 0x08.
std::vector<uint8_t> pkcs7_pad(std::span<const uint8_t> data);

/// Validates and strips the pad. Throws DataError when the final byte is
/// outside 1..8 or the tail is inconsistent.
std::vector<uint8_t> pkcs7_unpad(std::span<const uint8_t> data);

/// Byte-stream encryption. ECB blocks run through the parallel kernels;
/// CBC chains sequentially from the IV. Throws DataError when padding is
/// none and the length is not a multiple of 8; UsageError when CBC has no
/// IV.
std::vector<uint8_t> encrypt_bytes(const CipherKeys& keys, std::span<const uint8_t> plaintext,
                                   BlockMode mode, Padding padding,
                                   std::optional<Block64> iv = std::nullopt);

/// Inverse of encrypt_bytes under the same configuration. Throws DataError
/// on truncated ciphertext (length not a multiple of 8) or a bad PKCS#7
/// tail.
std::vector<uint8_t> decrypt_bytes(const CipherKeys& keys, std::span<const uint8_t> ciphertext,
                                   BlockMode mode, Padding padding,
                                   std::optional<Block64> iv = std::nullopt);

}  // namespace tdescope::modes
