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

#include "tdescope/modes.hpp"

#include "tdescope/errors.hpp"

namespace tdescope::modes {

namespace {

std::vector<Block64> to_blocks(std::span<const uint8_t> bytes) {
    std::vector<Block64> blocks(bytes.size() / 8);
    for (size_t i = 0; i < blocks.size(); ++i) {
        blocks[i] = block_from_bytes(bytes.subspan(i * 8).first<8>());
    }
    return blocks;
}

std::vector<uint8_t> to_bytes(std::span<const Block64> blocks) {
    std::vector<uint8_t> bytes(blocks.size() * 8);
    for (size_t i = 0; i < blocks.size(); ++i) {
        block_to_bytes(blocks[i], std::span<uint8_t>(bytes).subspan(i * 8).first<8>());
    }
    return bytes;
}

Block64 require_iv(const std::optional<Block64>& iv) {
    if (!iv) throw UsageError("cbc mode requires an iv");
    return *iv;
}

}  // namespace

std::vector<uint8_t> pkcs7_pad(std::span<const uint8_t> data) {
    const auto pad = static_cast<uint8_t>(8 - data.size() % 8);
    std::vector<uint8_t> out(data.begin(), data.end());
    out.insert(out.end(), pad, pad);
    return out;
}

std::vector<uint8_t> pkcs7_unpad(std::span<const uint8_t> data) {
    if (data.empty() || data.size() % 8 != 0) {
        throw DataError("padded data length " + std::to_string(data.size()) +
                        " is not a positive multiple of 8");
    }
    const uint8_t pad = data.back();
    if (pad < 1 || pad > 8) {
        throw DataError("pad byte " + std::to_string(pad) + " outside 1..8");
    }
    for (size_t i = data.size() - pad; i < data.size(); ++i) {
        if (data[i] != pad) throw DataError("inconsistent padding tail");
    }
    return {data.begin(), data.end() - pad};
}

std::vector<uint8_t> encrypt_bytes(const CipherKeys& keys, std::span<const uint8_t> plaintext,
                                   BlockMode mode, Padding padding, std::optional<Block64> iv) {
    std::vector<uint8_t> padded;
    if (padding == Padding::Pkcs7) {
        padded = pkcs7_pad(plaintext);
    } else {
        if (plaintext.size() % 8 != 0) {
            throw DataError("input length " + std::to_string(plaintext.size()) +
                            " is not a multiple of 8 and padding is none");
        }
        padded.assign(plaintext.begin(), plaintext.end());
    }

    const std::vector<Block64> in = to_blocks(padded);
    std::vector<Block64> out(in.size());
    const bool tdea = std::holds_alternative<TdeaKeyBundle>(keys.material);
    if (mode == BlockMode::Ecb) {
        tdea ? bulk::tdea_ecb_encrypt(in, out, std::get<TdeaKeyBundle>(keys.material))
             : bulk::ecb_encrypt(in, out, std::get<KeySchedule>(keys.material));
    } else {
        const Block64 start = require_iv(iv);
        tdea ? bulk::tdea_cbc_encrypt(in, out, std::get<TdeaKeyBundle>(keys.material), start)
             : bulk::cbc_encrypt(in, out, std::get<KeySchedule>(keys.material), start);
    }
    return to_bytes(out);
}

std::vector<uint8_t> decrypt_bytes(const CipherKeys& keys, std::span<const uint8_t> ciphertext,
                                   BlockMode mode, Padding padding, std::optional<Block64> iv) {
    if (ciphertext.size() % 8 != 0) {
        throw DataError("ciphertext length " + std::to_string(ciphertext.size()) +
                        " is not a multiple of 8");
    }

    const std::vector<Block64> in = to_blocks(ciphertext);
    std::vector<Block64> out(in.size());
    const bool tdea = std::holds_alternative<TdeaKeyBundle>(keys.material);
    if (mode == BlockMode::Ecb) {
        tdea ? bulk::tdea_ecb_decrypt(in, out, std::get<TdeaKeyBundle>(keys.material))
             : bulk::ecb_decrypt(in, out, std::get<KeySchedule>(keys.material));
    } else {
        const Block64 start = require_iv(iv);
        tdea ? bulk::tdea_cbc_decrypt(in, out, std::get<TdeaKeyBundle>(keys.material), start)
             : bulk::cbc_decrypt(in, out, std::get<KeySchedule>(keys.material), start);
    }

    std::vector<uint8_t> bytes = to_bytes(out);
    if (padding == Padding::Pkcs7) return pkcs7_unpad(bytes);
    return bytes;
}

}  // namespace tdescope::modes
