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

#include "support/oracle.hpp"

#include <cassert>

#include "tdescope/tables.hpp"

namespace tdescope::test_oracle {

namespace {

using tables::PermutationSpec;

std::vector<int> apply_table(const std::vector<int>& in, const PermutationSpec& spec) {
    assert(static_cast<int>(in.size()) == spec.input_width);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(spec.output_width));
    for (int j = 0; j < spec.output_width; ++j) {
        out.push_back(in[static_cast<size_t>(spec.sources[static_cast<size_t>(j)] - 1)]);
    }
    return out;
}

std::vector<int> rotate_left(std::vector<int> half, int amount) {
    for (int i = 0; i < amount; ++i) {
        half.push_back(half.front());
        half.erase(half.begin());
    }
    return half;
}

std::vector<int> xor_bits(const std::vector<int>& a, const std::vector<int>& b) {
    assert(a.size() == b.size());
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

std::vector<int> sbox_bits(const std::vector<int>& in48) {
    assert(in48.size() == 48);
    std::vector<int> out;
    out.reserve(32);
    for (int g = 0; g < 8; ++g) {
        const int b1 = in48[static_cast<size_t>(6 * g + 0)];
        const int b2 = in48[static_cast<size_t>(6 * g + 1)];
        const int b3 = in48[static_cast<size_t>(6 * g + 2)];
        const int b4 = in48[static_cast<size_t>(6 * g + 3)];
        const int b5 = in48[static_cast<size_t>(6 * g + 4)];
        const int b6 = in48[static_cast<size_t>(6 * g + 5)];
        const int row = 2 * b1 + b6;
        const int col = 8 * b2 + 4 * b3 + 2 * b4 + b5;
        const int value = tables::sboxes()[static_cast<size_t>(g)].lookup(row, col);
        out.push_back((value >> 3) & 1);
        out.push_back((value >> 2) & 1);
        out.push_back((value >> 1) & 1);
        out.push_back(value & 1);
    }
    return out;
}

std::vector<int> round_function(const std::vector<int>& r32, const std::vector<int>& k48) {
    const std::vector<int> expanded = apply_table(r32, tables::expansion());
    const std::vector<int> mixed = xor_bits(expanded, k48);
    const std::vector<int> substituted = sbox_bits(mixed);
    return apply_table(substituted, tables::round_permutation());
}

std::vector<std::vector<int>> subkey_bits(uint64_t key, RoundTrace* trace) {
    const std::vector<int> key_bits = to_bits(key, 64);
    const std::vector<int> pc1 = apply_table(key_bits, tables::permuted_choice_1());
    std::vector<int> c(pc1.begin(), pc1.begin() + 28);
    std::vector<int> d(pc1.begin() + 28, pc1.end());
    if (trace != nullptr) {
        trace->c[0] = static_cast<uint32_t>(from_bits(c));
        trace->d[0] = static_cast<uint32_t>(from_bits(d));
    }
    std::vector<std::vector<int>> keys;
    for (int round = 1; round <= 16; ++round) {
        const int shift = tables::rotation_schedule()[static_cast<size_t>(round - 1)];
        c = rotate_left(c, shift);
        d = rotate_left(d, shift);
        std::vector<int> cd = c;
        cd.insert(cd.end(), d.begin(), d.end());
        keys.push_back(apply_table(cd, tables::permuted_choice_2()));
        if (trace != nullptr) {
            trace->c[static_cast<size_t>(round)] = static_cast<uint32_t>(from_bits(c));
            trace->d[static_cast<size_t>(round)] = static_cast<uint32_t>(from_bits(d));
            trace->subkey[static_cast<size_t>(round - 1)] = from_bits(keys.back());
        }
    }
    return keys;
}

uint64_t crypt_block(uint64_t key, uint64_t block, bool decrypt, RoundTrace* trace) {
    const std::vector<std::vector<int>> keys = subkey_bits(key, trace);

    const std::vector<int> ip = apply_table(to_bits(block, 64), tables::initial_permutation());
    std::vector<int> l(ip.begin(), ip.begin() + 32);
    std::vector<int> r(ip.begin() + 32, ip.end());
    if (trace != nullptr) {
        trace->ip_output = from_bits(ip);
        trace->l[0] = static_cast<uint32_t>(from_bits(l));
        trace->r[0] = static_cast<uint32_t>(from_bits(r));
    }

    for (int round = 1; round <= 16; ++round) {
        const size_t key_index = static_cast<size_t>(decrypt ? 16 - round : round - 1);
        const std::vector<int> f = round_function(r, keys[key_index]);
        std::vector<int> next_r = xor_bits(l, f);
        l = r;
        r = std::move(next_r);
        if (trace != nullptr) {
            trace->l[static_cast<size_t>(round)] = static_cast<uint32_t>(from_bits(l));
            trace->r[static_cast<size_t>(round)] = static_cast<uint32_t>(from_bits(r));
        }
    }

    std::vector<int> preoutput = r;  // R16 || L16, the final swap
    preoutput.insert(preoutput.end(), l.begin(), l.end());
    const uint64_t output = from_bits(apply_table(preoutput, tables::final_permutation()));
    if (trace != nullptr) {
        trace->preoutput = from_bits(preoutput);
        trace->output = output;
    }
    return output;
}

}  // namespace

std::vector<int> to_bits(uint64_t value, int width) {
    std::vector<int> bits(static_cast<size_t>(width));
    for (int i = 0; i < width; ++i) {
        bits[static_cast<size_t>(i)] = static_cast<int>((value >> (width - 1 - i)) & 1);
    }
    return bits;
}

uint64_t from_bits(const std::vector<int>& bits) {
    uint64_t value = 0;
    for (int bit : bits) value = (value << 1) | static_cast<uint64_t>(bit);
    return value;
}

std::array<uint64_t, 16> subkeys(uint64_t key) {
    std::array<uint64_t, 16> out{};
    const auto keys = subkey_bits(key, nullptr);
    for (size_t i = 0; i < 16; ++i) out[i] = from_bits(keys[i]);
    return out;
}

uint64_t encrypt(uint64_t key, uint64_t plaintext, RoundTrace* trace) {
    return crypt_block(key, plaintext, false, trace);
}

uint64_t decrypt(uint64_t key, uint64_t ciphertext) {
    return crypt_block(key, ciphertext, true, nullptr);
}

uint64_t ede_encrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block) {
    return encrypt(k3, decrypt(k2, encrypt(k1, block)));
}

uint64_t ede_decrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block) {
    return decrypt(k1, encrypt(k2, decrypt(k3, block)));
}

uint64_t eee_encrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block) {
    return encrypt(k3, encrypt(k2, encrypt(k1, block)));
}

uint64_t eee_decrypt(uint64_t k1, uint64_t k2, uint64_t k3, uint64_t block) {
    return decrypt(k1, decrypt(k2, decrypt(k3, block)));
}

}  // namespace tdescope::test_oracle
