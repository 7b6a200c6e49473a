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

#include "tdescope/fast.hpp"

#include "tdescope/des.hpp"

namespace tdescope::fast {

namespace {

// A 64->64 bijective table compiled to one XOR-combinable lookup per input
// byte: tab[i][v] is the output contribution of input byte i holding v.
struct CompiledPermutation64 {
    std::array<std::array<uint64_t, 256>, 8> tab{};

    uint64_t apply(uint64_t x) const {
        uint64_t out = 0;
        for (int i = 0; i < 8; ++i) {
            out ^= tab[static_cast<size_t>(i)][(x >> (56 - 8 * i)) & 0xFF];
        }
        return out;
    }
};

CompiledPermutation64 compile64(const tables::PermutationSpec& spec) {
    CompiledPermutation64 compiled;
    for (int byte_index = 0; byte_index < 8; ++byte_index) {
        for (int value = 0; value < 256; ++value) {
            const uint64_t word = static_cast<uint64_t>(value) << (56 - 8 * byte_index);
            compiled.tab[static_cast<size_t>(byte_index)][static_cast<size_t>(value)] =
                permute({word, 64}, spec).bits;
        }
    }
    return compiled;
}

// Merged S-box + P tables: sp[g][v] is P applied to S-box g's output for
// 6-bit group value v, placed alone in its nibble so the per-group results
// combine by XOR.
std::array<std::array<uint32_t, 64>, 8> compile_sp() {
    std::array<std::array<uint32_t, 64>, 8> sp{};
    for (int g = 0; g < 8; ++g) {
        for (uint32_t v = 0; v < 64; ++v) {
            const int row = static_cast<int>(((v >> 4) & 2) | (v & 1));
            const int col = static_cast<int>((v >> 1) & 0xF);
            const uint32_t nibble = tables::sboxes()[static_cast<size_t>(g)].lookup(row, col);
            const Half32 placed{nibble << (28 - 4 * g)};
            sp[static_cast<size_t>(g)][v] = round_permutation(placed).bits;
        }
    }
    return sp;
}

const CompiledPermutation64& ip_table() {
    static const CompiledPermutation64 t = compile64(tables::initial_permutation());
    return t;
}

const CompiledPermutation64& fp_table() {
    static const CompiledPermutation64 t = compile64(tables::final_permutation());
    return t;
}

const std::array<std::array<uint32_t, 64>, 8>& sp_tables() {
    static const auto t = compile_sp();
    return t;
}

// E expansion by shifts: a 34-bit window R[32] R[1..32] R[1] from which
// each 6-bit group is a contiguous slice.
inline uint64_t expand_fast(uint32_t r) {
    const uint64_t window = (static_cast<uint64_t>(r & 1u) << 33) |
                            (static_cast<uint64_t>(r) << 1) | (r >> 31);
    uint64_t out = 0;
    for (int g = 0; g < 8; ++g) {
        out = (out << 6) | ((window >> (28 - 4 * g)) & 0x3F);
    }
    return out;
}

inline uint32_t round_f(uint32_t r, uint64_t k48) {
    const auto& sp = sp_tables();
    const uint64_t x = expand_fast(r) ^ k48;
    return sp[0][(x >> 42) & 0x3F] ^ sp[1][(x >> 36) & 0x3F] ^ sp[2][(x >> 30) & 0x3F] ^
           sp[3][(x >> 24) & 0x3F] ^ sp[4][(x >> 18) & 0x3F] ^ sp[5][(x >> 12) & 0x3F] ^
           sp[6][(x >> 6) & 0x3F] ^ sp[7][x & 0x3F];
}

Block64 crypt(Block64 block, const KeySchedule& schedule, bool decrypt) {
    const uint64_t ip = ip_table().apply(block.bits);
    uint32_t l = static_cast<uint32_t>(ip >> 32);
    uint32_t r = static_cast<uint32_t>(ip);
    for (int round = 0; round < 16; ++round) {
        const size_t key_index = static_cast<size_t>(decrypt ? 15 - round : round);
        const uint32_t next = l ^ round_f(r, schedule.subkeys[key_index].bits);
        l = r;
        r = next;
    }
    const uint64_t preoutput = (static_cast<uint64_t>(r) << 32) | l;
    return Block64{fp_table().apply(preoutput)};
}

}  // namespace

Block64 encrypt_block(Block64 block, const KeySchedule& schedule) {
    return crypt(block, schedule, false);
}

Block64 decrypt_block(Block64 block, const KeySchedule& schedule) {
    return crypt(block, schedule, true);
}

Block64 tdea_encrypt_block(Block64 block, const TdeaKeyBundle& bundle) {
    Block64 stage1 = encrypt_block(block, bundle.schedule1);
    Block64 stage2 = bundle.sequence == TdeaSequence::EDE
                         ? decrypt_block(stage1, bundle.schedule2)
                         : encrypt_block(stage1, bundle.schedule2);
    return encrypt_block(stage2, bundle.schedule3);
}

Block64 tdea_decrypt_block(Block64 block, const TdeaKeyBundle& bundle) {
    Block64 stage1 = decrypt_block(block, bundle.schedule3);
    Block64 stage2 = bundle.sequence == TdeaSequence::EDE
                         ? encrypt_block(stage1, bundle.schedule2)
                         : decrypt_block(stage1, bundle.schedule2);
    return decrypt_block(stage2, bundle.schedule1);
}

}  // namespace tdescope::fast
