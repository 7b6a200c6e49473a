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

#include "tdescope/tdes.hpp"

namespace tdescope {

namespace {

constexpr uint64_t kKeyBitMask = 0xFEFEFEFEFEFEFEFEull;

bool same_key_bits(Key64 a, Key64 b) {
    return (a.bits & kKeyBitMask) == (b.bits & kKeyBitMask);
}

}  // namespace

std::string_view to_string(TdeaSequence sequence) {
    return sequence == TdeaSequence::EEE ? "EEE" : "EDE";
}

std::string_view to_string(KeyingOption option) {
    switch (option) {
        case KeyingOption::OneKey: return "one-key";
        case KeyingOption::TwoKey: return "two-key";
        default: return "three-key";
    }
}

TdeaKeyBundle make_bundle(Key64 k1, Key64 k2, Key64 k3, TdeaSequence sequence) {
    TdeaKeyBundle bundle;
    bundle.k1 = k1;
    bundle.k2 = k2;
    bundle.k3 = k3;
    bundle.schedule1 = derive_subkeys(k1);
    bundle.schedule2 = derive_subkeys(k2);
    bundle.schedule3 = derive_subkeys(k3);
    bundle.sequence = sequence;
    if (same_key_bits(k1, k2) && same_key_bits(k2, k3)) {
        bundle.option = KeyingOption::OneKey;
    } else if (same_key_bits(k1, k3)) {
        bundle.option = KeyingOption::TwoKey;
    } else {
        bundle.option = KeyingOption::ThreeKey;
    }
    return bundle;
}

Block64 tdea_encrypt_block(Block64 block, const TdeaKeyBundle& bundle) {
    Block64 stage1 = des_encrypt_block(block, bundle.schedule1);
    Block64 stage2 = bundle.sequence == TdeaSequence::EDE
                         ? des_decrypt_block(stage1, bundle.schedule2)
                         : des_encrypt_block(stage1, bundle.schedule2);
    return des_encrypt_block(stage2, bundle.schedule3);
}

Block64 tdea_decrypt_block(Block64 block, const TdeaKeyBundle& bundle) {
    Block64 stage1 = des_decrypt_block(block, bundle.schedule3);
    Block64 stage2 = bundle.sequence == TdeaSequence::EDE
                         ? des_encrypt_block(stage1, bundle.schedule2)
                         : des_decrypt_block(stage1, bundle.schedule2);
    return des_decrypt_block(stage2, bundle.schedule1);
}

}  // namespace tdescope
