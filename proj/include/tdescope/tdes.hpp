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

#include <string_view>

#include "tdescope/des.hpp"

namespace tdescope {

/// Order of the three single-key passes in a compound operation.
enum class TdeaSequence { EEE, EDE };

/// Key relationship, classified from the 56 key bits, never declared by
/// the caller. TwoKey means K1 = K3; OneKey degenerates EDE to single-key
/// encryption.
enum class KeyingOption { ThreeKey, TwoKey, OneKey };

std::string_view to_string(TdeaSequence sequence);
std::string_view to_string(KeyingOption option);

/// Three keys, their derived schedules, and the compound operation shape.
struct TdeaKeyBundle {
    Key64 k1, k2, k3;
    KeySchedule schedule1, schedule2, schedule3;
    TdeaSequence sequence = TdeaSequence::EDE;
    KeyingOption option = KeyingOption::ThreeKey;
};

/// Derives all three schedules and classifies the keying option by
/// comparing key material with parity bits masked out. Degenerate equal
/// keys are classified, not rejected.
TdeaKeyBundle make_bundle(Key64 k1, Key64 k2, Key64 k3, TdeaSequence sequence);

/// EDE: E3(D2(E1(x))). EEE: E3(E2(E1(x))).
Block64 tdea_encrypt_block(Block64 block, const TdeaKeyBundle& bundle);

/// EDE: D1(E2(D3(x))). EEE: D1(D2(D3(x))). Exact inverse of the encrypt
/// operation under the same bundle.
Block64 tdea_decrypt_block(Block64 block, const TdeaKeyBundle& bundle);

}  // namespace tdescope
