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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdescope/tdes.hpp"

namespace tdescope::kat {

// Known-answer-test files, in the keyword = hex style of the widely
// published vector corpora:
//
//   # comment to end of line
//   [DES] | [TDES-EDE] | [TDES-EEE]      algorithm context
//   [ENCRYPT] | [DECRYPT]                direction context
//   COUNT = 0                            starts a vector
//   KEY = <16 hex>                       (DES)  or KEY1/KEY2/KEY3 (TDES)
//   PLAINTEXT = <16 hex>
//   CIPHERTEXT = <16 hex>
//
// The field matching the direction is the stimulus; the other one is the
// expectation and may be omitted in generation inputs. Hex is accepted in
// either case and always written in uppercase.

enum class Algorithm { Des, Tdes };
enum class Direction { Encrypt, Decrypt };

std::string_view to_string(Algorithm algorithm);
std::string_view to_string(Direction direction);

struct TestVector {
    int ordinal = 0;  // position in the file, 0-based
    int count = 0;    // value of the COUNT line
    int line = 0;     // line number of the COUNT line
    Algorithm algorithm = Algorithm::Des;
    TdeaSequence sequence = TdeaSequence::EDE;  // TDES only
    Direction direction = Direction::Encrypt;
    std::vector<Key64> keys;  // 1 for DES, 3 for TDES
    Block64 input{};
    std::optional<Block64> expected;

    friend bool operator==(const TestVector&, const TestVector&) = default;
};

/// Parses a whole KAT file. Throws KatParseError (with line number and
/// offending token) on malformed hex, wrong field width, missing required
/// fields, unknown keywords or headers, and fields outside a vector.
std::vector<TestVector> parse_kat(std::string_view text);

/// One homogeneous run of generated vectors.
struct KatSection {
    Algorithm algorithm = Algorithm::Des;
    TdeaSequence sequence = TdeaSequence::EDE;
    KeyingOption option = KeyingOption::ThreeKey;
    Direction direction = Direction::Encrypt;
    int count = 0;
};

/// The ten standard sections: DES encrypt/decrypt plus TDES {EDE, EEE} x
/// {three-key, two-key} x {encrypt, decrypt}.
std::vector<KatSection> standard_sections(int vectors_per_section);

/// Deterministic corpus: same seed, byte-identical text. Keys are drawn
/// from the seeded generator and normalized to odd parity; expectations
/// come from the one-shot cipher, so parsing the output yields vectors
/// whose expected values equal the golden outputs.
std::string generate_kat(std::span<const KatSection> sections, uint64_t seed);

}  // namespace tdescope::kat
