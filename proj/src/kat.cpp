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

#include "tdescope/kat.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "tdescope/errors.hpp"

namespace tdescope::kat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

struct PendingVector {
    int count = 0;
    int line = 0;  // line of the COUNT keyword
    std::optional<uint64_t> key, key1, key2, key3, plaintext, ciphertext;
};

struct ParserContext {
    std::optional<Algorithm> algorithm;
    TdeaSequence sequence = TdeaSequence::EDE;
    std::optional<Direction> direction;
    std::optional<PendingVector> pending;
    std::vector<TestVector> vectors;
};

uint64_t parse_block_field(int line, const std::string& keyword, std::string_view value) {
    if (!is_hex(value)) {
        throw KatParseError(line, std::string(value),
                            keyword + " holds malformed hex '" + std::string(value) + "'");
    }
    if (value.size() != 16) {
        throw KatParseError(line, std::string(value),
                            keyword + " expects 16 hex digits, got " +
                                std::to_string(value.size()));
    }
    return parse_hex(value, 16);
}

void assign_once(int line, const std::string& keyword, std::optional<uint64_t>& slot,
                 uint64_t value) {
    if (slot.has_value()) {
        throw KatParseError(line, keyword, "duplicate field " + keyword);
    }
    slot = value;
}

void finalize(ParserContext& ctx) {
    if (!ctx.pending) return;
    const PendingVector& p = *ctx.pending;

    TestVector v;
    v.ordinal = static_cast<int>(ctx.vectors.size());
    v.count = p.count;
    v.line = p.line;
    v.algorithm = *ctx.algorithm;
    v.sequence = ctx.sequence;
    v.direction = *ctx.direction;

    if (v.algorithm == Algorithm::Des) {
        if (!p.key) {
            throw KatParseError(p.line, "KEY",
                                "vector COUNT = " + std::to_string(p.count) +
                                    " is missing required field KEY");
        }
        v.keys = {Key64{*p.key}};
    } else {
        for (const auto& [slot, name] : {std::pair{&p.key1, "KEY1"},
                                         std::pair{&p.key2, "KEY2"},
                                         std::pair{&p.key3, "KEY3"}}) {
            if (!slot->has_value()) {
                throw KatParseError(p.line, name,
                                    "vector COUNT = " + std::to_string(p.count) +
                                        " is missing required field " + name);
            }
        }
        v.keys = {Key64{*p.key1}, Key64{*p.key2}, Key64{*p.key3}};
    }

    const auto& stimulus = v.direction == Direction::Encrypt ? p.plaintext : p.ciphertext;
    const auto& expectation = v.direction == Direction::Encrypt ? p.ciphertext : p.plaintext;
    if (!stimulus) {
        const char* name = v.direction == Direction::Encrypt ? "PLAINTEXT" : "CIPHERTEXT";
        throw KatParseError(p.line, name,
                            "vector COUNT = " + std::to_string(p.count) +
                                " is missing required field " + name);
    }
    v.input = Block64{*stimulus};
    if (expectation) v.expected = Block64{*expectation};

    ctx.vectors.push_back(std::move(v));
    ctx.pending.reset();
}

void handle_header(ParserContext& ctx, int line, std::string_view name) {
    finalize(ctx);
    const std::string header = upper(name);
    if (header == "DES") {
        ctx.algorithm = Algorithm::Des;
    } else if (header == "TDES-EDE") {
        ctx.algorithm = Algorithm::Tdes;
        ctx.sequence = TdeaSequence::EDE;
    } else if (header == "TDES-EEE") {
        ctx.algorithm = Algorithm::Tdes;
        ctx.sequence = TdeaSequence::EEE;
    } else if (header == "ENCRYPT") {
        ctx.direction = Direction::Encrypt;
    } else if (header == "DECRYPT") {
        ctx.direction = Direction::Decrypt;
    } else {
        throw KatParseError(line, std::string(name),
                            "unknown section header [" + std::string(name) + "]");
    }
}

void handle_field(ParserContext& ctx, int line, std::string_view rawkey, std::string_view value) {
    const std::string keyword = upper(rawkey);

    if (keyword == "COUNT") {
        finalize(ctx);
        if (!ctx.algorithm || !ctx.direction) {
            throw KatParseError(line, "COUNT",
                                "COUNT before the [algorithm] and [direction] headers");
        }
        if (value.empty() ||
            !std::all_of(value.begin(), value.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
            throw KatParseError(line, std::string(value),
                                "COUNT expects a decimal value, got '" + std::string(value) + "'");
        }
        PendingVector pending;
        try {
            pending.count = std::stoi(std::string(value));
        } catch (const std::out_of_range&) {
            throw KatParseError(line, std::string(value),
                                "COUNT value '" + std::string(value) + "' out of range");
        }
        pending.line = line;
        ctx.pending = pending;
        return;
    }

    if (!ctx.pending) {
        throw KatParseError(line, keyword, keyword + " outside a vector (missing COUNT)");
    }

    PendingVector& p = *ctx.pending;
    if (keyword == "KEY") {
        if (*ctx.algorithm != Algorithm::Des) {
            throw KatParseError(line, keyword,
                                "KEY is only valid in a [DES] section; use KEY1/KEY2/KEY3");
        }
        assign_once(line, keyword, p.key, parse_block_field(line, keyword, value));
    } else if (keyword == "KEY1" || keyword == "KEY2" || keyword == "KEY3") {
        if (*ctx.algorithm != Algorithm::Tdes) {
            throw KatParseError(line, keyword, keyword + " is only valid in a [TDES-*] section");
        }
        auto& slot = keyword == "KEY1" ? p.key1 : keyword == "KEY2" ? p.key2 : p.key3;
        assign_once(line, keyword, slot, parse_block_field(line, keyword, value));
    } else if (keyword == "PLAINTEXT") {
        assign_once(line, keyword, p.plaintext, parse_block_field(line, keyword, value));
    } else if (keyword == "CIPHERTEXT") {
        assign_once(line, keyword, p.ciphertext, parse_block_field(line, keyword, value));
    } else {
        throw KatParseError(line, keyword, "unknown keyword '" + keyword + "'");
    }
}

Key64 random_key(std::mt19937_64& rng) { return fix_parity(Key64{rng()}); }

}  // namespace

std::string_view to_string(Algorithm algorithm) {
    return algorithm == Algorithm::Des ? "des" : "tdes";
}

std::string_view to_string(Direction direction) {
    return direction == Direction::Encrypt ? "encrypt" : "decrypt";
}

std::vector<TestVector> parse_kat(std::string_view text) {
    ParserContext ctx;
    int line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        ++line_number;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw KatParseError(line_number, std::string(line),
                                    "unterminated section header '" + std::string(line) + "'");
            }
            handle_header(ctx, line_number, line.substr(1, line.size() - 2));
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw KatParseError(line_number, std::string(line),
                                "malformed line (expected KEYWORD = VALUE): '" +
                                    std::string(line) + "'");
        }
        handle_field(ctx, line_number, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    finalize(ctx);
    return ctx.vectors;
}

std::vector<KatSection> standard_sections(int vectors_per_section) {
    std::vector<KatSection> sections;
    for (Direction dir : {Direction::Encrypt, Direction::Decrypt}) {
        sections.push_back({Algorithm::Des, TdeaSequence::EDE, KeyingOption::ThreeKey, dir,
                            vectors_per_section});
    }
    for (TdeaSequence seq : {TdeaSequence::EDE, TdeaSequence::EEE}) {
        for (KeyingOption option : {KeyingOption::ThreeKey, KeyingOption::TwoKey}) {
            for (Direction dir : {Direction::Encrypt, Direction::Decrypt}) {
                sections.push_back({Algorithm::Tdes, seq, option, dir, vectors_per_section});
            }
        }
    }
    return sections;
}

std::string generate_kat(std::span<const KatSection> sections, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::ostringstream os;
    os << "# generated KAT corpus (seed " << seed << ")\n";
    int count = 0;
    for (const KatSection& section : sections) {
        os << '\n';
        if (section.algorithm == Algorithm::Des) {
            os << "[DES]\n";
        } else {
            os << (section.sequence == TdeaSequence::EDE ? "[TDES-EDE]\n" : "[TDES-EEE]\n");
        }
        os << (section.direction == Direction::Encrypt ? "[ENCRYPT]\n" : "[DECRYPT]\n");

        for (int i = 0; i < section.count; ++i, ++count) {
            os << "\nCOUNT = " << count << '\n';
            const Block64 plaintext{rng()};
            Block64 ciphertext;
            if (section.algorithm == Algorithm::Des) {
                const Key64 key = random_key(rng);
                ciphertext = des_encrypt_block(plaintext, derive_subkeys(key));
                os << "KEY = " << to_hex(key) << '\n';
            } else {
                Key64 k1 = random_key(rng);
                Key64 k2 = random_key(rng);
                Key64 k3 = random_key(rng);
                if (section.option == KeyingOption::TwoKey) k3 = k1;
                if (section.option == KeyingOption::OneKey) k2 = k3 = k1;
                ciphertext =
                    tdea_encrypt_block(plaintext, make_bundle(k1, k2, k3, section.sequence));
                os << "KEY1 = " << to_hex(k1) << '\n';
                os << "KEY2 = " << to_hex(k2) << '\n';
                os << "KEY3 = " << to_hex(k3) << '\n';
            }
            os << "PLAINTEXT = " << to_hex(plaintext) << '\n';
            os << "CIPHERTEXT = " << to_hex(ciphertext) << '\n';
        }
    }
    return os.str();
}

}  // namespace tdescope::kat
