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

#include <random>
#include <sstream>

#include <doctest.h>

#include "support/fixtures.hpp"
#include "tdescope/datapath.hpp"
#include "tdescope/errors.hpp"

using namespace tdescope;
using sim::DatapathEngine;
using sim::EngineConfig;
using sim::Operation;

namespace {

Key64 random_key(std::mt19937_64& rng) { return fix_parity(Key64{rng()}); }

}  // namespace

TEST_CASE("load halts at round 0 with post-IP halves and post-PC-1 key halves") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    CHECK(engine.probe("ROUND").value == 0);
    CHECK(engine.probe("STAGE").value == 1);
    CHECK(engine.probe("CYCLES").value == 0);
    CHECK(engine.probe("DONE").value == 0);
    CHECK(engine.probe("L").value == fixtures::kWorkedL[0]);
    CHECK(engine.probe("R").value == fixtures::kWorkedR[0]);
    CHECK(engine.probe("C").value == fixtures::kWorkedC[0]);
    CHECK(engine.probe("D").value == fixtures::kWorkedD[0]);
    CHECK(engine.probe("SUBKEY").value == 0);
}

TEST_CASE("all-zero block and key load to all-zero registers") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{0}), Block64{0});
    CHECK(engine.probe("L").value == 0);
    CHECK(engine.probe("R").value == 0);
    CHECK(engine.probe("C").value == 0);
    CHECK(engine.probe("D").value == 0);
}

TEST_CASE("load rejects mismatched key material") {
    const TdeaKeyBundle bundle =
        make_bundle(Key64{1}, Key64{2}, Key64{3}, TdeaSequence::EDE);
    CHECK_THROWS_AS(DatapathEngine(EngineConfig{Operation::DesEncrypt, bundle}, Block64{0}),
                    UsageError);
    CHECK_THROWS_AS(DatapathEngine(EngineConfig{Operation::TdeaEncrypt, Key64{1}}, Block64{0}),
                    UsageError);
}

TEST_CASE("each step reproduces the worked-example round registers") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    for (int round = 1; round <= 16; ++round) {
        const uint32_t r_before = static_cast<uint32_t>(engine.probe("R").value);
        const sim::RoundRegisterState state = engine.step();
        CHECK(state.round == round);
        CHECK(state.l.bits == fixtures::kWorkedL[static_cast<size_t>(round)]);
        CHECK(state.r.bits == fixtures::kWorkedR[static_cast<size_t>(round)]);
        CHECK(state.c == fixtures::kWorkedC[static_cast<size_t>(round)]);
        CHECK(state.d == fixtures::kWorkedD[static_cast<size_t>(round)]);
        CHECK(state.subkey.bits == fixtures::kWorkedSubkeys[static_cast<size_t>(round - 1)]);
        CHECK(state.l.bits == r_before);  // Feistel wiring: L_i = R_{i-1}
    }
    CHECK(engine.done());
}

TEST_CASE("probe exposes the round-1 subkey of the worked example") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    engine.step();
    CHECK(engine.probe("SUBKEY").value == fixtures::kWorkedSubkeys[0]);
    CHECK(engine.probe("ROUND").value == 1);
}

TEST_CASE("stepping a completed engine is an error") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    for (int i = 0; i < 16; ++i) engine.step();
    CHECK(engine.done());
    CHECK_THROWS_AS(engine.step(), EngineError);
}

TEST_CASE("probe rejects unknown signals and names the valid set") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{0}), Block64{0});
    CHECK_THROWS_WITH_AS(engine.probe("LR"),
                         doctest::Contains("valid signals: L, R, C, D, SUBKEY"), EngineError);
}

TEST_CASE("worked example runs to completion in 16 cycles") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    const auto [output, trace] = engine.run_to_completion();
    CHECK(output.bits == fixtures::kWorkedCiphertext);
    CHECK(trace.cycles == 16);
    CHECK(trace.states.size() == 17);
    CHECK(trace.preoutput.bits == fixtures::kWorkedPreoutput);
    CHECK(engine.probe("DONE").value == 1);
    CHECK(engine.probe("CYCLES").value == 16);
}

TEST_CASE("datapath output equals the one-shot result across all operations") {
    std::mt19937_64 rng(40);
    for (int i = 0; i < 500; ++i) {
        const Key64 key = random_key(rng);
        const Block64 block{rng()};
        const KeySchedule schedule = derive_subkeys(key);

        {
            DatapathEngine engine(EngineConfig::des_encrypt(key), block);
            CHECK(engine.run_to_completion().first == des_encrypt_block(block, schedule));
        }
        {
            DatapathEngine engine(EngineConfig::des_decrypt(key), block);
            CHECK(engine.run_to_completion().first == des_decrypt_block(block, schedule));
        }

        const TdeaSequence seq = (rng() & 1) ? TdeaSequence::EDE : TdeaSequence::EEE;
        const TdeaKeyBundle bundle =
            make_bundle(key, random_key(rng), random_key(rng), seq);
        {
            DatapathEngine engine(EngineConfig::tdea_encrypt(bundle), block);
            const auto [output, trace] = engine.run_to_completion();
            CHECK(output == tdea_encrypt_block(block, bundle));
            CHECK(trace.cycles == 48);
            CHECK(trace.states.size() == 51);
        }
        {
            DatapathEngine engine(EngineConfig::tdea_decrypt(bundle), block);
            CHECK(engine.run_to_completion().first == tdea_decrypt_block(block, bundle));
        }
    }
}

TEST_CASE("decrypt walks the subkeys in reverse") {
    std::mt19937_64 rng(41);
    const Key64 key = random_key(rng);
    const Block64 plaintext{rng()};
    const Block64 ciphertext = des_encrypt_block(plaintext, derive_subkeys(key));

    DatapathEngine enc(EngineConfig::des_encrypt(key), plaintext);
    const auto [enc_out, enc_trace] = enc.run_to_completion();
    DatapathEngine dec(EngineConfig::des_decrypt(key), ciphertext);
    const auto [dec_out, dec_trace] = dec.run_to_completion();

    CHECK(enc_out == ciphertext);
    CHECK(dec_out == plaintext);
    for (int round = 1; round <= 16; ++round) {
        CHECK(dec_trace.states[static_cast<size_t>(round)].subkey ==
              enc_trace.states[static_cast<size_t>(17 - round)].subkey);
    }
}

TEST_CASE("one-key EDE runs 48 cycles and lands on the single-key result") {
    std::mt19937_64 rng(42);
    const Key64 key = random_key(rng);
    const Block64 block{rng()};
    const TdeaKeyBundle bundle = make_bundle(key, key, key, TdeaSequence::EDE);

    DatapathEngine engine(EngineConfig::tdea_encrypt(bundle), block);
    const auto [output, trace] = engine.run_to_completion();
    CHECK(output == des_encrypt_block(block, derive_subkeys(key)));
    CHECK(trace.cycles == 48);
}

TEST_CASE("compound traces walk stages 1..3 with 17 states each") {
    const TdeaKeyBundle bundle = make_bundle(Key64{fixtures::kTdeaK1}, Key64{fixtures::kTdeaK2},
                                             Key64{fixtures::kTdeaK3}, TdeaSequence::EDE);
    DatapathEngine engine(EngineConfig::tdea_encrypt(bundle), Block64{fixtures::kTdeaPlaintext});
    const auto [output, trace] = engine.run_to_completion();
    CHECK(output.bits == fixtures::kTdeaEdeCiphertext);

    for (int stage = 1; stage <= 3; ++stage) {
        int states_in_stage = 0;
        for (const auto& state : trace.states) {
            if (state.stage == stage) ++states_in_stage;
        }
        CHECK(states_in_stage == 17);
    }
    // The handoff keeps the block value: L0/R0 of stage s+1 come from the
    // FP/IP fusion of stage s's preoutput.
    CHECK(trace.states[17].l.bits == trace.states[16].r.bits);
    CHECK(trace.states[17].r.bits == trace.states[16].l.bits);
}

TEST_CASE("key registers return to their loaded position after 16 rotations") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 50; ++i) {
        DatapathEngine engine(EngineConfig::des_encrypt(Key64{rng()}), Block64{rng()});
        const uint64_t c0 = engine.probe("C").value;
        const uint64_t d0 = engine.probe("D").value;
        for (int round = 0; round < 16; ++round) engine.step();
        CHECK(engine.probe("C").value == c0);
        CHECK(engine.probe("D").value == d0);
    }
}

TEST_CASE("identical configurations produce bit-identical traces") {
    const Key64 key{fixtures::kWorkedKey};
    const Block64 block{fixtures::kWorkedPlaintext};
    DatapathEngine a(EngineConfig::des_encrypt(key), block);
    DatapathEngine b(EngineConfig::des_encrypt(key), block);
    const auto ta = a.run_to_completion().second;
    const auto tb = b.run_to_completion().second;
    CHECK(ta.states == tb.states);
    CHECK(ta.output == tb.output);
}

TEST_CASE("trace text form is line-oriented with fixed-width hex") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    const auto trace = engine.run_to_completion().second;
    const std::string text = sim::trace_to_text(trace);

    std::istringstream lines(text);
    std::string line;
    int state_lines = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("round=", 0) == 0) ++state_lines;
    }
    CHECK(state_lines == 17);
    CHECK(text.find("round=01 stage=1 l=F0AAF0AA r=EF4A6544") != std::string::npos);
    CHECK(text.find("subkey=1B02EFFC7072") != std::string::npos);
    CHECK(text.find("output=85E813540F0AB405") != std::string::npos);
    CHECK(text.find("cycles=16") != std::string::npos);
}

TEST_CASE("trace structured form carries the same fields") {
    DatapathEngine engine(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    const auto trace = engine.run_to_completion().second;
    const nlohmann::json doc = sim::trace_to_json(trace);

    CHECK(doc["cycles"] == 16);
    CHECK(doc["output"] == "85E813540F0AB405");
    CHECK(doc["preoutput"] == "0A4CD99543423234");
    REQUIRE(doc["states"].size() == 17);
    CHECK(doc["states"][0]["round"] == 0);
    CHECK(doc["states"][0]["l"] == "CC00CCFF");
    CHECK(doc["states"][1]["subkey"] == "1B02EFFC7072");
    CHECK(doc["states"][16]["r"] == "0A4CD995");
}

TEST_CASE("subkey faults flip exactly the requested bit") {
    DatapathEngine clean(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                         Block64{fixtures::kWorkedPlaintext});
    DatapathEngine faulty(EngineConfig::des_encrypt(Key64{fixtures::kWorkedKey}),
                          Block64{fixtures::kWorkedPlaintext});
    faulty.inject_fault({"SUBKEY", 3, 1});

    for (int round = 1; round <= 16; ++round) {
        const auto a = clean.step();
        const auto b = faulty.step();
        if (round < 3) {
            CHECK(a == b);
        } else if (round == 3) {
            CHECK((a.subkey.bits ^ b.subkey.bits) == (uint64_t{1} << 47));
        }
    }
    CHECK(clean.run_to_completion().first != faulty.run_to_completion().first);
}
