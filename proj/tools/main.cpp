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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tdescope/errors.hpp"
#include "tdescope/harness.hpp"
#include "tdescope/modes.hpp"

namespace {

using namespace tdescope;

// Exit statuses: 0 success, 1 verification failure, 2 usage/config error,
// 3 I/O error, 4 data error (bad padding, truncated ciphertext).
constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitData = 4;

enum class ParityPolicy { Ignore, Warn, Enforce, Fix };

struct Options {
    std::string algo = "des";
    std::string seq = "ede";
    std::string key, key2, key3;
    std::string mode = "ecb";
    std::string iv;
    std::string pad = "pkcs7";
    std::string parity = "warn";
    std::string in_path, out_path;
    std::string trace_format = "text";
    std::string engine = "one-shot";
    std::string kat_path;
    std::string block_hex;
    std::int64_t count = 0;
    uint64_t seed = 1;
    bool decrypt_direction = false;
};

ParityPolicy parse_parity(const std::string& name) {
    if (name == "ignore") return ParityPolicy::Ignore;
    if (name == "warn") return ParityPolicy::Warn;
    if (name == "enforce") return ParityPolicy::Enforce;
    if (name == "fix") return ParityPolicy::Fix;
    throw UsageError("--parity expects ignore|warn|enforce|fix, got '" + name + "'");
}

Key64 admit_key(const std::string& hex, ParityPolicy policy, const char* flag) {
    if (!is_hex(hex) || hex.size() != 16) {
        throw UsageError(std::string(flag) + " expects exactly 16 hex digits");
    }
    Key64 key = key_from_hex(hex);
    const ParityReport report = key_parity_check(key);
    if (!report.all_ok) {
        switch (policy) {
            case ParityPolicy::Ignore:
                break;
            case ParityPolicy::Warn:
                std::cerr << "warning: " << flag << " has invalid parity (use --parity fix)\n";
                break;
            case ParityPolicy::Enforce:
                throw UsageError(std::string(flag) +
                                 " has invalid parity and --parity enforce is set");
            case ParityPolicy::Fix:
                key = fix_parity(key);
                break;
        }
    }
    return key;
}

Block64 parse_block_hex(const std::string& hex, const char* what) {
    if (!is_hex(hex) || hex.size() != 16) {
        throw UsageError(std::string(what) + " expects exactly 16 hex digits");
    }
    return block_from_hex(hex);
}

modes::CipherKeys cipher_keys(const Options& opt, ParityPolicy policy) {
    if (opt.key.empty()) throw UsageError("--key is required");
    if (opt.algo == "des") {
        if (!opt.key2.empty() || !opt.key3.empty()) {
            throw UsageError("--key2/--key3 are only valid with --algo tdes");
        }
        return modes::CipherKeys::single(admit_key(opt.key, policy, "--key"));
    }
    if (opt.key2.empty() || opt.key3.empty()) {
        throw UsageError("--algo tdes requires --key, --key2, and --key3");
    }
    const TdeaSequence sequence = opt.seq == "eee" ? TdeaSequence::EEE : TdeaSequence::EDE;
    return modes::CipherKeys::triple(admit_key(opt.key, policy, "--key"),
                                     admit_key(opt.key2, policy, "--key2"),
                                     admit_key(opt.key3, policy, "--key3"), sequence);
}

std::vector<uint8_t> read_input(const std::string& path) {
    if (path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        const std::string& s = buffer.str();
        return {s.begin(), s.end()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading input file: " + path);
    const std::string& s = buffer.str();
    return {s.begin(), s.end()};
}

void write_output(const std::string& path, std::span<const uint8_t> bytes) {
    if (path.empty()) {
        std::cout.write(reinterpret_cast<const char*>(bytes.data()),
                        static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        if (!std::cout) throw IoError("failed writing to standard output");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("failed writing output file: " + path);
}

void write_text(const std::string& path, const std::string& text) {
    write_output(path, std::span<const uint8_t>(
                           reinterpret_cast<const uint8_t*>(text.data()), text.size()));
}

int run_crypt(const Options& opt, bool decrypt) {
    const ParityPolicy policy = parse_parity(opt.parity);
    const modes::CipherKeys keys = cipher_keys(opt, policy);

    const modes::BlockMode mode =
        opt.mode == "cbc" ? modes::BlockMode::Cbc : modes::BlockMode::Ecb;
    if (mode == modes::BlockMode::Ecb && !opt.iv.empty()) {
        throw UsageError("--iv is only valid with --mode cbc");
    }
    std::optional<Block64> iv;
    if (mode == modes::BlockMode::Cbc) {
        if (opt.iv.empty()) throw UsageError("--mode cbc requires --iv");
        iv = parse_block_hex(opt.iv, "--iv");
    }
    const modes::Padding padding =
        opt.pad == "none" ? modes::Padding::None : modes::Padding::Pkcs7;

    const std::vector<uint8_t> input = read_input(opt.in_path);
    const std::vector<uint8_t> output =
        decrypt ? modes::decrypt_bytes(keys, input, mode, padding, iv)
                : modes::encrypt_bytes(keys, input, mode, padding, iv);
    write_output(opt.out_path, output);
    return kExitOk;
}

void render_report(const vio::EquivalenceReport& report, std::ostream& os) {
    for (const vio::ReportEntry& entry : report.entries) {
        os << "COUNT " << entry.count << ' ' << entry.label << ": "
           << vio::to_string(entry.verdict);
        if (entry.verdict == vio::Verdict::GoldenMismatch) {
            os << " (golden=" << to_hex(entry.golden_output)
               << " datapath=" << to_hex(entry.datapath_output);
            if (entry.first_divergent_round) {
                os << " first_divergent_round=" << *entry.first_divergent_round;
            }
            os << ')';
        } else if (entry.verdict == vio::Verdict::ExpectationMismatch) {
            os << " (golden=" << to_hex(entry.golden_output)
               << " expected=" << to_hex(*entry.expected) << ')';
        }
        os << '\n';
    }
    os << "summary: " << report.total << " vectors, " << report.passed << " pass, "
       << report.golden_mismatches << " golden-mismatch, " << report.expectation_mismatches
       << " expectation-mismatch\n";
    if (!report.all_pass()) {
        os << "failing:";
        for (const vio::ReportEntry& entry : report.entries) {
            if (entry.verdict != vio::Verdict::Pass) os << ' ' << entry.count;
        }
        os << '\n';
    }
}

int run_kat(const Options& opt) {
    const vio::EquivalenceReport report = vio::run_kat_file(opt.kat_path);
    render_report(report, std::cout);
    return report.all_pass() ? kExitOk : kExitVerificationFailed;
}

int run_kat_gen(const Options& opt) {
    const int per_section = opt.count > 0 ? static_cast<int>(opt.count) : 2;
    const auto sections = kat::standard_sections(per_section);
    write_text(opt.out_path, kat::generate_kat(sections, opt.seed));
    return kExitOk;
}

sim::EngineConfig trace_config(const Options& opt, ParityPolicy policy) {
    if (opt.key.empty()) throw UsageError("--key is required");
    if (opt.algo == "des") {
        const Key64 key = admit_key(opt.key, policy, "--key");
        return opt.decrypt_direction ? sim::EngineConfig::des_decrypt(key)
                                     : sim::EngineConfig::des_encrypt(key);
    }
    if (opt.key2.empty() || opt.key3.empty()) {
        throw UsageError("--algo tdes requires --key, --key2, and --key3");
    }
    const TdeaSequence sequence = opt.seq == "eee" ? TdeaSequence::EEE : TdeaSequence::EDE;
    TdeaKeyBundle bundle = make_bundle(admit_key(opt.key, policy, "--key"),
                                       admit_key(opt.key2, policy, "--key2"),
                                       admit_key(opt.key3, policy, "--key3"), sequence);
    return opt.decrypt_direction ? sim::EngineConfig::tdea_decrypt(std::move(bundle))
                                 : sim::EngineConfig::tdea_encrypt(std::move(bundle));
}

int run_trace(const Options& opt) {
    const ParityPolicy policy = parse_parity(opt.parity);
    const Block64 block = parse_block_hex(opt.block_hex, "block argument");

    sim::DatapathEngine engine(trace_config(opt, policy), block);
    const auto [output, trace] = engine.run_to_completion();

    if (opt.trace_format == "structured") {
        std::cout << sim::trace_to_json(trace).dump(2) << '\n';
    } else {
        std::cout << sim::trace_to_text(trace);
    }
    return kExitOk;
}

int run_keycheck(const Options& opt) {
    const ParityPolicy policy = parse_parity(opt.parity);
    if (opt.key.empty()) throw UsageError("--key is required");
    if (!is_hex(opt.key) || opt.key.size() != 16) {
        throw UsageError("--key expects exactly 16 hex digits");
    }
    const Key64 key = key_from_hex(opt.key);
    const ParityReport report = key_parity_check(key);

    std::cout << "key = " << to_hex(key) << '\n';
    std::cout << "parity =";
    for (bool ok : report.byte_ok) std::cout << (ok ? " ok" : " bad");
    std::cout << " (overall " << (report.all_ok ? "ok" : "bad") << ")\n";
    std::cout << "weak key: " << (is_weak_key(key) ? "yes" : "no") << '\n';
    std::cout << "semiweak key: " << (is_semiweak_key(key) ? "yes" : "no") << '\n';
    if (policy == ParityPolicy::Fix) {
        std::cout << "fixed = " << to_hex(fix_parity(key)) << '\n';
    }
    if (policy == ParityPolicy::Enforce && !report.all_ok) {
        throw UsageError("key has invalid parity and --parity enforce is set");
    }
    return kExitOk;
}

int run_bench(const Options& opt) {
    const auto engine = vio::bench_engine_from_string(opt.engine);
    if (!engine) {
        throw UsageError("--engine expects one-shot|fast|bulk-omp|datapath, got '" + opt.engine +
                         "'");
    }
    sim::Operation operation;
    if (opt.algo == "des") {
        operation = opt.decrypt_direction ? sim::Operation::DesDecrypt
                                          : sim::Operation::DesEncrypt;
    } else {
        operation = opt.decrypt_direction ? sim::Operation::TdeaDecrypt
                                          : sim::Operation::TdeaEncrypt;
    }
    const std::int64_t blocks = opt.count > 0 ? opt.count : 100000;
    const vio::BenchmarkReport report = vio::run_benchmark(operation, blocks, *engine);

    std::printf("operation=%s engine=%s blocks=%lld seconds=%.6f blocks_per_second=%.0f "
                "bits_per_second=%.0f checksum=%016llX\n",
                report.operation.c_str(), report.engine.c_str(),
                static_cast<long long>(report.blocks), report.seconds, report.blocks_per_second,
                report.bits_per_second, static_cast<unsigned long long>(report.checksum));
    return kExitOk;
}

void add_key_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--key", opt.key, "key as 16 hex digits");
    cmd->add_option("--key2", opt.key2, "second key (tdes)");
    cmd->add_option("--key3", opt.key3, "third key (tdes)");
    cmd->add_option("--parity", opt.parity, "parity policy: ignore|warn|enforce|fix")
        ->check(CLI::IsMember({"ignore", "warn", "enforce", "fix"}));
}

void add_algo_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--algo", opt.algo, "algorithm: des|tdes")
        ->check(CLI::IsMember({"des", "tdes"}));
    cmd->add_option("--seq", opt.seq, "tdes sequence: ede|eee")
        ->check(CLI::IsMember({"ede", "eee"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DES/TDES engine with a round-accurate datapath simulator and KAT harness"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* encrypt = app.add_subcommand("encrypt", "encrypt a byte stream");
    CLI::App* decrypt = app.add_subcommand("decrypt", "decrypt a byte stream");
    for (CLI::App* cmd : {encrypt, decrypt}) {
        add_algo_flags(cmd, opt);
        add_key_flags(cmd, opt);
        cmd->add_option("--mode", opt.mode, "block mode: ecb|cbc")
            ->check(CLI::IsMember({"ecb", "cbc"}));
        cmd->add_option("--iv", opt.iv, "cbc initialization vector, 16 hex digits");
        cmd->add_option("--pad", opt.pad, "padding: pkcs7|none")
            ->check(CLI::IsMember({"pkcs7", "none"}));
        cmd->add_option("--in", opt.in_path, "input file (default: stdin)");
        cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    }

    CLI::App* kat_cmd = app.add_subcommand("kat", "run a known-answer-test file");
    kat_cmd->add_option("file", opt.kat_path, "KAT file path")->required();

    CLI::App* kat_gen = app.add_subcommand("kat-gen", "generate a KAT corpus");
    kat_gen->add_option("--count", opt.count, "vectors per section (default 2)")
        ->check(CLI::PositiveNumber);
    kat_gen->add_option("--seed", opt.seed, "generator seed (default 1)");
    kat_gen->add_option("--out", opt.out_path, "output file (default: stdout)");

    CLI::App* trace = app.add_subcommand("trace", "dump the per-round datapath trace");
    add_algo_flags(trace, opt);
    add_key_flags(trace, opt);
    trace->add_flag("--decrypt", opt.decrypt_direction, "trace the decrypt direction");
    trace->add_option("--trace-format", opt.trace_format, "text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    trace->add_option("block", opt.block_hex, "input block, 16 hex digits")->required();

    CLI::App* keycheck = app.add_subcommand("keycheck", "parity and weak-key report");
    keycheck->add_option("--key", opt.key, "key as 16 hex digits")->required();
    keycheck->add_option("--parity", opt.parity, "parity policy: ignore|warn|enforce|fix")
        ->check(CLI::IsMember({"ignore", "warn", "enforce", "fix"}));

    CLI::App* bench = app.add_subcommand("bench", "throughput benchmark");
    add_algo_flags(bench, opt);
    bench->add_flag("--decrypt", opt.decrypt_direction, "benchmark the decrypt direction");
    bench->add_option("--count", opt.count, "number of blocks (default 100000)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--engine", opt.engine, "one-shot|fast|bulk-omp|datapath");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (encrypt->parsed()) return run_crypt(opt, false);
        if (decrypt->parsed()) return run_crypt(opt, true);
        if (kat_cmd->parsed()) return run_kat(opt);
        if (kat_gen->parsed()) return run_kat_gen(opt);
        if (trace->parsed()) return run_trace(opt);
        if (keycheck->parsed()) return run_keycheck(opt);
        if (bench->parsed()) return run_bench(opt);
    } catch (const KatParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
