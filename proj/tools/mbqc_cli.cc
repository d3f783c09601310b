// Copyright 2026 The mbqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqc/mbqc.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    uint64_t seed = 42;
    std::string mode = "enumerate";
    double tol = 1e-9;
    std::string out;
    bool json = false;
    std::string prep = "adaptive";
    size_t shots = 1000;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Owns a string returned by the library.
struct LibString {
    char *p = nullptr;
    ~LibString() {
        mbqc_string_free(p);
    }
    std::string str() const {
        return p ? std::string(p) : std::string();
    }
};

void check(mbqc_status status) {
    if (status != MBQC_OK) {
        throw UsageError(mbqc_last_error());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig &cfg, const std::string &json, const std::string &text) {
    std::string doc = json + "\n";
    if (!cfg.out.empty()) {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out || !(out << doc)) {
            throw UsageError("cannot write " + cfg.out);
        }
    }
    if (cfg.json || text.empty()) {
        if (cfg.out.empty()) {
            std::cout << doc;
        }
        return;
    }
    std::cout << text;
}

mbqc_verify_options options_for(const RunConfig &cfg) {
    mbqc_verify_options o = mbqc_verify_options_default();
    o.seed = cfg.seed;
    o.tol = cfg.tol;
    o.mode = cfg.mode == "sample" ? MBQC_MODE_SAMPLE : MBQC_MODE_ENUMERATE;
    o.shots = cfg.shots;
    if (cfg.prep == "cluster") {
        o.order = MBQC_ORDER_UNITARY_CLUSTER;
    } else if (cfg.prep == "prep-first") {
        o.order = MBQC_ORDER_PREP_FIRST;
    } else if (cfg.prep == "interleaved") {
        o.order = MBQC_ORDER_INTERLEAVED;
    } else {
        o.order = MBQC_ORDER_ADAPTIVE;
    }
    return o;
}

bool is_protocol_name(const std::string &target) {
    LibString names;
    check(mbqc_protocol_names(&names.p));
    for (const auto &n : Json::parse(names.str())) {
        if (n == target) {
            return true;
        }
    }
    return false;
}

std::string report_text(const Json &report) {
    size_t passed = 0;
    for (const auto &b : report["branches"]) {
        passed += b["pass"].get<bool>() ? 1 : 0;
    }
    std::ostringstream text;
    text << report["protocol"].get<std::string>() << " (target " << report["target"].get<std::string>() << "): "
         << passed << "/" << report["branches"].size() << " branches pass, weight sum "
         << report["weight_sum"].get<double>() << "\n";
    for (const auto &b : report["branches"]) {
        if (!b["pass"].get<bool>()) {
            text << "  failing branch " << b["outcomes"].dump() << "\n";
        }
    }
    text << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return text.str();
}

int cmd_verify(const RunConfig &cfg, const std::string &target) {
    mbqc_verify_options o = options_for(cfg);
    mbqc_report *report = nullptr;
    if (is_protocol_name(target)) {
        check(mbqc_verify_named(target.c_str(), &o, &report));
    } else {
        std::string text = read_file(target);
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::exception &e) {
            throw UsageError(target + ": " + e.what());
        }
        if (doc.is_object() && doc.contains("gates")) {
            check(mbqc_verify_circuit(text.c_str(), &o, &report));
        } else {
            mbqc_pattern *pattern = nullptr;
            check(mbqc_pattern_from_json(text.c_str(), &pattern));
            mbqc_status status = mbqc_verify_pattern(pattern, nullptr, &o, &report);
            mbqc_pattern_free(pattern);
            check(status);
        }
    }
    LibString json;
    mbqc_status status = mbqc_report_to_json(report, &json.p);
    bool passed = mbqc_report_passed(report);
    mbqc_report_free(report);
    check(status);
    emit(cfg, json.str(), report_text(Json::parse(json.str())));
    return passed ? kExitPass : kExitFail;
}

int cmd_run(const RunConfig &cfg, const std::string &path) {
    std::string text = read_file(path);
    mbqc_pattern *pattern = nullptr;
    check(mbqc_pattern_from_json(text.c_str(), &pattern));
    LibString json;
    mbqc_status status = mbqc_pattern_run(
        pattern, nullptr, cfg.mode == "sample" ? MBQC_MODE_SAMPLE : MBQC_MODE_ENUMERATE, cfg.seed, &json.p);
    mbqc_pattern_free(pattern);
    check(status);
    emit(cfg, json.str(), "");
    return kExitPass;
}

int cmd_compile(const RunConfig &cfg, const std::string &gate, const std::string &matrix, bool simplify) {
    if (gate.empty() == matrix.empty()) {
        throw UsageError("compile needs exactly one of --gate or --matrix");
    }
    LibString json;
    if (!gate.empty()) {
        check(mbqc_compile_gate(gate.c_str(), simplify, &json.p));
    } else {
        std::string source = matrix;
        if (!source.empty() && source[0] == '@') {
            source = read_file(source.substr(1));
        }
        double u8[8];
        try {
            Json m = Json::parse(source);
            if (!m.is_array() || m.size() != 2) {
                throw UsageError("--matrix must be a 2x2 array of [re, im] entries");
            }
            for (size_t r = 0; r < 2; r++) {
                if (!m[r].is_array() || m[r].size() != 2) {
                    throw UsageError("--matrix must be a 2x2 array of [re, im] entries");
                }
                for (size_t c = 0; c < 2; c++) {
                    const Json &e = m[r][c];
                    bool pair = e.is_array() && e.size() == 2;
                    u8[2 * (2 * r + c)] = pair ? e[0].get<double>() : e.get<double>();
                    u8[2 * (2 * r + c) + 1] = pair ? e[1].get<double>() : 0.0;
                }
            }
        } catch (const Json::exception &e) {
            throw UsageError(std::string("--matrix: ") + e.what());
        }
        check(mbqc_compile_unitary(u8, simplify, &json.p));
    }
    emit(cfg, json.str(), "");
    return kExitPass;
}

int cmd_translate(const RunConfig &cfg, const std::string &path) {
    std::string text = read_file(path);
    LibString json;
    check(mbqc_translate(text.c_str(), &json.p));
    emit(cfg, json.str(), "");
    return kExitPass;
}

int cmd_demo(const RunConfig &cfg, const std::string &figure) {
    int passed = 0;
    LibString text;
    LibString json;
    check(mbqc_demo(figure.c_str(), cfg.seed, cfg.tol, &passed, &text.p, &json.p));
    emit(cfg, json.str(), text.str());
    return passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    RunConfig cfg;
    CLI::App app{"Measurement-based quantum computation simulator and verifier"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mbqc_version()));

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--seed", cfg.seed, "RNG seed for inputs and sampling")->capture_default_str();
        sub->add_option("--mode", cfg.mode, "enumerate or sample")
            ->check(CLI::IsMember({"enumerate", "sample"}))
            ->capture_default_str();
        sub->add_option("--tol", cfg.tol, "fidelity tolerance")->capture_default_str();
        sub->add_option("--out", cfg.out, "write the JSON document to this path");
        sub->add_flag("--json", cfg.json, "print JSON instead of text");
    };

    std::string target;
    auto *verify = app.add_subcommand("verify", "verify a named protocol, pattern file or circuit file");
    verify->add_option("target", target, "protocol name or JSON file")->required();
    verify->add_option("--prep", cfg.prep, "pattern execution: adaptive, cluster, prep-first or interleaved")
        ->check(CLI::IsMember({"adaptive", "cluster", "prep-first", "interleaved"}))
        ->capture_default_str();
    verify->add_option("--shots", cfg.shots, "samples in sample mode")->capture_default_str();
    add_common(verify);

    std::string pattern_path;
    auto *run = app.add_subcommand("run", "execute a pattern with feedforward");
    run->add_option("pattern", pattern_path, "pattern JSON file")->required();
    add_common(run);

    std::string gate;
    std::string matrix;
    bool simplify = false;
    auto *compile = app.add_subcommand("compile", "compile a one-qubit unitary to a pattern");
    compile->add_option("--gate", gate, "named gate (I X Y Z H S Sdg T Tdg)");
    compile->add_option("--matrix", matrix, "2x2 JSON matrix of [re, im] entries, or @file");
    compile->add_flag("--simplify", simplify, "drop redundant measurements");
    add_common(compile);

    std::string translate_path;
    auto *translate = app.add_subcommand("translate", "convert between pattern and GST sequence JSON");
    translate->add_option("file", translate_path, "pattern or GST sequence JSON")->required();
    add_common(translate);

    std::string figure;
    auto *demo = app.add_subcommand("demo", "reproduce a worked example and check it");
    demo->add_option("figure", figure, "1 4 5 6 7 9 11 12 14 15 16L 16R")->required();
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify) {
            return cmd_verify(cfg, target);
        }
        if (*run) {
            return cmd_run(cfg, pattern_path);
        }
        if (*compile) {
            return cmd_compile(cfg, gate, matrix, simplify);
        }
        if (*translate) {
            return cmd_translate(cfg, translate_path);
        }
        return cmd_demo(cfg, figure);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
