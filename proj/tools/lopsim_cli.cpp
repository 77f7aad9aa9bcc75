// Copyright 2026 The lopsim Authors
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

// lopsim: command-line front end over the C API.
//
//   lopsim swap --a-re 0.8 --b-re 0.6 --herald d3
//   lopsim transfer --c-re 0.8 --d-re 0.6 --format csv --out t.csv
//   lopsim verify --seed 7 --samples 100
//   lopsim sweep --protocol swap --grid 9

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lopsim/lopsim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitRuntime = 3;
constexpr double kParamTolerance = 1e-9;

struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::map<std::string, std::optional<double>> amp;  // "a-re", "a-im", ...
    std::string herald = "d3";
    std::string protocol = "transfer";
    std::uint32_t grid = 5;
    std::uint32_t samples = 0;
    bool samples_given = false;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
};

const char *const kAmplitudeNames[] = {"a", "b", "c", "d", "chi2_h", "chi2_v"};

void load_config_file(const std::string &path, RunConfig &cfg) {
    std::ifstream in(path);
    if (!in) throw BadConfig("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
        if (!j.is_object()) throw BadConfig("config file must hold a JSON object");
        for (const auto &[key, value] : j.items()) {
            if (key == "command") {
                cfg.command = value.get<std::string>();
            } else if (key == "params") {
                for (const auto &[name, z] : value.items()) {
                    bool known = false;
                    for (const char *n : kAmplitudeNames) known |= name == n;
                    if (!known) throw BadConfig("unknown amplitude '" + name + "' in config params");
                    for (const auto &[part, x] : z.items()) {
                        if (part != "re" && part != "im") throw BadConfig("amplitude fields are 're' and 'im'");
                        cfg.amp[name + "-" + part] = x.get<double>();
                    }
                }
            } else if (key == "herald") {
                cfg.herald = value.get<std::string>();
            } else if (key == "protocol") {
                cfg.protocol = value.get<std::string>();
            } else if (key == "grid") {
                cfg.grid = value.get<std::uint32_t>();
            } else if (key == "samples") {
                cfg.samples = value.get<std::uint32_t>();
                cfg.samples_given = true;
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "out") {
                cfg.out = value.get<std::string>();
            } else if (key == "format") {
                cfg.format = value.get<std::string>();
            } else {
                throw BadConfig("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw BadConfig("malformed config file '" + path + "': " + e.what());
    }
}

lopsim_amplitude selector(const std::string &name) {
    if (name == "a") return LOPSIM_AMP_A;
    if (name == "b") return LOPSIM_AMP_B;
    if (name == "c") return LOPSIM_AMP_C;
    if (name == "d") return LOPSIM_AMP_D;
    if (name == "chi2_h") return LOPSIM_AMP_CHI2_H;
    return LOPSIM_AMP_CHI2_V;
}

int report_error(lopsim_status status) {
    std::cerr << "lopsim: " << lopsim_status_name(status) << ": " << lopsim_last_error() << "\n";
    return status == LOPSIM_ERR_CONFIG || status == LOPSIM_ERR_NORMALIZATION || status == LOPSIM_ERR_INVALID_ARGUMENT
               ? kExitBadConfig
               : kExitRuntime;
}

struct ParamsHandle {
    lopsim_params *p = nullptr;
    ~ParamsHandle() { lopsim_params_destroy(p); }
};

struct ReportHandle {
    lopsim_report *r = nullptr;
    ~ReportHandle() { lopsim_report_destroy(r); }
};

int run(const RunConfig &cfg) {
    if (cfg.herald != "d3" && cfg.herald != "d4") throw BadConfig("herald must be d3 or d4");
    if (cfg.format != "json" && cfg.format != "csv") throw BadConfig("format must be json or csv");
    if (cfg.protocol != "swap" && cfg.protocol != "transfer") throw BadConfig("protocol must be swap or transfer");
    const lopsim_herald herald = cfg.herald == "d3" ? LOPSIM_HERALD_D3 : LOPSIM_HERALD_D4;

    ParamsHandle params;
    if (auto s = lopsim_params_create(&params.p); s != LOPSIM_OK) return report_error(s);
    for (const char *name : kAmplitudeNames) {
        const auto re = cfg.amp.find(std::string(name) + "-re");
        const auto im = cfg.amp.find(std::string(name) + "-im");
        const bool has_re = re != cfg.amp.end() && re->second;
        const bool has_im = im != cfg.amp.end() && im->second;
        if (!has_re && !has_im) continue;
        // Giving either part of an amplitude replaces the whole default.
        const double new_re = has_re ? *re->second : 0.0;
        const double new_im = has_im ? *im->second : 0.0;
        if (auto s = lopsim_params_set(params.p, selector(name), new_re, new_im); s != LOPSIM_OK) return report_error(s);
    }
    int renormalized = 0;
    if (auto s = lopsim_params_normalize(params.p, kParamTolerance, &renormalized); s != LOPSIM_OK) {
        return report_error(s);
    }
    if (renormalized) std::cerr << "lopsim: warning: polarization amplitudes renormalized to unit norm\n";

    ReportHandle report;
    lopsim_status status = LOPSIM_OK;
    if (cfg.command == "swap") {
        status = lopsim_run_swap(params.p, herald, &report.r);
    } else if (cfg.command == "transfer") {
        status = lopsim_run_transfer(params.p, &report.r);
    } else if (cfg.command == "hom") {
        status = lopsim_run_hom(&report.r);
    } else if (cfg.command == "verify") {
        status = lopsim_run_verify(cfg.seed, cfg.samples_given ? cfg.samples : 100, &report.r);
    } else if (cfg.command == "sweep") {
        status = lopsim_run_sweep(cfg.protocol == "swap" ? LOPSIM_SWEEP_SWAP : LOPSIM_SWEEP_TRANSFER, herald, cfg.grid,
                                  cfg.samples, cfg.seed, &report.r);
    } else {
        throw BadConfig("unknown command '" + cfg.command + "'");
    }
    if (status != LOPSIM_OK) return report_error(status);

    const char *text = nullptr;
    status = lopsim_report_render(report.r, cfg.format == "json" ? LOPSIM_FORMAT_JSON : LOPSIM_FORMAT_CSV, &text);
    if (status != LOPSIM_OK) return report_error(status);
    if (cfg.out.empty()) {
        std::fputs(text, stdout);
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        out << text;
        if (!out) {
            std::cerr << "lopsim: cannot write '" << cfg.out << "'\n";
            return kExitRuntime;
        }
    }
    if (!lopsim_report_passed(report.r)) {
        std::cerr << "lopsim: verification failed\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Few-photon linear-optics simulator for polarization entanglement swapping and state transfer"};
    app.set_version_flag("--version", lopsim_version());

    std::string command;
    std::string config_path;
    std::map<std::string, double> amp_flags;
    std::string herald, format, out, protocol;
    std::uint64_t seed = 0;
    std::uint32_t samples = 0, grid = 0;

    app.add_option("command", command, "swap | transfer | hom | verify | sweep")
        ->check(CLI::IsMember({"swap", "transfer", "hom", "verify", "sweep"}));
    app.add_option("--config", config_path, "JSON config file; flags override its values")->check(CLI::ExistingFile);
    for (const char *name : {"a", "b", "c", "d"}) {
        for (const char *part : {"re", "im"}) {
            const std::string key = std::string(name) + "-" + part;
            app.add_option("--" + key, amp_flags[key], std::string(part) + " part of amplitude " + name);
        }
    }
    app.add_option("--herald", herald, "heralding detector")->check(CLI::IsMember({"d3", "d4"}));
    app.add_option("--seed", seed, "RNG seed for verify and sweep");
    app.add_option("--samples", samples, "random draws for verify (default 100) or sweep (0 = grid)");
    app.add_option("--grid", grid, "sweep grid points per axis");
    app.add_option("--protocol", protocol, "sweep protocol")->check(CLI::IsMember({"swap", "transfer"}));
    app.add_option("--out", out, "write the report here instead of stdout");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitBadConfig;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) load_config_file(config_path, cfg);
        if (!command.empty()) cfg.command = command;
        if (cfg.command.empty()) throw BadConfig("no command given");
        for (const auto &[key, value] : amp_flags) {
            if (app.count("--" + key) > 0) cfg.amp[key] = value;
        }
        if (app.count("--herald")) cfg.herald = herald;
        if (app.count("--seed")) cfg.seed = seed;
        if (app.count("--samples")) {
            cfg.samples = samples;
            cfg.samples_given = true;
        }
        if (app.count("--grid")) cfg.grid = grid;
        if (app.count("--protocol")) cfg.protocol = protocol;
        if (app.count("--out")) cfg.out = out;
        if (app.count("--format")) cfg.format = format;
        return run(cfg);
    } catch (const BadConfig &e) {
        std::cerr << "lopsim: " << e.what() << "\n";
        return kExitBadConfig;
    }
}
