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

#include "lopsim/report.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "lopsim/errors.h"
#include "lopsim/oracle.h"
#include "lopsim/random.h"

namespace lopsim::report {

using nlohmann::json;
using namespace lopsim::protocol;

namespace {

using P = Polarization;
constexpr Complex kI{0.0, 1.0};
constexpr std::size_t kOracleProtocolDraws = 20;
constexpr std::uint32_t kOracleRandomCircuits = 200;

json claim(std::string id, double quoted_value, double computed) {
    return {{"id", std::move(id)},
            {"quoted_value", quoted_value},
            {"computed", computed},
            {"abs_delta", std::abs(computed - quoted_value)}};
}

json qubit_json(const QubitState &q) { return {{"H", complex_json(q.amp[0])}, {"V", complex_json(q.amp[1])}}; }

json two_qubit_json(const TwoQubitState &s) {
    return {{"HH", complex_json(s[kHH])},
            {"HV", complex_json(s[kHV])},
            {"VH", complex_json(s[kVH])},
            {"VV", complex_json(s[kVV])}};
}

json envelope(std::string command, json config_echo, json results, json claims) {
    config_echo["command"] = command;
    return {{"schema", kReportSchema},
            {"command", std::move(command)},
            {"config_echo", std::move(config_echo)},
            {"results", std::move(results)},
            {"claims", std::move(claims)}};
}

/// ac|psi1 H, phi1 H> + bd|psi2 V, phi2 V> with the herald photon in D3.
FockState expected_d3_state(const ProtocolParams &p, const RegistryPtr &reg) {
    FockState s(reg, 3);
    s.add(s.occupation({{{"psi1", P::H}, 1}, {{"D3", P::H}, 1}, {{"phi1", P::H}, 1}}), p.a * p.c);
    s.add(s.occupation({{{"psi2", P::V}, 1}, {{"D3", P::H}, 1}, {{"phi2", P::V}, 1}}), p.b * p.d);
    return s.normalized_copy();
}

/// The D4 state with the quoted signs (literal) or as implied by the D3
/// state through the orthogonal BS4 port.
FockState expected_d4_state(const ProtocolParams &p, const RegistryPtr &reg, bool literal) {
    const double s = literal ? 1.0 : -1.0;
    FockState st(reg, 3);
    st.add(st.occupation({{{"psi1", P::H}, 1}, {{"D4", P::H}, 1}, {{"phi1", P::H}, 1}}), p.a * p.c);
    st.add(st.occupation({{{"psi2", P::V}, 1}, {{"D4", P::H}, 1}, {{"phi2", P::V}, 1}}), s * p.b * p.d);
    st.add(st.occupation({{{"psi1", P::H}, 1}, {{"D4", P::H}, 1}, {{"phi2", P::V}, 1}}),
           -s * kI * 2.0 * std::numbers::sqrt2 * p.a * p.d);
    return st.normalized_copy();
}

TwoQubitState swap_target(const ProtocolParams &p) {
    TwoQubitState t;
    t[kHH] = p.a * p.c;
    t[kVV] = -p.b * p.d;
    return t.normalized();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double max_amplitude_difference(const FockState &x, const FockState &y) {
    double m = 0.0;
    for (const auto &[occ, amp] : x.terms()) m = std::max(m, std::abs(amp - y.amplitude(occ)));
    for (const auto &[occ, amp] : y.terms()) m = std::max(m, std::abs(amp - x.amplitude(occ)));
    return m;
}

double oracle_transfer_success(const ProtocolParams &params) {
    const auto circuit = build_protocol_circuit(Scope::Transfer);
    const auto input = prepare_input(params, circuit.registry_ptr());
    const auto out = oracle::evolve_via_permanents(circuit.global_unitary(), input);
    return project(out, coincidence_pattern(circuit.registry(), Scope::Transfer, HeraldCase::D3)).probability;
}

}  // namespace

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json params_json(const ProtocolParams &p) {
    return {{"a", complex_json(p.a)},           {"b", complex_json(p.b)},          {"c", complex_json(p.c)},
            {"d", complex_json(p.d)},           {"chi2_h", complex_json(p.chi2_h)}, {"chi2_v", complex_json(p.chi2_v)}};
}

json swap_report(const ProtocolParams &params, HeraldCase herald) {
    const auto result = run_swapping(params, herald);
    const auto breakdown = herald_breakdown(params);
    const bool degenerate = std::abs(params.a * params.c) == 0.0 && std::abs(params.b * params.d) == 0.0;
    json outcomes = json::array();
    double min_corrected = 1.0;
    for (const auto &o : result.outcomes) {
        json row = {{"alice_path", to_string(o.pattern.alice)},
                    {"bob_path", to_string(o.pattern.bob)},
                    {"probability", o.probability},
                    {"correction_needed", o.correction_needed}};
        if (o.probability > 0.0) {
            const auto corrected = apply_swap_correction(o);
            const auto schmidt = schmidt_coefficients(o.state);
            row["state"] = two_qubit_json(o.state);
            row["concurrence"] = concurrence(o.state);
            row["schmidt_coefficients"] = {schmidt[0], schmidt[1]};
            row["corrected_state"] = two_qubit_json(corrected);
            if (!degenerate && herald == HeraldCase::D3) {
                const double f = fidelity(corrected, swap_target(params));
                row["corrected_fidelity_to_target"] = f;
                min_corrected = std::min(min_corrected, f);
            }
        }
        outcomes.push_back(std::move(row));
    }
    json results = {{"herald", to_string(herald)},
                    {"herald_probability", result.herald_probability},
                    {"herald_breakdown", {{"D3", breakdown.d3}, {"D4", breakdown.d4}, {"discarded", breakdown.discarded}}},
                    {"outcomes", std::move(outcomes)}};
    json claims = json::array();
    if (result.herald_probability > 0.0) {
        const auto heralded = herald_state(params, herald);
        const auto &reg = heralded.state.registry_ptr();
        if (herald == HeraldCase::D3) {
            const auto expected = expected_d3_state(params, reg);
            claims.push_back(claim("heralded_state_fidelity_d3", 1.0, fidelity(heralded.state, expected)));
            const double n2 = 1.0 / std::sqrt(std::norm(params.a * params.c) + std::norm(params.b * params.d));
            const Occupation occ = heralded.state.occupation({{{"psi1", P::H}, 1}, {{"D3", P::H}, 1}, {{"phi1", P::H}, 1}});
            if (std::abs(params.a * params.c) > 0.0) {
                claims.push_back(claim("n2_normalization", n2,
                                       std::abs(heralded.state.amplitude(occ)) / std::abs(params.a * params.c)));
            }
            if (!degenerate) claims.push_back(claim("corrected_swap_fidelity_min", 1.0, min_corrected));
            results["target_state"] = two_qubit_json(swap_target(params));
        } else {
            claims.push_back(claim("heralded_state_fidelity_d4_quoted", 1.0,
                                   fidelity(heralded.state, expected_d4_state(params, reg, true))));
            claims.push_back(claim("heralded_state_fidelity_d4_orthogonal_port", 1.0,
                                   fidelity(heralded.state, expected_d4_state(params, reg, false))));
            const double n2p = 1.0 / std::sqrt(std::norm(params.a * params.c) + std::norm(params.b * params.d) +
                                               8.0 * std::norm(params.a * params.d));
            const Occupation occ = heralded.state.occupation({{{"psi1", P::H}, 1}, {{"D4", P::H}, 1}, {{"phi1", P::H}, 1}});
            if (std::abs(params.a * params.c) > 0.0) {
                claims.push_back(claim("n2_prime_normalization", n2p,
                                       std::abs(heralded.state.amplitude(occ)) / std::abs(params.a * params.c)));
            }
        }
    }
    return envelope("swap", {{"params", params_json(params)}, {"herald", to_string(herald)}}, std::move(results),
                    std::move(claims));
}

json transfer_report(const ProtocolParams &params) {
    const auto result = run_state_transfer(params);
    json branches = json::array();
    double min_fidelity = 1.0;
    for (const auto &b : result.branches) {
        json row = {{"detector", to_string(b.detector)},
                    {"alice_path", to_string(b.alice_path)},
                    {"correction", to_string(b.correction)},
                    {"probability", b.probability},
                    {"fidelity_to_target", b.fidelity_to_target}};
        if (b.probability > 0.0) {
            row["alice_state_before"] = qubit_json(b.alice_state_before);
            row["alice_state_after"] = qubit_json(b.alice_state_after);
            min_fidelity = std::min(min_fidelity, b.fidelity_to_target);
        }
        branches.push_back(std::move(row));
    }
    const double oracle_total = oracle_transfer_success(params);
    json results = {{"branches", std::move(branches)},
                    {"total_success_probability", result.total_success_probability},
                    {"oracle_total_success_probability", oracle_total},
                    {"direct_vs_oracle_abs_delta", std::abs(oracle_total - result.total_success_probability)},
                    {"min_branch_fidelity", min_fidelity},
                    {"target_state", qubit_json(QubitState{{params.c, params.d}}.normalized())}};
    if (result.total_success_probability > 0.0) {
        auto pair_fidelity = [&](Detector x, Detector y) {
            return fidelity(alice_conditional_state(result, x), alice_conditional_state(result, y));
        };
        results["identity_fidelity_d5_d8"] = pair_fidelity(Detector::D5, Detector::D8);
        results["identity_fidelity_d6_d7"] = pair_fidelity(Detector::D6, Detector::D7);
    }
    if (!result.equal_alice_amplitudes) {
        results["warning"] = "correction table assumes a = b = 1/sqrt(2); fidelities below 1 are expected";
    }
    json claims = json::array();
    claims.push_back(claim("transfer_success_probability", kQuotedTransferSuccess, result.total_success_probability));
    if (result.total_success_probability > 0.0) claims.push_back(claim("transfer_min_fidelity", 1.0, min_fidelity));
    return envelope("transfer", {{"params", params_json(params)}}, std::move(results), std::move(claims));
}

json hom_report() {
    auto reg = make_registry(ModeRegistry({{"in1", P::None}, {"in2", P::None}}));
    FockState in = vacuum(reg);
    in = create_photon(in, {{{"in1", P::None}, 1.0}});
    in = create_photon(in, {{{"in2", P::None}, 1.0}});
    const auto out = apply_mode_unitary(in, beam_splitter("in1", "in2", "in1", "in2", kNoPolarization));
    json dist = json::array();
    for (const auto &occ : oracle::enumerate_basis(2, 2)) {
        const Complex amp = out.amplitude(occ);
        dist.push_back({{"occupation", {occ[0], occ[1]}}, {"amplitude", complex_json(amp)}, {"probability", std::norm(amp)}});
    }
    const double coincidence = std::norm(out.amplitude({1, 1}));
    json results = {{"input", {1, 1}}, {"distribution", std::move(dist)}, {"coincidence_probability", coincidence}};
    json claims = json::array();
    claims.push_back(claim("hom_coincidence_probability", 0.0, coincidence));
    claims.push_back(claim("hom_bunched_amplitude_magnitude", 1.0 / std::numbers::sqrt2, std::abs(out.amplitude({2, 0}))));
    return envelope("hom", json::object(), std::move(results), std::move(claims));
}

json sweep_report(const SweepConfig &config) {
    std::vector<ProtocolParams> points;
    if (config.samples > 0) {
        Rng rng(config.seed);
        for (std::uint32_t i = 0; i < config.samples; ++i) points.push_back(rng.params());
    } else {
        if (config.grid < 2) throw ConfigError("sweep grid needs at least 2 points per axis");
        for (std::uint32_t i = 0; i < config.grid; ++i) {
            for (std::uint32_t j = 0; j < config.grid; ++j) {
                const double ta = std::numbers::pi / 2.0 * i / (config.grid - 1);
                const double tc = std::numbers::pi / 2.0 * j / (config.grid - 1);
                ProtocolParams p;
                p.a = std::cos(ta);
                p.b = std::sin(ta);
                p.c = std::cos(tc);
                p.d = std::sin(tc);
                points.push_back(p);
            }
        }
    }
    json rows = json::array();
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto &p = points[k];
        json row = {{"index", k}, {"params", params_json(p)}};
        if (config.protocol == SweepProtocol::Swap) {
            const auto r = run_swapping(p, config.herald);
            row["herald_probability"] = r.herald_probability;
            json probs = json::array();
            double min_concurrence = 1.0;
            bool any = false;
            for (const auto &o : r.outcomes) {
                probs.push_back(o.probability);
                if (o.probability > 0.0) {
                    min_concurrence = std::min(min_concurrence, concurrence(apply_swap_correction(o)));
                    any = true;
                }
            }
            row["pattern_probabilities"] = std::move(probs);
            row["min_concurrence"] = any ? min_concurrence : 0.0;
        } else {
            const auto r = run_state_transfer(p);
            double min_f = 1.0;
            for (const auto &b : r.branches) {
                if (b.probability > 0.0) min_f = std::min(min_f, b.fidelity_to_target);
            }
            row["total_success_probability"] = r.total_success_probability;
            row["min_branch_fidelity"] = r.total_success_probability > 0.0 ? min_f : 0.0;
        }
        rows.push_back(std::move(row));
    }
    json echo = {{"protocol", config.protocol == SweepProtocol::Swap ? "swap" : "transfer"},
                 {"herald", to_string(config.herald)},
                 {"mode", config.samples > 0 ? "random" : "grid"},
                 {"grid", config.grid},
                 {"samples", config.samples},
                 {"seed", config.seed}};
    return envelope("sweep", std::move(echo), {{"rows", std::move(rows)}}, json::array());
}

json verify_report(std::uint64_t seed, std::uint32_t samples) {
    if (samples == 0) throw ConfigError("verify needs at least one sample");
    json checks = json::array();
    auto add = [&](std::string id, bool passed, double value, double tolerance, std::string detail = {}) {
        json c = {{"id", std::move(id)}, {"passed", passed}, {"value", value}, {"tolerance", tolerance}};
        if (!detail.empty()) c["detail"] = std::move(detail);
        checks.push_back(std::move(c));
    };
    Rng rng(seed);
    std::vector<ProtocolParams> draws;
    for (std::uint32_t i = 0; i < samples; ++i) draws.push_back(rng.params(i % 2 == 0));

    const auto swap = build_protocol_circuit(Scope::Swap);
    const auto transfer = build_protocol_circuit(Scope::Transfer);

    {
        const auto hom = hom_report();
        const double coincidence = hom["results"]["coincidence_probability"];
        const double p20 = hom["results"]["distribution"][2]["probability"];
        const double dev = std::max(coincidence, std::abs(p20 - 0.5));
        add("hom_bunching", dev <= 1e-12, dev, 1e-12);
    }
    {
        double worst = 0.0;
        for (const auto &p : draws) {
            const auto s = swap.evolve(prepare_input(p, swap.registry_ptr()), kStagePbs);
            const std::array<std::pair<std::string, Complex>, 2> ph{{{"psi1", p.a}, {"psi2", kI * p.b}}};
            const std::array<std::pair<std::string, Complex>, 2> pa{{{"A1", p.chi2_h}, {"A2", kI * p.chi2_v}}};
            const std::array<std::pair<std::string, Complex>, 2> pp{{{"phi1", p.c}, {"phi2", kI * p.d}}};
            FockState expected(swap.registry_ptr(), 3);
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    for (std::size_t k = 0; k < 2; ++k) {
                        expected.add(expected.occupation({{{ph[i].first, i ? P::V : P::H}, 1},
                                                          {{pa[j].first, j ? P::V : P::H}, 1},
                                                          {{pp[k].first, k ? P::V : P::H}, 1}}),
                                     ph[i].second * pa[j].second * pp[k].second);
                    }
                }
            }
            worst = std::max(worst, max_amplitude_difference(s, expected));
        }
        add("pbs_stage_product_state", worst <= 1e-12, worst, 1e-12);
    }
    {
        double worst = 0.0;
        for (const auto &p : draws) {
            const auto s = swap.evolve(prepare_input(p, swap.registry_ptr()), kStagePr1);
            const auto &reg = swap.registry();
            PostSelectionPattern coinc = coincidence_pattern(reg, Scope::Swap);
            FockState kept(swap.registry_ptr(), 3);
            for (const auto &[occ, amp] : s.terms()) {
                if (matches(reg, occ, coinc)) kept.add(occ, amp);
            }
            FockState expected(swap.registry_ptr(), 3);
            const double r2 = std::numbers::sqrt2;
            expected.add(expected.occupation({{{"psi1", P::H}, 1}, {{"A1", P::H}, 1}, {{"phi2", P::V}, 1}}), p.a * p.d * r2);
            expected.add(expected.occupation({{{"psi2", P::V}, 1}, {{"A1", P::H}, 1}, {{"phi2", P::V}, 1}}), kI * p.b * p.d);
            expected.add(expected.occupation({{{"psi1", P::H}, 1}, {{"A2", P::H}, 1}, {{"phi1", P::H}, 1}}), p.a * p.c);
            expected.add(expected.occupation({{{"psi1", P::H}, 1}, {{"A2", P::H}, 1}, {{"phi2", P::V}, 1}}), kI * p.a * p.d * r2);
            // the unnormalized coincidence amplitudes are these times 1/(2 sqrt 2)
            worst = std::max(worst, max_amplitude_difference(kept.scaled(2.0 * r2), expected));
        }
        add("coincidence_amplitude_ratios", worst <= 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (const auto &p : draws) {
            const auto h = herald_state(p, HeraldCase::D3);
            if (h.probability == 0.0) continue;
            worst = std::max(worst, 1.0 - fidelity(h.state, expected_d3_state(p, swap.registry_ptr())));
        }
        add("herald_d3_state", worst <= 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0, literal_min = 1.0, norm_dev = 0.0;
        for (const auto &p : draws) {
            const auto h = herald_state(p, HeraldCase::D4);
            if (h.probability == 0.0) continue;
            worst = std::max(worst, 1.0 - fidelity(h.state, expected_d4_state(p, swap.registry_ptr(), false)));
            literal_min = std::min(literal_min, fidelity(h.state, expected_d4_state(p, swap.registry_ptr(), true)));
            if (std::abs(p.a * p.c) > 1e-6) {
                const double n2p = 1.0 / std::sqrt(std::norm(p.a * p.c) + std::norm(p.b * p.d) + 8.0 * std::norm(p.a * p.d));
                const auto occ = h.state.occupation({{{"psi1", P::H}, 1}, {{"D4", P::H}, 1}, {{"phi1", P::H}, 1}});
                norm_dev = std::max(norm_dev, std::abs(std::abs(h.state.amplitude(occ)) / std::abs(p.a * p.c) - n2p));
            }
        }
        add("herald_d4_state_up_to_bob_sigma_z", worst <= 1e-10 && norm_dev <= 1e-10, std::max(worst, norm_dev), 1e-10,
            "fidelity to the quoted D4 state: min " + fmt(literal_min));
    }
    {
        double worst = 0.0;
        for (const auto &p : draws) {
            if (std::abs(p.a * p.c) == 0.0 && std::abs(p.b * p.d) == 0.0) continue;
            const auto r = run_swapping(p, HeraldCase::D3);
            double total = 0.0;
            for (const auto &o : r.outcomes) {
                total += o.probability;
                TwoQubitState expected;
                const bool minus = o.pattern.alice == AlicePath::Psi3 ? o.pattern.bob == BobPath::Phi3
                                                                      : o.pattern.bob == BobPath::Phi4;
                expected[kHH] = p.a * p.c;
                expected[kVV] = (minus ? -1.0 : 1.0) * p.b * p.d;
                worst = std::max(worst, 1.0 - fidelity(o.state, expected.normalized()));
                worst = std::max(worst, 1.0 - fidelity(apply_swap_correction(o), swap_target(p)));
            }
            worst = std::max(worst, std::abs(total - 1.0));
        }
        add("swap_table_and_corrections", worst <= 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        for (std::uint32_t i = 0; i < samples; ++i) {
            ProtocolParams p;
            std::tie(p.c, p.d) = rng.qubit();
            const auto r = run_state_transfer(p);
            for (const auto &b : r.branches) worst = std::max(worst, 1.0 - b.fidelity_to_target);
            worst = std::max(worst, 1.0 - fidelity(alice_conditional_state(r, Detector::D5),
                                                   alice_conditional_state(r, Detector::D8)));
            worst = std::max(worst, 1.0 - fidelity(alice_conditional_state(r, Detector::D6),
                                                   alice_conditional_state(r, Detector::D7)));
        }
        add("transfer_branches", worst <= 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        const auto u = transfer.global_unitary();
        for (std::size_t i = 0; i < std::min<std::size_t>(draws.size(), kOracleProtocolDraws); ++i) {
            const auto input = prepare_input(draws[i], transfer.registry_ptr());
            worst = std::max(worst, max_amplitude_difference(transfer.evolve(input),
                                                             oracle::evolve_via_permanents(u, input)));
        }
        add("oracle_equivalence_protocol", worst <= 1e-10, worst, 1e-10);
    }
    {
        double worst = 0.0;
        const std::vector<std::string> paths{"p0", "p1", "p2"};
        auto reg = make_registry(ModeRegistry::from_paths(paths));
        for (std::uint32_t i = 0; i < kOracleRandomCircuits; ++i) {
            FockState state = vacuum(reg);
            const int photons = 1 + static_cast<int>(i % 3);
            for (int k = 0; k < photons; ++k) state = create_photon(state, random_photon(rng, *reg), true);
            state = state.normalized_copy();
            const auto seq = random_element_sequence(rng, paths, 2 + static_cast<int>(i % 5));
            FockState direct = state;
            ComplexMatrix total = ComplexMatrix::Identity(6, 6);
            for (const auto &u : seq) {
                direct = apply_mode_unitary(direct, u);
                total = u.embedded(*reg).matrix() * total;
            }
            const auto via = oracle::evolve_via_permanents(ModeUnitary(reg->modes(), total), state);
            worst = std::max(worst, max_amplitude_difference(direct, via));
        }
        add("oracle_equivalence_random_circuits", worst <= 1e-10, worst, 1e-10);
    }
    {
        const ProtocolParams maximal;
        const double direct = run_state_transfer(maximal).total_success_probability;
        const double via = oracle_transfer_success(maximal);
        add("transfer_success_probability_oracle", std::abs(direct - via) <= 1e-10, std::abs(direct - via), 1e-10,
            "computed " + fmt(direct) + ", quoted 1/8");
    }
    {
        bool ok = true;
        for (const auto &c : {&swap, &transfer}) {
            for (const auto &s : c->stages()) {
                for (const auto &e : s.elements) {
                    bool alice = false, bob = false;
                    for (const auto &m : e.unitary.modes()) {
                        alice |= region_of(m.path) == Region::Alice;
                        bob |= region_of(m.path) == Region::Bob;
                    }
                    ok &= !(alice && bob);
                }
            }
        }
        add("no_element_spans_alice_and_bob", ok, ok ? 0.0 : 1.0, 0.0);
    }
    {
        double worst = 0.0;
        for (const auto &p : draws) {
            const auto b = herald_breakdown(p);
            worst = std::max(worst, std::abs(b.d3 + b.d4 + b.discarded - 1.0));
        }
        add("herald_probabilities_complete", worst <= 1e-10, worst, 1e-10);
    }
    {
        ProtocolParams p;
        p.a = 0.8;
        p.b = 0.6;
        p.c = 0.8;
        p.d = 0.6;
        const auto r = run_swapping(p, HeraldCase::D3);
        const double expected = 2.0 * 0.64 * 0.36 / (0.64 * 0.64 + 0.36 * 0.36);
        double worst = 0.0;
        for (const auto &o : r.outcomes) worst = std::max(worst, std::abs(concurrence(apply_swap_correction(o)) - expected));
        for (const auto &o : run_swapping(ProtocolParams{}, HeraldCase::D3).outcomes) {
            worst = std::max(worst, std::abs(concurrence(apply_swap_correction(o)) - 1.0));
        }
        add("concurrence_of_swapped_state", worst <= 1e-10, worst, 1e-10);
    }

    bool all = std::all_of(checks.begin(), checks.end(), [](const json &c) { return c["passed"].get<bool>(); });
    return envelope("verify", {{"seed", seed}, {"samples", samples}}, {{"checks", std::move(checks)}, {"all_passed", all}},
                    json::array());
}

bool all_checks_passed(const json &report) {
    const auto &results = report.at("results");
    return !results.contains("all_passed") || results.at("all_passed").get<bool>();
}

std::string to_json_text(const json &report) { return report.dump(2) + "\n"; }

std::string to_csv(const json &report) {
    std::ostringstream out;
    const auto command = report.at("command").get<std::string>();
    const auto &results = report.at("results");
    auto num = [](const json &v) { return v.is_number() ? fmt(v.get<double>()) : std::string(); };
    if (command == "swap") {
        out << "alice_path,bob_path,probability,concurrence,corrected_fidelity_to_target\n";
        for (const auto &o : results.at("outcomes")) {
            out << o.at("alice_path").get<std::string>() << ',' << o.at("bob_path").get<std::string>() << ','
                << num(o.at("probability")) << ',' << num(o.value("concurrence", json())) << ','
                << num(o.value("corrected_fidelity_to_target", json())) << '\n';
        }
    } else if (command == "transfer") {
        out << "detector,alice_path,correction,probability,fidelity_to_target\n";
        for (const auto &b : results.at("branches")) {
            out << b.at("detector").get<std::string>() << ',' << b.at("alice_path").get<std::string>() << ','
                << b.at("correction").get<std::string>() << ',' << num(b.at("probability")) << ','
                << num(b.at("fidelity_to_target")) << '\n';
        }
    } else if (command == "hom") {
        out << "n_out1,n_out2,probability\n";
        for (const auto &d : results.at("distribution")) {
            out << d.at("occupation")[0].get<int>() << ',' << d.at("occupation")[1].get<int>() << ','
                << num(d.at("probability")) << '\n';
        }
    } else if (command == "verify") {
        out << "id,passed,value,tolerance\n";
        for (const auto &c : results.at("checks")) {
            out << c.at("id").get<std::string>() << ',' << (c.at("passed").get<bool>() ? "pass" : "fail") << ','
                << num(c.at("value")) << ',' << num(c.at("tolerance")) << '\n';
        }
    } else if (command == "sweep") {
        const bool swap = report.at("config_echo").at("protocol") == "swap";
        out << "index,a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im,"
            << (swap ? "herald_probability,min_concurrence" : "total_success_probability,min_branch_fidelity") << '\n';
        for (const auto &r : results.at("rows")) {
            out << r.at("index").get<std::size_t>();
            for (const char *k : {"a", "b", "c", "d"}) {
                out << ',' << num(r.at("params").at(k).at("re")) << ',' << num(r.at("params").at(k).at("im"));
            }
            if (swap) {
                out << ',' << num(r.at("herald_probability")) << ',' << num(r.at("min_concurrence"));
            } else {
                out << ',' << num(r.at("total_success_probability")) << ',' << num(r.at("min_branch_fidelity"));
            }
            out << '\n';
        }
    } else {
        throw ConfigError("no CSV projection for command '" + command + "'");
    }
    return out.str();
}

}  // namespace lopsim::report
