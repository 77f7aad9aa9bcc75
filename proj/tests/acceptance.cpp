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

// Acceptance gate: one [PASS]/[FAIL] line per criterion. Expected states are
// written out by hand here rather than taken from the library.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "lopsim/analysis.h"
#include "lopsim/elements.h"
#include "lopsim/oracle.h"
#include "lopsim/protocol.h"
#include "lopsim/random.h"

using namespace lopsim;
using namespace lopsim::protocol;
using P = Polarization;

namespace {

constexpr Complex kI{0.0, 1.0};
const double kSqrt2 = std::numbers::sqrt2;
constexpr std::uint64_t kSeed = 20261016;
constexpr int kDraws = 100;

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;  // <= 0: untimed
    std::function<Outcome()> run;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

using Terms = std::vector<std::pair<std::vector<std::pair<ModeId, int>>, Complex>>;

FockState build(const RegistryPtr &reg, int photons, const Terms &terms) {
    FockState s(reg, photons);
    for (const auto &[counts, amp] : terms) s.add(s.occupation(counts), amp);
    return s;
}

double max_diff(const FockState &x, const FockState &y) {
    double m = 0.0;
    for (const auto &[occ, a] : x.terms()) m = std::max(m, std::abs(a - y.amplitude(occ)));
    for (const auto &[occ, a] : y.terms()) m = std::max(m, std::abs(a - x.amplitude(occ)));
    return m;
}

std::vector<ProtocolParams> draws(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ProtocolParams> out;
    for (int i = 0; i < kDraws; ++i) out.push_back(rng.params(i % 2 == 0));
    return out;
}

Outcome hom() {
    auto reg = make_registry(ModeRegistry({{"in1", P::None}, {"in2", P::None}}));
    auto s = create_photon(vacuum(reg), {{{"in1", P::None}, 1.0}});
    s = create_photon(s, {{{"in2", P::None}, 1.0}});
    const auto out = apply_mode_unitary(s, beam_splitter("in1", "in2", "in1", "in2", kNoPolarization));
    const double dev = std::max({std::norm(out.amplitude({1, 1})), std::abs(std::norm(out.amplitude({2, 0})) - 0.5),
                                 std::abs(std::norm(out.amplitude({0, 2})) - 0.5)});
    return {dev <= 1e-12, "max deviation " + num(dev) + " (tol 1e-12)"};
}

Outcome pbs_product() {
    const auto circuit = build_protocol_circuit(Scope::Swap);
    const auto &reg = circuit.registry_ptr();
    double worst = 0.0;
    for (const auto &p : draws(kSeed)) {
        const auto s = circuit.evolve(prepare_input(p, reg), kStagePbs);
        // (a|psi1 H> + ib|psi2 V>) (chi_h|A1 H> + i chi_v|A2 V>) (c|phi1 H> + id|phi2 V>)
        const std::pair<ModeId, Complex> ph[2] = {{{"psi1", P::H}, p.a}, {{"psi2", P::V}, kI * p.b}};
        const std::pair<ModeId, Complex> pa[2] = {{{"A1", P::H}, p.chi2_h}, {{"A2", P::V}, kI * p.chi2_v}};
        const std::pair<ModeId, Complex> pp[2] = {{{"phi1", P::H}, p.c}, {{"phi2", P::V}, kI * p.d}};
        Terms t;
        for (const auto &x : ph)
            for (const auto &y : pa)
                for (const auto &z : pp) t.push_back({{{x.first, 1}, {y.first, 1}, {z.first, 1}}, x.second * y.second * z.second});
        worst = std::max(worst, max_diff(s, build(reg, 3, t)));
    }
    return {worst <= 1e-12, "max amplitude error " + num(worst) + " over 100 draws (tol 1e-12)"};
}

Outcome psi1_ratios() {
    const auto circuit = build_protocol_circuit(Scope::Swap);
    const auto &reg = circuit.registry_ptr();
    double worst = 0.0;
    for (const auto &p : draws(kSeed + 1)) {
        const auto s = circuit.evolve(prepare_input(p, reg), kStagePr1);
        const auto amp = [&](const char *alice, P ap, const char *shared, const char *bob, P bp) {
            return s.amplitude(s.occupation({{{alice, ap}, 1}, {{shared, P::H}, 1}, {{bob, bp}, 1}}));
        };
        // ad sqrt2 : i bd : ac : i ad sqrt2
        const Complex got[4] = {amp("psi1", P::H, "A1", "phi2", P::V), amp("psi2", P::V, "A1", "phi2", P::V),
                                amp("psi1", P::H, "A2", "phi1", P::H), amp("psi1", P::H, "A2", "phi2", P::V)};
        const Complex want[4] = {p.a * p.d * kSqrt2, kI * p.b * p.d, p.a * p.c, kI * p.a * p.d * kSqrt2};
        // common factor fixed by the largest expected entry
        int k = 0;
        for (int i = 1; i < 4; ++i)
            if (std::abs(want[i]) > std::abs(want[k])) k = i;
        const Complex scale = got[k] / want[k];
        for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(got[i] - scale * want[i]) / std::abs(scale));
        // the four terms are all that survive coincidence
        PostSelectionPattern coinc = coincidence_pattern(circuit.registry(), Scope::Swap);
        double kept = 0.0;
        for (const auto &[occ, a] : s.terms())
            if (matches(circuit.registry(), occ, coinc)) kept += std::norm(a);
        double listed = 0.0;
        for (const auto &g : got) listed += std::norm(g);
        worst = std::max(worst, std::abs(kept - listed));
    }
    return {worst <= 1e-10, "max ratio error " + num(worst) + " over 100 draws (tol 1e-10)"};
}

/// `bd_sign` multiplies the bd term and the cross term flips with it.
FockState herald_expected(const ProtocolParams &p, const RegistryPtr &reg, bool d4, double bd_sign = 1.0) {
    const char *det = d4 ? "D4" : "D3";
    Terms t{{{{{"psi1", P::H}, 1}, {{det, P::H}, 1}, {{"phi1", P::H}, 1}}, p.a * p.c},
            {{{{"psi2", P::V}, 1}, {{det, P::H}, 1}, {{"phi2", P::V}, 1}}, bd_sign * p.b * p.d}};
    double n = std::norm(p.a * p.c) + std::norm(p.b * p.d);
    if (d4) {
        t.push_back({{{{"psi1", P::H}, 1}, {{det, P::H}, 1}, {{"phi2", P::V}, 1}},
                     -bd_sign * kI * 2.0 * kSqrt2 * p.a * p.d});
        n += 8.0 * std::norm(p.a * p.d);
    }
    FockState s = build(reg, 3, t);
    return s.scaled(1.0 / std::sqrt(n));
}

Outcome herald_case(bool d4) {
    const auto reg = build_protocol_circuit(Scope::Swap).registry_ptr();
    double min_f = 1.0, min_flipped = 1.0;
    for (const auto &p : draws(kSeed + (d4 ? 3 : 2))) {
        const auto h = herald_state(p, d4 ? HeraldCase::D4 : HeraldCase::D3);
        min_f = std::min(min_f, fidelity(h.state, herald_expected(p, reg, d4)));
        if (d4) min_flipped = std::min(min_flipped, fidelity(h.state, herald_expected(p, reg, d4, -1.0)));
    }
    std::string detail = "min fidelity " + num(min_f) + " over 100 draws (need >= 1 - 1e-10)";
    if (d4) detail += "; with the bd and cross-term signs flipped: " + num(min_flipped);
    return {min_f >= 1.0 - 1e-10, detail};
}

Outcome swap_table() {
    double worst = 0.0;
    for (const auto &p : draws(kSeed + 4)) {
        const auto r = run_swapping(p, HeraldCase::D3);
        double total = 0.0;
        TwoQubitState target;
        target[kHH] = p.a * p.c;
        target[kVV] = -p.b * p.d;
        target = target.normalized();
        for (const auto &o : r.outcomes) {
            total += o.probability;
            // equal letters (psi3 phi3, psi4 phi4) carry the minus sign
            const bool same = (o.pattern.alice == AlicePath::Psi3) == (o.pattern.bob == BobPath::Phi3);
            TwoQubitState want;
            want[kHH] = p.a * p.c;
            want[kVV] = (same ? -1.0 : 1.0) * p.b * p.d;
            worst = std::max(worst, 1.0 - fidelity(o.state, want.normalized()));
            worst = std::max(worst, 1.0 - fidelity(apply_swap_correction(o), target));
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return {worst <= 1e-10, "worst deviation " + num(worst) + " over 100 draws (tol 1e-10)"};
}

Outcome transfer() {
    Rng rng(kSeed + 5);
    double worst = 0.0;
    for (int i = 0; i < kDraws; ++i) {
        ProtocolParams p;
        std::tie(p.c, p.d) = rng.qubit(i % 2 == 0);
        const auto r = run_state_transfer(p);
        if (r.branches.size() != 8) return {false, "expected 8 branches"};
        const QubitState target{{p.c, p.d}};
        for (const auto &b : r.branches) {
            QubitState after = b.alice_state_before;
            if (b.correction == Correction::SigmaZ) after.amp[1] = -after.amp[1];
            worst = std::max(worst, 1.0 - fidelity(after, target));
        }
        const auto cond = [&](Detector d) { return alice_conditional_state(r, d); };
        worst = std::max(worst, 1.0 - std::norm(cond(Detector::D5).dot(cond(Detector::D8))));
        worst = std::max(worst, 1.0 - std::norm(cond(Detector::D6).dot(cond(Detector::D7))));
    }
    return {worst <= 1e-10, "worst 1 - fidelity " + num(worst) + " over 100 (c, d) (tol 1e-10)"};
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    const auto circuit = build_protocol_circuit(Scope::Transfer);
    const auto u = circuit.global_unitary();
    const auto ps = draws(kSeed + 6);
    for (int i = 0; i < 20; ++i) {
        const auto in = prepare_input(ps[static_cast<std::size_t>(i)], circuit.registry_ptr());
        worst = std::max(worst, max_diff(circuit.evolve(in), oracle::evolve_via_permanents(u, in)));
    }
    Rng rng(kSeed + 7);
    const std::vector<std::string> paths{"p", "q", "r"};
    const auto reg = make_registry(ModeRegistry::from_paths(paths));
    for (int i = 0; i < 200; ++i) {
        FockState s = vacuum(reg);
        for (int k = 0; k <= i % 3; ++k) s = create_photon(s, random_photon(rng, *reg));
        FockState direct = s;
        ComplexMatrix total = ComplexMatrix::Identity(6, 6);
        for (const auto &e : random_element_sequence(rng, paths, 2 + i % 5)) {
            direct = apply_mode_unitary(direct, e);
            total = e.embedded(*reg).matrix() * total;
        }
        worst = std::max(worst, max_diff(direct, oracle::evolve_via_permanents(ModeUnitary(reg->modes(), total), s)));
    }
    return {worst <= 1e-10, "max amplitude error " + num(worst) + " (20 protocol draws, 200 random circuits; tol 1e-10)"};
}

Outcome success_probability() {
    const ProtocolParams p;
    const double direct = run_state_transfer(p).total_success_probability;
    const auto circuit = build_protocol_circuit(Scope::Transfer);
    const auto out = oracle::evolve_via_permanents(circuit.global_unitary(), prepare_input(p, circuit.registry_ptr()));
    const double via = project(out, coincidence_pattern(circuit.registry(), Scope::Transfer, HeraldCase::D3)).probability;
    const double delta = std::abs(direct - via);
    char buf[160];
    std::snprintf(buf, sizeof buf, "direct %.12g, oracle %.12g, |delta| %.3g (tol 1e-10); quoted 1/8, delta %.12g",
                  direct, via, delta, std::abs(direct - kQuotedTransferSuccess));
    return {delta <= 1e-10, buf};
}

Outcome no_interaction() {
    int checked = 0;
    for (auto scope : {Scope::Swap, Scope::Transfer}) {
        const auto circuit = build_protocol_circuit(scope);
        for (const auto &stage : circuit.stages()) {
            for (const auto &e : stage.elements) {
                bool alice = false, bob = false;
                for (const auto &m : e.unitary.modes()) {
                    alice |= region_of(m.path) == Region::Alice;
                    bob |= region_of(m.path) == Region::Bob;
                }
                if (alice && bob) return {false, "element " + e.name + " spans both regions"};
                ++checked;
            }
        }
    }
    return {true, std::to_string(checked) + " elements inspected"};
}

Outcome concurrence_check() {
    double worst = 0.0;
    for (const auto &o : run_swapping(ProtocolParams{}, HeraldCase::D3).outcomes) {
        worst = std::max(worst, std::abs(concurrence(apply_swap_correction(o)) - 1.0));
    }
    ProtocolParams p;
    p.a = p.c = 0.8;
    p.b = p.d = 0.6;
    const double ac = 0.64, bd = 0.36;
    const double expected = 2.0 * ac * bd / (ac * ac + bd * bd);
    for (const auto &o : run_swapping(p, HeraldCase::D3).outcomes) {
        worst = std::max(worst, std::abs(concurrence(apply_swap_correction(o)) - expected));
    }
    return {worst <= 1e-10, "max deviation " + num(worst) + " (tol 1e-10)"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "HOM bunching", 1e-3, hom},
        {2, "product state after the PBS stage", 1.0, pbs_product},
        {3, "coincidence amplitude ratios before BS4", 0.0, psi1_ratios},
        {4, "D3 heralded state", 0.0, [] { return herald_case(false); }},
        {5, "D4 heralded state, quoted form", 0.0, [] { return herald_case(true); }},
        {6, "swap sign table and corrections", 0.0, swap_table},
        {7, "state transfer branches", 0.0, transfer},
        {8, "direct vs permanent-oracle evolution", 30.0, oracle_equivalence},
        {9, "transfer success probability, direct vs oracle", 0.0, success_probability},
        {10, "no element couples Alice and Bob", 0.0, no_interaction},
        {11, "concurrence of the swapped state", 0.0, concurrence_check},
    };
    // warm the circuit caches so timed criteria measure the computation only
    (void)herald_breakdown(ProtocolParams{});
    int failed = 0;
    for (const auto &c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = num(dt) + " s";
        if (c.time_limit_s > 0) {
            timing += " (limit " + num(c.time_limit_s) + " s)";
            if (dt >= c.time_limit_s) {
                o.passed = false;
                o.detail += "; over time limit";
            }
        }
        failed += o.passed ? 0 : 1;
        std::printf("[%s] %2d %s: %s; %s\n", o.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                    timing.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
