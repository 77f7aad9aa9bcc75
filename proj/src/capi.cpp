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

#include "lopsim/lopsim.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "lopsim/errors.h"
#include "lopsim/report.h"

struct lopsim_params {
    lopsim::protocol::ProtocolParams value;
};

struct lopsim_report {
    nlohmann::json value;
    std::string text;
};

namespace {

thread_local std::string g_last_error;

lopsim_status fail(lopsim_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

lopsim_status status_of(lopsim::ErrorCode code) {
    switch (code) {
        case lopsim::ErrorCode::Config: return LOPSIM_ERR_CONFIG;
        case lopsim::ErrorCode::Mode: return LOPSIM_ERR_MODE;
        case lopsim::ErrorCode::Normalization: return LOPSIM_ERR_NORMALIZATION;
        case lopsim::ErrorCode::Unitarity: return LOPSIM_ERR_UNITARITY;
        case lopsim::ErrorCode::Encoding: return LOPSIM_ERR_ENCODING;
    }
    return LOPSIM_ERR_INTERNAL;
}

template <typename F>
lopsim_status guarded(F &&body) {
    try {
        body();
        g_last_error.clear();
        return LOPSIM_OK;
    } catch (const lopsim::Error &e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(LOPSIM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(LOPSIM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LOPSIM_ERR_INTERNAL, "unknown exception");
    }
}

lopsim::Complex *slot(lopsim::protocol::ProtocolParams &p, lopsim_amplitude which) {
    switch (which) {
        case LOPSIM_AMP_A: return &p.a;
        case LOPSIM_AMP_B: return &p.b;
        case LOPSIM_AMP_C: return &p.c;
        case LOPSIM_AMP_D: return &p.d;
        case LOPSIM_AMP_CHI2_H: return &p.chi2_h;
        case LOPSIM_AMP_CHI2_V: return &p.chi2_v;
    }
    return nullptr;
}

bool valid_herald(lopsim_herald h) { return h == LOPSIM_HERALD_D3 || h == LOPSIM_HERALD_D4; }

lopsim::protocol::HeraldCase herald_of(lopsim_herald h) {
    return h == LOPSIM_HERALD_D3 ? lopsim::protocol::HeraldCase::D3 : lopsim::protocol::HeraldCase::D4;
}

template <typename F>
lopsim_status make_report(lopsim_report **out, F &&build) {
    if (out == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new lopsim_report{build(), {}}; });
}

}  // namespace

extern "C" {

const char *lopsim_version(void) { return "0.1.0"; }

const char *lopsim_last_error(void) { return g_last_error.c_str(); }

const char *lopsim_status_name(lopsim_status status) {
    switch (status) {
        case LOPSIM_OK: return "ok";
        case LOPSIM_ERR_CONFIG: return "config_error";
        case LOPSIM_ERR_MODE: return "mode_error";
        case LOPSIM_ERR_NORMALIZATION: return "normalization_error";
        case LOPSIM_ERR_UNITARITY: return "unitarity_error";
        case LOPSIM_ERR_ENCODING: return "encoding_error";
        case LOPSIM_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case LOPSIM_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

lopsim_status lopsim_params_create(lopsim_params **out) {
    if (out == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new lopsim_params{}; });
}

void lopsim_params_destroy(lopsim_params *params) { delete params; }

lopsim_status lopsim_params_set(lopsim_params *params, lopsim_amplitude which, double re, double im) {
    if (params == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null params");
    auto *s = slot(params->value, which);
    if (s == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "unknown amplitude selector");
    if (!std::isfinite(re) || !std::isfinite(im)) return fail(LOPSIM_ERR_CONFIG, "amplitude must be finite");
    *s = {re, im};
    return LOPSIM_OK;
}

lopsim_status lopsim_params_get(const lopsim_params *params, lopsim_amplitude which, double *re, double *im) {
    if (params == nullptr || re == nullptr || im == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null argument");
    auto copy = params->value;
    auto *s = slot(copy, which);
    if (s == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "unknown amplitude selector");
    *re = s->real();
    *im = s->imag();
    return LOPSIM_OK;
}

lopsim_status lopsim_params_normalize(lopsim_params *params, double tolerance, int *renormalized) {
    if (params == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null params");
    if (!(tolerance >= 0.0)) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "tolerance must be non-negative");
    auto next = params->value;
    bool changed = false;
    const std::pair<lopsim::Complex *, lopsim::Complex *> qubits[] = {
        {&next.a, &next.b}, {&next.c, &next.d}, {&next.chi2_h, &next.chi2_v}};
    for (auto [x, y] : qubits) {
        const double n2 = std::norm(*x) + std::norm(*y);
        if (n2 == 0.0) return fail(LOPSIM_ERR_NORMALIZATION, "polarization qubit has zero norm");
        changed |= std::abs(n2 - 1.0) > tolerance;
        const double n = std::sqrt(n2);
        *x /= n;
        *y /= n;
    }
    params->value = next;
    if (renormalized != nullptr) *renormalized = changed ? 1 : 0;
    return LOPSIM_OK;
}

lopsim_status lopsim_run_swap(const lopsim_params *params, lopsim_herald herald, lopsim_report **out) {
    if (params == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null params");
    if (!valid_herald(herald)) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "unknown herald");
    return make_report(out, [&] { return lopsim::report::swap_report(params->value, herald_of(herald)); });
}

lopsim_status lopsim_run_transfer(const lopsim_params *params, lopsim_report **out) {
    if (params == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null params");
    return make_report(out, [&] { return lopsim::report::transfer_report(params->value); });
}

lopsim_status lopsim_run_hom(lopsim_report **out) {
    return make_report(out, [] { return lopsim::report::hom_report(); });
}

lopsim_status lopsim_run_verify(uint64_t seed, uint32_t samples, lopsim_report **out) {
    return make_report(out, [&] { return lopsim::report::verify_report(seed, samples); });
}

lopsim_status lopsim_run_sweep(lopsim_sweep_protocol protocol, lopsim_herald herald, uint32_t grid, uint32_t samples,
                               uint64_t seed, lopsim_report **out) {
    if (protocol != LOPSIM_SWEEP_SWAP && protocol != LOPSIM_SWEEP_TRANSFER) {
        return fail(LOPSIM_ERR_INVALID_ARGUMENT, "unknown sweep protocol");
    }
    if (!valid_herald(herald)) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "unknown herald");
    lopsim::report::SweepConfig config;
    config.protocol =
        protocol == LOPSIM_SWEEP_SWAP ? lopsim::report::SweepProtocol::Swap : lopsim::report::SweepProtocol::Transfer;
    config.herald = herald_of(herald);
    config.grid = grid;
    config.samples = samples;
    config.seed = seed;
    return make_report(out, [&] { return lopsim::report::sweep_report(config); });
}

int lopsim_report_passed(const lopsim_report *report) {
    return report != nullptr && lopsim::report::all_checks_passed(report->value) ? 1 : 0;
}

lopsim_status lopsim_report_render(lopsim_report *report, lopsim_format format, const char **text) {
    if (report == nullptr || text == nullptr) return fail(LOPSIM_ERR_INVALID_ARGUMENT, "null argument");
    if (format != LOPSIM_FORMAT_JSON && format != LOPSIM_FORMAT_CSV) {
        return fail(LOPSIM_ERR_INVALID_ARGUMENT, "unknown format");
    }
    *text = nullptr;
    return guarded([&] {
        report->text = format == LOPSIM_FORMAT_JSON ? lopsim::report::to_json_text(report->value)
                                                    : lopsim::report::to_csv(report->value);
        *text = report->text.c_str();
    });
}

void lopsim_report_destroy(lopsim_report *report) { delete report; }

}  // extern "C"
