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

#ifndef LOPSIM_REPORT_H
#define LOPSIM_REPORT_H

#include <cstdint>
#include <string>

#include "json.hpp"
#include "lopsim/protocol.h"

// Report documents. Every report has the shape
//   {"schema": "lopsim.report/1", "command": ..., "config_echo": {...},
//    "results": {...}, "claims": [{"id", "quoted_value", "computed",
//    "abs_delta"}, ...]}
// Complex numbers are {"re": x, "im": y}.

namespace lopsim::report {

inline constexpr std::string_view kReportSchema = "lopsim.report/1";

nlohmann::json complex_json(Complex z);
nlohmann::json params_json(const protocol::ProtocolParams &params);

nlohmann::json swap_report(const protocol::ProtocolParams &params, protocol::HeraldCase herald);
nlohmann::json transfer_report(const protocol::ProtocolParams &params);
nlohmann::json hom_report();

enum class SweepProtocol { Swap, Transfer };

struct SweepConfig {
    SweepProtocol protocol = SweepProtocol::Transfer;
    protocol::HeraldCase herald = protocol::HeraldCase::D3;
    /// Grid points per angle for a real-amplitude grid; used when samples == 0.
    std::uint32_t grid = 5;
    /// Seeded random complex draws; takes precedence over the grid.
    std::uint32_t samples = 0;
    std::uint64_t seed = 1;
};

nlohmann::json sweep_report(const SweepConfig &config);

/// Runs the oracle-equivalence and protocol-equation checks.
nlohmann::json verify_report(std::uint64_t seed, std::uint32_t samples);
bool all_checks_passed(const nlohmann::json &report);

/// Flat CSV projection of a report's tables.
std::string to_csv(const nlohmann::json &report);
std::string to_json_text(const nlohmann::json &report);

}  // namespace lopsim::report

#endif
