// Copyright 2026 The satlcp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "satlcp/encode.hpp"
#include "satlcp/formula.hpp"
#include "satlcp/lcp.hpp"
#include "satlcp/lp.hpp"
#include "satlcp/reduce3sat.hpp"
#include "satlcp/sizing.hpp"
#include "satlcp/verify.hpp"

namespace satlcp {

// All documents carry a "schema" field; see docs/schemas.md. Conventions:
// matrices as sparse triplet lists [row, col, value] with 1-based indices,
// rationals as canonical "p" / "p/q" strings, indices into clause or variable
// lists 1-based.
inline constexpr const char* kSchemaFormula = "satlcp/formula/v1";
inline constexpr const char* kSchemaReduction = "satlcp/reduction/v1";
inline constexpr const char* kSchemaEncode = "satlcp/encode/v1";
inline constexpr const char* kSchemaLcp = "satlcp/lcp/v1";
inline constexpr const char* kSchemaCertificate = "satlcp/certificate/v1";
inline constexpr const char* kSchemaLpInstance = "satlcp/lp-instance/v1";
inline constexpr const char* kSchemaLpOutcome = "satlcp/lp-outcome/v1";
inline constexpr const char* kSchemaSizeReport = "satlcp/size-report/v1";
inline constexpr const char* kSchemaRecord = "satlcp/record/v1";
inline constexpr const char* kSchemaCampaign = "satlcp/campaign/v1";

nlohmann::json formula_to_json(const CnfFormula& f);

nlohmann::json reduction_to_json(const ThreeSatFormula& f3,
                                 const ReductionTrace& trace);

nlohmann::json encode_to_json(const InequalitySystem& sys,
                              const ClausePartition& part,
                              const TrivialityVerdict& trivial);

nlohmann::json lcp_to_json(const LcpInstance& inst);

nlohmann::json certificate_to_json(const LcpInstance& inst,
                                   const MangasarianCertificate& cert,
                                   const ConditionReport& report);

nlohmann::json lp_to_json(const LpInstance& lp);
LpInstance lp_from_json(const nlohmann::json& j);

nlohmann::json lp_outcome_to_json(const LpOutcome& outcome);
LpOutcome lp_outcome_from_json(const nlohmann::json& j);

nlohmann::json size_report_to_json(const SizeReport& report);

// include_timings controls whether volatile wall-clock fields appear; the
// campaign report always excludes them so identical seeds produce identical
// bytes.
nlohmann::json record_to_json(const VerificationRecord& record,
                              bool include_timings);

nlohmann::json campaign_to_json(const CampaignReport& report);

// One row per record; deterministic. Columns documented in docs/schemas.md.
std::string campaign_to_csv(const CampaignReport& report);

// Volatile companion artifact: per-record stage timings.
std::string timings_to_csv(const CampaignReport& report);

}  // namespace satlcp
