#pragma once

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "fmmc/conductance.hpp"
#include "fmmc/dimred.hpp"
#include "fmmc/matching.hpp"
#include "fmmc/pipeline.hpp"
#include "fmmc/spectral.hpp"

namespace fmmc {

void to_json(nlohmann::json& j, const Edge& e);
void to_json(nlohmann::json& j, const LpSolveReport& r);
void to_json(nlohmann::json& j, const HeavyLightReport& r);
void to_json(nlohmann::json& j, const GoodnessEstimate& g);
void to_json(nlohmann::json& j, const SpectralSummary& s);
void to_json(nlohmann::json& j, const ConductanceCertificate& c);
void to_json(nlohmann::json& j, const BoundChainReport& r);
void to_json(nlohmann::json& j, const LambdaValue& v);
void to_json(nlohmann::json& j, const Theorem1Report& r);
void to_json(nlohmann::json& j, const Theorem2Report& r);

nlohmann::json fmmc_result_json(const FmmcResult& r);

// CSV with header "iter,mu,gap,step".
void write_history_csv(std::ostream& out, const std::vector<FmmcHistoryEntry>& history);

}  // namespace fmmc
