#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qumode/estimation.hpp"
#include "qumode/factoring.hpp"
#include "qumode/fourier_check.hpp"
#include "qumode/mixture.hpp"
#include "qumode/resources.hpp"
#include "qumode/spectrum.hpp"
#include "qumode/trace_estimation.hpp"

namespace qumode {

// nlohmann::json keeps keys sorted, so identical structures serialize to
// identical bytes; every writer below relies on that for reproducibility.
using Json = nlohmann::json;

Json to_json(const PhaseSpectrum& spec);
// Accepts entries as {"num", "den", "multiplicity"} (exact fraction of a
// turn) or {"phase", "multiplicity"} (radians); validates through the same
// path as programmatic construction.
PhaseSpectrum spectrum_from_json(const Json& j);
PhaseSpectrum load_spectrum(const std::string& path);

Json to_json(const TraceEstimate& est);
Json to_json(const PhaseEstimateReport& report);
Json to_json(const TimeEnergyReport& report);
Json to_json(const FactorResult& result);
Json to_json(const ResourceReport& report);

// Closed-form density sampled on `grid`. Header "p_E,density".
std::string density_csv(const GaussianMixture& mix, const GridSpec& grid);
// Header "bin_center,mass"; one row per histogram bin.
std::string histogram_csv(const PhaseEstimateReport& report);
// Header "p_E"; one draw per row, full round-trip precision.
std::string samples_csv(const std::vector<double>& samples);

}  // namespace qumode
