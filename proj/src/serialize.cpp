#include "qumode/serialize.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qumode {
namespace {

Json complex_json(std::complex<double> z) {
  return Json{{"re", z.real()}, {"im", z.imag()}};
}

std::ostringstream csv_stream() {
  std::ostringstream os;
  os.precision(17);
  return os;
}

}  // namespace

Json to_json(const PhaseSpectrum& spec) {
  Json entries = Json::array();
  for (const PhaseEntry& e : spec.entries) {
    Json entry{{"phase", e.phase}, {"multiplicity", e.multiplicity}};
    if (e.fraction) {
      entry["num"] = e.fraction->num;
      entry["den"] = e.fraction->den;
    }
    entries.push_back(std::move(entry));
  }
  return Json{{"n_qubits", spec.n_qubits}, {"entries", std::move(entries)}};
}

PhaseSpectrum spectrum_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n_qubits") || !j.contains("entries") ||
      !j["entries"].is_array()) {
    throw std::invalid_argument(
        "spectrum_from_json: expected {n_qubits, entries[]}");
  }
  std::vector<PhaseEntry> entries;
  for (const Json& e : j["entries"]) {
    PhaseEntry entry;
    entry.multiplicity = e.value("multiplicity", std::int64_t{1});
    if (e.contains("num") || e.contains("den")) {
      if (!e.contains("num") || !e.contains("den")) {
        throw std::invalid_argument(
            "spectrum_from_json: fraction entries need both num and den");
      }
      entry.fraction = reduce_fraction(e["num"].get<std::int64_t>(),
                                       e["den"].get<std::int64_t>());
      entry.phase = kTwoPi * static_cast<double>(entry.fraction->num) /
                    static_cast<double>(entry.fraction->den);
    } else if (e.contains("phase")) {
      entry.phase = e["phase"].get<double>();
    } else {
      throw std::invalid_argument(
          "spectrum_from_json: entry needs num/den or phase");
    }
    entries.push_back(entry);
  }
  return make_spectrum(j["n_qubits"].get<int>(), std::move(entries));
}

PhaseSpectrum load_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("load_spectrum: cannot open " + path);
  }
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& err) {
    throw std::invalid_argument("load_spectrum: " + path + ": " + err.what());
  }
  return spectrum_from_json(j);
}

Json to_json(const TraceEstimate& est) {
  return Json{{"value", complex_json(est.value)},
              {"raw_mean", complex_json(est.raw_mean)},
              {"samples_used", est.samples_used},
              {"correction", est.correction},
              {"target_delta", complex_json(est.target_delta)}};
}

Json to_json(const PhaseEstimateReport& report) {
  Json peaks = Json::array();
  for (const Peak& p : report.peaks) {
    peaks.push_back(Json{{"estimate", p.estimate}, {"mass", p.mass}});
  }
  return Json{{"peaks", std::move(peaks)},
              {"bin_width", report.bin_width},
              {"bin_origin", report.bin_origin},
              {"bins", report.bin_mass.size()},
              {"samples_used", report.samples_used}};
}

Json to_json(const TimeEnergyReport& report) {
  return Json{{"satisfied", report.satisfied},
              {"erf_margin", report.erf_margin},
              {"linear_margin", report.linear_margin}};
}

Json to_json(const FactorResult& result) {
  return Json{{"N", result.N},
              {"factors", Json::array({result.factors.first,
                                       result.factors.second})},
              {"q_used", result.q_used},
              {"total_runs", result.total_runs}};
}

Json to_json(const ResourceReport& report) {
  Json j{{"s0", report.s0},
         {"mean_photons", report.mean_photons},
         {"delta_phi", report.delta_phi},
         {"peak_width", report.peak_width},
         {"qudit_dim", report.qudit_dim},
         {"equivalent_qubits", report.equivalent_qubits},
         {"note", report.note}};
  switch (report.context) {
    case ResourceContext::kDqc1:
      j["context"] = "dqc1";
      break;
    case ResourceContext::kFactoring:
      j["context"] = "factoring";
      break;
    case ResourceContext::kPhaseEstimation:
      j["context"] = "phase_estimation";
      break;
  }
  if (report.N) j["N"] = *report.N;
  if (report.qudit_dim_idealized) {
    j["qudit_dim_idealized"] = *report.qudit_dim_idealized;
  }
  if (report.delta_E) j["delta_E"] = *report.delta_E;
  return j;
}

std::string density_csv(const GaussianMixture& mix, const GridSpec& grid) {
  auto os = csv_stream();
  os << "p_E,density\n";
  for (std::size_t i = 0; i < grid.n_points; ++i) {
    const double p = grid.at(i);
    os << p << ',' << density_at(mix, p) << '\n';
  }
  return os.str();
}

std::string histogram_csv(const PhaseEstimateReport& report) {
  auto os = csv_stream();
  os << "bin_center,mass\n";
  for (std::size_t i = 0; i < report.bin_mass.size(); ++i) {
    os << report.bin_origin + static_cast<double>(i) * report.bin_width << ','
       << report.bin_mass[i] << '\n';
  }
  return os.str();
}

std::string samples_csv(const std::vector<double>& samples) {
  auto os = csv_stream();
  os << "p_E\n";
  for (const double s : samples) os << s << '\n';
  return os.str();
}

}  // namespace qumode
