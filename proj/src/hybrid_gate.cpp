#include "qumode/hybrid_gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qumode {

std::complex<double> hybrid_phase(double phi, double x, double tau, double x0) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) {
    throw std::invalid_argument("hybrid_phase: x0 must be positive");
  }
  return std::polar(1.0, phi * x * tau / x0);
}

CommutingProductReport verify_commuting_product(
    const std::vector<DiagonalTerm>& terms, const std::vector<double>& x_samples,
    double tau, double x0) {
  if (terms.empty()) {
    throw std::invalid_argument("verify_commuting_product: no terms");
  }
  const std::size_t dim = terms.front().phases.size();
  if (dim == 0) {
    throw std::invalid_argument("verify_commuting_product: empty term");
  }
  for (const auto& t : terms) {
    if (t.phases.size() != dim) {
      throw std::invalid_argument("verify_commuting_product: term lengths differ");
    }
  }
  CommutingProductReport report;
  for (double x : x_samples) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::complex<double> product{1.0, 0.0};
      double total_phase = 0.0;
      for (const auto& t : terms) {
        product *= hybrid_phase(t.phases[j], x, tau, x0);
        total_phase += t.phases[j];
      }
      const std::complex<double> combined = hybrid_phase(total_phase, x, tau, x0);
      report.max_deviation =
          std::max(report.max_deviation, std::abs(product - combined));
    }
  }
  report.ok = report.max_deviation < 1e-12;
  return report;
}

AdditionDecomposition addition_decomposition(std::int64_t N, std::int64_t q) {
  if (N < 3 || q <= 1 || q >= N) {
    throw std::invalid_argument("addition_decomposition: need N >= 3 and 1 < q < N");
  }
  AdditionDecomposition d;
  d.N = N;
  d.q = q;
  d.n_qubits = 1;
  while ((std::int64_t{1} << d.n_qubits) < N) {
    ++d.n_qubits;
  }
  for (std::int64_t bit = 1; bit <= q - 1; bit <<= 1) {
    if ((q - 1) & bit) {
      d.gates.push_back(AdditionGate{bit, N});
    }
  }

  const std::int64_t size = std::int64_t{1} << d.n_qubits;
  const std::size_t n_gates = d.gates.size();
  d.commute_matrix.assign(n_gates, std::vector<bool>(n_gates, true));
  d.all_commute = true;
  for (std::size_t a = 0; a < n_gates; ++a) {
    for (std::size_t b = a + 1; b < n_gates; ++b) {
      bool commutes = true;
      for (std::int64_t l = 0; l < size; ++l) {
        if (d.gates[a].apply(d.gates[b].apply(l)) !=
            d.gates[b].apply(d.gates[a].apply(l))) {
          commutes = false;
          break;
        }
      }
      d.commute_matrix[a][b] = d.commute_matrix[b][a] = commutes;
      d.all_commute = d.all_commute && commutes;
    }
  }

  std::int64_t image = 1;
  for (const auto& g : d.gates) {
    image = g.apply(image);
  }
  d.image_of_one = image;
  d.product_ok = image == q;
  return d;
}

bool verify_addition_decomposition(std::int64_t N, std::int64_t q) {
  const AdditionDecomposition d = addition_decomposition(N, q);
  return d.all_commute && d.product_ok;
}

}  // namespace qumode
