#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qumode/resources.hpp"

using namespace qumode;

TEST_CASE("mean photon number of the squeezed control mode") {
  CHECK(mean_photon_number(1.0) == 0.0);
  CHECK(mean_photon_number(std::exp(1.0)) ==
        doctest::Approx(1.3810978455418155).epsilon(1e-12));
  CHECK(mean_photon_number(100.0) ==
        doctest::Approx(2499.500025000002).epsilon(1e-12));
  // Asymptotically s0^2/4.
  CHECK(mean_photon_number(1e6) == doctest::Approx(2.5e11).epsilon(1e-5));
  double prev = -1.0;
  for (double s0 = 1.0; s0 <= 32.0; s0 *= 2.0) {
    const double np = mean_photon_number(s0);
    CHECK(np > prev);
    prev = np;
  }
  CHECK_THROWS_AS(mean_photon_number(0.5), std::invalid_argument);
  CHECK_THROWS_AS(mean_photon_number(std::nan("")), std::invalid_argument);
}

TEST_CASE("qudit dimension floors at one") {
  CHECK(qudit_dimension(1.0, 0.5) == 1.0);
  CHECK(qudit_dimension(4.0, 0.5) == 2.0);
  CHECK(qudit_dimension(256.0, 1.0 / 15.0) ==
        doctest::Approx(256.0 / 15.0).epsilon(1e-15));
  CHECK_THROWS_AS(qudit_dimension(0.9, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(qudit_dimension(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(qudit_dimension(2.0, -1.0), std::invalid_argument);
}

TEST_CASE("trace-estimation context pins the two-peak convention") {
  const ResourceReport r = dqc1_report();
  CHECK(r.context == ResourceContext::kDqc1);
  CHECK(r.s0 == 1.0);
  CHECK(r.mean_photons == 0.0);
  CHECK(r.delta_phi == 2.0);
  CHECK(r.peak_width == 1.0);
  CHECK(r.qudit_dim == 2.0);
  CHECK(r.equivalent_qubits == 1.0);
  CHECK_FALSE(r.N.has_value());
  CHECK_FALSE(r.qudit_dim_idealized.has_value());
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("factoring context pads the register to a power of two") {
  const ResourceReport r = factoring_report(15);
  CHECK(r.context == ResourceContext::kFactoring);
  REQUIRE(r.N.has_value());
  CHECK(*r.N == 15);
  CHECK(r.s0 == 256.0);  // 2^{2*4}
  CHECK(r.delta_phi == doctest::Approx(1.0 / 15.0).epsilon(1e-15));
  CHECK(r.qudit_dim == doctest::Approx(256.0 / 15.0).epsilon(1e-15));
  REQUIRE(r.qudit_dim_idealized.has_value());
  CHECK(*r.qudit_dim_idealized == 15.0);
  CHECK(r.qudit_dim > *r.qudit_dim_idealized);
  CHECK_FALSE(r.note.empty());

  // Power-of-two N: padded and idealized dimensions coincide.
  const ResourceReport p2 = factoring_report(16);
  CHECK(p2.s0 == 256.0);
  CHECK(p2.qudit_dim == 16.0);
  CHECK(*p2.qudit_dim_idealized == 16.0);
  CHECK(p2.equivalent_qubits == 4.0);

  CHECK_THROWS_AS(factoring_report(17), std::invalid_argument);
  CHECK_THROWS_AS(factoring_report(3), std::invalid_argument);
}

TEST_CASE("phase-estimation context solves the resolution criterion") {
  const ResourceReport tight = phase_estimation_report(0.01, 100, 1.0);
  CHECK(tight.context == ResourceContext::kPhaseEstimation);
  REQUIRE(tight.delta_E.has_value());
  CHECK(*tight.delta_E == 0.01);
  CHECK(tight.s0 == 1.0);  // 1/(T tau delta_E) = 1, already unsqueezed
  CHECK(tight.qudit_dim == 1.0);

  const ResourceReport hard = phase_estimation_report(1e-5, 100, 1.0);
  CHECK(hard.s0 == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(hard.qudit_dim == 1.0);  // s0 * delta_phi = 0.01 floors at 1
  CHECK(hard.equivalent_qubits == 0.0);

  CHECK_THROWS_AS(phase_estimation_report(0.0, 100, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(phase_estimation_report(0.01, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(phase_estimation_report(0.01, 100, 0.0), std::invalid_argument);
}

TEST_CASE("table rendering carries every field") {
  const std::string table = format_table(factoring_report(15));
  CHECK(table.find("context: factoring N=15") != std::string::npos);
  CHECK(table.find("s0") != std::string::npos);
  CHECK(table.find("mean_photons") != std::string::npos);
  CHECK(table.find("qudit_dim_ideal") != std::string::npos);
  CHECK(table.find("equivalent_qubits") != std::string::npos);
  CHECK(table.find("note: ") != std::string::npos);
  CHECK(table.back() == '\n');

  const std::string dq = format_table(dqc1_report());
  CHECK(dq.find("context: trace estimation") != std::string::npos);
  CHECK(dq.find("qudit_dim_ideal") == std::string::npos);
}
