#include <doctest.h>

#include <cmath>

#include "qbound/bounds.hpp"

using namespace qbound;

TEST_CASE("catalog constants") {
  const auto mi3 = descriptor_for(Characteristic::MI, 3, 3);
  CHECK(mi3.C == doctest::Approx(1.0));
  CHECK(mi3.D == doctest::Approx(3.0));
  CHECK(mi3.cls == FunctionClass::LHat);

  const auto mi2 = descriptor_for(Characteristic::MI, 3, 2);
  CHECK(mi2.C == doctest::Approx(2.0));

  const auto qcmi_full = descriptor_for(Characteristic::QCMI, 3, 3);
  CHECK(qcmi_full.C == doctest::Approx(2.0 - 2.0 / 3.0));
  const auto qcmi_part = descriptor_for(Characteristic::QCMI, 3, 2);
  CHECK(qcmi_part.C == doctest::Approx(2.0));

  const auto sq = descriptor_for(Characteristic::SQ, 2, 1);
  CHECK(sq.cls == FunctionClass::N1);
  CHECK(sq.C == doctest::Approx(2.0));
  const auto csq = descriptor_for(Characteristic::CSQ, 2, 2);
  CHECK(csq.cls == FunctionClass::N2);
  CHECK(csq.C == doctest::Approx(1.0));

  const auto ei = descriptor_for(Characteristic::EI, 2, 2);
  CHECK(ei.C == doctest::Approx(2.0));
  CHECK(ei.D == doctest::Approx(3.0));
  CHECK_THROWS(descriptor_for(Characteristic::EI, 3, 2));

  CHECK(catalog(3).size() >= 10);
}

TEST_CASE("finite bound oracles") {
  // MI, n = m = 2, dims 2x2, eps = 0.5
  const auto mi = descriptor_for(Characteristic::MI, 2, 2);
  CHECK(cb_finite(mi, 0.5, 4).total ==
        doctest::Approx(2.602689685).epsilon(1e-9));

  // QCMI, n = 2, m = 1, dim A1 = 2, eps = 0.25:
  // 2 * 0.25 * ln 2 + 2 g(0.25)
  const auto qcmi = descriptor_for(Characteristic::QCMI, 2, 1);
  CHECK(cb_finite(qcmi, 0.25, 2).total ==
        doctest::Approx(1.597579649).epsilon(1e-9));

  CHECK(cb_finite(mi, 0.0, 4).total == doctest::Approx(0.0));
  CHECK_THROWS(cb_finite(mi, 1.5, 4));
}

static double g_of(double x) {
  return (x + 1.0) * std::log1p(x) - x * std::log(x);
}

TEST_CASE("N classes substitute delta for eps") {
  const auto sq = descriptor_for(Characteristic::SQ, 2, 1);
  const double delta = std::sqrt(0.5 * 1.5);
  const auto v = cb_finite(sq, 0.5, 2);
  CHECK(v.effective_eps == doctest::Approx(0.866025404).epsilon(1e-9));
  CHECK(v.total ==
        doctest::Approx(2.0 * delta * std::log(2.0) + 2.0 * g_of(delta))
            .epsilon(1e-10));
}

TEST_CASE("sqrt energy bound oracle") {
  // m = 1, C = D = 1, oscillator w = 1, Ebar = 1, eps = 0.08:
  // 0.4 * Fbar(12.5) + g(0.4) = 2.278653298
  OscillatorModel osc{{1.0}};
  BoundSpec spec;
  spec.descriptor = {FunctionClass::LHat, 1.0, 1.0, 1, 2};
  spec.eps = 0.08;
  spec.energy_bar = 1.0;
  spec.fhat = EnergyFunction(EnergyFunctionKind::OscillatorBar, osc);
  CHECK(cb_energy_sqrt(spec).total ==
        doctest::Approx(2.278653298).epsilon(1e-9));
}

TEST_CASE("two-step bound oracle and closed-form agreement") {
  // m = 1, C = 1, D = 2, F = Fbar_{1,1}, Ebar = 1, eps = 0.1, t = 1
  OscillatorModel osc{{1.0}};
  BoundSpec spec;
  spec.descriptor = {FunctionClass::LHat, 1.0, 2.0, 1, 2};
  spec.eps = 0.1;
  spec.energy_bar = 1.0;
  spec.t = 1.0;
  spec.fhat = EnergyFunction(EnergyFunctionKind::OscillatorBar, osc);
  const double generic = vb_two_step(spec).total;
  CHECK(generic == doctest::Approx(7.953430347).epsilon(1e-9));
  CHECK(cb_oscillator(spec).total == doctest::Approx(generic).epsilon(1e-12));
}

TEST_CASE("t optimization improves on fixed t") {
  OscillatorModel osc{{1.0}};
  BoundSpec spec;
  spec.descriptor = {FunctionClass::LHat, 1.0, 2.0, 1, 2};
  spec.eps = 0.1;
  spec.energy_bar = 1.0;
  spec.fhat = EnergyFunction::default_envelope(osc);
  auto [t_opt, best] = optimize_t(spec);
  CHECK(t_opt > 0.0);
  CHECK(t_opt < 10.0);
  for (double t : {0.3, 0.5, 1.0, 2.0}) {
    spec.t = t;
    CHECK(best.total <= vb_two_step(spec).total + 1e-9);
  }
}

TEST_CASE("bound_for dispatch") {
  BoundRequest req;
  req.characteristic = Characteristic::MI;
  req.variant = BoundVariant::Finite;
  req.n = 2;
  req.m = 2;
  req.dims = {2, 2};
  req.eps = 0.5;
  CHECK(bound_for(req).total == doctest::Approx(2.602689685).epsilon(1e-9));

  req.variant = BoundVariant::TwoStep;
  req.eps = 0.1;
  req.energy_bar = 1.0;
  req.t = 0.0;  // optimize
  req.fhat = EnergyFunction::default_envelope(OscillatorModel{{1.0}});
  const auto v = bound_for(req);
  CHECK(v.total > 0.0);
  CHECK(v.t_used > 0.0);
}
