#include <doctest.h>

#include <cmath>

#include "qbound/sampling.hpp"
#include "qbound/tensor_ops.hpp"

using namespace qbound;

namespace {

SystemLayout two_qubits() { return SystemLayout({{"A", 2}, {"B", 2}}, 2); }

}  // namespace

TEST_CASE("kron dimensions and values") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CHECK(k(0, 1).real() == doctest::Approx(1.0));
  CHECK(k(0, 0).real() == doctest::Approx(0.0));
  CHECK(k(2, 3).real() == doctest::Approx(4.0));  // a(1,1) * b(0,1)
}

TEST_CASE("partial trace of a product state recovers the factors") {
  SystemLayout la({{"A", 2}}, 1);
  SystemLayout lb({{"B", 3}}, 0);
  Eigen::VectorXd pa(2), pb(3);
  pa << 0.25, 0.75;
  pb << 0.5, 0.3, 0.2;
  const QuantumState rho = tensor_product(
      {QuantumState::diagonal(la, pa), QuantumState::diagonal(lb, pb)});
  const QuantumState ra = partial_trace(rho, {"A"});
  const QuantumState rb = partial_trace(rho, {"B"});
  CHECK(ra.matrix()(0, 0).real() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ra.matrix()(1, 1).real() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(rb.matrix()(1, 1).real() == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("partial trace keeps coherences of the kept factor") {
  SystemLayout layout = two_qubits();
  Vector psi = Vector::Zero(4);
  psi[0] = 1.0 / std::sqrt(2.0);  // |00>
  psi[1] = 1.0 / std::sqrt(2.0);  // |01>
  const QuantumState rho = QuantumState::pure(layout, psi);
  const QuantumState rb = partial_trace(rho, {"B"});
  CHECK(std::abs(rb.matrix()(0, 1)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("trace distance of orthogonal pure states is one") {
  SystemLayout layout({{"A", 2}}, 1);
  Vector e0 = Vector::Zero(2), e1 = Vector::Zero(2);
  e0[0] = 1.0;
  e1[1] = 1.0;
  CHECK(trace_distance(QuantumState::pure(layout, e0),
                       QuantumState::pure(layout, e1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("trace distance satisfies the triangle inequality") {
  SystemLayout layout = two_qubits();
  for (int i = 0; i < 25; ++i) {
    const QuantumState a = sample_state(mix_seed(11, 3 * i), layout);
    const QuantumState b = sample_state(mix_seed(11, 3 * i + 1), layout);
    const QuantumState c = sample_state(mix_seed(11, 3 * i + 2), layout);
    CHECK(trace_distance(a, c) <=
          trace_distance(a, b) + trace_distance(b, c) + 1e-12);
  }
}

TEST_CASE("purification reduces back to the original state") {
  SystemLayout layout({{"A", 3}}, 1);
  const QuantumState rho = sample_state(7, layout);
  const QuantumState psi = purify(rho);
  REQUIRE(psi.layout().factor_count() == 2);
  const QuantumState back = partial_trace(psi, {"A"});
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() < 1e-10);
  // purity of the purification
  const Matrix sq = psi.matrix() * psi.matrix();
  CHECK(std::abs(sq.trace().real() - 1.0) < 1e-10);
}
