#include <sstream>

#include "doctest.h"

#include "entsep/observables.hpp"
#include "entsep/qstate.hpp"
#include "entsep/state_io.hpp"
#include "entsep/werner.hpp"
#include "support.hpp"

using namespace entsep;
using namespace entsep::testing;

TEST_CASE("tensor_product of identities and Pauli pairs") {
  const ComplexMatrix i2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(tensor_product(i2, i2), ComplexMatrix::Identity(4, 4)) == 0.0);

  // hand expansion: [[0,1],[1,0]] (x) [[0,1],[1,0]] has ones on the antidiagonal
  ComplexMatrix anti = ComplexMatrix::Zero(4, 4);
  for (int r = 0; r < 4; ++r) anti(r, 3 - r) = 1.0;
  CHECK(max_abs_diff(tensor_product(pauli(3), pauli(3)), anti) == 0.0);

  // sigma^(1) is diagonal in the |0>,|1> basis, so X = sigma^(1) (x) sigma^(1)
  // is +1 on |00>,|11> and -1 on |01>,|10>
  ComplexMatrix x = ComplexMatrix::Zero(4, 4);
  x.diagonal() << 1.0, -1.0, -1.0, 1.0;
  CHECK(max_abs_diff(tensor_product(pauli(1), pauli(1)), x) == 0.0);

  ComplexMatrix e0 = ComplexMatrix::Zero(2, 2), e1 = ComplexMatrix::Zero(2, 2);
  e0(0, 0) = 1.0;
  e1(1, 1) = 1.0;
  const ComplexVector k01 = ket(2, 0, 1);
  CHECK(max_abs_diff(tensor_product(e0, e1), k01 * k01.adjoint()) == 0.0);

  ComplexMatrix rect(2, 3);
  rect.setOnes();
  const ComplexMatrix k = tensor_product(rect, i2);
  CHECK(k.rows() == 4);
  CHECK(k.cols() == 6);
}

TEST_CASE("product_state follows the angle parameterization") {
  const PureState s00 = product_state({0, 0, 1.3, -0.4});
  CHECK(max_abs_diff(s00.amplitudes(), ket(2, 0, 0)) < 1e-15);

  const PureState s01 = product_state({0, std::numbers::pi / 2, 0.7, 0.0});
  CHECK(max_abs_diff(s01.amplitudes(), ket(2, 0, 1)) < 1e-15);

  const PureState s = product_state({0.3, 1.1, 0.5, 2.0});
  const ComplexVector a = (ComplexVector(2) << std::cos(0.3), std::polar(std::sin(0.3), 0.5)).finished();
  const ComplexVector b = (ComplexVector(2) << std::cos(1.1), std::polar(std::sin(1.1), 2.0)).finished();
  CHECK(max_abs_diff(s.amplitudes(), PureState::product(a, b).amplitudes()) < 1e-15);
}

TEST_CASE("product_state norm over many random angles") {
  CounterRng rng(11);
  double worst = 0.0;
  for (int k = 0; k < 100000; ++k) {
    const ProductParams p{(rng.uniform() - 0.5) * 20, (rng.uniform() - 0.5) * 20, (rng.uniform() - 0.5) * 20,
                          (rng.uniform() - 0.5) * 20};
    worst = std::max(worst, std::abs(product_state(p).amplitudes().squaredNorm() - 1.0));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("canonical angles describe the same ray") {
  CounterRng rng(5);
  for (int k = 0; k < 2000; ++k) {
    const ProductParams p{(rng.uniform() - 0.5) * 12, (rng.uniform() - 0.5) * 12, (rng.uniform() - 0.5) * 12,
                          (rng.uniform() - 0.5) * 12};
    const ProductParams c = p.canonical();
    REQUIRE(c.alpha >= 0.0);
    REQUIRE(c.alpha <= std::numbers::pi / 2);
    REQUIRE(c.beta >= 0.0);
    REQUIRE(c.beta <= std::numbers::pi / 2);
    REQUIRE(c.delta >= 0.0);
    REQUIRE(c.delta < 2 * std::numbers::pi);
    REQUIRE(c.gamma >= 0.0);
    REQUIRE(c.gamma < 2 * std::numbers::pi);
    REQUIRE(max_abs_diff(product_state(p).projector(), product_state(c).projector()) < 1e-12);
  }
}

TEST_CASE("partial transpose") {
  SUBCASE("product states stay positive and transpose the A factor") {
    CounterRng rng(3);
    const ComplexVector a = haar_vector(2, rng), b = haar_vector(3, rng);
    const ComplexMatrix ra = a * a.adjoint(), rb = b * b.adjoint();
    const DensityMatrix rho(2, 3, tensor_product(ra, rb));
    const ComplexMatrix pt = partial_transpose(rho, Subsystem::A);
    CHECK(max_abs_diff(pt, tensor_product(ra.transpose(), rb)) < 1e-15);
    CHECK(max_hermitian_deviation(pt) < 1e-15);
    CHECK(min_eigenvalue(pt) > -1e-12);
    CHECK(max_abs_diff(partial_transpose(rho, Subsystem::B), tensor_product(ra, rb.transpose())) < 1e-15);
  }
  SUBCASE("singlet has eigenvalue -1/2 after transposition") {
    // PT of |01><01|, |10><10|, -|01><10|, -|10><01| (times 1/2) is
    // diag(0, 1/2, 1/2, 0) with -1/2 on the |00>,|11> corners: eigenvalues
    // {1/2, 1/2, 1/2, -1/2}
    const DensityMatrix singlet = DensityMatrix::from_pure(PureState(2, 2, bell_basis_2().vectors[3]));
    const ComplexMatrix pt = partial_transpose(singlet, Subsystem::A);
    CHECK(pt(0, 3).real() == doctest::Approx(-0.5));
    CHECK(pt(3, 0).real() == doctest::Approx(-0.5));
    CHECK(min_eigenvalue(pt) == doctest::Approx(-0.5).epsilon(1e-12));
  }
  SUBCASE("Werner state at p = 1/3 sits on the boundary") {
    // min eigenvalue of PT(w_p) is (1 - 3p)/4
    CHECK(std::abs(min_eigenvalue(partial_transpose(werner(1.0 / 3.0).state, Subsystem::B))) < 1e-9);
    CHECK(min_eigenvalue(partial_transpose(werner(0.6).state, Subsystem::B)) ==
          doctest::Approx((1.0 - 1.8) / 4.0));
  }
}

TEST_CASE("is_ppt") {
  CHECK(is_ppt(DensityMatrix::maximally_mixed(2, 2)).ppt);
  CHECK_FALSE(is_ppt(werner(0.5).state).ppt);
  CHECK(is_ppt(werner(0.2).state).ppt);
  CHECK(is_ppt(werner(1.0 / 3.0).state).ppt);
  CHECK(is_ppt(werner(0.2).state).min_eigenvalue == doctest::Approx(0.1));
}

TEST_CASE("partial trace of maximally entangled vectors is maximally mixed") {
  for (int d = 2; d <= 5; ++d) {
    for (const auto& v : me_basis(d).vectors) {
      const PureState psi(d, d, v);
      const ComplexMatrix target = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
      REQUIRE(max_abs_diff(partial_trace(psi, Subsystem::B), target) < 1e-10);
      REQUIRE(max_abs_diff(partial_trace(psi, Subsystem::A), target) < 1e-10);
    }
  }
}

TEST_CASE("random_pure_product") {
  SUBCASE("marginals are pure") {
    for (int d = 2; d <= 4; ++d) {
      const PureState psi = random_pure_product(d, 1234 + d);
      const ComplexMatrix ra = partial_trace(psi, Subsystem::B);
      CHECK((ra * ra).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("deterministic per seed") {
    const PureState a = random_pure_product(3, 99), b = random_pure_product(3, 99), c = random_pure_product(3, 100);
    CHECK(max_abs_diff(a.amplitudes(), b.amplitudes()) == 0.0);
    CHECK(max_abs_diff(a.amplitudes(), c.amplitudes()) > 1e-3);
  }
  SUBCASE("singlet overlap never exceeds 1/2") {
    const ComplexVector singlet = bell_basis_2().vectors[3];
    CounterRng rng(2024);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
      worst = std::max(worst, std::norm(singlet.dot(random_pure_product(2, rng).amplitudes())));
    }
    CHECK(worst <= 0.5 + 1e-9);
  }
}

TEST_CASE("random_separable_mixture") {
  SUBCASE("one term is a pure product") {
    const DensityMatrix rho = random_separable_mixture(2, 1, 7).realize();
    CHECK((rho.matrix() * rho.matrix()).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("weights are a probability vector") {
    const auto ens = random_separable_mixture(3, 6, 8);
    double total = 0.0;
    for (double w : ens.weights) {
      CHECK(w >= 0.0);
      total += w;
    }
    CHECK(total == doctest::Approx(1.0));
  }
  SUBCASE("two-qubit mixtures are PPT") {
    CounterRng rng(17);
    for (int k = 0; k < 2000; ++k) {
      const int terms = 1 + k % 6;
      REQUIRE(is_ppt(random_separable_mixture(2, terms, rng).realize()).ppt);
    }
  }
  SUBCASE("qutrit mixtures respect the 1/3 projection cap") {
    const BellBasis basis = me_basis(3);
    CounterRng rng(19);
    for (int k = 0; k < 500; ++k) {
      const DensityMatrix rho = random_separable_mixture(3, 1 + k % 5, rng).realize();
      for (const auto& v : basis.vectors) {
        REQUIRE((v.adjoint() * rho.matrix() * v)(0, 0).real() <= 1.0 / 3.0 + 1e-9);
      }
    }
  }
}

TEST_CASE("DensityMatrix validation names the broken invariant") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  m(0, 1) = 0.1;
  CHECK_THROWS_WITH_AS(DensityMatrix(2, 2, m), doctest::Contains("Hermitian"), ValidationError);

  CHECK_THROWS_WITH_AS(DensityMatrix(2, 2, ComplexMatrix::Identity(4, 4)), doctest::Contains("trace"),
                       ValidationError);

  ComplexMatrix neg = ComplexMatrix::Zero(4, 4);
  neg.diagonal() << 0.6, 0.6, 0.1, -0.3;
  CHECK_THROWS_WITH_AS(DensityMatrix(2, 2, neg), doctest::Contains("positive semidefinite"), ValidationError);

  CHECK_THROWS_AS(DensityMatrix(2, 2, ComplexMatrix::Identity(3, 3) / 3.0), ValidationError);
  CHECK_THROWS_AS(DensityMatrix(1, 4, ComplexMatrix::Identity(4, 4) / 4.0), ValidationError);
  CHECK_THROWS_AS(PureState(2, 2, ComplexVector::Ones(4)), ValidationError);
  CHECK_THROWS_AS(PureState::normalized(2, 2, ComplexVector::Zero(4)), ValidationError);
}

TEST_CASE("state files") {
  SUBCASE("round trip preserves the matrix") {
    CounterRng rng(31);
    for (int k = 0; k < 20; ++k) {
      const int d = 2 + k % 3;
      const DensityMatrix rho = random_density_matrix(d, d, 1 + k % (d * d), rng);
      std::stringstream ss(state_to_json(rho).dump());
      const DensityMatrix back = read_state(ss);
      REQUIRE(back.dim_a() == d);
      REQUIRE(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);
    }
  }
  SUBCASE("loader rejects malformed files") {
    std::stringstream bad_json("{ not json");
    CHECK_THROWS_WITH_AS(read_state(bad_json), doctest::Contains("malformed"), ValidationError);

    nlohmann::json j = state_to_json(DensityMatrix::maximally_mixed(2, 2));
    j["matrix"].erase(0);
    CHECK_THROWS_WITH_AS(state_from_json(j), doctest::Contains("entries"), ValidationError);

    j = state_to_json(DensityMatrix::maximally_mixed(2, 2));
    j.erase("dimB");
    CHECK_THROWS_WITH_AS(state_from_json(j), doctest::Contains("dimB"), ValidationError);

    j = state_to_json(DensityMatrix::maximally_mixed(2, 2));
    j["matrix"][1] = {0.3, 0.0};
    CHECK_THROWS_WITH_AS(state_from_json(j), doctest::Contains("Hermitian"), ValidationError);
  }
}
