// Copyright 2026 The qres authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "qres/fixtures.hpp"
#include "qres/gauss1d.hpp"
#include "support/oracles.hpp"

using namespace qres;
namespace oracle = qres::testing;

namespace {

// Quadrature integrands for the three analytic matrix elements.

Complex overlap_quadrature(double a, double b) {
  return oracle::integrate([&](double x) {
    return Complex{std::exp(-(a + b) * x * x), 0.0};
  });
}

Complex kinetic_quadrature_unrotated(double a, double b) {
  // e^{-a x^2} * (-1/2) d^2/dx^2 e^{-b x^2}
  return oracle::integrate([&](double x) {
    const double gauss = std::exp(-(a + b) * x * x);
    return Complex{(b - 2.0 * b * b * x * x) * gauss, 0.0};
  });
}

Complex potential_quadrature(double a, double b, const ModelParams& params) {
  // V evaluated along the dilated coordinate x e^{i theta}.
  const Complex rot2 = std::polar(1.0, 2.0 * params.theta);
  return oracle::integrate([&](double x) {
    const double gauss = std::exp(-(a + b) * x * x);
    const Complex rotated =
        (0.5 * rot2 * x * x - params.plateau) *
            std::exp(-params.lambda * rot2 * x * x) +
        params.plateau;
    return gauss * rotated;
  });
}

double rel_delta(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-14);
}

ModelParams tabulated_params(int n_basis) {
  ModelParams p;
  p.alpha = 0.65;
  p.theta = 0.16;
  p.n_basis = n_basis;
  return p;
}

}  // namespace

TEST_CASE("gaussian_overlap closed form", "[gauss1d]") {
  CHECK(std::abs(gaussian_overlap(0.7, 0.7) -
                 std::sqrt(std::numbers::pi / 1.4)) < 1e-14);
  // Frozen quadrature value for the two leading model exponents.
  CHECK(std::abs(gaussian_overlap(0.65, 0.2925) - 1.8257203523184504) < 1e-12);
  CHECK(rel_delta(gaussian_overlap(0.65, 0.2925),
                  overlap_quadrature(0.65, 0.2925)) < 1e-10);
  CHECK(gaussian_overlap(0.3, 1.7) == gaussian_overlap(1.7, 0.3));
  CHECK_THROWS_AS(gaussian_overlap(-1.0, 0.5), std::invalid_argument);
}

TEST_CASE("gaussian_kinetic closed form", "[gauss1d]") {
  SECTION("unrotated diagonal value is real positive and matches quadrature") {
    const Complex got = gaussian_kinetic(0.7, 0.7, Complex{1.0, 0.0});
    CHECK(got.imag() == 0.0);
    CHECK(got.real() > 0.0);
    CHECK(std::abs(got - Complex{0.5242989196909592, 0.0}) < 1e-12);
    CHECK(rel_delta(got, kinetic_quadrature_unrotated(0.7, 0.7)) < 1e-10);
  }
  SECTION("eta^2 factors out") {
    const Complex eta = std::polar(1.0, -0.21);
    CHECK(std::abs(gaussian_kinetic(0.4, 1.9, eta) -
                   eta * eta * gaussian_kinetic(0.4, 1.9, Complex{1.0, 0.0})) <
          1e-14);
  }
  SECTION("rotated value equals eta^2 times the unrotated quadrature") {
    const Complex eta = std::polar(1.0, -0.16);
    CHECK(rel_delta(gaussian_kinetic(0.65, 0.2925, eta),
                    eta * eta * kinetic_quadrature_unrotated(0.65, 0.2925)) <
          1e-10);
  }
}

TEST_CASE("gaussian_potential closed form", "[gauss1d]") {
  SECTION("pure quadratic limit (lambda = 0, plateau = 0)") {
    ModelParams p;
    p.lambda = 0.0;
    p.plateau = 0.0;
    p.theta = 0.0;
    const Complex got = gaussian_potential(0.8, 0.5, p);
    CHECK(rel_delta(got, potential_quadrature(0.8, 0.5, p)) < 1e-10);
    // 1/2 <x^2> Gaussian moment in closed form.
    const double c = 1.3;
    CHECK(std::abs(got - Complex{0.25 * std::sqrt(std::numbers::pi) /
                                     (c * std::sqrt(c)),
                                 0.0}) < 1e-14);
  }
  SECTION("constant-potential limit (lambda -> infinity)") {
    ModelParams p;
    p.lambda = 1e12;
    p.theta = 0.0;
    CHECK(std::abs(gaussian_potential(0.9, 0.4, p) -
                   Complex{p.plateau * gaussian_overlap(0.9, 0.4), 0.0}) <
          1e-5);
  }
  SECTION("rotated tabulated point matches quadrature") {
    const ModelParams p = tabulated_params(5);
    CHECK(rel_delta(gaussian_potential(0.65, 0.65, p),
                    potential_quadrature(0.65, 0.65, p)) < 1e-8);
  }
  SECTION("branch precondition") {
    ModelParams p;
    p.lambda = 5.0;
    p.theta = 1.2;  // lambda cos(2 theta) < -(a + b)
    CHECK_THROWS_AS(gaussian_potential(0.5, 0.5, p), std::domain_error);
  }
}

TEST_CASE("analytic integrals match quadrature across a parameter sweep",
          "[gauss1d]") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> exponent(0.01, 5.0);
  std::uniform_real_distribution<double> angle(0.0, 0.3);
  for (int trial = 0; trial < 25; ++trial) {
    const double a = exponent(rng);
    const double b = exponent(rng);
    ModelParams p;
    p.theta = angle(rng);
    const Complex eta = p.eta();
    CHECK(rel_delta(gaussian_overlap(a, b), overlap_quadrature(a, b)) < 1e-8);
    CHECK(rel_delta(gaussian_kinetic(a, b, eta),
                    eta * eta * kinetic_quadrature_unrotated(a, b)) < 1e-8);
    CHECK(rel_delta(gaussian_potential(a, b, p),
                    potential_quadrature(a, b, p)) < 1e-8);
  }
}

TEST_CASE("gram_schmidt", "[gauss1d]") {
  SECTION("single exponent reduces to normalization") {
    const OrthoBasis basis = gram_schmidt({0.65});
    CHECK(std::abs(basis.coeffs(0, 0) -
                   1.0 / std::sqrt(gaussian_overlap(0.65, 0.65))) < 1e-14);
  }
  SECTION("orthonormality under the overlap metric") {
    for (int n : {2, 5}) {
      ModelParams p;
      p.n_basis = n;
      const OrthoBasis basis = gram_schmidt(p.exponents());
      RealMatrix overlap(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          overlap(i, j) =
              gaussian_overlap(basis.exponents[i], basis.exponents[j]);
        }
      }
      const RealMatrix gram = basis.coeffs * overlap * basis.coeffs.transpose();
      CHECK((gram - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() <
            (n == 2 ? 1e-12 : 1e-10));
      // Lower-triangular construction, psi_0 proportional to chi_0.
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) CHECK(basis.coeffs(i, j) == 0.0);
      }
    }
  }
  SECTION("degenerate inputs are rejected") {
    CHECK_THROWS_AS(gram_schmidt({0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(gram_schmidt({0.5, 0.5 * (1.0 + 1e-15)}),
                    std::runtime_error);
  }
}

TEST_CASE("build_matrix structure", "[gauss1d]") {
  SECTION("theta = 0 gives a real symmetric matrix with a real spectrum") {
    ModelParams p;
    p.theta = 0.0;
    p.n_basis = 2;
    const ComplexMatrix h = build_matrix(p);
    CHECK(h.imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(h);
    for (int k = 0; k < 2; ++k) {
      CHECK(std::abs(solver.eigenvalues()(k).imag()) < 1e-10);
    }
  }
  SECTION("complex symmetry for rotated parameters") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> alpha(0.3, 1.2);
    std::uniform_real_distribution<double> angle(0.0, 0.28);
    for (int trial = 0; trial < 6; ++trial) {
      ModelParams p;
      p.alpha = alpha(rng);
      p.theta = angle(rng);
      p.n_basis = 4;
      const ComplexMatrix h = build_matrix(p);
      CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
  SECTION("trace consistency with the Pauli form") {
    const ModelParams p = tabulated_params(5);
    const ComplexMatrix h = build_matrix(p);
    const PauliSum qubit_form = build_pauli(p);
    const Complex identity_coeff = qubit_form.coeff(PauliString::identity(5));
    CHECK(std::abs(identity_coeff - 0.5 * h.trace()) < 1e-12);
    CHECK(std::abs(to_matrix(qubit_form).trace() - 32.0 * identity_coeff) <
          1e-10);
  }
}

TEST_CASE("build_pauli regenerates the tabulated 5-basis Hamiltonian",
          "[gauss1d]") {
  const PauliSum built = build_pauli(tabulated_params(5));
  const PauliSum& table = fixture_model_n5();
  REQUIRE(built.size() == 26);
  REQUIRE(table.size() == 26);
  for (const auto& [p, c] : table.terms()) {
    INFO("term " << p.str());
    CHECK(std::abs(built.coeff(p) - c) < 1e-5);
  }
  // Spot checks straight against the table.
  CHECK(std::abs(built.coeff(PauliString("IIIII")) -
                 Complex{4.599205, -0.533073}) < 1e-5);
  CHECK(std::abs(built.coeff(PauliString("ZIIII")) -
                 Complex{-0.251131, 0.022353}) < 1e-5);
}

TEST_CASE("build_pauli regenerates the tabulated 2-basis Hamiltonian",
          "[gauss1d]") {
  const PauliSum built = build_pauli(tabulated_params(2));
  REQUIRE(built.size() == 5);
  const LcuHamiltonian lcu = to_lcu(built);
  const std::vector<std::pair<std::string, std::pair<double, double>>> expected{
      {"II", {1.31556, -0.04180}},
      {"YY", {0.13333, 2.32888}},
      {"XX", {0.13333, 2.32888}},
      {"ZI", {0.25212, 3.05283}},
      {"IZ", {1.06378, 3.11093}}};
  for (const auto& [text, beta_phase] : expected) {
    const Complex c = built.coeff(PauliString(text));
    INFO("term " << text);
    CHECK(std::abs(std::abs(c) - beta_phase.first) < 1e-5);
    // Phase deviation weighted by the magnitude: the caption's printed
    // phases carry up to ~2.5e-5 rad of rounding against the full table.
    CHECK(std::abs(c - beta_phase.first *
                           std::polar(1.0, beta_phase.second)) < 1e-5);
  }
  CHECK(std::abs(lcu.coeff_norm - 2.89812) < 1e-4);
}

TEST_CASE("build_pauli is real without rotation", "[gauss1d]") {
  ModelParams p;
  p.theta = 0.0;
  p.n_basis = 3;
  for (const auto& [string, c] : build_pauli(p).terms()) {
    CHECK(std::abs(c.imag()) < 1e-12);
  }
}

TEST_CASE("5-basis spectrum approaches the large-basis resonance",
          "[gauss1d]") {
  const ComplexMatrix h = build_matrix(tabulated_params(5));
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(h);
  const Complex reference{2.124, -0.019};
  double best = 1e300;
  for (int k = 0; k < h.rows(); ++k) {
    best = std::min(best, std::abs(solver.eigenvalues()(k) - reference));
  }
  CHECK(best < 5e-2);
}
