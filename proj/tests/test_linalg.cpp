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

#include <algorithm>
#include <cmath>
#include <random>

#include "qres/fixtures.hpp"
#include "qres/gauss1d.hpp"
#include "qres/linalg.hpp"
#include "support/oracles.hpp"

using namespace qres;
namespace oracle = qres::testing;

namespace {

double residual(const ComplexMatrix& m, Complex value,
                const ComplexVector& vec) {
  return (m * vec - value * vec).norm();
}

// Multiset distance between two spectra after canonical sorting.
double spectrum_delta(std::vector<Complex> a, std::vector<Complex> b) {
  const auto less = [](Complex x, Complex y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  if (a.size() != b.size()) return 1e300;
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

PauliSum model_n2_sum() {
  ModelParams p;
  p.alpha = 0.65;
  p.theta = 0.16;
  p.n_basis = 2;
  return build_pauli(p);
}

}  // namespace

TEST_CASE("eig on small closed-form cases", "[linalg]") {
  SECTION("diagonal matrix, sorted by descending real part") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = 3.0;
    const EigenDecomposition d = eig(m);
    CHECK(std::abs(d.eigenvalues[0] - Complex{3, 0}) < 1e-14);
    CHECK(std::abs(d.eigenvalues[1] - Complex{2, 0}) < 1e-14);
  }
  SECTION("characteristic polynomial of [[0,1],[-eps,0]]") {
    const double eps = 1e-6;
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = -eps;
    const EigenDecomposition d = eig(m);
    const double root = std::sqrt(eps);
    CHECK(std::abs(d.eigenvalues[0] - Complex{0, root}) < 1e-12);
    CHECK(std::abs(d.eigenvalues[1] - Complex{0, -root}) < 1e-12);
  }
  SECTION("tabulated 2-basis Hamiltonian matrix") {
    const EigenDecomposition d = eig(to_matrix(model_n2_sum()));
    double best = 1e300;
    for (Complex ev : d.eigenvalues) {
      best = std::min(best, std::abs(ev - Complex{2.1259, -0.1089}));
    }
    CHECK(best < 1e-4);
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(eig(ComplexMatrix::Zero(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(eig(ComplexMatrix::Zero(1025, 1025)),
                    std::invalid_argument);
  }
}

TEST_CASE("eig residuals on random matrices", "[linalg]") {
  std::mt19937_64 rng(53);
  const std::vector<std::pair<std::size_t, int>> plan{
      {2, 60}, {4, 50}, {8, 40}, {32, 30}, {64, 15}, {256, 5}};
  for (const auto& [dim, count] : plan) {
    for (int trial = 0; trial < count; ++trial) {
      const ComplexMatrix m = oracle::random_matrix(rng, dim);
      const double scale = m.norm();  // Frobenius
      const EigenDecomposition d = eig(m);
      REQUIRE(d.eigenvalues.size() == dim);
      for (std::size_t k = 0; k < dim; ++k) {
        REQUIRE(residual(m, d.eigenvalues[k], d.eigenvectors.col(k)) <=
                1e-8 * scale);
        REQUIRE(std::abs(d.eigenvectors.col(k).norm() - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("spectrum of a matrix equals the spectrum of its transpose",
          "[linalg]") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix m = oracle::random_matrix(rng, 6);
    // Complex-symmetric representative plus a generic one.
    if (trial % 2 == 0) m = ((m + m.transpose()) / 2.0).eval();
    CHECK(spectrum_delta(eig(m).eigenvalues,
                         eig(m.transpose().eval()).eigenvalues) < 1e-10);
  }
}

TEST_CASE("eigvec_for", "[linalg]") {
  SECTION("diagonal pick") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 5.0;
    const ComplexVector v = eigvec_for(m, Complex{5.0, 0.0});
    CHECK(std::abs(std::abs(v(1)) - 1.0) < 1e-12);
    CHECK(std::abs(v(0)) < 1e-12);
  }
  SECTION("tabulated matrix eigenvector satisfies the residual bound") {
    const ComplexMatrix m = to_matrix(model_n2_sum());
    const Complex target{2.1259, -0.1089};
    const ComplexVector v = eigvec_for(m, target);
    const EigenDecomposition d = eig(m);
    Complex nearest = d.eigenvalues[0];
    for (Complex ev : d.eigenvalues) {
      if (std::abs(ev - target) < std::abs(nearest - target)) nearest = ev;
    }
    CHECK(residual(m, nearest, v) < 1e-8);
  }
  SECTION("equidistant target resolves to sort order") {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 3.0;
    const ComplexVector v = eigvec_for(m, Complex{2.0, 0.0}, 1.5);
    CHECK(std::abs(std::abs(v(1)) - 1.0) < 1e-12);  // eigenvalue 3 sorts first
  }
  SECTION("no eigenvalue near the target") {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    CHECK_THROWS_AS(eigvec_for(m, Complex{9.0, 0.0}), std::runtime_error);
  }
}

TEST_CASE("sector_eig reproduces the one-body spectrum", "[linalg]") {
  std::mt19937_64 rng(61);
  const ComplexMatrix h = oracle::random_matrix(rng, 4);
  const PauliSum qubit_form = jw_one_body(h);
  const SectorEigen sector = sector_eig(qubit_form, 1);
  CHECK(sector.basis_states.size() == 4);
  CHECK(spectrum_delta(sector.decomposition.eigenvalues, eig(h).eigenvalues) <
        1e-10);
  // Embedded eigenvectors satisfy the full-space eigenproblem.
  const ComplexMatrix dense = to_matrix(qubit_form);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(residual(dense, sector.decomposition.eigenvalues[k],
                   sector.decomposition.eigenvectors.col(k)) < 1e-8);
  }
}

TEST_CASE("sector_eig edge cases", "[linalg]") {
  std::mt19937_64 rng(67);
  const ComplexMatrix h = oracle::random_matrix(rng, 3);
  const PauliSum qubit_form = jw_one_body(h);
  SECTION("empty sector is the vacuum expectation") {
    const SectorEigen sector = sector_eig(qubit_form, 0);
    REQUIRE(sector.decomposition.eigenvalues.size() == 1);
    const ComplexMatrix dense = to_matrix(qubit_form);
    CHECK(std::abs(sector.decomposition.eigenvalues[0] - dense(0, 0)) < 1e-12);
  }
  SECTION("union over all weights matches the full spectrum") {
    std::vector<Complex> collected;
    for (std::size_t k = 0; k <= 3; ++k) {
      const SectorEigen sector = sector_eig(qubit_form, k);
      collected.insert(collected.end(),
                       sector.decomposition.eigenvalues.begin(),
                       sector.decomposition.eigenvalues.end());
    }
    CHECK(spectrum_delta(collected, eig(to_matrix(qubit_form)).eigenvalues) <
          1e-8);
  }
  SECTION("non-number-conserving input is rejected") {
    PauliSum bad(2);
    bad.add(PauliString("XI"), Complex{1.0, 0.0});
    CHECK_THROWS_AS(sector_eig(bad, 1), std::invalid_argument);
  }
  SECTION("electron count out of range") {
    CHECK_THROWS_AS(sector_eig(qubit_form, 4), std::invalid_argument);
  }
}

TEST_CASE("weight-3 sector of the tabulated H2- Hamiltonian", "[linalg]") {
  const SectorEigen sector = sector_eig(fixture_h2minus(), 3);
  CHECK(sector.basis_states.size() == 56);
  double best = 1e300;
  for (Complex ev : sector.decomposition.eigenvalues) {
    best = std::min(best, std::abs(ev - Complex{-0.995102, -0.046236}));
  }
  CHECK(best < 5e-3);
}
