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

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qres/jordan_wigner.hpp"
#include "qres/pauli.hpp"
#include "qres/types.hpp"

namespace qres {

/**
 * Spectrum of a dense (generally non-Hermitian) matrix. Eigenvalues are
 * sorted by descending real part, ties by descending imaginary part, and
 * eigenvectors (matching columns) carry unit Hermitian norm.
 */
struct EigenDecomposition {
  std::vector<Complex> eigenvalues;
  ComplexMatrix eigenvectors;
};

inline constexpr std::size_t kMaxEigDim = 1024;

/// Full eigendecomposition via Hessenberg reduction and shifted complex QR.
inline EigenDecomposition eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eig: matrix must be square");
  }
  const auto dim = static_cast<std::size_t>(m.rows());
  if (dim > kMaxEigDim) {
    throw std::invalid_argument("eig: dimension " + std::to_string(dim) +
                                " exceeds ceiling " +
                                std::to_string(kMaxEigDim));
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver;
  solver.setMaxIterations(static_cast<Eigen::Index>(100 * dim));
  solver.compute(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eig: QR iteration did not converge");
  }

  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), 0);
  const auto& values = solver.eigenvalues();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values(a).real() != values(b).real()) {
      return values(a).real() > values(b).real();
    }
    return values(a).imag() > values(b).imag();
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(dim);
  out.eigenvectors.resize(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    out.eigenvalues.push_back(values(order[k]));
    out.eigenvectors.col(k) = solver.eigenvectors().col(order[k]);
    out.eigenvectors.col(k).normalize();
  }
  return out;
}

/// Unit-norm right eigenvector for the eigenvalue nearest `target`.
/// The match must be within `tol`; ties resolve to the earlier eigenvalue
/// in sort order.
inline ComplexVector eigvec_for(const ComplexMatrix& m, Complex target,
                                double tol = 1e-3) {
  const EigenDecomposition d = eig(m);
  std::size_t best = 0;
  double best_dist = std::abs(d.eigenvalues[0] - target);
  for (std::size_t k = 1; k < d.eigenvalues.size(); ++k) {
    const double dist = std::abs(d.eigenvalues[k] - target);
    if (dist < best_dist) {
      best = k;
      best_dist = dist;
    }
  }
  if (best_dist > tol) {
    throw std::runtime_error("eigvec_for: no eigenvalue within tolerance of target");
  }
  return d.eigenvectors.col(static_cast<Eigen::Index>(best));
}

/// Result of a particle-number sector diagonalization. Eigenvectors are
/// embedded in the full 2^n space; `basis_states` lists the computational
/// basis indices spanning the sector (the embedding map).
struct SectorEigen {
  EigenDecomposition decomposition;
  std::vector<std::size_t> basis_states;
};

namespace detail {

inline double max_coeff_magnitude(const PauliSum& s) {
  double m = 0.0;
  for (const auto& [p, c] : s.terms()) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace detail

/**
 * Diagonalizes the Hamming-weight-`n_electrons` block of a number-conserving
 * Pauli sum without materializing the full 2^n matrix. The commutator with
 * the total number operator is checked up to `commute_tol` (largest Pauli
 * coefficient magnitude) before projecting.
 */
inline SectorEigen sector_eig(const PauliSum& h, std::size_t n_electrons,
                              double commute_tol = 1e-8) {
  const std::size_t n = h.n_qubits();
  if (n_electrons > n) {
    throw std::invalid_argument("sector_eig: electron count exceeds qubit count");
  }
  PauliSum commutator = sum_mul(h, number_operator(n, h.prune_tol()));
  commutator += Complex{-1.0, 0.0} * sum_mul(number_operator(n, h.prune_tol()), h);
  if (detail::max_coeff_magnitude(commutator) > commute_tol) {
    throw std::invalid_argument(
        "sector_eig: Hamiltonian does not commute with the number operator");
  }

  std::vector<std::size_t> basis;
  const std::size_t dim = std::size_t{1} << n;
  for (std::size_t s = 0; s < dim; ++s) {
    if (std::popcount(s) == static_cast<int>(n_electrons)) basis.push_back(s);
  }
  std::vector<std::size_t> position(dim, dim);
  for (std::size_t k = 0; k < basis.size(); ++k) position[basis[k]] = k;

  ComplexMatrix block = ComplexMatrix::Zero(basis.size(), basis.size());
  for (const auto& [p, c] : h.terms()) {
    const std::uint32_t flip = p.flip_mask();
    const std::uint32_t sign = p.sign_mask();
    const Complex yphase = detail::i_power(p.y_count());
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const std::size_t t = basis[col];
      const std::size_t u = t ^ flip;
      if (position[u] == dim) continue;  // weight-changing piece, cancels
      const double parity =
          std::popcount(static_cast<std::uint32_t>(t) & sign) % 2 ? -1.0 : 1.0;
      block(position[u], col) += c * yphase * parity;
    }
  }

  EigenDecomposition d = eig(block);
  ComplexMatrix embedded = ComplexMatrix::Zero(dim, d.eigenvalues.size());
  for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
    for (std::size_t row = 0; row < basis.size(); ++row) {
      embedded(basis[row], k) = d.eigenvectors(row, k);
    }
  }
  d.eigenvectors = std::move(embedded);
  return {std::move(d), std::move(basis)};
}

}  // namespace qres
