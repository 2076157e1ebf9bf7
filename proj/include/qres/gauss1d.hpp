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

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qres/jordan_wigner.hpp"
#include "qres/pauli.hpp"
#include "qres/types.hpp"

namespace qres {

/**
 * Parameters of the one-dimensional model system
 *   V(x) = (x^2/2 - plateau) exp(-lambda x^2) + plateau
 * under complex rotation x -> eta x with eta = exp(-i theta). The scaling
 * parameter alpha does not enter eta; it sets the primitive Gaussian
 * exponents alpha_k = alpha * ratio^k.
 */
struct ModelParams {
  double lambda = 0.1;    // falloff of the well envelope
  double plateau = 0.8;   // asymptotic potential value (Hartree)
  double alpha = 0.65;    // leading basis exponent / scaling parameter
  double theta = 0.0;     // rotation angle (radians)
  int n_basis = 5;        // number of primitive Gaussians
  double ratio = 0.45;    // geometric decay of the exponents
  double prune_tol = 1e-12;

  Complex eta() const { return std::polar(1.0, -theta); }

  double exponent(int k) const { return alpha * std::pow(ratio, k); }

  std::vector<double> exponents() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_basis));
    for (int k = 0; k < n_basis; ++k) out.push_back(exponent(k));
    return out;
  }

  void validate() const {
    if (alpha <= 0.0) throw std::invalid_argument("ModelParams: alpha must be > 0");
    if (theta < 0.0) throw std::invalid_argument("ModelParams: theta must be >= 0");
    if (n_basis < 1) throw std::invalid_argument("ModelParams: n_basis must be >= 1");
    if (ratio <= 0.0 || ratio >= 1.0) {
      throw std::invalid_argument("ModelParams: ratio must lie in (0, 1)");
    }
  }
};

/// Overlap of two primitive Gaussians exp(-a x^2), exp(-b x^2).
inline double gaussian_overlap(double a, double b) {
  if (a + b <= 0.0) {
    throw std::invalid_argument("gaussian_overlap: combined exponent must be > 0");
  }
  return std::sqrt(std::numbers::pi / (a + b));
}

/// Matrix element of the rotated kinetic operator -eta^2 d^2/dx^2 / 2
/// between primitive Gaussians. eta^2 factors out of the unrotated value.
inline Complex gaussian_kinetic(double a, double b, Complex eta) {
  if (a <= 0.0 || b <= 0.0) {
    throw std::invalid_argument("gaussian_kinetic: exponents must be > 0");
  }
  const double c = a + b;
  return eta * eta * (a * b / c) * std::sqrt(std::numbers::pi / c);
}

/// Matrix element of the rotated model potential between primitive
/// Gaussians. The rotation dilates the potential argument as x e^{i theta}
/// (equivalently x / eta), the standard complex-scaling convention; the
/// kinetic operator carries the matching eta^2 factor. Uses the principal
/// branch of the complex square root; the shifted exponent
/// a + b + lambda e^{2 i theta} must keep a positive real part.
inline Complex gaussian_potential(double a, double b,
                                  const ModelParams& params) {
  const Complex rot2 = std::polar(1.0, 2.0 * params.theta);  // (x e^{i theta})^2 / x^2
  const Complex c = a + b + params.lambda * rot2;
  if (c.real() <= 0.0) {
    throw std::domain_error(
        "gaussian_potential: rotated exponent has non-positive real part "
        "(theta too large)");
  }
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  const Complex sqrt_c = std::sqrt(c);
  const Complex quad = 0.25 * rot2 * sqrt_pi / (c * sqrt_c);
  const Complex well = -params.plateau * sqrt_pi / sqrt_c;
  const double shift = params.plateau * gaussian_overlap(a, b);
  return quad + well + shift;
}

/**
 * Orthonormal combinations psi_i = sum_k coeffs(i, k) chi_k of the primitive
 * Gaussians, built by Gram-Schmidt under the overlap metric. coeffs is lower
 * triangular and real: the metric does not depend on the rotation angle.
 */
struct OrthoBasis {
  std::vector<double> exponents;
  RealMatrix coeffs;
};

inline OrthoBasis gram_schmidt(const std::vector<double>& exponents) {
  const auto n = exponents.size();
  if (n == 0) {
    throw std::invalid_argument("gram_schmidt: need at least one exponent");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (exponents[i] == exponents[j]) {
        throw std::invalid_argument("gram_schmidt: exponents must be distinct");
      }
    }
  }
  RealMatrix overlap(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      overlap(i, j) = gaussian_overlap(exponents[i], exponents[j]);
    }
  }
  RealMatrix coeffs = RealMatrix::Zero(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(k) = 1.0;
    // Classical projections plus one re-orthogonalization pass.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < k; ++i) {
        const double r = coeffs.row(i) * overlap * v;
        v -= r * coeffs.row(i).transpose();
      }
    }
    const double norm2 = v.transpose() * overlap * v;
    if (!(norm2 > 0.0) || std::sqrt(norm2) < 1e-12) {
      throw std::runtime_error(
          "gram_schmidt: numerically dependent basis at index " +
          std::to_string(k));
    }
    coeffs.row(k) = v / std::sqrt(norm2);
  }
  return {exponents, coeffs};
}

/// Complex-symmetric Hamiltonian matrix of the rotated model system in the
/// orthonormal basis: h_ij = <psi_i| T(eta) + V(eta x) |psi_j>.
inline ComplexMatrix build_matrix(const ModelParams& params) {
  params.validate();
  const auto exps = params.exponents();
  const OrthoBasis basis = gram_schmidt(exps);
  const auto n = exps.size();
  const Complex eta = params.eta();
  ComplexMatrix primitive(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      primitive(k, l) = gaussian_kinetic(exps[k], exps[l], eta) +
                        gaussian_potential(exps[k], exps[l], params);
    }
  }
  const ComplexMatrix c = basis.coeffs.cast<Complex>();
  return c * primitive * c.transpose();
}

/// Qubit Hamiltonian of the rotated model system, one orbital per qubit.
inline PauliSum build_pauli(const ModelParams& params) {
  return jw_one_body(build_matrix(params), params.prune_tol);
}

}  // namespace qres
