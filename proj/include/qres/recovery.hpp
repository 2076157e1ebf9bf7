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
#include <stdexcept>
#include <string>

#include "qres/types.hpp"

namespace qres {

/// Sign of the recovered phase. `minus` matches the resonance convention
/// E - i Gamma / 2 (non-positive imaginary part).
enum class Branch { plus, minus };

inline double branch_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

/// Measured probabilities are inconsistent with any complex eigenvalue
/// (an arccos argument fell outside [-1, 1] beyond the allowed slack).
struct InconsistentProbabilitiesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/**
 * Inputs of an eigenvalue recovery. p and p_prime are the ancilla-zero
 * probabilities of the base and companion circuits, coeff_norm / _prime the
 * corresponding coefficient one-norms. `x` is the identity shift used by the
 * shifted-companion variant only. `shift` is added to the recovered value
 * (the identity coefficient removed from the Hamiltonian before the run).
 */
struct RecoveryInputs {
  double p = 0.0;
  double p_prime = 0.0;
  double coeff_norm = 0.0;
  double coeff_norm_prime = 0.0;
  double x = 1.0;
  Complex shift{0.0, 0.0};
  Branch branch = Branch::minus;
  double clamp_slack = 1e-9;
};

namespace detail {

inline void check_probabilities(const RecoveryInputs& in) {
  if (in.p < 0.0 || in.p > 1.0 || in.p_prime < 0.0 || in.p_prime > 1.0) {
    throw std::invalid_argument("recovery: probabilities must lie in [0, 1]");
  }
  if (!(in.coeff_norm > 0.0) || !(in.coeff_norm_prime > 0.0)) {
    throw std::invalid_argument("recovery: coefficient norms must be > 0");
  }
  if (in.p == 0.0) {
    throw std::domain_error("recovery: zero success probability, magnitude lost");
  }
}

inline double clamp_cosine(double u, double slack) {
  if (u > 1.0) {
    if (u - 1.0 > slack) {
      throw InconsistentProbabilitiesError(
          "recovery: arccos argument " + std::to_string(u) +
          " exceeds 1 beyond slack");
    }
    return 1.0;
  }
  if (u < -1.0) {
    if (-1.0 - u > slack) {
      throw InconsistentProbabilitiesError(
          "recovery: arccos argument " + std::to_string(u) +
          " below -1 beyond slack");
    }
    return -1.0;
  }
  return u;
}

}  // namespace detail

/**
 * Recovers the complex eigenvalue from the base circuit and the companion
 * circuit of H + x I:
 *   E e^{i phi} = sqrt(p) A exp(+- i arccos((p' A'^2 - x^2 - p A^2) /
 *                                           (2 x A sqrt(p))))
 */
inline Complex recover_shift(const RecoveryInputs& in) {
  detail::check_probabilities(in);
  if (in.x == 0.0) {
    throw std::invalid_argument("recover_shift: shift x must be nonzero");
  }
  const double s = in.p * in.coeff_norm * in.coeff_norm;
  const double t = in.p_prime * in.coeff_norm_prime * in.coeff_norm_prime;
  const double magnitude = std::sqrt(in.p) * in.coeff_norm;
  const double u = detail::clamp_cosine(
      (t - in.x * in.x - s) / (2.0 * in.x * in.coeff_norm * std::sqrt(in.p)),
      in.clamp_slack);
  const double phi = branch_sign(in.branch) * std::acos(u);
  return in.shift + magnitude * Complex{std::cos(phi), std::sin(phi)};
}

/**
 * Recovers the complex eigenvalue from the base circuit and the companion
 * circuit of H + H^3 (same Pauli support as H, no extra ancilla):
 *   E e^{i phi} = shift + sqrt(p) A exp(+- (i/2) arccos(p' A'^2 / (2 p^2 A^4)
 *                                  - 1 / (2 p A^2) - p A^2 / 2))
 */
inline Complex recover_cubic(const RecoveryInputs& in) {
  detail::check_probabilities(in);
  const double s = in.p * in.coeff_norm * in.coeff_norm;
  const double t = in.p_prime * in.coeff_norm_prime * in.coeff_norm_prime;
  const double u = detail::clamp_cosine(
      t / (2.0 * s * s) - 1.0 / (2.0 * s) - s / 2.0, in.clamp_slack);
  const double magnitude = std::sqrt(in.p) * in.coeff_norm;
  const double phi = 0.5 * branch_sign(in.branch) * std::acos(u);
  return in.shift + magnitude * Complex{std::cos(phi), std::sin(phi)};
}

/**
 * Recovers the complex eigenvalue of H from circuits for H^2 and H^2 + H^4:
 *   E e^{i phi} = shift + p^{1/4} sqrt(A) exp(+- (i/2) arccos(
 *       p' A'^2 / (2 p^{3/2} A^3) - 1 / (2 sqrt(p) A) - sqrt(p) A / 2))
 */
inline Complex recover_square(const RecoveryInputs& in) {
  detail::check_probabilities(in);
  const double s = std::sqrt(in.p) * in.coeff_norm;  // |eigenvalue of H^2|
  const double t = in.p_prime * in.coeff_norm_prime * in.coeff_norm_prime;
  const double u = detail::clamp_cosine(
      t / (2.0 * s * s * s) - 1.0 / (2.0 * s) - s / 2.0, in.clamp_slack);
  const double magnitude = std::pow(in.p, 0.25) * std::sqrt(in.coeff_norm);
  const double phi = 0.5 * branch_sign(in.branch) * std::acos(u);
  return in.shift + magnitude * Complex{std::cos(phi), std::sin(phi)};
}

}  // namespace qres
