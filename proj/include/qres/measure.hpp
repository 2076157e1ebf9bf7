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
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qres/lcu_sim.hpp"
#include "qres/pauli.hpp"
#include "qres/recovery.hpp"
#include "qres/types.hpp"

namespace qres {

/// Companion-circuit family used to pin down the eigenvalue phase.
enum class Variant { shift, cubic, square };

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::shift:
      return "shift";
    case Variant::cubic:
      return "cubic";
    default:
      return "square";
  }
}

inline Variant variant_from_name(const std::string& name) {
  if (name == "shift") return Variant::shift;
  if (name == "cubic") return Variant::cubic;
  if (name == "square") return Variant::square;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

struct MeasureOptions {
  Variant variant = Variant::shift;
  double x = 1.0;  // identity shift of the companion circuit (shift variant)
  Branch branch = Branch::minus;
  Readout mode = Readout::exact;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  double clamp_slack = 1e-9;
};

/// Full record of one direct-measurement energy estimate.
struct MeasuredEnergy {
  Complex energy{0.0, 0.0};
  double p = 0.0;
  double p_prime = 0.0;
  double coeff_norm = 0.0;
  double coeff_norm_prime = 0.0;
  Complex shift{0.0, 0.0};
  Variant variant = Variant::shift;
};

/**
 * Runs the direct-measurement circuits for `h` and its companion operator on
 * the given system eigenstate and recovers the complex eigenvalue.
 *
 * For the cubic and square variants the identity term of `h` is folded into
 * the recovery shift first, mirroring the reduced circuits. In shots mode the
 * arccos clamp is unconditional: binomial noise routinely pushes the argument
 * past +-1 for near-real eigenvalues, and a per-seed estimate must still be
 * produced. The companion circuit draws from seed + 1.
 */
inline MeasuredEnergy measure_eigenvalue(const PauliSum& h,
                                         const std::vector<Complex>& eigenstate,
                                         const MeasureOptions& options) {
  const std::size_t n = h.n_qubits();
  const Complex identity_coeff = h.coeff(PauliString::identity(n));

  MeasuredEnergy out;
  out.variant = options.variant;

  PauliSum base(n), companion(n);
  if (options.variant == Variant::shift) {
    if (options.x == 0.0) {
      throw std::invalid_argument("measure_eigenvalue: shift x must be nonzero");
    }
    base = h;
    companion = h + PauliSum::identity(n, Complex{options.x, 0.0});
    out.shift = Complex{0.0, 0.0};
  } else {
    PauliSum reduced = h + PauliSum::identity(n, -identity_coeff);
    if (reduced.empty()) {
      throw std::invalid_argument(
          "measure_eigenvalue: Hamiltonian is a pure identity");
    }
    out.shift = identity_coeff;
    if (options.variant == Variant::cubic) {
      base = reduced;
      companion = reduced + sum_mul(sum_mul(reduced, reduced), reduced);
    } else {
      base = sum_mul(reduced, reduced);
      companion = base + sum_mul(base, base);
    }
  }

  const LcuHamiltonian base_lcu = to_lcu(base);
  const LcuHamiltonian companion_lcu = to_lcu(companion);
  const MeasurementResult base_run = run_direct_measurement(
      base_lcu, eigenstate, options.mode, options.shots, options.seed);
  const MeasurementResult companion_run = run_direct_measurement(
      companion_lcu, eigenstate, options.mode, options.shots, options.seed + 1);

  RecoveryInputs inputs;
  inputs.p = base_run.p0;
  inputs.p_prime = companion_run.p0;
  inputs.coeff_norm = base_lcu.coeff_norm;
  inputs.coeff_norm_prime = companion_lcu.coeff_norm;
  inputs.x = options.x;
  inputs.shift = out.shift;
  inputs.branch = options.branch;
  inputs.clamp_slack = options.mode == Readout::shots
                           ? std::numeric_limits<double>::infinity()
                           : options.clamp_slack;

  switch (options.variant) {
    case Variant::shift:
      out.energy = recover_shift(inputs);
      break;
    case Variant::cubic:
      out.energy = recover_cubic(inputs);
      break;
    case Variant::square:
      out.energy = recover_square(inputs);
      break;
  }
  out.p = inputs.p;
  out.p_prime = inputs.p_prime;
  out.coeff_norm = inputs.coeff_norm;
  out.coeff_norm_prime = inputs.coeff_norm_prime;
  return out;
}

}  // namespace qres
