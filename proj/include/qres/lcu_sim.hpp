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

#include <bit>
#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qres/pauli.hpp"
#include "qres/types.hpp"

namespace qres {

inline constexpr std::size_t kMaxSimQubits = 24;

/**
 * Exact amplitude vector over ancilla (x) system registers. The ancilla
 * register owns the high-order index bits, the system register the low-order
 * bits, so the block of full indices (a << n_system) | s holds the system
 * amplitudes conditioned on ancilla basis state |a>.
 */
class StateVector {
 public:
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
      : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits == 0 || n_qubits > kMaxSimQubits) {
      throw std::invalid_argument("StateVector: qubit count outside [1, " +
                                  std::to_string(kMaxSimQubits) + "]");
    }
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
      throw std::invalid_argument("StateVector: amplitude count mismatch");
    }
  }

  /// |0...0> on n qubits.
  static StateVector zero(std::size_t n_qubits) {
    std::vector<Complex> amps(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps[0] = 1.0;
    return StateVector(n_qubits, std::move(amps));
  }

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/**
 * The state-preparation gate B with B|0> = sum_i sqrt(beta_i / A) |i>,
 * realized as the Householder reflection about b - e0 (identity when the
 * target already is |0>). The reflection is real, symmetric and involutory,
 * so it serves as both B and B^dagger.
 */
struct PrepareGate {
  std::vector<double> target;     // amplitudes sqrt(beta_i / A)
  std::vector<double> reflector;  // b - e0, empty when B == identity
  double reflector_norm2 = 0.0;

  std::size_t dim() const { return target.size(); }
};

inline PrepareGate prepare_b(const std::vector<double>& betas,
                             double coeff_norm) {
  if (betas.empty()) throw std::invalid_argument("prepare_b: empty betas");
  if (!(coeff_norm > 0.0)) {
    throw std::invalid_argument("prepare_b: coefficient norm must be > 0");
  }
  if (std::popcount(betas.size()) != 1) {
    throw std::invalid_argument("prepare_b: beta count must be a power of two");
  }
  PrepareGate gate;
  gate.target.reserve(betas.size());
  for (double beta : betas) {
    if (beta < 0.0) throw std::invalid_argument("prepare_b: negative beta");
    gate.target.push_back(std::sqrt(beta / coeff_norm));
  }
  std::vector<double> v = gate.target;
  v[0] -= 1.0;
  double norm2 = 0.0;
  for (double x : v) norm2 += x * x;
  if (norm2 > 1e-28) {
    gate.reflector = std::move(v);
    gate.reflector_norm2 = norm2;
  }
  return gate;
}

/// Applies the prepare gate (== its adjoint) to the ancilla register.
inline void apply_prepare(const PrepareGate& gate, StateVector& state,
                          std::size_t n_system) {
  const std::size_t system_dim = std::size_t{1} << n_system;
  const std::size_t ancilla_dim = gate.dim();
  if (ancilla_dim * system_dim != state.size()) {
    throw std::invalid_argument("apply_prepare: register size mismatch");
  }
  if (gate.reflector.empty()) return;
  auto& amps = state.amplitudes();
  for (std::size_t s = 0; s < system_dim; ++s) {
    Complex dot{0.0, 0.0};
    for (std::size_t a = 0; a < ancilla_dim; ++a) {
      dot += gate.reflector[a] * amps[(a << n_system) | s];
    }
    const Complex scale = 2.0 * dot / gate.reflector_norm2;
    for (std::size_t a = 0; a < ancilla_dim; ++a) {
      amps[(a << n_system) | s] -= scale * gate.reflector[a];
    }
  }
}

/// Applies select-V: for each ancilla basis state |i>, multiplies the system
/// block by e^{i phase_i} P_i.
inline void apply_select_v(StateVector& state, const LcuHamiltonian& lcu) {
  if (state.n_qubits() != lcu.n_ancilla + lcu.n_system) {
    throw std::invalid_argument("apply_select_v: register size mismatch");
  }
  const std::size_t system_dim = std::size_t{1} << lcu.n_system;
  auto& amps = state.amplitudes();
  for (std::size_t a = 0; a < lcu.betas.size(); ++a) {
    if (lcu.betas[a] == 0.0 && lcu.strings[a].is_identity() &&
        lcu.phases[a] == 0.0) {
      continue;  // padding entry acts as identity
    }
    const Complex phase = std::polar(1.0, lcu.phases[a]);
    const PauliString& p = lcu.strings[a];
    const std::uint32_t flip = p.flip_mask();
    const std::uint32_t sign = p.sign_mask();
    const Complex yphase = detail::i_power(p.y_count());
    const std::size_t base = a << lcu.n_system;
    auto state_phase = [&](std::size_t s) {
      return std::popcount(static_cast<std::uint32_t>(s) & sign) % 2
                 ? -yphase
                 : yphase;
    };
    if (flip == 0) {
      for (std::size_t s = 0; s < system_dim; ++s) {
        amps[base | s] *= phase * state_phase(s);
      }
    } else {
      for (std::size_t s = 0; s < system_dim; ++s) {
        const std::size_t t = s ^ flip;
        if (t < s) continue;
        const Complex hold = amps[base | s];
        amps[base | s] = phase * state_phase(t) * amps[base | t];
        amps[base | t] = phase * state_phase(s) * hold;
      }
    }
  }
}

enum class Readout { exact, shots };

/**
 * Outcome of the direct-measurement circuit. In exact mode p0 is the exact
 * ancilla-zero probability and success_amplitude is <0,phi| U_r |0,phi>
 * (equal to the eigenvalue over A when phi is an eigenstate). In shots mode
 * p0 is the zero-outcome fraction of a seeded binomial draw.
 */
struct MeasurementResult {
  Readout mode = Readout::exact;
  double p0 = 0.0;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  std::optional<Complex> success_amplitude;
};

/// Runs U_r = (B^dagger (x) I) V (B (x) I) on |0>_a |phi>_s and reads out
/// the ancilla-zero probability.
inline MeasurementResult run_direct_measurement(
    const LcuHamiltonian& lcu, const std::vector<Complex>& phi,
    Readout mode = Readout::exact, std::size_t shots = 0,
    std::uint64_t seed = 0) {
  const std::size_t total = lcu.n_ancilla + lcu.n_system;
  if (total > kMaxSimQubits) {
    throw std::invalid_argument("run_direct_measurement: " +
                                std::to_string(total) +
                                " qubits exceeds simulator ceiling");
  }
  const std::size_t system_dim = std::size_t{1} << lcu.n_system;
  if (phi.size() != system_dim) {
    throw std::invalid_argument(
        "run_direct_measurement: system state dimension mismatch");
  }
  double norm2 = 0.0;
  for (const Complex& a : phi) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-10) {
    throw std::invalid_argument(
        "run_direct_measurement: input state is not unit norm");
  }
  if (mode == Readout::shots && shots == 0) {
    throw std::invalid_argument("run_direct_measurement: shots mode needs shots > 0");
  }

  std::vector<Complex> amps(std::size_t{1} << total, Complex{0.0, 0.0});
  std::copy(phi.begin(), phi.end(), amps.begin());
  StateVector state(total, std::move(amps));

  const PrepareGate b = prepare_b(lcu.betas, lcu.coeff_norm);
  apply_prepare(b, state, lcu.n_system);
  apply_select_v(state, lcu);
  apply_prepare(b, state, lcu.n_system);

  double p0 = 0.0;
  Complex overlap{0.0, 0.0};
  for (std::size_t s = 0; s < system_dim; ++s) {
    p0 += std::norm(state[s]);
    overlap += std::conj(phi[s]) * state[s];
  }

  MeasurementResult result;
  result.mode = mode;
  result.seed = seed;
  if (mode == Readout::exact) {
    result.p0 = p0;
    result.success_amplitude = overlap;
  } else {
    std::mt19937_64 rng(seed);
    std::binomial_distribution<std::uint64_t> draw(shots,
                                                   std::clamp(p0, 0.0, 1.0));
    result.p0 = static_cast<double>(draw(rng)) / static_cast<double>(shots);
    result.shots = shots;
  }
  return result;
}

}  // namespace qres
