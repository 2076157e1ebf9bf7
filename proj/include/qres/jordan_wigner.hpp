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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qres/pauli.hpp"
#include "qres/types.hpp"

namespace qres {

/**
 * Jordan-Wigner image of a single fermionic ladder operator on n orbitals:
 *   a_j^dagger = (X_j - i Y_j)/2 (x) Z_{j-1} (x) ... (x) Z_0
 *   a_j        = (X_j + i Y_j)/2 (x) Z_{j-1} (x) ... (x) Z_0
 * Orbital j maps to qubit j (leftmost string position j).
 */
inline PauliSum jw_ladder(std::size_t orbital, std::size_t n_orbitals,
                          bool dagger, double prune_tol = 1e-12) {
  if (orbital >= n_orbitals) {
    throw std::out_of_range("jw_ladder: orbital " + std::to_string(orbital) +
                            " out of range for " +
                            std::to_string(n_orbitals) + " orbitals");
  }
  std::vector<Pauli> ops(n_orbitals, Pauli::I);
  for (std::size_t k = 0; k < orbital; ++k) ops[k] = Pauli::Z;

  PauliSum out(n_orbitals, prune_tol);
  ops[orbital] = Pauli::X;
  out.add(PauliString(ops), Complex{0.5, 0.0});
  ops[orbital] = Pauli::Y;
  out.add(PauliString(ops), dagger ? Complex{0.0, -0.5} : Complex{0.0, 0.5});
  return out;
}

/// Total particle-number operator sum_j (I - Z_j)/2 on n qubits.
inline PauliSum number_operator(std::size_t n_qubits,
                                double prune_tol = 1e-12) {
  PauliSum out(n_qubits, prune_tol);
  out.add(PauliString::identity(n_qubits),
          Complex{0.5 * static_cast<double>(n_qubits), 0.0});
  for (std::size_t j = 0; j < n_qubits; ++j) {
    std::vector<Pauli> ops(n_qubits, Pauli::I);
    ops[j] = Pauli::Z;
    out.add(PauliString(ops), Complex{-0.5, 0.0});
  }
  return out;
}

/// Qubit form of the one-body operator sum_ij h_ij a_i^dagger a_j.
inline PauliSum jw_one_body(const ComplexMatrix& h, double prune_tol = 1e-12) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("jw_one_body: matrix must be square");
  }
  const auto n = static_cast<std::size_t>(h.rows());
  PauliSum out(n, prune_tol);
  std::vector<PauliSum> create, annihilate;
  create.reserve(n);
  annihilate.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    create.push_back(jw_ladder(j, n, true, prune_tol));
    annihilate.push_back(jw_ladder(j, n, false, prune_tol));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex hij = h(i, j);
      if (hij == Complex{0.0, 0.0}) continue;
      out += hij * sum_mul(create[i], annihilate[j]);
    }
  }
  return out;
}

/// Rank-4 coefficient tensor g_{ijkl} with equal extent on every axis.
class Rank4Tensor {
 public:
  explicit Rank4Tensor(std::size_t n)
      : n_(n), values_(n * n * n * n, Complex{0.0, 0.0}) {
    if (n == 0) {
      throw std::invalid_argument("Rank4Tensor: extent must be positive");
    }
  }

  std::size_t extent() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j, std::size_t k,
                      std::size_t l) {
    return values_.at(((i * n_ + j) * n_ + k) * n_ + l);
  }
  Complex operator()(std::size_t i, std::size_t j, std::size_t k,
                     std::size_t l) const {
    return values_.at(((i * n_ + j) * n_ + k) * n_ + l);
  }

 private:
  std::size_t n_;
  std::vector<Complex> values_;
};

/// Qubit form of the two-body operator
/// (1/2) sum_ijkl g_ijkl a_i^dagger a_j^dagger a_k a_l.
inline PauliSum jw_two_body(const Rank4Tensor& g, double prune_tol = 1e-12) {
  const std::size_t n = g.extent();
  PauliSum out(n, prune_tol);
  std::vector<PauliSum> create, annihilate;
  create.reserve(n);
  annihilate.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    create.push_back(jw_ladder(j, n, true, prune_tol));
    annihilate.push_back(jw_ladder(j, n, false, prune_tol));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const Complex gijkl = g(i, j, k, l);
          if (gijkl == Complex{0.0, 0.0}) continue;
          PauliSum term = sum_mul(
              sum_mul(create[i], create[j]),
              sum_mul(annihilate[k], annihilate[l]));
          out += (0.5 * gijkl) * term;
        }
      }
    }
  }
  return out;
}

}  // namespace qres
