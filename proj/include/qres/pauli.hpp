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
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qres/types.hpp"

namespace qres {

/// Symbols for the single-qubit Pauli operators (and identity).
enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Hard ceiling on the qubit count of a Pauli string. Desk-scale bound;
/// callers that really need more can pass an explicit ceiling.
inline constexpr std::size_t kDefaultMaxQubits = 16;

inline char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    default:
      return 'Z';
  }
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli character '") +
                                  c + "'");
  }
}

/**
 * A dense tensor product of single-qubit Pauli operators.
 *
 * Qubit 0 is the leftmost character of the textual form, so "ZI" is Z on
 * qubit 0 and identity on qubit 1. In matrix conventions qubit 0 owns the
 * most significant bit of a basis-state index.
 */
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> ops,
                       std::size_t max_qubits = kDefaultMaxQubits)
      : ops_(std::move(ops)) {
    if (ops_.empty() || ops_.size() > max_qubits) {
      throw std::invalid_argument("PauliString: qubit count " +
                                  std::to_string(ops_.size()) +
                                  " outside [1, " +
                                  std::to_string(max_qubits) + "]");
    }
  }

  explicit PauliString(std::string_view text,
                       std::size_t max_qubits = kDefaultMaxQubits)
      : PauliString(from_text(text), max_qubits) {}

  /// All-identity string on n qubits.
  static PauliString identity(std::size_t n_qubits) {
    return PauliString(std::vector<Pauli>(n_qubits, Pauli::I));
  }

  std::size_t n_qubits() const { return ops_.size(); }
  Pauli op(std::size_t qubit) const { return ops_.at(qubit); }
  const std::vector<Pauli>& ops() const { return ops_; }

  bool is_identity() const {
    return std::all_of(ops_.begin(), ops_.end(),
                       [](Pauli p) { return p == Pauli::I; });
  }

  std::string str() const {
    std::string s;
    s.reserve(ops_.size());
    for (Pauli p : ops_) s.push_back(pauli_char(p));
    return s;
  }

  /// Bit mask of qubits whose basis bit gets flipped (X or Y factors).
  std::uint32_t flip_mask() const {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < ops_.size(); ++j) {
      if (ops_[j] == Pauli::X || ops_[j] == Pauli::Y) m |= bit(j);
    }
    return m;
  }

  /// Bit mask of qubits contributing a (-1)^bit sign (Z or Y factors).
  std::uint32_t sign_mask() const {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < ops_.size(); ++j) {
      if (ops_[j] == Pauli::Z || ops_[j] == Pauli::Y) m |= bit(j);
    }
    return m;
  }

  int y_count() const {
    return static_cast<int>(
        std::count(ops_.begin(), ops_.end(), Pauli::Y));
  }

  auto operator<=>(const PauliString&) const = default;

 private:
  // Qubit j lives at bit (n-1-j): index bits read left to right like the
  // textual form.
  std::uint32_t bit(std::size_t qubit) const {
    return 1u << (ops_.size() - 1 - qubit);
  }

  static std::vector<Pauli> from_text(std::string_view text) {
    std::vector<Pauli> ops;
    ops.reserve(text.size());
    for (char c : text) ops.push_back(pauli_from_char(c));
    return ops;
  }

  std::vector<Pauli> ops_;
};

struct PauliProduct {
  Complex phase;  // one of {1, -1, i, -i}
  PauliString string;
};

namespace detail {

// Single-qubit products indexed [a][b] for a*b, ops ordered I,X,Y,Z.
inline constexpr std::uint8_t kProductOp[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
// Phase exponents k with a*b = i^k * product, same indexing.
inline constexpr std::uint8_t kPhaseExp[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

inline Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace detail

/// Product of two Pauli strings: matrix(a)*matrix(b) == phase*matrix(product).
inline PauliProduct pauli_mul(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("pauli_mul: qubit count mismatch (" +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()) + ")");
  }
  std::vector<Pauli> ops(a.n_qubits());
  int k = 0;
  for (std::size_t j = 0; j < a.n_qubits(); ++j) {
    const auto ia = static_cast<std::uint8_t>(a.op(j));
    const auto ib = static_cast<std::uint8_t>(b.op(j));
    ops[j] = static_cast<Pauli>(detail::kProductOp[ia][ib]);
    k += detail::kPhaseExp[ia][ib];
  }
  return {detail::i_power(k), PauliString(std::move(ops))};
}

/**
 * A complex-weighted sum of Pauli strings, the qubit-space Hamiltonian form.
 *
 * Terms are kept in lexicographic string order (I < X < Y < Z), which makes
 * every downstream ordering (serialization, LCU term indexing) deterministic.
 * Coefficients with magnitude <= prune_tol are never stored.
 */
class PauliSum {
 public:
  using TermMap = std::map<PauliString, Complex>;

  explicit PauliSum(std::size_t n_qubits, double prune_tol = 1e-12)
      : n_qubits_(n_qubits), prune_tol_(prune_tol) {
    if (n_qubits == 0) {
      throw std::invalid_argument("PauliSum: n_qubits must be positive");
    }
    if (prune_tol < 0) {
      throw std::invalid_argument("PauliSum: prune_tol must be >= 0");
    }
  }

  /// c * identity on n qubits.
  static PauliSum identity(std::size_t n_qubits, Complex c,
                           double prune_tol = 1e-12) {
    PauliSum s(n_qubits, prune_tol);
    s.add(PauliString::identity(n_qubits), c);
    return s;
  }

  std::size_t n_qubits() const { return n_qubits_; }
  double prune_tol() const { return prune_tol_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Complex coeff(const PauliString& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
  }

  /// Accumulates c onto the coefficient of s, pruning cancellations.
  void add(const PauliString& s, Complex c) {
    if (s.n_qubits() != n_qubits_) {
      throw std::invalid_argument("PauliSum::add: string has " +
                                  std::to_string(s.n_qubits()) +
                                  " qubits, sum has " +
                                  std::to_string(n_qubits_));
    }
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) <= prune_tol_) terms_.erase(it);
  }

  PauliSum& operator+=(const PauliSum& other) {
    if (other.n_qubits_ != n_qubits_) {
      throw std::invalid_argument("PauliSum: qubit count mismatch in +=");
    }
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
  }

  PauliSum& operator*=(Complex scale) {
    if (std::abs(scale) <= prune_tol_) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= scale;
    return *this;
  }

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator*(PauliSum a, Complex scale) { return a *= scale; }
  friend PauliSum operator*(Complex scale, PauliSum a) { return a *= scale; }

 private:
  std::size_t n_qubits_;
  double prune_tol_;
  TermMap terms_;
};

/// Distributed product of two Pauli sums, pruned.
inline PauliSum sum_mul(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("sum_mul: qubit count mismatch");
  }
  PauliSum out(a.n_qubits(), std::max(a.prune_tol(), b.prune_tol()));
  for (const auto& [pa, ca] : a.terms()) {
    for (const auto& [pb, cb] : b.terms()) {
      auto [phase, prod] = pauli_mul(pa, pb);
      out.add(prod, ca * cb * phase);
    }
  }
  return out;
}

/// Dense 2^n x 2^n matrix of the sum. Refuses to materialize beyond the
/// ceiling; use the number-sector projection for bigger operators.
inline ComplexMatrix to_matrix(const PauliSum& s,
                               std::size_t max_qubits = 10) {
  const std::size_t n = s.n_qubits();
  if (n > max_qubits) {
    throw std::invalid_argument(
        "to_matrix: " + std::to_string(n) + " qubits exceeds ceiling " +
        std::to_string(max_qubits));
  }
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& [p, c] : s.terms()) {
    const std::uint32_t flip = p.flip_mask();
    const std::uint32_t sign = p.sign_mask();
    const Complex yphase = detail::i_power(p.y_count());
    for (std::size_t col = 0; col < dim; ++col) {
      const double parity =
          std::popcount(static_cast<std::uint32_t>(col) & sign) % 2 ? -1.0
                                                                    : 1.0;
      m(col ^ flip, col) += c * yphase * parity;
    }
  }
  return m;
}

/**
 * Normalized linear-combination-of-unitaries form of a Pauli sum:
 * H = sum_i beta_i e^{i phase_i} P_i with beta_i >= 0, padded with
 * (beta = 0, identity) entries up to 2^n_a, n_a = ceil(log2 L).
 */
struct LcuHamiltonian {
  std::vector<double> betas;
  std::vector<double> phases;
  std::vector<PauliString> strings;
  double coeff_norm = 0.0;  // A = sum of betas
  std::size_t n_ancilla = 0;
  std::size_t n_system = 0;

  /// Rebuilds the Pauli sum sum_i beta_i e^{i phase_i} P_i.
  PauliSum reconstruct(double prune_tol = 1e-12) const {
    PauliSum s(n_system, prune_tol);
    for (std::size_t i = 0; i < betas.size(); ++i) {
      if (betas[i] == 0.0) continue;
      s.add(strings[i], betas[i] * std::polar(1.0, phases[i]));
    }
    return s;
  }
};

inline LcuHamiltonian to_lcu(const PauliSum& s) {
  if (s.empty()) {
    throw std::invalid_argument("to_lcu: empty Pauli sum");
  }
  const std::size_t count = s.size();
  std::size_t n_a = 0;
  while ((std::size_t{1} << n_a) < count) ++n_a;
  const std::size_t padded = std::size_t{1} << n_a;

  LcuHamiltonian lcu;
  lcu.n_ancilla = n_a;
  lcu.n_system = s.n_qubits();
  lcu.betas.reserve(padded);
  lcu.phases.reserve(padded);
  lcu.strings.reserve(padded);
  for (const auto& [p, c] : s.terms()) {
    lcu.betas.push_back(std::abs(c));
    lcu.phases.push_back(std::arg(c));
    lcu.strings.push_back(p);
    lcu.coeff_norm += std::abs(c);
  }
  while (lcu.betas.size() < padded) {
    lcu.betas.push_back(0.0);
    lcu.phases.push_back(0.0);
    lcu.strings.push_back(PauliString::identity(s.n_qubits()));
  }
  return lcu;
}

}  // namespace qres
