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

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qres/pauli.hpp"
#include "qres/types.hpp"

namespace qres {

/// Malformed Hamiltonian text; `line` is 1-based.
struct ParseError : std::runtime_error {
  ParseError(std::size_t line_number, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  std::size_t line;
};

/**
 * Textual Pauli Hamiltonian: `#`-prefixed comment lines (free-form metadata
 * such as theta, alpha, basis), then one `<STRING> <re> <im>` term per line.
 * The imaginary column accepts a trailing `i` or `j`.
 */
struct HamiltonianFile {
  std::vector<std::string> comments;  // without the leading '#'
  PauliSum sum;
};

namespace detail {

inline double parse_coefficient_token(std::string token, bool allow_imag_suffix,
                                      std::size_t line) {
  if (allow_imag_suffix && !token.empty() &&
      (token.back() == 'i' || token.back() == 'j')) {
    token.pop_back();
  }
  if (token.empty()) throw ParseError(line, "empty coefficient");
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(line, "non-numeric coefficient '" + token + "'");
  }
  if (consumed != token.size()) {
    throw ParseError(line, "non-numeric coefficient '" + token + "'");
  }
  return value;
}

}  // namespace detail

inline HamiltonianFile parse_hamiltonian(std::string_view text,
                                         double prune_tol = 1e-12) {
  std::vector<std::string> comments;
  struct RawTerm {
    std::string string;
    Complex coeff;
    std::size_t line;
  };
  std::vector<RawTerm> raw;
  std::set<std::string> seen;

  std::size_t line_number = 0;
  std::size_t expected_len = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::size_t start = first + 1;
      if (start < line.size() && line[start] == ' ') ++start;
      comments.push_back(line.substr(start));
      continue;
    }
    std::istringstream fields(line);
    std::string string_token, re_token, im_token, extra;
    fields >> string_token >> re_token >> im_token;
    if (im_token.empty()) {
      throw ParseError(line_number, "expected '<STRING> <re> <im>'");
    }
    if (fields >> extra) {
      throw ParseError(line_number, "trailing token '" + extra + "'");
    }
    for (char c : string_token) {
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw ParseError(line_number,
                         std::string("invalid Pauli character '") + c + "'");
      }
    }
    if (expected_len == 0) {
      expected_len = string_token.size();
      if (expected_len == 0 || expected_len > kDefaultMaxQubits) {
        throw ParseError(line_number, "unsupported string length " +
                                          std::to_string(string_token.size()));
      }
    } else if (string_token.size() != expected_len) {
      throw ParseError(line_number,
                       "string length " + std::to_string(string_token.size()) +
                           " does not match " + std::to_string(expected_len));
    }
    if (!seen.insert(string_token).second) {
      throw ParseError(line_number, "duplicate string " + string_token);
    }
    const double re = detail::parse_coefficient_token(re_token, false, line_number);
    const double im = detail::parse_coefficient_token(im_token, true, line_number);
    raw.push_back({string_token, Complex{re, im}, line_number});
  }
  if (raw.empty()) {
    throw ParseError(line_number == 0 ? 1 : line_number, "empty Hamiltonian");
  }

  HamiltonianFile file{std::move(comments), PauliSum(expected_len, prune_tol)};
  for (const auto& term : raw) {
    file.sum.add(PauliString(term.string), term.coeff);
  }
  return file;
}

/// Six-decimal fixed-point text form, terms in the sum's canonical order.
inline std::string serialize_hamiltonian(const HamiltonianFile& file) {
  std::string out;
  for (const auto& comment : file.comments) {
    out += comment.empty() ? "#" : "# " + comment;
    out += '\n';
  }
  char buffer[64];
  for (const auto& [p, c] : file.sum.terms()) {
    std::snprintf(buffer, sizeof buffer, " %.6f %.6f\n", c.real(), c.imag());
    out += p.str();
    out += buffer;
  }
  return out;
}

inline std::string serialize_hamiltonian(const PauliSum& sum,
                                         std::vector<std::string> comments = {}) {
  return serialize_hamiltonian(HamiltonianFile{std::move(comments), sum});
}

inline HamiltonianFile load_hamiltonian(const std::string& path,
                                        double prune_tol = 1e-12) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hamiltonian(buffer.str(), prune_tol);
}

inline void save_hamiltonian(const std::string& path,
                             const HamiltonianFile& file) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_hamiltonian(file);
}

/// FNV-1a 64-bit digest, used to pin the fixture tables byte-for-byte.
inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace qres
