/*
 * Copyright (c) 2026 The gspcost Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once
#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "gspcost/error.hpp"
#include "gspcost/pauli.hpp"

namespace gspcost {

namespace detail {

/// Shortest "%.17g"-style text that parses back to the same double.
inline std::string format_real(double x) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x)
      break;
  }
  return buf;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace detail

/// Parses `{"n_qubits": <int>, "terms": [[<letters>, <coeff>], ...]}`.
/// Unknown keys, non-numeric coefficients and wrong-length strings are rejected.
inline QubitHamiltonian parse_hamiltonian(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(std::string("malformed Hamiltonian file: ") + e.what());
  }
  detail::require(doc.is_object(), "Hamiltonian file must hold a JSON object");
  for (const auto &[key, value] : doc.items())
    detail::require(key == "n_qubits" || key == "terms", "unknown key in Hamiltonian file: " + key);
  detail::require(doc.contains("n_qubits") && doc.contains("terms"),
                  "Hamiltonian file needs both \"n_qubits\" and \"terms\"");
  const auto &nq = doc["n_qubits"];
  detail::require(nq.is_number_integer() && nq.get<long long>() >= 1,
                  "\"n_qubits\" must be a positive integer");
  const auto n_qubits = static_cast<std::size_t>(nq.get<long long>());

  const auto &terms = doc["terms"];
  detail::require(terms.is_array(), "\"terms\" must be an array");
  std::vector<PauliTerm> parsed;
  parsed.reserve(terms.size());
  for (const auto &entry : terms) {
    detail::require(entry.is_array() && entry.size() == 2 && entry[0].is_string() &&
                        entry[1].is_number(),
                    "each term must be [<letters>, <real coefficient>]");
    auto letters = entry[0].get<std::string>();
    detail::require(letters.size() == n_qubits, "term \"" + letters + "\" has length " +
                                                    std::to_string(letters.size()) + ", expected " +
                                                    std::to_string(n_qubits));
    parsed.push_back({Complex{entry[1].get<double>(), 0.0}, PauliString(std::move(letters))});
  }
  return QubitHamiltonian(n_qubits, parsed);
}

inline QubitHamiltonian load_hamiltonian(const std::string &path) {
  return parse_hamiltonian(detail::read_file(path));
}

/// One term per line, canonical order, round-trip exact coefficients.
inline std::string serialize_hamiltonian(const QubitHamiltonian &h) {
  std::string out = "{\"n_qubits\": " + std::to_string(h.n_qubits()) + ", \"terms\": [";
  bool first = true;
  for (const auto &t : h.terms()) {
    out += first ? "\n" : ",\n";
    out += "  [\"" + t.string.letters() + "\", " + detail::format_real(t.coeff.real()) + "]";
    first = false;
  }
  out += "\n]}\n";
  return out;
}

} // namespace gspcost
