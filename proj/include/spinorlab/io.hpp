// Copyright 2026 The spinorlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Spinor file format:
//
//   {"format": "spinorlab/1", "n": <int>, "coeffs": [[re, im], ...]}
//
// with exactly 2^floor(n/2) pairs in basis-index order. Numbers are written
// with 17 significant digits so that load(save(psi)) is exact.

#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include <json.hpp>

#include "spinorlab/clifford.hpp"
#include "spinorlab/errors.hpp"

namespace spinorlab {

inline constexpr const char *kSpinorFormat = "spinorlab/1";

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline std::string spinor_to_json(const Spinor &psi) {
  std::ostringstream os;
  os << "{\"format\": \"" << kSpinorFormat << "\", \"n\": " << psi.space().n()
     << ", \"coeffs\": [";
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i) os << ", ";
    os << '[' << detail::format_double(psi[i].real()) << ", "
       << detail::format_double(psi[i].imag()) << ']';
  }
  os << "]}\n";
  return os.str();
}

inline Spinor spinor_from_json(const std::string &text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");
  if (!doc.contains("format") || doc["format"] != kSpinorFormat) {
    throw ParseError(std::string("field 'format': expected \"") + kSpinorFormat + "\"");
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("field 'n': expected an integer");
  }
  const SpinorSpace space(doc["n"].get<int>());
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw ParseError("field 'coeffs': expected an array");
  }
  const json &arr = doc["coeffs"];
  if (arr.size() != space.dim()) {
    throw DimensionError("field 'coeffs': n=" + std::to_string(space.n()) + " needs " +
                         std::to_string(space.dim()) + " entries, got " +
                         std::to_string(arr.size()));
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json &e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParseError("field 'coeffs[" + std::to_string(i) + "]': expected [re, im]");
    }
    coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return Spinor(space, std::move(coeffs));
}

inline void save_spinor(const Spinor &psi, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << spinor_to_json(psi);
  if (!out) throw ParseError("write to '" + path + "' failed");
}

inline Spinor load_spinor(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return spinor_from_json(buf.str());
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace spinorlab
