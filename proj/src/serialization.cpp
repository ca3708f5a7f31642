// Copyright 2026 The lopsim Authors
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

#include "lop/serialization.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace lop {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("JSON: missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("JSON: bad field '") + key + "': " + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw std::invalid_argument("JSON: matrix must have " + std::to_string(n) + " rows");
  const auto k = static_cast<Eigen::Index>(n);
  Matrix m(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("JSON: matrix row has the wrong length");
    for (Eigen::Index c = 0; c < k; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

BasisPtr basis_from_json(const json& j) {
  const auto modes = field<std::size_t>(j, "modes");
  const auto photons = field<unsigned>(j, "photons");
  if (j.contains("min_photons")) {
    return std::make_shared<const FockBasis>(FockBasis::truncated(modes, field<unsigned>(j, "min_photons"), photons));
  }
  return make_basis(modes, photons);
}

void basis_to_json(json& j, const FockBasis& b) {
  j["modes"] = b.modes();
  j["photons"] = b.photons();
  if (!b.is_sector()) j["min_photons"] = b.min_photons();
}

double number_or_throw(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("JSON: complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const PureState& s) {
  json j;
  basis_to_json(j, s.basis());
  json amps = json::array();
  for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) amps.push_back(complex_to_json(s.amplitudes()(i)));
  j["amplitudes"] = std::move(amps);
  return j;
}

PureState pure_state_from_json(const json& j) {
  auto basis = basis_from_json(j);
  const json amps = field<json>(j, "amplitudes");
  if (!amps.is_array() || amps.size() != basis->size()) {
    throw std::invalid_argument("JSON: amplitude count does not match the basis");
  }
  Vector v(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t i = 0; i < basis->size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(amps[i]);
  return PureState(std::move(basis), std::move(v));
}

json to_json(const MixedState& s) {
  json j;
  basis_to_json(j, s.basis());
  j["matrix"] = matrix_to_json(s.matrix());
  return j;
}

MixedState mixed_state_from_json(const json& j) {
  auto basis = basis_from_json(j);
  Matrix m = matrix_from_json(field<json>(j, "matrix"), basis->size());
  return MixedState(std::move(basis), std::move(m));
}

json to_json(const ModeUnitary& m) {
  return json{{"size", m.size()}, {"matrix", matrix_to_json(m.matrix())}};
}

ModeUnitary mode_unitary_from_json(const json& j, double tol) {
  const auto n = field<std::size_t>(j, "size");
  if (n == 0) throw std::invalid_argument("JSON: unitary size must be positive");
  return ModeUnitary(matrix_from_json(field<json>(j, "matrix"), n), tol);
}

json to_json(const Circuit& c) {
  json elems = json::array();
  for (const auto& e : c.elements) {
    if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      elems.push_back({{"kind", "bs"}, {"modes", {bs->mode_a, bs->mode_b}}, {"theta", bs->theta}, {"phi", bs->phi}});
    } else if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
      elems.push_back({{"kind", "ps"}, {"mode", ps->mode}, {"phase", ps->phase}});
    } else {
      const auto& sw = std::get<Swap>(e);
      elems.push_back({{"kind", "swap"}, {"modes", {sw.mode_a, sw.mode_b}}});
    }
  }
  return json{{"modes", c.modes}, {"elements", std::move(elems)}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.modes = field<std::size_t>(j, "modes");
  const json elems = field<json>(j, "elements");
  if (!elems.is_array()) throw std::invalid_argument("JSON: 'elements' must be an array");
  for (const auto& e : elems) {
    const auto kind = field<std::string>(e, "kind");
    if (kind == "bs") {
      const auto modes = field<std::vector<std::size_t>>(e, "modes");
      if (modes.size() != 2) throw std::invalid_argument("JSON: beam splitter needs two modes");
      c.elements.emplace_back(BeamSplitter{modes[0], modes[1], field<double>(e, "theta"), field<double>(e, "phi")});
    } else if (kind == "ps") {
      c.elements.emplace_back(PhaseShifter{field<std::size_t>(e, "mode"), field<double>(e, "phase")});
    } else if (kind == "swap") {
      const auto modes = field<std::vector<std::size_t>>(e, "modes");
      if (modes.size() != 2) throw std::invalid_argument("JSON: swap needs two modes");
      c.elements.emplace_back(Swap{modes[0], modes[1]});
    } else {
      throw std::invalid_argument("JSON: unknown element kind '" + kind + "'");
    }
  }
  // Validates the labels.
  for (const auto& e : c.elements) element_matrix(e, c.modes);
  return c;
}

ModeUnitary network_from_json(const json& j, double tol) {
  if (j.is_object() && j.contains("elements")) return recompose(circuit_from_json(j));
  return mode_unitary_from_json(j, tol);
}

json target_to_json(const PureState& target) {
  if (target.size() != 3 || target.basis().modes() != 2) {
    throw std::invalid_argument("target_to_json: expected a two-mode two-photon state");
  }
  return json{{"A", complex_to_json(target.amplitudes()(0))},
              {"B", complex_to_json(target.amplitudes()(1))},
              {"C", complex_to_json(target.amplitudes()(2))}};
}

PureState target_from_json(const json& j) {
  return qutrit_state(complex_from_json(field<json>(j, "A")), complex_from_json(field<json>(j, "B")),
                      complex_from_json(field<json>(j, "C")));
}

json to_json(const EngineeringSolution& s) {
  return json{{"matrix", to_json(s.mode_unitary)},
              {"circuit", to_json(decompose(s.mode_unitary))},
              {"params",
               {{"alpha", complex_to_json(s.params.alpha)},
                {"beta", complex_to_json(s.params.beta)},
                {"gamma", complex_to_json(s.params.gamma)},
                {"delta", complex_to_json(s.params.delta)}}},
              {"k", s.k},
              {"ancilla_in", s.ancilla_in},
              {"outcome", s.postselect_outcome},
              {"probability", s.success_probability},
              {"target", target_to_json(s.target)},
              {"achieved", to_json(s.achieved_state)},
              {"constraint_residual", s.constraint_residual}};
}

EngineeringSolution solution_from_json(const json& j) {
  const json p = field<json>(j, "params");
  const ExtensionParams params{complex_from_json(field<json>(p, "alpha")), complex_from_json(field<json>(p, "beta")),
                               complex_from_json(field<json>(p, "gamma")), complex_from_json(field<json>(p, "delta"))};
  return EngineeringSolution{mode_unitary_from_json(field<json>(j, "matrix")),
                             params,
                             field<double>(j, "k"),
                             field<unsigned>(j, "ancilla_in"),
                             field<unsigned>(j, "outcome"),
                             field<double>(j, "probability"),
                             target_from_json(field<json>(j, "target")),
                             pure_state_from_json(field<json>(j, "achieved")),
                             field<double>(j, "constraint_residual")};
}

Complex parse_complex(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  if (text.empty()) throw std::invalid_argument("empty complex number");

  try {
    if (auto comma = text.find(','); comma != std::string::npos) {
      return {number_or_throw(text.substr(0, comma)), number_or_throw(text.substr(comma + 1))};
    }
    if (text.back() != 'i') return {number_or_throw(text), 0.0};

    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
      if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
        split = p;
        break;
      }
    }
    auto imag_part = [](const std::string& s) {
      if (s.empty() || s == "+") return 1.0;
      if (s == "-") return -1.0;
      return number_or_throw(s);
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {number_or_throw(body.substr(0, split)), imag_part(body.substr(split))};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse complex number '" + raw + "' (use re, re+imi or re,im)");
  }
}

}  // namespace lop
