// Copyright 2026 The spinhaf developers
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

#include "spinhaf/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace spinhaf {

Eigen::MatrixXd parse_matrix_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw std::invalid_argument("matrix JSON: expected fields n and entries");
  }
  const int n = doc.at("n").get<int>();
  if (n < 0) throw std::invalid_argument("matrix JSON: n must be nonnegative");
  const auto& entries = doc.at("entries");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("matrix JSON: entries must hold n*n = " +
                                std::to_string(static_cast<long long>(n) * n) +
                                " reals");
  }
  Eigen::MatrixXd a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a(r, c) = entries.at(static_cast<std::size_t>(r) * n + c).get<double>();
      if (!std::isfinite(a(r, c))) {
        throw std::invalid_argument("matrix JSON: entries must be finite");
      }
    }
  }

  double worst = 0.0;
  int wr = -1, wc = -1;
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      const double dev = std::abs(a(r, c) - a(c, r));
      if (dev > worst) {
        worst = dev;
        wr = r;
        wc = c;
      }
    }
  }
  if (worst > 0.0) {
    std::ostringstream msg;
    msg << "matrix JSON: not symmetric; worst entry pair (" << wr + 1 << ","
        << wc + 1 << ") deviates by " << worst;
    throw std::invalid_argument(msg.str());
  }
  return a;
}

Eigen::MatrixXd load_matrix_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const Eigen::Ref<const Eigen::MatrixXd>& a) {
  nlohmann::json doc;
  doc["n"] = a.rows();
  nlohmann::json entries = nlohmann::json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) entries.push_back(a(r, c));
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

std::string hamiltonian_to_json(const XXHamiltonian& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const XXTerm& t : h.terms) {
    terms.push_back(nlohmann::json::array({t.i, t.j, t.coeff}));
  }
  nlohmann::json doc;
  doc["num_spins"] = h.num_spins;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

std::string state_to_json(const StateVector& psi) {
  nlohmann::json amps = nlohmann::json::object();
  for (Eigen::Index m = 0; m < psi.size(); ++m) {
    if (psi[m] != Complex{0.0, 0.0}) {
      amps[std::to_string(m)] =
          nlohmann::json::array({psi[m].real(), psi[m].imag()});
    }
  }
  nlohmann::json doc;
  doc["num_qubits"] = num_spins_of(psi);
  doc["amps"] = std::move(amps);
  return doc.dump();
}

}  // namespace spinhaf
