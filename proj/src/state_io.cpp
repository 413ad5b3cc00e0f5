// Copyright 2026 The qmcap Authors
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

#include "qmcap/state_io.hpp"

#include <fstream>
#include <sstream>

#include "qmcap/error.hpp"
#include "qmcap/states.hpp"

namespace qmcap {

using nlohmann::json;

json state_to_json(const DensityMatrix& rho) {
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < rho.dim(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Index j = 0; j < rho.dim(); ++j) {
      re_row.push_back(rho.matrix()(i, j).real());
      im_row.push_back(rho.matrix()(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"d", rho.params().d}, {"n", rho.params().n}, {"form", "dense"}, {"re", re}, {"im", im}};
}

namespace {

Complex parse_complex(const json& v) {
  if (v.is_number()) return Complex(v.get<double>(), 0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return Complex(v[0].get<double>(), v[1].get<double>());
  }
  throw_error(ErrorCode::kInvalidArgument, "amplitude must be a number or a [re, im] pair");
}

ComplexMatrix parse_dense(const json& j, Index dim) {
  if (!j.contains("re")) throw_error(ErrorCode::kInvalidArgument, "dense state needs 're'");
  const json& re = j.at("re");
  const json* im = j.contains("im") ? &j.at("im") : nullptr;
  if (!re.is_array() || static_cast<Index>(re.size()) != dim || (im && static_cast<Index>(im->size()) != dim)) {
    throw_error(ErrorCode::kInvalidArgument, "dense state rows do not match d^n = " + std::to_string(dim));
  }
  ComplexMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    if (static_cast<Index>(re[i].size()) != dim || (im && static_cast<Index>((*im)[i].size()) != dim)) {
      throw_error(ErrorCode::kInvalidArgument, "dense state row " + std::to_string(i) + " has the wrong length");
    }
    for (Index j2 = 0; j2 < dim; ++j2) {
      double imag = im ? (*im)[i][j2].get<double>() : 0.0;
      m(i, j2) = Complex(re[i][j2].get<double>(), imag);
    }
  }
  return m;
}

}  // namespace

DensityMatrix state_from_json(const json& j) {
  try {
    QuditParams params = QuditParams::make(j.at("d").get<int>(), j.value("n", 1));
    std::string form = j.value("form", "dense");
    if (form == "dense") {
      return DensityMatrix(params, parse_dense(j, params.dim()));
    }
    if (form == "ket") {
      const json& amps = j.at("amplitudes");
      if (!amps.is_array() || static_cast<Index>(amps.size()) != params.dim()) {
        throw_error(ErrorCode::kInvalidArgument, "ket needs d^n = " + std::to_string(params.dim()) + " amplitudes");
      }
      ComplexVector v(params.dim());
      for (Index k = 0; k < params.dim(); ++k) v(k) = parse_complex(amps[k]);
      return DensityMatrix::pure(params, v);
    }
    if (form == "preset") {
      std::optional<BSParams> bs;
      if (j.contains("s") && j.contains("t")) {
        bs = BSParams::make(params, j.at("s").get<int>(), j.at("t").get<int>());
      }
      return preset_state(j.at("preset").get<std::string>(), params, bs);
    }
    throw_error(ErrorCode::kInvalidArgument, "unknown state form '" + form + "'");
  } catch (const json::exception& e) {
    throw_error(ErrorCode::kInvalidArgument, std::string("malformed state JSON: ") + e.what());
  }
}

DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_error(ErrorCode::kIo, "cannot open state file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw_error(ErrorCode::kInvalidArgument, "state file '" + path + "' is not valid JSON: " + e.what());
  }
  return state_from_json(j);
}

void save_state(const std::string& path, const DensityMatrix& rho) {
  std::ofstream out(path);
  if (!out) throw_error(ErrorCode::kIo, "cannot write state file '" + path + "'");
  out << state_to_json(rho).dump(2) << "\n";
  if (!out) throw_error(ErrorCode::kIo, "failed writing state file '" + path + "'");
}

}  // namespace qmcap
