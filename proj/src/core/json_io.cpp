// Copyright 2026 The coherence-toolkit developers
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "core/json_io.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace coh {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  raise(ErrorCode::parse_error, where + ": " + what);
}

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number()) parse_fail(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) parse_fail(where, "value is not finite");
  return v;
}

int positive_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  const long long v = j.get<long long>();
  if (v < 1 || v > 4096) parse_fail(where, "value out of range");
  return static_cast<int>(v);
}

cplx entry_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    parse_fail(where, "expected a [re, im] pair");
  return {finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]")};
}

// Rectangular rows x cols block; covers square matrices and 1 x d vectors.
std::vector<cplx> block_from_json(const json& j, int rows, int cols,
                                  const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    parse_fail(where, "expected " + std::to_string(rows) + " rows");
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    const std::string row_where = where + ".row[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      parse_fail(row_where, "expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      out.push_back(
          entry_from_json(row[c], row_where + "[" + std::to_string(c) + "]"));
  }
  return out;
}

json block_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& require_field(const json& j, const char* key,
                          const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(where, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  return json{{"dim", m.dim()}, {"matrix", block_to_json(m)}};
}

Matrix matrix_from_json(const json& j) {
  const int d = positive_int(require_field(j, "dim", "matrix"), "matrix.dim");
  auto entries =
      block_from_json(require_field(j, "matrix", "matrix"), d, d, "matrix");
  return Matrix(d, std::move(entries));
}

DensityMatrix density_from_json(const json& j) {
  return DensityMatrix::from_matrix(matrix_from_json(j));
}

json measurement_to_json(const Measurement& m) {
  json out;
  out["kind"] = kind_name(m.kind);
  out["dim"] = m.dim();

  json elements = json::array();
  json params = json::object();

  if (const auto* mum = std::get_if<MumSet>(&m.value)) {
    params["t"] = mum->t;
    params["kappa"] = mum->kappa;
    for (const auto& povm : mum->povms)
      for (const auto& p : povm.elements)
        elements.push_back(matrix_to_json(p));
  } else if (const auto* gsm = std::get_if<GsmSet>(&m.value)) {
    params["t"] = gsm->t;
    params["a"] = gsm->a;
    for (const auto& p : gsm->povm.elements)
      elements.push_back(matrix_to_json(p));
  } else {
    const auto& mub = std::get<MubSet>(m.value);
    for (const auto& basis : mub.bases) {
      for (int col = 0; col < mub.dim; ++col) {
        json row = json::array();
        for (int r = 0; r < mub.dim; ++r)
          row.push_back(json::array(
              {basis(r, col).real(), basis(r, col).imag()}));
        elements.push_back(
            json{{"dim", mub.dim}, {"matrix", json::array({row})}});
      }
    }
  }

  out["params"] = std::move(params);
  out["elements"] = std::move(elements);
  return out;
}

Measurement measurement_from_json(const json& j) {
  const std::string kind_str =
      require_field(j, "kind", "measurement").get<std::string>();
  const int d =
      positive_int(require_field(j, "dim", "measurement"), "measurement.dim");
  if (d < 2) parse_fail("measurement.dim", "families need dimension >= 2");
  const json& elements = require_field(j, "elements", "measurement");
  if (!elements.is_array()) parse_fail("measurement.elements", "expected a list");
  const json& params = require_field(j, "params", "measurement");

  auto element_matrix = [&](std::size_t k) {
    const std::string where = "elements[" + std::to_string(k) + "]";
    Matrix m = matrix_from_json(elements[k]);
    if (m.dim() != d) parse_fail(where, "dimension differs from envelope");
    return m;
  };

  const auto check = [&](const FamilyReport& report, double tol,
                         const char* what) {
    if (!report.passed(tol))
      parse_fail(std::string("measurement (") + what + ")",
                 "defining conditions violated: max residual " +
                     std::to_string(report.max_residual()));
  };

  Measurement out;
  if (kind_str == "mum") {
    if (static_cast<int>(elements.size()) != (d + 1) * d)
      parse_fail("measurement.elements",
                 "a mum family needs (d+1)*d elements");
    MumSet mum;
    mum.dim = d;
    mum.t = finite_number(require_field(params, "t", "params"), "params.t");
    mum.kappa =
        finite_number(require_field(params, "kappa", "params"), "params.kappa");
    mum.povms.resize(d + 1);
    std::size_t k = 0;
    for (auto& povm : mum.povms) {
      povm.dim = d;
      for (int n = 0; n < d; ++n) povm.elements.push_back(element_matrix(k++));
    }
    check(verify_family(mum), 1e-8, "mum");
    out.kind = Measurement::Kind::mum;
    out.value = std::move(mum);
    return out;
  }

  if (kind_str == "gsm" || kind_str == "sic") {
    if (static_cast<int>(elements.size()) != d * d)
      parse_fail("measurement.elements", "a gsm family needs d^2 elements");
    GsmSet gsm;
    gsm.dim = d;
    gsm.t = finite_number(require_field(params, "t", "params"), "params.t");
    gsm.a = finite_number(require_field(params, "a", "params"), "params.a");
    gsm.povm.dim = d;
    for (std::size_t k = 0; k < elements.size(); ++k)
      gsm.povm.elements.push_back(element_matrix(k));
    check(verify_family(gsm), 1e-8, kind_str.c_str());
    out.kind = kind_str == "sic" ? Measurement::Kind::sic
                                 : Measurement::Kind::gsm;
    out.value = std::move(gsm);
    return out;
  }

  if (kind_str == "mub") {
    if (static_cast<int>(elements.size()) != (d + 1) * d)
      parse_fail("measurement.elements", "a mub set needs (d+1)*d vectors");
    MubSet mub;
    mub.dim = d;
    std::size_t k = 0;
    for (int b = 0; b <= d; ++b) {
      Matrix basis(d);
      for (int col = 0; col < d; ++col, ++k) {
        const std::string where = "elements[" + std::to_string(k) + "]";
        const json& vec = elements[k];
        const int vd =
            positive_int(require_field(vec, "dim", where), where + ".dim");
        if (vd != d) parse_fail(where, "dimension differs from envelope");
        auto entries =
            block_from_json(require_field(vec, "matrix", where), 1, d, where);
        for (int r = 0; r < d; ++r) basis(r, col) = entries[r];
      }
      mub.bases.push_back(std::move(basis));
    }
    check(verify_family(mub), 1e-8, "mub");
    out.kind = Measurement::Kind::mub;
    out.value = std::move(mub);
    return out;
  }

  parse_fail("measurement.kind", "unknown kind \"" + kind_str + "\"");
}

json report_to_json(const CoherenceReport& report) {
  json out;
  out["dim"] = report.dim;
  out["alpha"] = report.alpha;
  if (!report.state_id.empty()) out["state_id"] = report.state_id;

  json params = json::object();
  if (report.kappa) params["kappa"] = *report.kappa;
  if (report.a) params["a"] = *report.a;
  if (report.samples) params["samples"] = *report.samples;
  out["params"] = std::move(params);

  json quantities = json::object();
  for (const auto& [name, value] : report.quantities) {
    json q = json::object();
    if (value.brute) q["brute"] = *value.brute;
    if (value.closed) q["closed"] = *value.closed;
    if (value.residual) q["residual"] = *value.residual;
    if (value.estimate) q["estimate"] = *value.estimate;
    if (value.std_error) q["std_error"] = *value.std_error;
    quantities[name] = std::move(q);
  }
  out["quantities"] = std::move(quantities);

  json relations = json::object();
  for (const auto& [name, rel] : report.relations)
    relations[name] = json{
        {"lhs", rel.lhs}, {"rhs", rel.rhs}, {"residual", rel.residual}};
  relations["ordering_ok"] = report.ordering_ok;
  relations["ordering_degenerate"] = report.ordering_degenerate;
  out["relations"] = std::move(relations);
  return out;
}

json basis_export_json(const PartitionedBasis& partition) {
  json out = json::array();
  for (int b = 0; b < partition.group_count(); ++b) {
    for (int n = 0; n < partition.group_size(); ++n) {
      json item = matrix_to_json(partition.op(b, n));
      item["b"] = b + 1;
      item["n"] = n + 1;
      out.push_back(std::move(item));
    }
  }
  return out;
}

json family_report_to_json(const FamilyReport& report) {
  json conditions = json::object();
  for (const auto& item : report.items) conditions[item.name] = item.residual;
  return json{{"conditions", std::move(conditions)},
              {"max_residual", report.max_residual()}};
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::parse_error, e.what());
  }
}

}  // namespace coh
