#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "liemat/complexstruct.hpp"
#include "liemat/core.hpp"
#include "liemat/linalg.hpp"

namespace liemat {

using json = nlohmann::ordered_json;

/// Malformed file: bad JSON syntax, missing or mistyped fields, out-of-range
/// indices.  The message names the offending position or field.
struct ParseError : Error {
  using Error::Error;
};

/// Structure constants that fail the Jacobi identity beyond tolerance.
struct JacobiError : Error {
  double defect;
  explicit JacobiError(const std::string& msg, double d) : Error(msg), defect(d) {}
};

/// Metric that is not symmetric positive definite.
struct MetricError : Error {
  using Error::Error;
};

/// A parsed algebra file: algebra, metric, and whatever optional structure
/// the file carried.  Subalgebra bases keep their file coordinates so a
/// round-trip reproduces the bytes.
struct AlgebraBundle {
  std::string name;
  LieAlgebra alg;
  InnerProduct metric;
  std::optional<Matrix> complex_structure;
  std::optional<AlmostContactStructure> contact;
  std::map<std::string, Matrix> subalgebras;
};

namespace detail {

inline Matrix parse_matrix(const json& j, int rows, int cols, const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError(field + ": expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError(field + " row " + std::to_string(r + 1) + ": expected " +
                       std::to_string(cols) + " numbers");
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number())
        throw ParseError(field + " row " + std::to_string(r + 1) + ": non-numeric entry");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

inline Vector parse_vector(const json& j, int n, const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(field + ": expected " + std::to_string(n) + " numbers");
  Vector v(n);
  for (int i = 0; i < n; ++i) {
    if (!j[i].is_number()) throw ParseError(field + ": non-numeric entry");
    v(i) = j[i].get<double>();
  }
  return v;
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

}  // namespace detail

/// Bundle -> canonical JSON.  Key order, bracket order, and coefficient order
/// are all fixed, and zero coefficients are dropped, so equal bundles always
/// produce identical documents.
inline json to_json(const AlgebraBundle& b) {
  const int n = b.alg.dim();
  json j;
  j["name"] = b.name;
  j["dim"] = n;
  json brackets = json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj) {
      json coeffs = json::object();
      for (int k = 0; k < n; ++k) {
        const double c = b.alg.c(i, jj, k);
        if (c != 0.0) coeffs[std::to_string(k + 1)] = c;
      }
      if (!coeffs.empty()) {
        json entry;
        entry["i"] = i + 1;
        entry["j"] = jj + 1;
        entry["coeffs"] = std::move(coeffs);
        brackets.push_back(std::move(entry));
      }
    }
  j["brackets"] = std::move(brackets);
  j["metric"] = detail::matrix_to_json(b.metric.gram());
  if (b.complex_structure) j["complex_structure"] = detail::matrix_to_json(*b.complex_structure);
  if (b.contact) {
    json c;
    c["phi"] = detail::matrix_to_json(b.contact->phi);
    c["xi"] = detail::vector_to_json(b.contact->xi);
    c["eta"] = detail::vector_to_json(b.contact->eta);
    j["contact"] = std::move(c);
  }
  if (!b.subalgebras.empty()) {
    json subs = json::object();
    for (const auto& [name, basis] : b.subalgebras) {
      json vecs = json::array();
      for (Eigen::Index c = 0; c < basis.cols(); ++c)
        vecs.push_back(detail::vector_to_json(basis.col(c)));
      subs[name] = std::move(vecs);
    }
    j["subalgebras"] = std::move(subs);
  }
  return j;
}

inline std::string serialize(const AlgebraBundle& b) { return to_json(b).dump(2) + "\n"; }

inline AlgebraBundle parse_algebra(const json& j, const std::string& origin) {
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");
  for (const char* field : {"name", "dim", "brackets", "metric"})
    if (!j.contains(field)) throw ParseError(origin + ": missing field '" + field + "'");
  if (!j["name"].is_string()) throw ParseError(origin + ": 'name' must be a string");
  if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 1)
    throw ParseError(origin + ": 'dim' must be a positive integer");
  const int n = j["dim"].get<int>();

  LieAlgebra alg(n);
  if (!j["brackets"].is_array()) throw ParseError(origin + ": 'brackets' must be an array");
  for (const json& entry : j["brackets"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("coeffs"))
      throw ParseError(origin + ": bracket entries need fields 'i', 'j', 'coeffs'");
    if (!entry["i"].is_number_integer() || !entry["j"].is_number_integer())
      throw ParseError(origin + ": bracket indices must be integers");
    const int bi = entry["i"].get<int>(), bj = entry["j"].get<int>();
    if (bi < 1 || bj < 1 || bi > n || bj > n)
      throw ParseError(origin + ": bracket index out of range in [" + std::to_string(bi) + "," +
                       std::to_string(bj) + "]");
    if (bi >= bj)
      throw ParseError(origin + ": bracket [" + std::to_string(bi) + "," + std::to_string(bj) +
                       "] must have i < j");
    Vector coeffs = Vector::Zero(n);
    if (!entry["coeffs"].is_object())
      throw ParseError(origin + ": bracket coeffs must be an object");
    for (const auto& [key, value] : entry["coeffs"].items()) {
      int k = 0;
      try {
        size_t pos = 0;
        k = std::stoi(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw ParseError(origin + ": coefficient key '" + key + "' is not a basis index");
      }
      if (k < 1 || k > n)
        throw ParseError(origin + ": coefficient index " + std::to_string(k) + " out of range");
      if (!value.is_number())
        throw ParseError(origin + ": coefficient value for key '" + key + "' is not a number");
      coeffs(k - 1) = value.get<double>();
    }
    alg.set_bracket(bi - 1, bj - 1, coeffs);
  }

  const double defect = jacobi_defect(alg);
  if (defect > jacobi_tolerance(alg))
    throw JacobiError(origin + ": structure constants violate the Jacobi identity (defect " +
                          std::to_string(defect) + ")",
                      defect);

  Matrix gram = detail::parse_matrix(j["metric"], n, n, origin + ": metric");
  std::optional<InnerProduct> metric;
  try {
    metric.emplace(gram);
  } catch (const Error& e) {
    throw MetricError(origin + ": metric is not symmetric positive definite (" +
                      std::string(e.what()) + ")");
  }

  AlgebraBundle b{j["name"].get<std::string>(), std::move(alg), std::move(*metric), {}, {}, {}};

  if (j.contains("complex_structure"))
    b.complex_structure =
        detail::parse_matrix(j["complex_structure"], n, n, origin + ": complex_structure");
  if (j.contains("contact")) {
    const json& c = j["contact"];
    for (const char* field : {"phi", "xi", "eta"})
      if (!c.contains(field)) throw ParseError(origin + ": contact needs field '" + field + "'");
    AlmostContactStructure s;
    s.phi = detail::parse_matrix(c["phi"], n, n, origin + ": contact.phi");
    s.xi = detail::parse_vector(c["xi"], n, origin + ": contact.xi");
    s.eta = detail::parse_vector(c["eta"], n, origin + ": contact.eta");
    b.contact = std::move(s);
  }
  if (j.contains("subalgebras")) {
    if (!j["subalgebras"].is_object())
      throw ParseError(origin + ": 'subalgebras' must be an object");
    for (const auto& [name, vecs] : j["subalgebras"].items()) {
      if (!vecs.is_array() || vecs.empty())
        throw ParseError(origin + ": subalgebra '" + name + "' must list basis vectors");
      Matrix basis(n, static_cast<int>(vecs.size()));
      for (int c = 0; c < static_cast<int>(vecs.size()); ++c)
        basis.col(c) = detail::parse_vector(vecs[c], n, origin + ": subalgebra '" + name + "'");
      b.subalgebras.emplace(name, std::move(basis));
    }
  }
  return b;
}

inline AlgebraBundle load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_algebra(j, path);
}

inline void save_algebra(const AlgebraBundle& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open file for writing");
  out << serialize(b);
}

}  // namespace liemat
