#include "gcrystal/json_io.hpp"

#include <cstdio>

namespace gcrystal {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must be an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const VarId& v) { return {{"factor", v.factor}, {"color", v.color}}; }

VarId var_from_json(const json& j, int n) { return VarId::of(require_int(j, "factor"), require_int(j, "color"), n); }

json to_json(const ProductPoint& x) {
  json factors = json::array();
  for (const auto& f : x.factors()) {
    json coords = json::array();
    for (const auto& c : f.coords()) coords.push_back(to_json(c));
    factors.push_back(std::move(coords));
  }
  return {{"n", x.n()}, {"m", x.m()}, {"factors", std::move(factors)}};
}

ProductPoint point_from_json(const json& j) {
  const int n = require_int(j, "n");
  const json& factors = require(j, "factors");
  if (n < 2) throw SchemaError("point: n must be > 1");
  if (!factors.is_array() || factors.empty()) throw SchemaError("point: factors must be a nonempty array");
  if (j.contains("m") && require_int(j, "m") != static_cast<int>(factors.size())) {
    throw SchemaError("point: m does not match the number of factors");
  }
  std::vector<FactorPoint> out;
  for (const auto& f : factors) {
    if (!f.is_array() || static_cast<int>(f.size()) != n) throw SchemaError("point: each factor needs n coordinates");
    std::vector<Rational> coords;
    for (const auto& c : f) coords.push_back(rational_from_json(c));
    try {
      out.emplace_back(std::move(coords));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("point: ") + e.what());
    }
  }
  return ProductPoint(std::move(out));
}

json to_json(const PeriodicBandedMatrix& y) {
  json diags = json::object();
  for (int d = 0; d <= y.band(); ++d) {
    json row = json::array();
    for (const auto& v : y.diagonal(d)) row.push_back(to_json(v));
    diags[std::to_string(d)] = std::move(row);
  }
  return {{"n", y.n()}, {"band", y.band()}, {"diagonals", std::move(diags)}};
}

PeriodicBandedMatrix matrix_from_json(const json& j) {
  const int n = require_int(j, "n");
  const int band = require_int(j, "band");
  const json& diags = require(j, "diagonals");
  if (n < 1 || band < 0 || !diags.is_object()) throw SchemaError("matrix: bad n, band or diagonals");
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(band + 1));
  for (int d = 0; d <= band; ++d) {
    const std::string key = std::to_string(d);
    if (!diags.contains(key)) {
      if (d == 0) {
        out[0].assign(static_cast<std::size_t>(n), Rational(1));
        continue;
      }
      throw SchemaError("matrix: missing diagonal " + key);
    }
    const json& row = diags.at(key);
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw SchemaError("matrix: diagonal " + key + " needs n entries");
    for (const auto& v : row) out[static_cast<std::size_t>(d)].push_back(rational_from_json(v));
  }
  for (const auto& [key, value] : diags.items()) {
    int d = -1;
    try {
      d = std::stoi(key);
    } catch (const std::exception&) {
      throw SchemaError("matrix: diagonal key '" + key + "' is not an integer");
    }
    if (d < 0 || d > band) throw SchemaError("matrix: diagonal " + key + " outside 0..band");
  }
  try {
    return PeriodicBandedMatrix(n, std::move(out));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("matrix: ") + e.what());
  }
}

json to_json(const SkewShape& s) { return {{"lambda", s.lambda()}, {"mu", s.mu()}}; }

SkewShape shape_from_json(const json& j) {
  std::vector<int> lambda = int_list(require(j, "lambda"), "lambda");
  std::vector<int> mu = j.contains("mu") ? int_list(j.at("mu"), "mu") : std::vector<int>{};
  try {
    return SkewShape(std::move(lambda), std::move(mu));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("shape: ") + e.what());
  }
}

std::vector<int> word_from_json(const json& j) { return int_list(require(j, "word"), "word"); }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace gcrystal
