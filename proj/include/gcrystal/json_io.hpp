#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcrystal/crystal.hpp"
#include "gcrystal/loop_sym.hpp"
#include "gcrystal/whirl.hpp"

namespace gcrystal {

using json = nlohmann::json;

/// Input that does not match the expected JSON schema.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const VarId& v);
VarId var_from_json(const json& j, int n);

/// {"n":2, "m":2, "factors":[["2","3"],["5","7"]]}
json to_json(const ProductPoint& x);
ProductPoint point_from_json(const json& j);

/// {"n":2, "band":2, "diagonals":{"0":[...], "1":[...], ...}}
json to_json(const PeriodicBandedMatrix& y);
PeriodicBandedMatrix matrix_from_json(const json& j);

/// {"lambda":[4,2], "mu":[0,0]}
json to_json(const SkewShape& s);
SkewShape shape_from_json(const json& j);

/// {"word":[1,2,1]}
std::vector<int> word_from_json(const json& j);

/// Shortest round-trip form with 17 significant digits.
std::string format_double(double v);

}  // namespace gcrystal
