#ifndef HYPERCIRCLE_IO_HPP
#define HYPERCIRCLE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hypercircle/geometry.hpp"
#include "hypercircle/hypercircle.hpp"
#include "hypercircle/weil.hpp"

namespace hc::io {

using json = nlohmann::ordered_json;

constexpr int kSchema = 1;

// All readers throw SchemaError on malformed input. Rationals are written as
// "p/q" strings; readers also accept "p" and JSON integers.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const QPoly& p);
QPoly qpoly_from_json(const json& j);

json field_to_json(const FieldPtr& f);
/// Certifies the minimal polynomial (MathError when reducible, Inconclusive when undecided).
FieldPtr field_from_json(const json& j);

json to_json(const NFElement& x, const FieldPtr& f);
NFElement element_from_json(const json& j, const FieldPtr& f);

json to_json(const LPoly& p, const FieldPtr& f);
LPoly lpoly_from_json(const json& j, const FieldPtr& f);

json unit_to_json(const MoebiusUnit& u, const FieldPtr& f);
MoebiusUnit unit_from_json(const json& j, const FieldPtr& f);

json to_json(const Parametrization& p);
Parametrization parametrization_from_json(const json& j, const FieldPtr& f);

json to_json(const QRatFunc& r, const std::string& var = "t");
json to_json(const LRatFunc& r, const FieldPtr& f);
LRatFunc lratfunc_from_json(const json& j, const FieldPtr& f);
LCurve lcurve_from_json(const json& j, const FieldPtr& f);

json to_json(const QMulti& p, const std::vector<std::string>& names);
QMulti qmulti_from_json(const json& j);

json to_json(const Matrix<Rational>& m);
json to_json(const TransformWitness& w);
json to_json(const WeilSystem& w);

json points_to_json(const std::vector<std::vector<Rational>>& pts);
std::vector<std::vector<Rational>> points_from_json(const json& j);

/// "t^3+2*t-2"
std::string render(const QPoly& p, const std::string& var = "t");

const json& require(const json& j, const std::string& key);

}  // namespace hc::io

#endif  // HYPERCIRCLE_IO_HPP
