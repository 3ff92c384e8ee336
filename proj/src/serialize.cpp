#include "arpl/serialize.hpp"

namespace arpl {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"num/den\" string or an integer");
}

Json polynomial_to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(rational_to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Polynomial(std::move(c));
}

Json piecewise_to_json(const PiecewisePoly& f) {
  Json b = Json::array(), p = Json::array();
  for (const auto& x : f.breakpoints()) b.push_back(rational_to_json(x));
  for (const auto& q : f.pieces()) p.push_back(polynomial_to_json(q));
  return Json{{"breakpoints", b}, {"pieces", p}};
}

PiecewisePoly piecewise_from_json(const Json& j) {
  std::vector<Rational> b;
  std::vector<Polynomial> p;
  for (const auto& x : j.at("breakpoints")) b.push_back(rational_from_json(x));
  for (const auto& q : j.at("pieces")) p.push_back(polynomial_from_json(q));
  return PiecewisePoly(std::move(b), std::move(p));
}

}  // namespace arpl
