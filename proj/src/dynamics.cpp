#include "preper/dynamics.hpp"

#include <stdexcept>

namespace preper {

MonicPoly::MonicPoly(std::vector<Rational> lower_coeffs) : coeffs_(std::move(lower_coeffs)) {
  if (coeffs_.size() < 2) throw std::invalid_argument("MonicPoly: degree must be >= 2");
}

Rational MonicPoly::evaluate(const Rational& x) const {
  Rational acc(1);  // implicit leading coefficient
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace preper
