#include "cubicmaps/reference.hpp"

namespace cubicmaps {

namespace {

// c * sum_i terms[i].first * y^terms[i].second
DensePolynomial scaled(const Rational& c, std::initializer_list<std::pair<long, long>> terms) {
  DensePolynomial p;
  for (auto [coeff, power] : terms) {
    p += DensePolynomial::monomial(c * coeff, static_cast<std::size_t>(power));
  }
  return p;
}

}  // namespace

const std::vector<DensePolynomial>& reference_j_polynomials() {
  static const std::vector<DensePolynomial> polys{
      DensePolynomial{},
      // y(20y^2 + 5)/6
      scaled(Rational(1, 6), {{20, 3}, {5, 1}}),
      // 4y^2(8y^2 + 7)/9
      scaled(Rational(4, 9), {{8, 4}, {7, 2}}),
      // 11y(336y^4 + 664y^2 + 105)/1296
      scaled(Rational(11, 1296), {{336, 5}, {664, 3}, {105, 1}}),
      // y^2(448/243 y^4 + 1631/243 y^2 + 1183/324)
      scaled(Rational(1, 243), {{448, 6}, {1631, 4}}) + scaled(Rational(1, 324), {{1183, 2}}),
      // 17y(27456y^6 + 163248y^4 + 198396y^2 + 25025)/466560
      scaled(Rational(17, 466560), {{27456, 7}, {163248, 5}, {198396, 3}, {25025, 1}}),
      // y^2(3072y^6 + 27532y^4 + 61185y^2 + 26261)/6561
      scaled(Rational(1, 6561), {{3072, 8}, {27532, 6}, {61185, 4}, {26261, 2}}),
  };
  return polys;
}

}  // namespace cubicmaps
