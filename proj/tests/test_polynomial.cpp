#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "connasym/polynomial.hpp"

using namespace connasym;

TEST_CASE("canonical form trims trailing zeros") {
  const RhoPoly p(std::vector<Int>{Int(1), Int(0), Int(0)});
  CHECK(p.degree() == 0);
  CHECK(p == RhoPoly(1));
  CHECK(RhoPoly(std::vector<Int>{}).is_zero());
  CHECK(RhoPoly(0).is_zero());
  CHECK(RhoPoly().degree() == -1);
  CHECK((RhoPoly::monomial(Int(1), 3) - RhoPoly::monomial(Int(1), 3)).is_zero());
}

TEST_CASE("arithmetic") {
  const RhoPoly rho = RhoPoly::monomial(Int(1), 1);
  const RhoPoly p = rho * rho - RhoPoly(2) * rho + RhoPoly(1);  // (rho-1)^2
  const RhoPoly q = rho - RhoPoly(1);
  CHECK(p == q * q);
  CHECK(p.degree() == 2);
  CHECK(p.leading_coeff() == 1);
  CHECK(p.coeff(1) == -2);
  CHECK(p.coeff(5) == 0);
  CHECK(-q == RhoPoly(1) - rho);
}

TEST_CASE("evaluation") {
  const RhoPoly rho = RhoPoly::monomial(Int(1), 1);
  const RhoPoly p = rho * rho * rho - RhoPoly(6) * rho + RhoPoly(6);
  CHECK(p(Rational(2)) == Rational(2));           // 8 - 12 + 6
  CHECK(p(Rational(3, 2)) == Rational(3, 8));     // 27/8 - 9 + 6
  CHECK(RhoPoly()(Rational(5)) == Rational(0));
}

TEST_CASE("string rendering") {
  const RhoPoly rho = RhoPoly::monomial(Int(1), 1);
  const RhoPoly p = RhoPoly::monomial(Int(1), 6) - RhoPoly(8) * rho * rho * rho -
                    RhoPoly(6) * rho * rho + RhoPoly(36) * rho - RhoPoly(24);
  CHECK(to_string(p) == "rho^6-8*rho^3-6*rho^2+36*rho-24");
  CHECK(to_string(p, PolyStyle::kHuman) == "ρ^6-8ρ^3-6ρ^2+36ρ-24");
  CHECK(to_string(RhoPoly()) == "0");
  CHECK(to_string(RhoPoly(1)) == "1");
  CHECK(to_string(rho - RhoPoly(2)) == "rho-2");
  CHECK(to_string(-rho) == "-rho");
}

TEST_CASE("integer conversion") {
  const RhoPolyQ ok(std::vector<Rational>{Rational(2), Rational(-6)});
  CHECK(to_integer_polynomial(ok) == RhoPoly(std::vector<Int>{Int(2), Int(-6)}));
  const RhoPolyQ frac(std::vector<Rational>{Rational(1, 2)});
  CHECK_THROWS_AS(to_integer_polynomial(frac), ConsistencyError);
}

TEST_CASE("reciprocal accepts only units") {
  CHECK(reciprocal(RhoPoly(1)) == RhoPoly(1));
  CHECK(reciprocal(RhoPoly(-1)) == RhoPoly(-1));
  CHECK_THROWS_AS(reciprocal(RhoPoly(2)), DomainError);
  CHECK_THROWS_AS(reciprocal(RhoPoly::monomial(Int(1), 1)), DomainError);
}
