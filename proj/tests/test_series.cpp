#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "connasym/count_table.hpp"
#include "connasym/polynomial.hpp"
#include "connasym/rational.hpp"
#include "connasym/series.hpp"

using namespace connasym;

namespace {

using QSeries = TruncatedSeries<Rational>;

Rational random_rational(std::mt19937_64& gen) {
  const long num = static_cast<long>(gen() % 19) - 9;
  const long den = 1 + static_cast<long>(gen() % 9);
  return Rational(Int(num), Int(den));
}

QSeries random_series(std::mt19937_64& gen, unsigned order) {
  return QSeries::from_coeff_fn(order, [&](unsigned) { return random_rational(gen); });
}

// sum_n z^n / n!
QSeries exp_z(unsigned order) {
  return QSeries::from_coeff_fn(order,
                                [](unsigned n) { return Rational(Int(1), factorial(n)); });
}

}  // namespace

TEST_CASE("rational scalar basics") {
  CHECK(Rational(Int(2), Int(4)) == Rational(1, 2));
  CHECK(Rational(Int(-2), Int(-4)) == Rational(1, 2));
  CHECK(Rational(Int(3), Int(-6)).denominator() == 2);  // denominator kept positive
  CHECK(Rational(Int(3), Int(-6)).numerator() == -1);
  CHECK(Rational(7).is_integer());
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(reciprocal(Rational(-2, 7)) == Rational(-7, 2));
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == Rational(1));
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK_THROWS_AS(reciprocal(Rational(0)), DomainError);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);
  CHECK_THROWS_AS(pow(Rational(0), -1), DomainError);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse("0.5"), UsageError);
  CHECK_THROWS_AS(Rational::parse("a/b"), UsageError);
  CHECK_THROWS_AS(Rational::parse(""), UsageError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(to_decimal_string(Rational(251, 256), 12) == "0.980468750000");
  CHECK(to_decimal_string(Rational(1, 3), 12) == "0.333333333333");
  CHECK(to_decimal_string(Rational(2, 3), 12) == "0.666666666667");
  CHECK(to_decimal_string(Rational(1, 8), 2) == "0.12");  // tie, 12 already even
  CHECK(to_decimal_string(Rational(3, 8), 2) == "0.38");  // tie, 37 odd, round up
  CHECK(to_decimal_string(Rational(0), 5) == "0");
  CHECK(to_decimal_string(Rational(1), 3) == "1.00");
  CHECK(to_decimal_string(Rational(-19, 32), 4) == "-0.5938");
  CHECK(to_decimal_string(Rational(12345), 3) == "1.23e+04");
  CHECK(to_decimal_string(Rational(995), 2) == "1.0e+03");  // rounding carries into the exponent
  CHECK(to_decimal_string(Rational(1, 100000), 3) == "1.00e-05");
  CHECK_THROWS_AS(to_decimal_string(Rational(1), 0), UsageError);
}

TEST_CASE("series add and subtract") {
  const QSeries a(1, {Rational(1), Rational(1)});   // 1 + z
  const QSeries b(1, {Rational(1), Rational(-1)});  // 1 - z
  CHECK(a + b == QSeries(1, {Rational(2), Rational(0)}));
  CHECK(a - a == QSeries(1));

  std::mt19937_64 gen(7);
  const QSeries c = random_series(gen, 9);
  CHECK(c + QSeries(9) == c);  // adding the zero series is the identity
}

TEST_CASE("series multiplication truncates the Cauchy product") {
  const QSeries a(2, {Rational(1), Rational(1), Rational(0)});
  const QSeries b(2, {Rational(1), Rational(-1), Rational(0)});
  CHECK(a * b == QSeries(2, {Rational(1), Rational(0), Rational(-1)}));  // 1 - z^2
  CHECK(a * QSeries::one(2) == a);
  CHECK(a * Rational(3) == QSeries(2, {Rational(3), Rational(3), Rational(0)}));
}

TEST_CASE("series operations require matching orders") {
  const QSeries a(3);
  const QSeries b(4);
  CHECK_THROWS_AS(a + b, UsageError);
  CHECK_THROWS_AS(a - b, UsageError);
  CHECK_THROWS_AS(a * b, UsageError);
  CHECK_THROWS_AS(QSeries(2, {Rational(1)}), UsageError);
  CHECK_THROWS_AS(a[4], UsageError);
}

TEST_CASE("series reciprocal") {
  const QSeries geom = recip(QSeries(6, {Rational(1), Rational(-1), Rational(0), Rational(0),
                                         Rational(0), Rational(0), Rational(0)}));
  for (unsigned n = 0; n <= 6; ++n) CHECK(geom[n] == Rational(1));  // 1/(1-z)

  CHECK_THROWS_AS(recip(QSeries(3)), DomainError);  // constant term 0
  CHECK_THROWS_WITH_AS(recip(QSeries(3)), "cannot invert the rational 0", DomainError);
}

TEST_CASE("series log") {
  CHECK(log(QSeries::one(8)) == QSeries(8));
  // log(1/(1-z)) = z + z^2/2 + z^3/3 + ...
  const QSeries geom = QSeries::from_coeff_fn(8, [](unsigned) { return Rational(1); });
  const QSeries l = log(geom);
  CHECK(l[0] == Rational(0));
  for (unsigned n = 1; n <= 8; ++n) CHECK(l[n] == Rational(Int(1), Int(n)));
  CHECK_THROWS_AS(log(QSeries(3)), DomainError);  // constant term must be 1
}

TEST_CASE("series exp") {
  CHECK(exp(QSeries(8)) == QSeries::one(8));
  QSeries z(8);
  z = z + QSeries(8, {Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
                      Rational(0), Rational(0), Rational(0), Rational(0)});
  CHECK(exp(z) == exp_z(8));
  CHECK_THROWS_AS(exp(QSeries::one(3)), DomainError);  // constant term must be 0
}

TEST_CASE("egf_counts") {
  const CountTable sets = egf_counts(exp_z(6), "sets");
  for (unsigned n = 0; n <= 6; ++n) CHECK(sets.at(n) == 1);

  const QSeries bad(2, {Rational(0), Rational(1, 2), Rational(0)});
  CHECK_THROWS_AS(egf_counts(bad, "bad"), ConsistencyError);

  CHECK_THROWS_AS(sets.at(7), UsageError);
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 gen(20240601);
  for (const unsigned order : {0U, 1U, 3U, 7U, 12U}) {
    for (int rep = 0; rep < 8; ++rep) {
      const QSeries a = random_series(gen, order);
      const QSeries b = random_series(gen, order);
      const QSeries c = random_series(gen, order);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * QSeries::one(order) == a);
    }
  }
}

TEST_CASE("reciprocal round trips on random unit series") {
  std::mt19937_64 gen(99);
  const unsigned order = 10;
  for (int rep = 0; rep < 100; ++rep) {
    QSeries a = random_series(gen, order);
    while (a[0].is_zero())
      a = a + QSeries::one(order);  // force a unit constant term
    CHECK(a * recip(a) == QSeries::one(order));
    CHECK(recip(recip(a)) == a);
  }
}

TEST_CASE("exp and log round trips on random admissible series") {
  std::mt19937_64 gen(1234);
  const unsigned order = 10;
  for (int rep = 0; rep < 40; ++rep) {
    // log-admissible: constant term 1
    QSeries b = random_series(gen, order);
    std::vector<Rational> coeffs = b.coefficients();
    coeffs[0] = Rational(1);
    b = QSeries(order, coeffs);
    CHECK(exp(log(b)) == b);

    // exp-admissible: constant term 0
    coeffs[0] = Rational(0);
    const QSeries a(order, coeffs);
    CHECK(log(exp(a)) == a);
  }
}

TEST_CASE("series over polynomial scalars") {
  using PSeries = TruncatedSeries<RhoPoly>;
  const RhoPoly rho = RhoPoly::monomial(Int(1), 1);

  // 1/(1 - rho z) = sum rho^n z^n over Z[rho]
  PSeries a(5);
  a = a + PSeries(5, {RhoPoly(1), -rho, RhoPoly(), RhoPoly(), RhoPoly(), RhoPoly()});
  const PSeries g = recip(a);
  for (unsigned n = 0; n <= 5; ++n) CHECK(g[n] == RhoPoly::monomial(Int(1), n));
  CHECK(a * g == PSeries::one(5));

  // Only the unit polynomials are invertible constant terms.
  PSeries bad(2);
  bad = bad + PSeries(2, {rho - RhoPoly(2), RhoPoly(), RhoPoly()});
  CHECK_THROWS_WITH_AS(recip(bad),
                       "cannot invert polynomial 'rho-2' (only the units 1 and -1 are invertible)",
                       DomainError);
}
