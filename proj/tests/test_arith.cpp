#include <doctest.h>

#include "hk/laurent.hpp"
#include "hk/ratfunc.hpp"
#include "hk/rational.hpp"

using hk::Laurent;
using hk::Rational;
using hk::RationalFunction;

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6).str() == "1/2");
  CHECK(Rational(1, -3).str() == "-1/3");
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
  CHECK(Rational(3, 7).inverse() == Rational(7, 3));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("rational overflow promotes and demotes") {
  Rational big(std::int64_t{1} << 62);
  Rational sq = big * big;
  CHECK(sq.str() == "21267647932558653966460912964485513216");
  Rational back = sq / big;
  CHECK(back == big);
  CHECK((sq - sq).is_zero());
  Rational tiny = Rational(1) / sq;
  CHECK((tiny * sq).is_one());
}

TEST_CASE("rational modular residue") {
  const std::uint64_t p = 1000003;
  CHECK(Rational(1, 2).mod_prime(p) * 2 % p == 1);
  CHECK(Rational(-1).mod_prime(p) == p - 1);
}

TEST_CASE("laurent arithmetic") {
  Laurent v = Laurent::v_power(1);
  Laurent q = Laurent::q();
  CHECK(v * v == q);
  Laurent a = q - Laurent(1);
  CHECK(a.str() == "v^2 - 1");
  CHECK((a * a).str() == "v^4 - 2*v^2 + 1");
  CHECK((a - a).is_zero());
  CHECK(Laurent::v_power(-3).str() == "v^-3");
  CHECK(Laurent::monomial(Rational(-1, 2), 1).str() == "-1/2*v");
  CHECK(Laurent::monomial(Rational(3), -1).monomial_inverse() == Laurent::monomial(Rational(1, 3), 1));
  CHECK_THROWS(a.monomial_inverse());
  CHECK(a.evaluate(Rational(1)).is_zero());
  CHECK(a.evaluate(Rational(2)) == Rational(3));
  CHECK(a.low_degree() == 0);
  CHECK(a.high_degree() == 2);
}

TEST_CASE("rational function normal form") {
  Laurent q = Laurent::q();
  RationalFunction f(q - Laurent(1), Laurent::v_power(1) - Laurent(1));
  CHECK(f.is_laurent());
  CHECK(f.str() == "v + 1");
  RationalFunction g(Laurent(1), Laurent::v_power(1) + Laurent(2));
  CHECK(g.str() == "(1)/(v + 2)");
  CHECK((g * g.inverse()).is_one());
  CHECK((g - g).is_zero());
  RationalFunction h(Laurent::v_power(3), Laurent::monomial(Rational(2), 1));
  CHECK(h == RationalFunction(Laurent::monomial(Rational(1, 2), 2)));
  // denominators with a v-power factor move it into the numerator
  RationalFunction k(Laurent(1), Laurent::v_power(2) + Laurent::v_power(1));
  CHECK(k.str() == "(v^-1)/(v + 1)");
}

TEST_CASE("rational function parser") {
  CHECK(RationalFunction::parse("q").str() == "v^2");
  CHECK(RationalFunction::parse("2v - 1").str() == "2*v - 1");
  CHECK(RationalFunction::parse("3*q^-1").str() == "3*v^-2");
  CHECK(RationalFunction::parse("(v^2 - 1)/(v - 1)").str() == "v + 1");
  CHECK(RationalFunction::parse("1/2").str() == "1/2");
  CHECK(RationalFunction::parse("-(v)^(-2)").str() == "-v^-2");
  CHECK(RationalFunction::parse(RationalFunction::parse("(1)/(v + 2)").str()) ==
        RationalFunction::parse("1/(2+v)"));
  CHECK_THROWS(RationalFunction::parse("1/0"));
  CHECK_THROWS(RationalFunction::parse("v +"));
  CHECK_THROWS(RationalFunction::parse("x"));
}
