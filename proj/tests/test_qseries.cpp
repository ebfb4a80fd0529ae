#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nhmf/errors.hpp"
#include "nhmf/qseries.hpp"
#include "nhmf/rational.hpp"

#include <random>
#include <stdexcept>
#include <vector>

using nhmf::QSeries;
using nhmf::Rational;
using nhmf::rational;

namespace {

QSeries random_series(std::mt19937& rng, long truncation) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(truncation) + 1);
    for (auto& x : c)
        x = rational(num(rng), den(rng));
    return {truncation, std::move(c)};
}

} // namespace

TEST_CASE("construction and accessors") {
    QSeries z(4);
    CHECK(z.truncation() == 4);
    CHECK(z.is_zero());
    CHECK(z.coeff(0) == 0);
    CHECK(z.coeff(4) == 0);
    CHECK_THROWS_AS(z.coeff(5), std::out_of_range);
    CHECK_THROWS_AS(z.coeff(-1), std::out_of_range);
    CHECK_THROWS_AS(QSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(QSeries(2, {Rational(1)}), std::invalid_argument);

    QSeries c = QSeries::constant(rational(3, 2), 3);
    CHECK(c.coeff(0) == rational(3, 2));
    CHECK(c.coeff(1) == 0);
    CHECK_FALSE(c.is_zero());
}

TEST_CASE("truncated restricts and refuses to extend") {
    QSeries s(3, {Rational(1), Rational(2), Rational(3), Rational(4)});
    QSeries t = s.truncated(1);
    CHECK(t.truncation() == 1);
    CHECK(t.coeff(1) == 2);
    CHECK_THROWS_AS(s.truncated(4), std::invalid_argument);
    CHECK_THROWS_AS(s.truncated(-1), std::invalid_argument);
}

TEST_CASE("arithmetic truncates to the shorter operand") {
    QSeries a(5, {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
    QSeries b(2, {Rational(0), Rational(1), Rational(0)});
    CHECK((a + b).truncation() == 2);
    CHECK((a * b).truncation() == 2);
    CHECK((a - b).coeff(1) == 0);
}

TEST_CASE("multiplication is Cauchy convolution") {
    // (1 + q)^2 = 1 + 2q + q^2
    QSeries s(3, {Rational(1), Rational(1), Rational(0), Rational(0)});
    QSeries sq = s * s;
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(1) == 2);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(3) == 0);

    // geometric series identity: (1 - q) * (1 + q + q^2 + ...) = 1
    long n = 12;
    std::vector<Rational> ones(static_cast<std::size_t>(n) + 1, Rational(1));
    QSeries geo(n, std::move(ones));
    QSeries one_minus_q(n);
    {
        std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
        c[0] = 1;
        c[1] = -1;
        one_minus_q = QSeries(n, std::move(c));
    }
    CHECK(one_minus_q * geo == QSeries::constant(1, n));
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(20240913);
    for (int trial = 0; trial < 25; ++trial) {
        QSeries a = random_series(rng, 8);
        QSeries b = random_series(rng, 8);
        QSeries c = random_series(rng, 8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QSeries(8));
        CHECK(Rational(1) * a == a);
        CHECK(-(-a) == a);
    }
}

TEST_CASE("derivative is q d/dq and satisfies Leibniz") {
    QSeries s(3, {Rational(7), rational(1, 2), Rational(-3), Rational(5)});
    QSeries d = s.derivative();
    CHECK(d.coeff(0) == 0);
    CHECK(d.coeff(1) == rational(1, 2));
    CHECK(d.coeff(2) == -6);
    CHECK(d.coeff(3) == 15);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        QSeries a = random_series(rng, 10);
        QSeries b = random_series(rng, 10);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
}

TEST_CASE("divisor_sigma agrees with direct enumeration") {
    CHECK(nhmf::divisor_sigma(1, 0) == 1);
    CHECK(nhmf::divisor_sigma(6, 1) == 12);
    CHECK(nhmf::divisor_sigma(4, 3) == 73);
    CHECK(nhmf::divisor_sigma(12, 0) == 6);
    CHECK_THROWS_AS(nhmf::divisor_sigma(0, 1), std::invalid_argument);

    for (long n = 1; n <= 60; ++n)
        for (long r = 0; r <= 4; ++r) {
            nhmf::Integer direct(0);
            for (long d = 1; d <= n; ++d)
                if (n % d == 0) {
                    nhmf::Integer p(1);
                    for (long i = 0; i < r; ++i)
                        p *= d;
                    direct += p;
                }
            CHECK(nhmf::divisor_sigma(n, r) == direct);
        }
}

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(nhmf::rational_to_string(rational(4, 2)) == "2");
    CHECK(nhmf::rational_to_string(rational(-3, 6)) == "-1/2");
    CHECK(nhmf::parse_rational("22/7") == rational(22, 7));
    CHECK(nhmf::parse_rational("-5") == Rational(-5));
    CHECK(nhmf::parse_rational("6/4") == rational(3, 2));
    CHECK_THROWS_AS(nhmf::parse_rational("1/0"), nhmf::ParseError);
    CHECK_THROWS_AS(nhmf::parse_rational("1.5"), nhmf::ParseError);
    CHECK_THROWS_AS(nhmf::parse_rational(""), nhmf::ParseError);
    CHECK_THROWS_AS(nhmf::parse_rational("--1"), nhmf::ParseError);
    CHECK_THROWS_AS(nhmf::parse_rational("1/"), nhmf::ParseError);
    CHECK_THROWS_AS(nhmf::parse_rational("1/-2"), nhmf::ParseError);
    CHECK_THROWS_AS(nhmf::parse_rational(" 1"), nhmf::ParseError);
    CHECK_THROWS_AS(nhmf::parse_rational("+1"), nhmf::ParseError);

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 997);
    for (int trial = 0; trial < 200; ++trial) {
        Rational r = rational(num(rng), den(rng));
        CHECK(nhmf::parse_rational(nhmf::rational_to_string(r)) == r);
    }
}
