#include "doctest.h"

#include <random>
#include <vector>

#include "grasscoh/polynomial.hpp"

using grasscoh::binomial;
using grasscoh::MultiIndex;
using grasscoh::Polynomial;
using grasscoh::Rational;

namespace {

MultiIndex mi(std::vector<uint32_t> e) { return MultiIndex(std::move(e)); }

Polynomial random_poly(std::mt19937& rng, size_t nvars, uint32_t maxdeg, size_t terms) {
    std::uniform_int_distribution<uint32_t> ed(0, maxdeg);
    std::uniform_int_distribution<long> cd(-5, 5);
    Polynomial p(nvars);
    for (size_t t = 0; t < terms; ++t) {
        std::vector<uint32_t> e(nvars);
        uint32_t budget = maxdeg;
        for (auto& x : e) {
            x = ed(rng) % (budget + 1);
            budget -= x;
        }
        p.add_term(mi(e), Rational(cd(rng)));
    }
    return p;
}

std::vector<Rational> random_point(std::mt19937& rng, size_t n) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> v;
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
    return v;
}

}  // namespace

TEST_CASE("monomial order: degree first, then reverse lex within a degree") {
    // Within degree 4 in two variables, x1-dominant monomials are larger.
    CHECK(MultiIndex::cmp(mi({4, 0}), mi({3, 1})) > 0);
    CHECK(MultiIndex::cmp(mi({3, 1}), mi({2, 2})) > 0);
    CHECK(MultiIndex::cmp(mi({1, 3}), mi({0, 4})) > 0);
    // Degree dominates.
    CHECK(MultiIndex::cmp(mi({0, 2}), mi({1, 0})) > 0);
    // The classical three-variable comparison: x2^2 beats x1*x3.
    CHECK(MultiIndex::cmp(mi({0, 2, 0}), mi({1, 0, 1})) > 0);
    // Trailing zeros are immaterial.
    CHECK(mi({2, 1, 0}) == mi({2, 1}));
    CHECK(MultiIndex::cmp(mi({2, 1, 0}), mi({2, 1})) == 0);
}

TEST_CASE("listing order matches the basis convention") {
    auto ms = grasscoh::monomials_up_to_degree(2, 3);
    std::vector<std::string> got;
    for (const auto& m : ms) got.push_back(m.str("r"));
    std::vector<std::string> want = {"1",    "r1",      "r2",      "r1^2",   "r1*r2",
                                     "r2^2", "r1^3", "r1^2*r2", "r1*r2^2", "r2^3"};
    CHECK(got == want);
}

TEST_CASE("polynomial product identity") {
    // (x1+x2)(x1-x2) = x1^2 - x2^2
    Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
    Polynomial prod = (x1 + x2) * (x1 - x2);
    CHECK(prod == x1 * x1 - x2 * x2);
    CHECK(prod.str() == "x1^2 - x2^2");
}

TEST_CASE("polynomial evaluate and substitute") {
    Polynomial x1 = Polynomial::variable(2, 0), x2 = Polynomial::variable(2, 1);
    Polynomial p = x1 * x2;
    std::vector<Rational> pt = {Rational(2), Rational(3)};
    CHECK(p.evaluate(pt) == Rational(6));

    // substitute x2 := x1^2 into x2 + 1
    Polynomial q = x2 + Polynomial::constant(2, Rational(1));
    Polynomial r = q.substitute(1, x1 * x1);
    CHECK(r.str() == "x1^2 + 1");
}

TEST_CASE("canonical text form round-trips") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng, 3, 4, 6);
        Polynomial q = Polynomial::parse(p.str(), 3);
        CHECK(p == q);
    }
    CHECK(Polynomial::parse("3*r1^2*r2 - r2^2", 2, "r").str("r") == "3*r1^2*r2 - r2^2");
    CHECK(Polynomial::parse("0", 2).is_zero());
    CHECK(Polynomial::parse("-r2^2", 2, "r").coefficient(mi({0, 2})) == Rational(-1));
    CHECK(Polynomial::parse("1/2 + x1", 1).coefficient(MultiIndex()) == Rational(1, 2));
    CHECK_THROWS_AS(Polynomial::parse("x3", 2), grasscoh::parse_error);
    CHECK_THROWS_AS(Polynomial::parse("x1 + + x2", 2), grasscoh::parse_error);
}

TEST_CASE("evaluation is multiplicative") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(rng, 3, 3, 5);
        Polynomial g = random_poly(rng, 3, 3, 5);
        auto pt = random_point(rng, 3);
        CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    }
}

TEST_CASE("elementary symmetric polynomials") {
    // e_k in n variables has C(n,k) terms, all with coefficient 1.
    for (size_t n = 1; n <= 6; ++n) {
        for (size_t k = 0; k <= n; ++k) {
            Polynomial e = grasscoh::elementary_symmetric(k, n);
            CHECK(Rational(static_cast<long>(e.term_count())) == binomial(n, k));
            for (const auto& [m, c] : e.terms()) {
                CHECK(c == Rational(1));
                CHECK(m.total_degree() == k);
            }
        }
    }
    CHECK_THROWS_AS(grasscoh::elementary_symmetric(3, 2), grasscoh::range_error);
}

TEST_CASE("elementary symmetric values") {
    std::vector<Rational> pt = {Rational(3, 2), Rational(1, 2)};
    CHECK(grasscoh::elementary_symmetric(1, pt) == Rational(2));
    CHECK(grasscoh::elementary_symmetric(0, pt) == Rational(1));
    std::vector<Rational> pt2 = {Rational(9, 4), Rational(1, 4)};
    CHECK(grasscoh::elementary_symmetric(2, pt2) == Rational(9, 16));
    CHECK(grasscoh::elementary_symmetric_squares(1, pt) == Rational(5, 2));
    std::vector<Rational> pt3 = {Rational(1), Rational(0)};
    CHECK(grasscoh::elementary_symmetric_squares(2, pt3) == Rational(0));
    std::vector<Rational> pt4 = {Rational(1)};
    CHECK(grasscoh::elementary_symmetric_squares(1, pt4) == Rational(1));

    // Value agrees with evaluating the expanded polynomial.
    std::mt19937 rng(23);
    for (int i = 0; i < 20; ++i) {
        auto pt5 = random_point(rng, 5);
        for (size_t k = 0; k <= 5; ++k) {
            CHECK(grasscoh::elementary_symmetric(k, 5).evaluate(pt5) ==
                  grasscoh::elementary_symmetric(k, pt5));
        }
    }
}
