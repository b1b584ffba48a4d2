#include "doctest.h"

#include <random>

#include "grasscoh/hpq.hpp"

using namespace grasscoh;

namespace {

MultiIndex mi(std::vector<uint32_t> e) { return MultiIndex(std::move(e)); }

std::vector<Rational> zeros(int n) { return std::vector<Rational>(n, Rational(0)); }

RingDescriptorPtr graded23() {
    static RingDescriptorPtr d = RingDescriptor::make(2, 3, zeros(5), 2);
    return d;
}

RingElement rnd_element(std::mt19937& rng, const RingDescriptorPtr& d, bool with_e = false) {
    std::uniform_int_distribution<long> cd(-4, 4);
    RingCoords a, b;
    for (const auto& m : d->basis) {
        long ca = cd(rng);
        if (ca) a.emplace(m, Rational(ca));
        if (with_e && d->has_e) {
            long cb = cd(rng);
            if (cb) b.emplace(m, Rational(cb));
        }
    }
    return RingElement(d, std::move(a), std::move(b));
}

}  // namespace

TEST_CASE("eliminate_s produces the expected low-degree data") {
    SUBCASE("s_1 = c_1 - r_1 for arbitrary c") {
        std::vector<Rational> c = {Rational(7), Rational(-2), Rational(1, 3)};
        auto out = eliminate_s(1, 2, c);
        Polynomial expect = Polynomial::constant(1, Rational(7)) - Polynomial::variable(1, 0);
        CHECK(out.s_polys[0] == expect);
    }
    SUBCASE("c = 0: s_2 = r_1^2 - r_2") {
        auto out = eliminate_s(2, 2, zeros(4));
        CHECK(out.s_polys[1].str("r") == "r1^2 - r2");
    }
    SUBCASE("c = 0, p = q = 1: residual is r_1^2") {
        auto out = eliminate_s(1, 1, zeros(2));
        REQUIRE(out.residuals.size() == 1);
        CHECK(out.residuals[0].str("r") == "r1^2");
    }
}

TEST_CASE("rewrite table reproduces the worked example") {
    auto d = graded23();
    REQUIRE(d->rewrite.size() == 5);
    auto entry = [&](std::vector<uint32_t> e) {
        RingCoords coords = d->rewrite.at(mi(std::move(e)));
        size_t w = 0;
        for (auto& [m, c] : coords) w = std::max(w, m.width());
        Polynomial poly(w);
        for (auto& [m, c] : coords) poly.add_term(m, c);
        return poly.str("r");
    };
    CHECK(entry({4, 0}) == "3*r1^2*r2 - r2^2");
    CHECK(entry({3, 1}) == "2*r1*r2^2");
    CHECK(entry({2, 2}) == "r2^3");
    CHECK(entry({1, 3}) == "0");
    CHECK(entry({0, 4}) == "0");
}

TEST_CASE("normal form on the worked example") {
    auto d = graded23();
    Polynomial r1_5 = Polynomial::monomial(2, mi({5, 0}), Rational(1));
    CHECK(normal_form(d, r1_5).str() == "5*r1*r2^2");
    // any basis monomial is its own normal form
    for (const auto& m : d->basis) {
        RingElement x = RingElement::monomial(d, m);
        CHECK(x.coefficient(m) == Rational(1));
        CHECK(x.part().size() == 1);
    }
    Polynomial r2_4 = Polynomial::monomial(2, mi({0, 4}), Rational(1));
    CHECK(normal_form(d, r2_4).is_zero());
}

TEST_CASE("multiplication matches the worked-example table") {
    auto d = graded23();
    auto mono = [&](std::vector<uint32_t> e) { return RingElement::monomial(d, mi(std::move(e))); };
    CHECK((mono({3, 0}) * mono({3, 0})).str() == "5*r2^3");
    CHECK((mono({0, 1}) * mono({3, 0})).str() == "2*r1*r2^2");
    CHECK((mono({2, 0}) * mono({2, 0})).str() == "3*r1^2*r2 - r2^2");
    CHECK((mono({2, 0}) * mono({1, 1})).str() == "2*r1*r2^2");
    CHECK((mono({1, 1}) * mono({1, 1})).str() == "r2^3");
    CHECK((mono({0, 2}) * mono({0, 2})).is_zero());
    RingElement one = RingElement::one(d);
    CHECK(one * mono({2, 1}) == mono({2, 1}));
}

TEST_CASE("basis counts and labels") {
    auto d = graded23();
    REQUIRE(d->basis.size() == 10);
    auto labels = d->basis_labels();
    std::vector<std::string> want = {"1",    "r1",   "r2",      "r1^2",    "r1*r2",
                                     "r2^2", "r1^3", "r1^2*r2", "r1*r2^2", "r2^3"};
    CHECK(labels == want);

    auto d11 = RingDescriptor::make(1, 1, zeros(2), 2);
    CHECK(d11->basis.size() == 2);
    auto d11e = RingDescriptor::make(1, 1, zeros(2), 4, true, Rational(0));
    CHECK(d11e->dim() == 4);
    CHECK(d11e->basis_labels() == std::vector<std::string>{"1", "r1", "e", "r1*e"});
    CHECK(d11e->e_degree == 5);
}

TEST_CASE("descriptor validation") {
    CHECK_THROWS_AS(RingDescriptor::make(2, 1, zeros(3), 2), range_error);
    CHECK_THROWS_AS(RingDescriptor::make(0, 1, zeros(1), 2), range_error);
    CHECK_THROWS_AS(RingDescriptor::make(1, 1, zeros(3), 2), shape_error);
    CHECK_THROWS_AS(RingDescriptor::make(1, 1, zeros(2), 3), range_error);
    CHECK_THROWS_AS(RingDescriptor::make(1, 1, zeros(2), 2, true, Rational(2)), range_error);
}

TEST_CASE("deformed p=q=1 has r1^2 = 1/4") {
    std::vector<Rational> c = {Rational(0), Rational(-1, 4)};
    auto d = RingDescriptor::make(1, 1, c, 2);
    CHECK_FALSE(d->graded);
    Polynomial r1sq = Polynomial::monomial(1, mi({2}), Rational(1));
    RingElement nf = normal_form(d, r1sq);
    CHECK(nf.part().size() == 1);
    CHECK(nf.coefficient(MultiIndex()) == Rational(1, 4));
}

TEST_CASE("cramer oracle agrees with the elimination table") {
    for (int p = 1; p <= 3; ++p) {
        for (int q = p; q <= 3; ++q) {
            // graded
            CHECK(cramer_rewrite_table(p, q, zeros(p + q)) ==
                  build_rewrite_table(p, q, zeros(p + q)));
            // deformed at t(rho) for the quaternionic case
            auto c = deformation_parameters(DeformationCase::QuaternionGrassmannian, p, q);
            CHECK(cramer_rewrite_table(p, q, c) == build_rewrite_table(p, q, c));
        }
    }
}

TEST_CASE("dimension and table totality for larger sizes") {
    for (int p = 1; p <= 4; ++p)
        for (int q = p; q <= 4; ++q) {
            auto d = RingDescriptor::make(p, q, zeros(p + q), 2);
            CHECK(Rational(static_cast<long>(d->basis.size())) == binomial(p + q, p));
        }
}

TEST_CASE("multiplication is commutative and associative (random, graded and deformed)") {
    std::mt19937 rng(4242);
    std::vector<RingDescriptorPtr> descs = {
        graded23(),
        RingDescriptor::make(3, 3, zeros(6), 2),
        RingDescriptor::make(4, 4, zeros(8), 2),
        RingDescriptor::make(2, 2,
                             deformation_parameters(DeformationCase::QuaternionGrassmannian, 2, 2),
                             4),
        RingDescriptor::make(
            3, 4, deformation_parameters(DeformationCase::RealGrassmannianEvenOdd, 3, 4), 4),
        RingDescriptor::make(1, 2, zeros(3), 4, true, Rational(0)),
        RingDescriptor::make(
            1, 2, deformation_parameters(DeformationCase::RealGrassmannianOddOdd, 1, 2), 4, true,
            Rational(1)),
    };
    for (const auto& d : descs) {
        for (int t = 0; t < 6; ++t) {
            RingElement a = rnd_element(rng, d, d->has_e);
            RingElement b = rnd_element(rng, d, d->has_e);
            RingElement c = rnd_element(rng, d, d->has_e);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("grading respected in the graded case; filtration in the deformed case") {
    auto d = graded23();
    for (const auto& m1 : d->basis)
        for (const auto& m2 : d->basis) {
            uint64_t target = m1.weighted_degree() + m2.weighted_degree();
            RingElement prod = RingElement::monomial(d, m1) * RingElement::monomial(d, m2);
            for (const auto& [m, c] : prod.part()) CHECK(m.weighted_degree() == target);
        }
    auto c = deformation_parameters(DeformationCase::QuaternionGrassmannian, 2, 3);
    auto dc = RingDescriptor::make(2, 3, c, 4);
    for (const auto& m1 : dc->basis)
        for (const auto& m2 : dc->basis) {
            uint64_t target = m1.weighted_degree() + m2.weighted_degree();
            RingElement prod = RingElement::monomial(dc, m1) * RingElement::monomial(dc, m2);
            for (const auto& [m, c2] : prod.part()) CHECK(m.weighted_degree() <= target);
        }
}

TEST_CASE("normal form is confluent under random divisor strategies") {
    std::mt19937 rng(99);
    auto d23 = graded23();
    auto c22 = deformation_parameters(DeformationCase::RealGrassmannianEvenEven, 2, 2);
    auto d22 = RingDescriptor::make(2, 2, c22, 4);
    std::uniform_int_distribution<long> cd(-3, 3);
    for (const auto& d : {d23, d22}) {
        const uint32_t qq = static_cast<uint32_t>(d->q);
        for (int t = 0; t < 40; ++t) {
            Polynomial f(d->p);
            for (int s = 0; s < 5; ++s) {
                std::vector<uint32_t> e(d->p);
                uint32_t budget = 2 * qq + 1;
                for (auto& x : e) {
                    x = static_cast<uint32_t>(rng() % (budget + 1));
                    budget -= x;
                }
                f.add_term(mi(e), Rational(cd(rng)));
            }
            RingElement base = normal_form(d, f);
            uint64_t seed = rng();
            DivisorChooser random_chooser = [seed](const MultiIndex& m, uint32_t deg) {
                std::mt19937 local(static_cast<uint32_t>(seed ^ m.total_degree()));
                std::vector<uint32_t> take(m.width(), 0);
                uint32_t rest = deg;
                while (rest > 0) {
                    size_t i = local() % m.width();
                    if (take[i] < m.exponent(i)) {
                        ++take[i];
                        --rest;
                    }
                }
                return MultiIndex(std::move(take));
            };
            CHECK(normal_form(d, f, &random_chooser) == base);
        }
    }
}

TEST_CASE("idempotents: p=q=1 complex case") {
    auto c = deformation_parameters(DeformationCase::ComplexGrassmannian, 1, 1);
    REQUIRE(c == std::vector<Rational>{Rational(0), Rational(-1, 4)});
    auto d = RingDescriptor::make(1, 1, c, 2);
    auto prs = idempotents(d, DeformationCase::ComplexGrassmannian);
    REQUIRE(prs.size() == 2);
    // pr1 = 1/2 + r1, pr2 = 1/2 - r1
    CHECK(prs[0].coefficient(MultiIndex()) == Rational(1, 2));
    CHECK(prs[0].coefficient(mi({1})) == Rational(1));
    CHECK(prs[1].coefficient(mi({1})) == Rational(-1));
    CHECK(prs[0] * prs[0] == prs[0]);
    CHECK((prs[0] * prs[1]).is_zero());
    CHECK(prs[0] + prs[1] == RingElement::one(d));
}

TEST_CASE("idempotent system for shuffle cases up to rank 5") {
    struct Case {
        DeformationCase dc;
        int weight;
    };
    for (auto [dc, w] : {Case{DeformationCase::QuaternionGrassmannian, 4},
                         Case{DeformationCase::RealGrassmannianEvenEven, 4},
                         Case{DeformationCase::RealGrassmannianEvenOdd, 4},
                         Case{DeformationCase::ComplexGrassmannian, 2}}) {
        for (int p = 1; p <= 2; ++p)
            for (int q = p; q <= 3; ++q) {
                auto c = deformation_parameters(dc, p, q);
                auto d = RingDescriptor::make(p, q, c, w);
                auto prs = idempotents(d, dc);
                CHECK(Rational(static_cast<long>(prs.size())) == binomial(p + q, p));
                RingElement sum = RingElement::zero(d);
                for (const auto& pr : prs) sum = sum + pr;
                CHECK(sum == RingElement::one(d));
                for (size_t i = 0; i < prs.size(); ++i)
                    for (size_t j = i; j < prs.size(); ++j) {
                        RingElement prod = prs[i] * prs[j];
                        if (i == j)
                            CHECK(prod == prs[i]);
                        else
                            CHECK(prod.is_zero());
                    }
            }
    }
}

TEST_CASE("evaluation model intertwines multiplication") {
    std::mt19937 rng(31415);
    auto dc = DeformationCase::QuaternionGrassmannian;
    auto d = RingDescriptor::make(2, 2, deformation_parameters(dc, 2, 2), 4);
    for (int t = 0; t < 20; ++t) {
        RingElement a = rnd_element(rng, d);
        RingElement b = rnd_element(rng, d);
        auto va = evaluate_at_shuffles(a, dc);
        auto vb = evaluate_at_shuffles(b, dc);
        auto vab = evaluate_at_shuffles(a * b, dc);
        for (size_t i = 0; i < va.size(); ++i) CHECK(vab[i] == va[i] * vb[i]);
    }
}

TEST_CASE("idempotents of the even factor in the almost-equal-rank case") {
    auto c = deformation_parameters(DeformationCase::RealGrassmannianOddOdd, 1, 2);
    auto d = RingDescriptor::make(1, 2, c, 4, true, Rational(1));
    auto prs = idempotents(d, DeformationCase::RealGrassmannianOddOdd);
    REQUIRE(prs.size() == 3);
    RingElement sum = RingElement::zero(d);
    for (const auto& pr : prs) {
        CHECK(pr.e_part().empty());
        CHECK(pr * pr == pr);
        sum = sum + pr;
    }
    CHECK(sum == RingElement::one(d));
    // e acts freely on the even factor
    RingElement e = RingElement::e(d);
    CHECK((prs[0] * e) * (prs[0] * e) == prs[0]);
}

TEST_CASE("idempotents reject wrong parameters") {
    auto d = graded23();
    CHECK_THROWS_AS(idempotents(d, DeformationCase::ComplexGrassmannian), precondition_error);
}

TEST_CASE("table certificate rejects corrupted entries") {
    auto table = build_rewrite_table(2, 3, zeros(5));
    CHECK_NOTHROW(verify_rewrite_table(2, 3, table));
    RewriteTable broken = table;
    // overwrite r1^4 -> 3 r1^2 r2 - r2^2 with a wrong value
    broken.at(mi({4, 0})) = RingCoords{{mi({0, 2}), Rational(1)}};
    CHECK_THROWS_AS(verify_rewrite_table(2, 3, broken), invariant_violation);
    RewriteTable truncated = table;
    truncated.erase(mi({0, 4}));
    CHECK_THROWS_AS(verify_rewrite_table(2, 3, truncated), invariant_violation);
}

TEST_CASE("poincare polynomial") {
    CHECK(univariate_str(poincare_polynomial(*graded23())) ==
          "t^12 + t^10 + 2*t^8 + 2*t^6 + 2*t^4 + t^2 + 1");
    auto d11 = RingDescriptor::make(1, 1, zeros(2), 2);
    CHECK(univariate_str(poincare_polynomial(*d11)) == "t^2 + 1");
    // p=1, q=1, w=4 with e of degree 5: (1+t^4)(1+t^5)
    auto d11e = RingDescriptor::make(1, 1, zeros(2), 4, true, Rational(0));
    CHECK(univariate_str(poincare_polynomial(*d11e)) == "t^9 + t^5 + t^4 + 1");
    auto cdef = deformation_parameters(DeformationCase::ComplexGrassmannian, 1, 1);
    auto ddef = RingDescriptor::make(1, 1, cdef, 2);
    CHECK_THROWS_AS(poincare_polynomial(*ddef), precondition_error);
}

TEST_CASE("associated graded check") {
    // p=q=1: deformed r1*r1 = 1/4, graded r1*r1 = 0; top components agree.
    auto c = deformation_parameters(DeformationCase::ComplexGrassmannian, 1, 1);
    auto ddef = RingDescriptor::make(1, 1, c, 2);
    auto dgr = RingDescriptor::make(1, 1, zeros(2), 2);
    auto rep = associated_graded_check(ddef, dgr);
    CHECK(rep.ok);
    CHECK(rep.pairs == 3);
    CHECK(rep.tail_terms == 1);  // the 1/4 constant from r1*r1

    auto rep2 = associated_graded_check(dgr, dgr);
    CHECK(rep2.ok);
    CHECK(rep2.tail_terms == 0);

    auto c23 = deformation_parameters(DeformationCase::QuaternionGrassmannian, 2, 3);
    auto rep3 = associated_graded_check(RingDescriptor::make(2, 3, c23, 4),
                                        RingDescriptor::make(2, 3, zeros(5), 4));
    CHECK(rep3.ok);
    CHECK(rep3.pairs == 55);
}

TEST_CASE("e generator: central, pair rule, squares") {
    auto c = deformation_parameters(DeformationCase::RealGrassmannianOddOdd, 1, 1);
    auto d = RingDescriptor::make(1, 1, c, 4, true, Rational(1));
    RingElement e = RingElement::e(d);
    CHECK(e * e == RingElement::one(d));
    auto d0 = RingDescriptor::make(1, 1, zeros(2), 4, true, Rational(0));
    RingElement e0 = RingElement::e(d0);
    CHECK((e0 * e0).is_zero());
    std::mt19937 rng(7);
    for (int t = 0; t < 5; ++t) {
        RingElement x = rnd_element(rng, d, true);
        CHECK(e * x == x * e);
    }
}
