#include "grasscoh/verify.hpp"

#include <random>

#include "grasscoh/catalog.hpp"
#include "grasscoh/errors.hpp"
#include "grasscoh/schur.hpp"

namespace grasscoh {

namespace {

CheckResult result(std::string suite, std::string name, bool pass, size_t cases,
                   std::string witness = {}) {
    return CheckResult{std::move(suite), std::move(name), pass, cases, std::move(witness)};
}

bool palindromic(const Polynomial& poincare) {
    if (poincare.is_zero()) return false;
    uint32_t top = poincare.total_degree();
    for (const auto& [m, c] : poincare.terms()) {
        MultiIndex mirror = MultiIndex::variable(0, top - m.exponent(0));
        if (poincare.coefficient(mirror) != c) return false;
    }
    return true;
}

std::vector<Rational> zero_c(int len) { return std::vector<Rational>(len, Rational(0)); }

RingElement random_hpq_element(std::mt19937& rng, const RingDescriptorPtr& d) {
    std::uniform_int_distribution<long> cd(-4, 4);
    RingCoords a;
    for (const auto& m : d->basis) {
        long v = cd(rng);
        if (v) a.emplace(m, Rational(v));
    }
    return RingElement(d, std::move(a));
}

struct DeformedFamily {
    DeformationCase dc;
    int weight;
    const char* label;
};

constexpr DeformedFamily kShuffleFamilies[] = {
    {DeformationCase::QuaternionGrassmannian, 4, "Sp(p+q)/Sp(p)xSp(q)"},
    {DeformationCase::RealGrassmannianEvenEven, 4, "SO(2p+2q)/S(O(2p)xO(2q))"},
    {DeformationCase::RealGrassmannianEvenOdd, 4, "SO(2p+2q+1)/S(O(2p)xO(2q+1))"},
    {DeformationCase::ComplexGrassmannian, 2, "U(p+q)/U(p)xU(q)"},
};

}  // namespace

std::vector<CheckResult> verify_dims(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int mx = opt.max_size;

    {  // hpq dimension = C(p+q, p), doubled with e; Poincare = Gaussian binomial
        size_t cases = 0;
        std::string witness;
        bool ok = true;
        for (int p = 1; p <= mx && ok; ++p)
            for (int q = p; q <= mx && ok; ++q) {
                auto d2 = RingDescriptor::make(p, q, zero_c(p + q), 2);
                auto d4 = RingDescriptor::make(p, q, zero_c(p + q), 4);
                auto de = RingDescriptor::make(p, q, zero_c(p + q), 4, true, Rational(0));
                Rational expect = binomial(p + q, p);
                if (Rational(static_cast<long>(d2->dim())) != expect ||
                    Rational(static_cast<long>(de->dim())) != expect * Rational(2)) {
                    ok = false;
                    witness = "dimension mismatch at p=" + std::to_string(p) +
                              ", q=" + std::to_string(q);
                    break;
                }
                if (poincare_polynomial(*d2) != gaussian_binomial(p, q, 2) ||
                    poincare_polynomial(*d4) != gaussian_binomial(p, q, 4)) {
                    ok = false;
                    witness = "Poincare mismatch at p=" + std::to_string(p) +
                              ", q=" + std::to_string(q);
                    break;
                }
                if (!palindromic(poincare_polynomial(*d2)) ||
                    !palindromic(poincare_polynomial(*de))) {
                    ok = false;
                    witness = "Poincare not palindromic at p=" + std::to_string(p) +
                              ", q=" + std::to_string(q);
                    break;
                }
                cases += 3;
            }
        out.push_back(result("dims", "hpq dimensions and Poincare polynomials", ok, cases,
                             witness));
    }

    {  // squarefree: 2^n and 2^{n-1}, Poincare product form
        size_t cases = 0;
        std::string witness;
        bool ok = true;
        for (int n = 1; n <= mx + 4 && ok; ++n) {
            auto c = SquarefreeDescriptor::make(SquarefreeVariant::COverA, n,
                                                zero_c(n));
            Polynomial expect = Polynomial::constant(1, Rational(1));
            for (int i = 1; i <= n; ++i) {
                Polynomial f = Polynomial::constant(1, Rational(1));
                f.add_term(MultiIndex::variable(0, 2 * i), Rational(1));
                expect = expect * f;
            }
            if (c->dim() != (size_t{1} << n) || poincare_sf(*c) != expect ||
                !palindromic(poincare_sf(*c))) {
                ok = false;
                witness = "C variant at n=" + std::to_string(n);
                break;
            }
            ++cases;
            if (n >= 2) {
                auto d = SquarefreeDescriptor::make(SquarefreeVariant::DOverA, n, zero_c(n));
                Polynomial expect_d = Polynomial::constant(1, Rational(1));
                for (int i = 1; i <= n - 1; ++i) {
                    Polynomial f = Polynomial::constant(1, Rational(1));
                    f.add_term(MultiIndex::variable(0, 2 * i), Rational(1));
                    expect_d = expect_d * f;
                }
                if (d->dim() != (size_t{1} << (n - 1)) || poincare_sf(*d) != expect_d) {
                    ok = false;
                    witness = "D variant at n=" + std::to_string(n);
                    break;
                }
                ++cases;
            }
        }
        out.push_back(result("dims", "squarefree dimensions and Poincare products", ok, cases,
                             witness));
    }

    {  // exterior rows: dim 2^m, Poincare = product form, Euler characteristic 0
        size_t cases = 0;
        std::string witness;
        bool ok = true;
        std::vector<Rational> minus_one = {Rational(-1)};
        for (int n = 1; n <= mx + 2 && ok; ++n) {
            for (auto c : {ExteriorCase::GroupOrthogonalOdd, ExteriorCase::GroupOrthogonalEven,
                           ExteriorCase::GroupUnitary, ExteriorCase::GroupSymplectic,
                           ExteriorCase::UnitaryOverOrthogonal,
                           ExteriorCase::UnitaryOverSymplectic}) {
                auto d = ExteriorDescriptor::make(c, n);
                Polynomial expect = Polynomial::constant(1, Rational(1));
                for (int deg : d->degrees) {
                    Polynomial f = Polynomial::constant(1, Rational(1));
                    f.add_term(MultiIndex::variable(0, static_cast<uint32_t>(deg)),
                               Rational(1));
                    expect = expect * f;
                }
                bool good = d->dim() == (size_t{1} << d->degrees.size()) &&
                            poincare_ext(*d) == expect && palindromic(poincare_ext(*d)) &&
                            (d->degrees.empty() ||
                             poincare_ext(*d).evaluate(minus_one) == Rational(0));
                if (!good) {
                    ok = false;
                    witness = d->case_label;
                    break;
                }
                ++cases;
            }
        }
        out.push_back(result("dims", "exterior dimensions, degrees, Euler characteristic", ok,
                             cases, witness));
    }

    {  // catalog-level: engine Euler characteristic equals the closed form
        size_t cases = 0;
        std::string witness;
        bool ok = true;
        std::vector<Rational> minus_one = {Rational(-1)};
        std::vector<SpaceSpec> specs;
        for (int k = 1; k <= 2; ++k)
            for (int m = k; m <= 3; ++m) {
                specs.push_back(ordinary_grassmannian(BaseField::C, k, m));
                specs.push_back(ordinary_grassmannian(BaseField::H, k, m));
            }
        specs.push_back(ordinary_grassmannian(BaseField::R, 2, 4));
        specs.push_back(ordinary_grassmannian(BaseField::R, 2, 5));
        specs.push_back(ordinary_grassmannian(BaseField::R, 3, 5));
        for (int n = 2; n <= 3; ++n) {
            specs.push_back(symplectic_lagrangian(BaseField::C, n));
            specs.push_back(symplectic_lagrangian(BaseField::R, n));
            specs.push_back(orthogonal_lagrangian(n));
            specs.push_back(hermitian_lagrangian(BaseField::C, n));
            specs.push_back(quaternion_skew_lagrangian(n));
        }
        for (const auto& spec : specs) {
            BuiltRing ring = build_ring(spec, RingMode::Graded);
            Polynomial poincare = std::visit(
                [](const auto& d) {
                    using T = std::decay_t<decltype(d)>;
                    if constexpr (std::is_same_v<T, RingDescriptorPtr>)
                        return poincare_polynomial(*d);
                    else if constexpr (std::is_same_v<T, SquarefreeDescriptorPtr>)
                        return poincare_sf(*d);
                    else
                        return poincare_ext(*d);
                },
                ring);
            if (poincare.evaluate(minus_one) != Rational(euler_characteristic(spec))) {
                ok = false;
                witness = spec.name;
                break;
            }
            ++cases;
        }
        out.push_back(
            result("dims", "Euler characteristics across the catalog", ok, cases, witness));
    }
    return out;
}

std::vector<CheckResult> verify_idempotents(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937 rng(static_cast<uint32_t>(opt.seed));
    const int mx = std::min(opt.max_size, 3);

    size_t systems = 0, pairs = 0;
    std::string witness;
    bool ok = true;
    for (const auto& fam : kShuffleFamilies) {
        for (int p = 1; p <= mx && ok; ++p) {
            for (int q = p; q <= mx && ok; ++q) {
                auto c = deformation_parameters(fam.dc, p, q);
                auto d = RingDescriptor::make(p, q, c, fam.weight);
                std::vector<RingElement> prs;
                try {
                    prs = idempotents(d, fam.dc);
                } catch (const error& e) {
                    ok = false;
                    witness = std::string(fam.label) + ": " + e.what();
                    break;
                }
                if (Rational(static_cast<long>(prs.size())) != binomial(p + q, p)) {
                    ok = false;
                    witness = std::string(fam.label) + ": wrong idempotent count";
                    break;
                }
                RingElement sum = RingElement::zero(d);
                for (const auto& pr : prs) sum = sum + pr;
                if (sum != RingElement::one(d)) {
                    ok = false;
                    witness = std::string(fam.label) + ": sum of idempotents is not 1";
                    break;
                }
                for (size_t i = 0; i < prs.size() && ok; ++i)
                    for (size_t j = i; j < prs.size(); ++j) {
                        RingElement prod = prs[i] * prs[j];
                        bool good = (i == j) ? prod == prs[i] : prod.is_zero();
                        if (!good) {
                            ok = false;
                            witness = std::string(fam.label) + ": idempotent products wrong";
                            break;
                        }
                    }
                ++systems;
                // evaluation model intertwines engine products
                for (int t = 0; t < 10 && ok; ++t) {
                    RingElement a = random_hpq_element(rng, d);
                    RingElement b = random_hpq_element(rng, d);
                    auto va = evaluate_at_shuffles(a, fam.dc);
                    auto vb = evaluate_at_shuffles(b, fam.dc);
                    auto vab = evaluate_at_shuffles(a * b, fam.dc);
                    for (size_t i = 0; i < va.size(); ++i)
                        if (vab[i] != va[i] * vb[i]) {
                            ok = false;
                            witness = std::string(fam.label) + ": evaluation not multiplicative";
                            break;
                        }
                    ++pairs;
                }
            }
        }
    }
    out.push_back(result("idempotents", "partition of unity and orthogonality", ok, systems,
                         witness));
    out.push_back(result("idempotents", "evaluation model intertwines products", ok, pairs,
                         witness));
    return out;
}

std::vector<CheckResult> verify_schur(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int mx = opt.max_size;

    {  // engine vs Pieri
        size_t cases = 0;
        std::string witness;
        bool ok = true;
        for (int p = 1; p <= mx && ok; ++p)
            for (int q = p; q <= mx && ok; ++q) {
                auto d = RingDescriptor::make(p, q, zero_c(p + q), 2);
                for (const Partition& lam : box_partitions(p, q)) {
                    for (int k = 1; k <= p; ++k) {
                        Partition ek(std::vector<uint32_t>(k, 1));
                        if (schur_multiply(lam, ek, d) != pieri_oracle(lam, k, p, q)) {
                            ok = false;
                            witness = "p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                                      ", lambda=" + lam.str() + ", k=" + std::to_string(k);
                            break;
                        }
                        ++cases;
                    }
                    if (!ok) break;
                }
            }
        out.push_back(result("schur", "engine products match the Pieri rule", ok, cases,
                             witness));
    }

    {  // LR positivity + triangular transition
        size_t cases = 0;
        std::string witness;
        bool ok = true;
        for (int p = 1; p <= std::min(mx, 3) && ok; ++p)
            for (int q = p; q <= std::min(mx, 3) && ok; ++q) {
                auto tm = transition_matrices(p, q);
                const size_t n = tm.monomials.size();
                for (size_t i = 0; i < n && ok; ++i) {
                    if (tm.to_monomials[i][i] != Rational(1)) {
                        ok = false;
                        witness = "diagonal not 1";
                    }
                    for (size_t j = 0; j < n; ++j) {
                        if (i == j || tm.to_monomials[i][j].is_zero()) continue;
                        if (MultiIndex::cmp(tm.monomials[i], tm.monomials[j]) >= 0) {
                            ok = false;
                            witness = "entry above the diagonal in the fixed order";
                        }
                    }
                }
                auto d = RingDescriptor::make(p, q, zero_c(p + q), 2);
                for (const Partition& lam : box_partitions(p, q))
                    for (const Partition& mu : box_partitions(p, q)) {
                        for (const auto& [nu, c] : schur_multiply(lam, mu, d))
                            if (!c.is_integer() || c.sign() <= 0) {
                                ok = false;
                                witness = "nonpositive LR coefficient at " + lam.str() + "*" +
                                          mu.str();
                            }
                        ++cases;
                    }
            }
        out.push_back(result("schur", "triangular base change and LR positivity", ok, cases,
                             witness));
    }

    {  // determinant-recipe tables agree with elimination
        size_t cases = 0;
        std::string witness;
        bool ok = true;
        for (int p = 1; p <= std::min(mx, 3) && ok; ++p)
            for (int q = p; q <= std::min(mx, 3) && ok; ++q) {
                auto graded = zero_c(p + q);
                if (cramer_rewrite_table(p, q, graded) != build_rewrite_table(p, q, graded)) {
                    ok = false;
                    witness = "graded p=" + std::to_string(p) + ", q=" + std::to_string(q);
                    break;
                }
                ++cases;
                for (const auto& fam : kShuffleFamilies) {
                    auto c = deformation_parameters(fam.dc, p, q);
                    if (cramer_rewrite_table(p, q, c) != build_rewrite_table(p, q, c)) {
                        ok = false;
                        witness = std::string(fam.label) + " p=" + std::to_string(p) +
                                  ", q=" + std::to_string(q);
                        break;
                    }
                    ++cases;
                }
            }
        out.push_back(result("schur", "determinant recipe matches elimination tables", ok,
                             cases, witness));
    }
    return out;
}

std::vector<CheckResult> verify_gr(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    const int mx = std::min(opt.max_size, 3);
    size_t cases = 0;
    std::string witness;
    bool ok = true;
    for (const auto& fam : kShuffleFamilies) {
        for (int p = 1; p <= mx && ok; ++p)
            for (int q = p; q <= mx && ok; ++q) {
                auto deformed =
                    RingDescriptor::make(p, q, deformation_parameters(fam.dc, p, q),
                                         fam.weight);
                auto graded = RingDescriptor::make(p, q, zero_c(p + q), fam.weight);
                auto rep = associated_graded_check(deformed, graded);
                if (!rep.ok) {
                    ok = false;
                    witness = std::string(fam.label) + " p=" + std::to_string(p) +
                              ", q=" + std::to_string(q) +
                              (rep.mismatches.empty() ? "" : (": " + rep.mismatches.front()));
                    break;
                }
                cases += rep.pairs;
            }
    }
    // the almost equal rank pair structure
    for (int p = 1; p <= mx && ok; ++p)
        for (int q = p; q <= mx && ok; ++q) {
            auto c = deformation_parameters(DeformationCase::RealGrassmannianOddOdd, p, q);
            auto deformed = RingDescriptor::make(p, q, c, 4, true, Rational(1));
            auto graded = RingDescriptor::make(p, q, zero_c(p + q), 4, true, Rational(0));
            auto rep = associated_graded_check(deformed, graded);
            if (!rep.ok) {
                ok = false;
                witness = "almost equal rank p=" + std::to_string(p) + ", q=" +
                          std::to_string(q);
                break;
            }
            cases += rep.pairs;
        }
    out.push_back(result("gr", "top filtration components equal graded products", ok, cases,
                         witness));
    return out;
}

std::vector<CheckResult> verify_termination(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    std::mt19937 rng(static_cast<uint32_t>(opt.seed));
    const int nmax = std::max(2, std::min(opt.max_size + 2, 6));

    size_t steps = 0, runs = 0;
    std::string witness;
    bool ok = true;
    std::uniform_int_distribution<long> cd(-3, 3);
    for (int trial = 0; trial < opt.trials && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % (nmax - 1));
        bool deformed = trial % 2;
        SquarefreeDescriptorPtr d;
        if (deformed) {
            d = SquarefreeDescriptor::make(
                SquarefreeVariant::COverA, n,
                deformation_parameters(DeformationCase::LagrangianC, n, 0));
        } else {
            d = SquarefreeDescriptor::make(SquarefreeVariant::COverA, n, zero_c(n));
        }
        Polynomial f(n);
        for (int s = 0; s < 4; ++s) {
            std::vector<uint32_t> e(n);
            for (auto& x : e) x = rng() % 4;
            f.add_term(MultiIndex(std::move(e)), Rational(cd(rng)));
        }
        bool monotone = true;
        PotentialObserver obs = [&](uint64_t before, uint64_t after) {
            ++steps;
            if (after >= before) monotone = false;
        };
        SquarefreeElement base = normal_form_sf(d, f, nullptr, &obs);
        if (!monotone) {
            ok = false;
            witness = "potential failed to decrease at n=" + std::to_string(n);
            break;
        }
        uint64_t seed = rng();
        SquareChooser random_square = [seed](const MultiIndex& m) {
            std::mt19937 local(static_cast<uint32_t>(seed ^ (m.weighted_degree() * 31)));
            std::vector<size_t> squares;
            for (size_t i = 0; i < m.width(); ++i)
                if (m.exponent(i) >= 2) squares.push_back(i);
            return squares[local() % squares.size()];
        };
        if (normal_form_sf(d, f, &random_square) != base) {
            ok = false;
            witness = "randomized order changed the normal form at n=" + std::to_string(n);
            break;
        }
        ++runs;
    }
    out.push_back(result("termination",
                         "potential decreases strictly; rewrite order immaterial", ok, runs,
                         witness + (ok ? " (" + std::to_string(steps) + " steps)" : "")));

    // hpq divisor strategies agree too
    {
        size_t cases = 0;
        bool hok = true;
        std::string hwitness;
        auto d = RingDescriptor::make(2, 3, zero_c(5), 2);
        std::uniform_int_distribution<long> coef(-3, 3);
        for (int trial = 0; trial < std::min(opt.trials, 100) && hok; ++trial) {
            Polynomial f(2);
            for (int s = 0; s < 4; ++s) {
                std::vector<uint32_t> e = {static_cast<uint32_t>(rng() % 5),
                                           static_cast<uint32_t>(rng() % 5)};
                f.add_term(MultiIndex(std::move(e)), Rational(coef(rng)));
            }
            RingElement base = normal_form(d, f);
            uint64_t seed = rng();
            DivisorChooser chooser = [seed](const MultiIndex& m, uint32_t deg) {
                std::mt19937 local(static_cast<uint32_t>(seed ^ m.weighted_degree()));
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
            if (normal_form(d, f, &chooser) != base) {
                hok = false;
                hwitness = "hpq normal form changed with divisor strategy";
            }
            ++cases;
        }
        out.push_back(result("termination", "hpq reduction is confluent", hok, cases,
                             hwitness));
    }
    return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        out.insert(out.end(), std::make_move_iterator(v.begin()),
                   std::make_move_iterator(v.end()));
    };
    if (suite == "all" || suite == "dims") append(verify_dims(opt));
    if (suite == "all" || suite == "idempotents") append(verify_idempotents(opt));
    if (suite == "all" || suite == "schur") append(verify_schur(opt));
    if (suite == "all" || suite == "gr") append(verify_gr(opt));
    if (suite == "all" || suite == "termination") append(verify_termination(opt));
    if (out.empty())
        throw range_error("unknown suite '" + suite +
                          "' (all|dims|idempotents|schur|gr|termination)");
    return out;
}

}  // namespace grasscoh
