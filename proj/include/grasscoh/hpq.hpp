#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grasscoh/polynomial.hpp"
#include "grasscoh/weyl.hpp"

namespace grasscoh {

/// Coordinates of a ring element over the monomial basis (degree <= q).
using RingCoords = std::map<MultiIndex, Rational, MonoLess>;

/// Normal forms of the degree-(q+1) monomials: each maps to a combination of
/// basis monomials.
using RewriteTable = std::map<MultiIndex, RingCoords, MonoLess>;

/// Result of eliminating the s generators from the defining relations.
struct EliminationOutput {
    std::vector<Polynomial> s_polys;    ///< s_1..s_q as polynomials in r_1..r_p
    std::vector<Polynomial> residuals;  ///< R_{q+1}..R_{p+q}, relations in r only
};

/// Expresses s_1..s_q through the first q relations; the remaining p
/// relations become the residuals R_k = c_k - sum_{i+j=k} r_i s_j.
EliminationOutput eliminate_s(int p, int q, std::span<const Rational> c);

/// Builds the complete rewrite of all degree-(q+1) monomials into the span of
/// basis monomials, by exact Gaussian elimination on monomial multiples of
/// the residual relations. Throws invariant_violation if the expected basis
/// does not survive or the elimination cannot complete.
RewriteTable build_rewrite_table(int p, int q, std::span<const Rational> c);

/// Independent small-instance construction of the same table via the
/// determinant identities (Cramer solves of the linear system in the s_j).
RewriteTable cramer_rewrite_table(int p, int q, std::span<const Rational> c);

/// Certifies a complete table: every degree-(q+2) monomial must reduce
/// identically through all of its degree-(q+1) divisors. With the residual
/// relations reducing to zero this pins the quotient dimension exactly.
void verify_rewrite_table(int p, int q, const RewriteTable& table);

struct RingDescriptor;
using RingDescriptorPtr = std::shared_ptr<const RingDescriptor>;

/// Immutable presentation of one algebra H(p,q;c), optionally extended by a
/// central generator e of odd degree. Construction computes and verifies the
/// rewrite table, so a descriptor is always internally consistent.
struct RingDescriptor {
    int p = 0;
    int q = 0;
    int weight = 2;  ///< exposed degree of r_i is weight * i
    std::vector<Rational> c;
    bool has_e = false;
    int e_degree = 0;
    Rational e_square = Rational(0);
    bool graded = true;  ///< true iff c == 0

    std::vector<MultiIndex> basis;  ///< listing order; size C(p+q, p)
    RewriteTable rewrite;

    static RingDescriptorPtr make(int p, int q, std::vector<Rational> c, int weight,
                                  bool with_e = false, Rational e_square = Rational(0));

    size_t monomial_count() const { return basis.size(); }
    size_t dim() const { return basis.size() * (has_e ? 2 : 1); }
    bool same_presentation(const RingDescriptor& o) const;
    /// Exposed (cohomological) degree of a basis monomial.
    uint64_t graded_degree(const MultiIndex& m) const {
        return static_cast<uint64_t>(weight) * m.weighted_degree();
    }
    /// Listing-order labels, a-part then e-part ("1", "r1", ..., "e", "r1*e", ...).
    std::vector<std::string> basis_labels() const;
};

/// Strategy hook for choosing which degree-(q+1) divisor of a monomial to
/// rewrite next; the result must divide the argument and have total degree
/// q+1. Normal forms do not depend on the choice (confluence).
using DivisorChooser = std::function<MultiIndex(const MultiIndex&, uint32_t)>;

/// An element in normal form: coordinates over the basis monomials, plus an
/// e-part when the descriptor has the extra generator.
class RingElement {
public:
    explicit RingElement(RingDescriptorPtr desc);
    RingElement(RingDescriptorPtr desc, RingCoords a, RingCoords b = {});

    static RingElement zero(RingDescriptorPtr desc) { return RingElement(std::move(desc)); }
    static RingElement one(RingDescriptorPtr desc);
    /// Any monomial in r (not necessarily basis); reduced to normal form.
    static RingElement monomial(RingDescriptorPtr desc, const MultiIndex& m);
    static RingElement e(RingDescriptorPtr desc);

    const RingDescriptorPtr& descriptor() const { return desc_; }
    const RingCoords& part() const { return a_; }
    const RingCoords& e_part() const { return b_; }
    bool is_zero() const { return a_.empty() && b_.empty(); }

    RingElement operator-() const;
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement scaled(const Rational& k) const;
    RingElement pow(unsigned e) const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    Rational coefficient(const MultiIndex& m, bool e_part = false) const;
    std::string str() const;

private:
    RingDescriptorPtr desc_;
    RingCoords a_, b_;
};

/// Reduces a formal polynomial in r_1..r_p to normal form, repeatedly
/// rewriting degree-(q+1) submonomials.
RingElement normal_form(RingDescriptorPtr desc, const Polynomial& x,
                        const DivisorChooser* chooser = nullptr);

/// Poincare polynomial of a graded descriptor, in one variable t.
Polynomial poincare_polynomial(const RingDescriptor& desc);

/// The primitive idempotents of a deformed descriptor whose parameters are
/// c = t(rho) for the given case: solves the exact evaluation system over
/// the shuffle orbit. The i-th idempotent evaluates to 1 exactly at the i-th
/// shuffle (lexicographic order).
std::vector<RingElement> idempotents(RingDescriptorPtr desc, DeformationCase dc);

/// Values of an element (e-part must vanish) on the shuffle orbit; the
/// evaluation model the idempotents live in.
std::vector<Rational> evaluate_at_shuffles(const RingElement& x, DeformationCase dc);

/// Comparison report between a deformed algebra and its graded counterpart:
/// top filtration components of all basis products must agree.
struct GradedCheckReport {
    bool ok = true;
    size_t pairs = 0;
    size_t tail_terms = 0;  ///< lower-degree terms produced by the deformation
    std::vector<std::string> mismatches;
};

GradedCheckReport associated_graded_check(const RingDescriptorPtr& deformed,
                                          const RingDescriptorPtr& graded);

}  // namespace grasscoh
