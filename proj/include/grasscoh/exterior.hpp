#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grasscoh/polynomial.hpp"

namespace grasscoh {

/// The cases whose invariants form an exterior algebra on a graded subspace.
enum class ExteriorCase {
    GroupOrthogonalOdd,   // O(2n+1) x O(2n+1) / diagonal
    GroupOrthogonalEven,  // O(2n) x O(2n) / diagonal
    GroupUnitary,         // U(n) x U(n) / diagonal
    GroupSymplectic,      // Sp(n) x Sp(n) / diagonal
    UnitaryOverOrthogonal,  // U(m)/O(m)
    UnitaryOverSymplectic,  // U(2n)/Sp(n)
};

struct ExteriorDescriptor;
using ExteriorDescriptorPtr = std::shared_ptr<const ExteriorDescriptor>;

/// Exterior algebra on generators of fixed odd degrees. In Clifford mode the
/// generators square to a unit scalar instead of zero; that mode is not
/// validated against any external model and is flagged accordingly.
struct ExteriorDescriptor {
    std::string case_label;
    std::vector<int> degrees;  ///< ascending, all odd
    bool clifford = false;
    Rational square = Rational(0);  ///< generator squares (0, or a unit in Clifford mode)

    static ExteriorDescriptorPtr make(ExteriorCase c, int n, bool clifford = false,
                                      Rational square = Rational(1));
    static ExteriorDescriptorPtr make_raw(std::string label, std::vector<int> degrees,
                                          bool clifford = false,
                                          Rational square = Rational(1));

    size_t generator_count() const { return degrees.size(); }
    size_t dim() const { return size_t{1} << degrees.size(); }
    /// Subsets of generators in listing order (by total degree, then by the
    /// lexicographically smallest index set) with their degrees.
    std::vector<std::vector<int>> basis() const;  // each entry: sorted 0-based indices
    std::vector<std::string> basis_labels() const;
    int subset_degree(const std::vector<int>& subset) const;
    bool same_presentation(const ExteriorDescriptor& o) const;
};

/// The degree multiset for a case, n >= 1 (m >= 1 for U(m)/O(m)).
std::vector<int> exterior_degrees(ExteriorCase c, int n);

class ExteriorElement {
public:
    using Coords = std::map<std::vector<int>, Rational>;

    explicit ExteriorElement(ExteriorDescriptorPtr desc);
    ExteriorElement(ExteriorDescriptorPtr desc, Coords coords);

    static ExteriorElement zero(ExteriorDescriptorPtr d);
    static ExteriorElement one(ExteriorDescriptorPtr d);
    static ExteriorElement generator(ExteriorDescriptorPtr d, int i);  // 0-based

    const ExteriorDescriptorPtr& descriptor() const { return desc_; }
    const Coords& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    Rational coefficient(const std::vector<int>& subset) const;

    ExteriorElement operator-() const;
    ExteriorElement operator+(const ExteriorElement& o) const;
    ExteriorElement operator-(const ExteriorElement& o) const;
    /// Wedge (or Clifford) product with Koszul signs from sorted-merge
    /// inversion counts.
    ExteriorElement operator*(const ExteriorElement& o) const;
    ExteriorElement scaled(const Rational& k) const;
    bool operator==(const ExteriorElement& o) const;
    bool operator!=(const ExteriorElement& o) const { return !(*this == o); }

    /// "g1^g3" style sorted wedges; "1" for the unit part.
    std::string str() const;

private:
    ExteriorDescriptorPtr desc_;
    Coords coords_;
};

/// Poincare polynomial prod (1 + t^{d_i}).
Polynomial poincare_ext(const ExteriorDescriptor& desc);

}  // namespace grasscoh
