#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grasscoh {

/// Exponent multi-index of a monomial. Trailing zeros are normalized away,
/// so (2,1) and (2,1,0) compare and hash equal.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<uint32_t> exponents);

    /// x_{i}^k with 0-based variable index i.
    static MultiIndex variable(size_t i, uint32_t k = 1);

    uint32_t exponent(size_t i) const { return i < e_.size() ? e_[i] : 0; }
    /// Number of leading positions that may carry a nonzero exponent.
    size_t width() const { return e_.size(); }
    bool is_unit() const { return e_.empty(); }

    uint32_t total_degree() const;
    /// Sum of (i+1) * e_i; the intrinsic weight when variable i+1 has weight i+1.
    uint64_t weighted_degree() const;

    MultiIndex times(const MultiIndex& o) const;
    bool divides(const MultiIndex& o) const;
    /// o / this, or nullopt when not divisible.
    std::optional<MultiIndex> divide_into(const MultiIndex& o) const;

    /// Library-wide monomial order: total degree first, then reverse
    /// lexicographic within a degree (the rightmost differing exponent
    /// decides, smaller exponent there wins). Returns <0, 0, >0.
    static int cmp(const MultiIndex& a, const MultiIndex& b);

    /// Listing order used for bases and printed tables: total degree
    /// ascending, but within a degree the x1-dominant monomial first.
    static int cmp_listing(const MultiIndex& a, const MultiIndex& b);

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

    /// "x1^2*x3" with the given variable prefix; "1" for the unit.
    std::string str(std::string_view prefix = "x") const;

    const std::vector<uint32_t>& exponents() const { return e_; }

private:
    std::vector<uint32_t> e_;
};

struct MonoLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return MultiIndex::cmp(a, b) < 0;
    }
};

struct ListingLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return MultiIndex::cmp_listing(a, b) < 0;
    }
};

/// All monomials in `nvars` variables of total degree exactly `degree`.
std::vector<MultiIndex> monomials_of_degree(size_t nvars, uint32_t degree);

/// All monomials in `nvars` variables of total degree at most `degree`,
/// in listing order.
std::vector<MultiIndex> monomials_up_to_degree(size_t nvars, uint32_t degree);

/// All monomials in `nvars` variables (weights 1..nvars) of weighted degree
/// exactly `wdeg`.
std::vector<MultiIndex> monomials_of_weighted_degree(size_t nvars, uint64_t wdeg);

}  // namespace grasscoh
