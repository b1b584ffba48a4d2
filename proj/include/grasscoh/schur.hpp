#pragma once

#include <map>
#include <string>
#include <vector>

#include "grasscoh/hpq.hpp"
#include "grasscoh/polynomial.hpp"

namespace grasscoh {

/// Integer partition: weakly decreasing positive parts. "(3,1)" text form;
/// parsing accepts and drops trailing zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<uint32_t> parts);

    static Partition parse(const std::string& text);

    const std::vector<uint32_t>& parts() const { return parts_; }
    size_t length() const { return parts_.size(); }
    uint32_t size() const;  // number of boxes
    uint32_t part(size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition transpose() const;
    bool fits_in_box(int p, int q) const;  // at most p parts, each <= q

    /// The basis monomial r_{t_1} ... r_{t_l} for t = transpose().
    MultiIndex diagonal_monomial(int p) const;
    /// Inverse of diagonal_monomial.
    static Partition from_diagonal_monomial(const MultiIndex& m);

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;

private:
    std::vector<uint32_t> parts_;
};

/// Schur-basis coordinates.
using SchurCoords = std::map<Partition, Rational>;

/// All partitions contained in the p x q box, ordered to match the monomial
/// basis listing under the diagonal-monomial bijection.
std::vector<Partition> box_partitions(int p, int q);

/// Schur polynomial as a polynomial in the elementary symmetric generators
/// r_1..r_p, by the determinant formula det(r_{t_i - i + j}).
Polynomial jacobi_trudi(const Partition& lambda, int p, int q);

/// Base change between box Schur polynomials and basis monomials.
struct TransitionMatrices {
    std::vector<Partition> partitions;   ///< listing order (diagonal bijection)
    std::vector<MultiIndex> monomials;   ///< matching basis listing
    /// to_monomials[i][j]: coefficient of monomial i in the Schur polynomial j.
    std::vector<std::vector<Rational>> to_monomials;
    /// to_schur[j][i]: coefficient of Schur j in monomial i (exact inverse).
    std::vector<std::vector<Rational>> to_schur;
};

TransitionMatrices transition_matrices(int p, int q);

/// Expands an element (coordinates over basis monomials) in the Schur basis.
SchurCoords to_schur_basis(const RingElement& x);

/// Product of two box Schur classes through the ring engine; coefficients
/// are the box-truncated Littlewood-Richardson numbers.
SchurCoords schur_multiply(const Partition& lambda, const Partition& mu,
                           const RingDescriptorPtr& graded_desc);

/// Independent combinatorial oracle: multiplication by r_k adds a vertical
/// k-strip (no two new boxes in one row), truncated to the box.
SchurCoords pieri_oracle(const Partition& lambda, int k, int p, int q);

std::string schur_coords_str(const SchurCoords& coords);

}  // namespace grasscoh
