#pragma once

#include <span>
#include <string>
#include <vector>

#include "grasscoh/polynomial.hpp"
#include "grasscoh/rational.hpp"

namespace grasscoh {

/// A (p,q)-shuffle: the p positions, out of {1,...,p+q}, that the first
/// block occupies. Strictly increasing, 1-based.
struct Shuffle {
    std::vector<int> positions;

    std::string str() const;
};

/// All C(p+q,p) shuffles in lexicographic subset order.
std::vector<Shuffle> enumerate_shuffles(int p, int q);

/// Rearranges v so the coordinates at the shuffle's positions come first,
/// order preserved within each block.
std::vector<Rational> shuffle_apply(const Shuffle& sh, std::span<const Rational> v);

/// Weyl group pair (W_G, W_K) flavor for the cases that occur here.
///   A    : W_G = S_{p+q},  W_K = S_p x S_q
///   B    : W_G = B_{p+q},  W_K = B_p x B_q     (two-block)
///          W_G = B_n,      W_K = S_n           (single-block, q = 0)
///   D    : W_G = D_n,      W_K = S_n           (single-block, q = 0)
///   SBxB : W_G = D_{p+q},  W_K = S(B_p x B_q)
enum class WeylFamily { A, B, D, SBxB };

struct WeylCase {
    WeylFamily family;
    int p;
    int q;  // 0 for single-block cases

    WeylCase(WeylFamily family_, int p_, int q_);
    int rank() const { return p + q; }
    bool two_block() const { return q > 0; }
    /// Block invariants are symmetric functions of squared variables for
    /// every family except A.
    bool squares() const { return family != WeylFamily::A; }
};

/// The symmetric-space cases with a Clifford deformation point.
enum class DeformationCase {
    ComplexGrassmannian,       // U(p+q)/U(p)xU(q)
    QuaternionGrassmannian,    // Sp(p+q)/Sp(p)xSp(q)
    RealGrassmannianEvenEven,  // SO(2p+2q)/S(O(2p)xO(2q))
    RealGrassmannianEvenOdd,   // SO(2p+2q+1)/S(O(2p)xO(2q+1))
    RealGrassmannianOddOdd,    // SO(2p+2q+2)/S(O(2p+1)xO(2q+1))
    LagrangianC,               // Sp(n)/U(n)
    LagrangianD,               // SO(2n)/U(n)
};

/// The deformation point for the given case. Two-block cases take (p, q);
/// single-block cases take (n, 0).
std::vector<Rational> rho_vector(DeformationCase c, int p, int q);

/// The Weyl pair attached to a deformation case.
WeylCase weyl_case_for(DeformationCase c, int p, int q);

/// The deformation parameters (t_1(rho), ..., t_rank(rho)); t_k is e_k of
/// the coordinates for family A and e_k of their squares otherwise.
std::vector<Rational> deformation_parameters(DeformationCase c, int p, int q);

/// True when f is invariant under the generators of W_K (block-adjacent
/// transpositions, plus per-block or paired sign flips as the family needs).
bool is_w_k_invariant(const Polynomial& f, const WeylCase& wc);

/// Values of a W_K-invariant polynomial on the shuffle orbit of nu, indexed
/// by the ordered shuffle list. Throws precondition_error when f is not
/// invariant, and invariant_violation when the orbit points collide.
std::vector<Rational> ev_map(const Polynomial& f, std::span<const Rational> nu,
                             const WeylCase& wc);

/// Per shuffle, the values (r_1, ..., r_p) of the block generators at the
/// shuffled point: e_i of the first block (family A) or of its squares.
/// Checks that the value tuples are pairwise distinct.
std::vector<std::vector<Rational>> shuffle_generator_values(const WeylCase& wc,
                                                            std::span<const Rational> nu);

/// JSON serialization of an evaluation vector: an array of "num/den" strings.
std::string eval_vector_to_json(std::span<const Rational> values);
std::vector<Rational> eval_vector_from_json(const std::string& text);

}  // namespace grasscoh
