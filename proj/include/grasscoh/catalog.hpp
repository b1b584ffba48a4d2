#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grasscoh/exterior.hpp"
#include "grasscoh/hpq.hpp"
#include "grasscoh/squarefree.hpp"

namespace grasscoh {

enum class BaseField { R, C, H };
enum class RingFamily { Hpq, HpqE, SquarefreeC, SquarefreeD, Exterior };
enum class RingMode { Graded, Clifford };

/// One space from the catalog, fully routed: which engine realizes its
/// cohomology, with which parameters and grading weight.
struct SpaceSpec {
    std::string name;             ///< e.g. "Gr_2(C^5)", "LGr*(H^4)"
    BaseField field = BaseField::C;
    std::string symmetric_space;  ///< e.g. "U(5)/U(2)xU(3)"
    RingFamily family = RingFamily::Hpq;
    int p = 0, q = 0;  ///< for Hpq/HpqE
    int n = 0;         ///< for squarefree and exterior cases
    int weight = 2;    ///< exposed degree of r_i is weight*i (hpq/squarefree)
    bool supports_clifford = false;
    std::optional<DeformationCase> deformation;  ///< set when supports_clifford
    std::optional<ExteriorCase> exterior_case;   ///< set for exterior family
    std::vector<int> exterior_degrees;           ///< resolved degree list
};

/// A constructed ring, one of the three engines.
using BuiltRing = std::variant<RingDescriptorPtr, SquarefreeDescriptorPtr, ExteriorDescriptorPtr>;

/// Grassmannian constructors (structured lookup).
SpaceSpec ordinary_grassmannian(BaseField f, int k, int m);     // Gr_k(F^{k+m})
SpaceSpec symplectic_lagrangian(BaseField f, int n);            // LGr(F^{2n}), F = R or C
SpaceSpec orthogonal_lagrangian(int n);                         // OLGr+(C^{2n})
SpaceSpec hermitian_lagrangian(BaseField f, int n);             // HLGr(F^{2n}) (HLGr+ for R)
SpaceSpec quaternion_skew_lagrangian(int n);                    // LGr*(H^{2n})

/// Looks a space up by name: Grassmannian names like "Gr_2(C^5)",
/// "LGr(C^4)", "OLGr+(C^6)", "HLGr(H^4)", "LGr*(H^4)", or symmetric-space
/// names like "U(5)/U(2)xU(3)", "Sp(3)/U(3)", "SO(7)/S(O(3)xO(4))".
/// Unknown names raise lookup_error carrying a nearest-name suggestion.
SpaceSpec lookup(const std::string& name);

/// Builds the ring behind a spec. Clifford mode requires supports_clifford.
BuiltRing build_ring(const SpaceSpec& spec, RingMode mode);

/// Registry rows (name patterns with the routing data), one per catalog family.
struct CatalogRow {
    std::string pattern;          ///< e.g. "Gr_p(R^{p+q})"
    std::string field;            ///< "R", "C" or "H"
    std::string symmetric_space;  ///< G/K pattern
    std::string family;           ///< engine family tag
    std::string weight;           ///< grading weight description
    bool supports_clifford = false;
    std::string example;          ///< a small instantiated name
};
std::vector<CatalogRow> catalog_rows();

/// The Gaussian binomial [p+q choose p] in t^w: the closed-form Poincare
/// oracle prod_{i=1..p} (1 - t^{w(q+i)}) / (1 - t^{w i}), expanded exactly.
Polynomial gaussian_binomial(int p, int q, int w);

/// chi = C(p+q,p) for Hpq, 2^n / 2^{n-1} for squarefree, 0 with an odd
/// generator present (HpqE and all exterior cases with generators).
long euler_characteristic(const SpaceSpec& spec);

std::string field_name(BaseField f);

}  // namespace grasscoh
