#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grasscoh {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    size_t cases = 0;        ///< how many instances were checked
    std::string witness;     ///< short failure description when !pass
};

struct VerifyOptions {
    int max_size = 4;        ///< bound on p, q (and n where applicable)
    int trials = 1000;       ///< randomized trials for property checks
    uint64_t seed = 20240901;
};

/// Dimension and Poincare checks: basis counts against binomials and powers
/// of two, engine Poincare polynomials against the closed forms, palindromy,
/// Euler characteristics.
std::vector<CheckResult> verify_dims(const VerifyOptions& opt);

/// Idempotent systems of the deformed equal-rank cases: count, partition of
/// unity, orthogonality, and the evaluation model intertwining products.
std::vector<CheckResult> verify_idempotents(const VerifyOptions& opt);

/// Oracle equivalence: engine Schur products against the Pieri rule, LR
/// positivity, transition triangularity, and the determinant-recipe rewrite
/// tables against the elimination-built ones on small instances.
std::vector<CheckResult> verify_schur(const VerifyOptions& opt);

/// Associated-graded checks: top filtration components of deformed products
/// equal the graded products.
std::vector<CheckResult> verify_gr(const VerifyOptions& opt);

/// Termination and confluence of the square-free rewriting: potential
/// strictly decreases, randomized rewrite orders agree, and the hpq normal
/// form is strategy-independent.
std::vector<CheckResult> verify_termination(const VerifyOptions& opt);

/// Runs one suite by name ("dims", "idempotents", "schur", "gr",
/// "termination" or "all").
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace grasscoh
