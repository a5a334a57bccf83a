#pragma once

#include "loomgen/poly.hpp"
#include "loomgen/synthesis.hpp"

namespace loomgen {

struct PreconditionViolated : std::logic_error {
    using std::logic_error::logic_error;
};

struct PolyVerdict {
    enum Kind { PassBounded, PassSymbolic, Fail } kind;
    std::size_t bound = 0;          // PassBounded: checked iterations 0..bound
    std::size_t witness_n = 0;      // Fail: first offending iteration
    std::vector<Rat> witness_point; // Fail: loop state at witness_n
    Rat witness_value;              // Fail: nonzero value of the polynomial
    ExponentVector offending;       // symbolic Fail: vector with A v != 0
};

struct VerificationOutcome {
    std::vector<PolyVerdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (v.kind == PolyVerdict::Fail) return false;
        return true;
    }
};

/// Orbit prefix: init, M init, ..., M^n init (n+1 points, exact).
std::vector<std::vector<Rat>> iterate(const LinearLoop& loop, std::size_t n);

/// Necessary-condition check: each polynomial must vanish at iterations
/// 0..n. Not a proof for general loops; failures carry a witness.
VerificationOutcome verify_bounded(const LinearLoop& loop,
                                   const std::vector<Polynomial>& polys,
                                   std::size_t n = 25);

/// Complete proof for synthesised diagonal loops: a binomial is invariant
/// iff its exponent vector lies in ker A. Requires the loop in the report
/// to be the untransformed diagonal one with all-ones init.
VerificationOutcome verify_symbolic_diagonal(const SynthesisReport& report,
                                             const std::vector<PureDifferenceBinomial>& binomials);

}  // namespace loomgen
