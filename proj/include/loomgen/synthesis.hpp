#pragma once

#include <optional>
#include <string>

#include "loomgen/lattice.hpp"
#include "loomgen/matrix.hpp"
#include "loomgen/poly.hpp"

namespace loomgen {

/// "x <- init; while * do x <- update x".
struct LinearLoop {
    std::vector<std::string> vars;
    RatMatrix update;
    std::vector<Rat> init;

    bool is_diagonal() const;
    bool operator==(const LinearLoop& o) const = default;
};

/// How much of the ideal-inclusion chain collapses for the synthesised loop,
/// strongest first.
enum class ExactnessLevel {
    InvariantIdealEqualsInput,
    LatticeIdealEqualsInput,
    SupersetGuaranteedOnly,
};

std::string to_string(ExactnessLevel level);
ExactnessLevel exactness_from_string(const std::string& s);

struct ExactnessResult {
    ExactnessLevel level = ExactnessLevel::SupersetGuaranteedOnly;
    std::string justification;
};

struct SynthesisReport {
    LinearLoop loop;
    IntMatrix a;
    std::vector<Rat> lambdas;  // diagonal of the pre-conjugation update
    Lattice lattice;
    SaturationCertificate saturation;
    bool nontrivial = false;
    ExactnessResult exactness;
    std::optional<std::pair<RatMatrix, RatMatrix>> transformed;  // (S, S^-1)
};

/// Diagonal loop from the saturation certificate: lambda_j is the product of
/// the first s primes raised to column j of A, init is all ones.
SynthesisReport synthesize_diagonal(const SaturationCertificate& cert,
                                    const std::vector<std::string>& vars);

/// Change of coordinates: update becomes S^-1 M S, init becomes S^-1 init.
/// Exactness drops to superset-only (only invariance is preserved).
SynthesisReport conjugate(const SynthesisReport& report, const RatMatrix& s);

/// Applies the sufficient conditions for collapsing the inclusion chain:
/// a single canonical binomial gives lattice-ideal equality, primitive on top
/// of that gives invariant-ideal equality, and a strictly positive exponent
/// vector among the generators gives lattice-ideal equality.
ExactnessResult classify_exactness(const std::vector<PureDifferenceBinomial>& binomials,
                                   const Lattice& lattice,
                                   const SaturationCertificate& cert);

/// True iff some lambda differs from 1, i.e. the orbit is infinite.
bool is_nontrivial(const SynthesisReport& report);

/// End-to-end Steps 1-3 on an already-classified binomial system.
SynthesisReport synthesize_system(const std::vector<std::string>& vars,
                                  const std::vector<PureDifferenceBinomial>& binomials);

}  // namespace loomgen
