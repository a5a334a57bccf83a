#pragma once

#include "loomgen/matrix.hpp"
#include "loomgen/poly.hpp"

namespace loomgen {

/// Finitely generated subgroup of Z^d with a canonical Hermite-normal-form
/// basis, so lattice equality is plain comparison.
struct Lattice {
    std::size_t dim = 0;
    IntMatrix basis;  // rank x dim, HNF rows; 0 x dim for the zero lattice

    std::size_t rank() const { return basis.rows(); }
    bool operator==(const Lattice& o) const = default;
};

/// Result of saturating a lattice: Sat(L) together with the integer matrix
/// A whose kernel it is (the 1 x d zero row when rank = d).
struct SaturationCertificate {
    Lattice original;
    Lattice saturated;
    IntMatrix a;
};

/// Z-span of the given vectors. An empty list yields the zero lattice
/// (the k = 0 convention).
Lattice lattice_from_vectors(const std::vector<ExponentVector>& vectors, std::size_t dim);

/// Sat(L) = {u : cu in L for some nonzero integer c}, computed as the
/// integer points of the rational span via the double orthogonal complement.
SaturationCertificate saturate(const Lattice& l);

/// True iff v is an integer combination of the basis rows.
bool contains(const Lattice& l, const ExponentVector& v);

bool is_saturated(const Lattice& l);

}  // namespace loomgen
