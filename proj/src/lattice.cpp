#include "loomgen/lattice.hpp"

namespace loomgen {

Lattice lattice_from_vectors(const std::vector<ExponentVector>& vectors, std::size_t dim) {
    std::vector<std::vector<Int>> rows;
    for (const auto& v : vectors) {
        if (v.size() != dim)
            throw DimensionMismatch("generator length does not match dimension");
        std::vector<Int> row(dim);
        for (std::size_t j = 0; j < dim; ++j) row[j] = v[j];
        rows.push_back(std::move(row));
    }
    Lattice l;
    l.dim = dim;
    l.basis = hermite_normal_form(IntMatrix::from_rows(rows, dim));
    return l;
}

SaturationCertificate saturate(const Lattice& l) {
    // Generator matrix; the zero lattice is represented by the single zero
    // row, matching the k = 0 convention.
    IntMatrix gens = l.basis;
    if (gens.rows() == 0) gens = IntMatrix(1, l.dim);

    SaturationCertificate cert;
    cert.original = l;
    cert.a = rational_null_space_basis(gens);
    cert.saturated.dim = l.dim;
    cert.saturated.basis = integer_kernel_basis(cert.a);
    return cert;
}

bool contains(const Lattice& l, const ExponentVector& v) {
    if (v.size() != l.dim)
        throw DimensionMismatch("vector length does not match lattice dimension");
    std::vector<Int> r(l.dim);
    for (std::size_t j = 0; j < l.dim; ++j) r[j] = v[j];
    // Back-substitution against the HNF basis: pivots sit in strictly
    // increasing columns, so a greedy pass is exact.
    for (std::size_t i = 0; i < l.basis.rows(); ++i) {
        std::size_t p = 0;
        while (p < l.dim && l.basis(i, p) == 0) ++p;
        if (p == l.dim) continue;
        if (r[p] % l.basis(i, p) != 0) return false;
        Int c = r[p] / l.basis(i, p);
        for (std::size_t j = 0; j < l.dim; ++j) r[j] -= c * l.basis(i, j);
    }
    for (const Int& x : r)
        if (x != 0) return false;
    return true;
}

bool is_saturated(const Lattice& l) {
    return saturate(l).saturated.basis == l.basis;
}

}  // namespace loomgen
