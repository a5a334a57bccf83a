#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "loomgen/rational.hpp"

namespace loomgen {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense integer matrix, row-major. rows == 0 is allowed and acts as the
/// empty-basis marker (cols still meaningful).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match dimensions");
    }

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    IntMatrix transposed() const;
    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// Dense rational matrix, row-major, exact entries.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw DimensionMismatch("entry count does not match dimensions");
    }

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const RatMatrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v);
std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Exact inverse; throws SingularMatrix when det = 0.
RatMatrix rat_inverse(const RatMatrix& s);

/// Integer basis of the rational null space of B (orthogonal complement of
/// the row space). Rows are primitive, first nonzero entry positive, in
/// descending lexicographic order (so the zero map yields the identity rows
/// in natural order). Full row rank (r = d) yields the 1 x d zero-row
/// sentinel so the result is never empty.
IntMatrix rational_null_space_basis(const IntMatrix& b);

/// Z-basis of ker A = {v in Z^d : Av = 0}, returned in row Hermite normal
/// form. A trivial kernel comes back as a 0 x d matrix.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Row Hermite normal form with positive pivots and entries above each pivot
/// reduced into [0, pivot); zero rows dropped. Unique per row lattice.
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace loomgen
