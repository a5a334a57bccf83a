#include "loomgen/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace loomgen {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(a_.begin() + static_cast<long>(i * cols_),
                            a_.begin() + static_cast<long>((i + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("mat_mul: inner dimensions differ");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<Rat> mat_vec(const RatMatrix& m, const std::vector<Rat>& v) {
    if (m.cols() != v.size())
        throw DimensionMismatch("mat_vec: dimension mismatch");
    std::vector<Rat> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    if (m.cols() != v.size())
        throw DimensionMismatch("mat_vec: dimension mismatch");
    std::vector<Int> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
    return r;
}

namespace {

// Gauss-Jordan to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pr, j));
        Rat inv = 1 / m(pr, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(pr, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

// Primitive (gcd 1) scaling with the first nonzero entry positive.
void normalise_row(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    RatMatrix c = m;
    return rref_in_place(c).size();
}

std::size_t rank(const IntMatrix& m) {
    return rank(RatMatrix::from_int(m));
}

RatMatrix rat_inverse(const RatMatrix& s) {
    if (s.rows() != s.cols())
        throw DimensionMismatch("rat_inverse: matrix must be square");
    const std::size_t n = s.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = s(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref_in_place(aug);
    std::size_t left_pivots = 0;
    for (auto c : pivots)
        if (c < n) ++left_pivots;
    if (left_pivots != n)
        throw SingularMatrix("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

IntMatrix rational_null_space_basis(const IntMatrix& b) {
    const std::size_t d = b.cols();
    RatMatrix r = RatMatrix::from_int(b);
    auto pivots = rref_in_place(r);
    if (pivots.size() == d)
        return IntMatrix(1, d);  // zero-row sentinel, null space is {0}

    std::vector<bool> is_pivot(d, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Int>> rows;
    for (std::size_t f = 0; f < d; ++f) {
        if (is_pivot[f]) continue;
        // Solution with free variable f set to 1, other free vars 0.
        std::vector<Rat> v(d);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        Int lcm = 1;
        for (const Rat& q : v)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> iv(d);
        for (std::size_t j = 0; j < d; ++j) {
            Rat scaled = v[j] * Rat(lcm);
            iv[j] = scaled.get_num();
        }
        normalise_row(iv);
        rows.push_back(std::move(iv));
    }
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return IntMatrix::from_rows(rows, d);
}

namespace {

// Integer row echelon reduction of m, mirroring every row operation on u.
// Returns the number of nonzero (pivot) rows.
std::size_t echelon_with_transform(IntMatrix& m, IntMatrix& u) {
    const std::size_t rows = m.rows(), cols = m.cols();
    auto swap_rows = [&](IntMatrix& x, std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(a, j), x(b, j));
    };
    auto addmul_row = [&](IntMatrix& x, std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < x.cols(); ++j) x(dst, j) += f * x(src, j);
    };
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        while (true) {
            // Pick the row with the smallest nonzero |entry| in column c.
            std::size_t best = rows;
            for (std::size_t i = pr; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                if (best == rows ||
                    mpz_cmpabs(m(i, c).get_mpz_t(), m(best, c).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == rows) break;
            if (best != pr) {
                swap_rows(m, best, pr);
                swap_rows(u, best, pr);
            }
            bool cleared = true;
            for (std::size_t i = pr + 1; i < rows; ++i) {
                if (m(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(pr, c).get_mpz_t());
                addmul_row(m, i, pr, -q);
                addmul_row(u, i, pr, -q);
                if (m(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m(pr, c) != 0) ++pr;
    }
    return pr;
}

}  // namespace

IntMatrix integer_kernel_basis(const IntMatrix& a) {
    const std::size_t d = a.cols();
    IntMatrix m = a.transposed();  // d x s
    IntMatrix u = IntMatrix::identity(d);
    std::size_t r = echelon_with_transform(m, u);
    // Rows r..d-1 of m are zero; the matching rows of u span ker a over Z.
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = r; i < d; ++i) rows.push_back(u.row(i));
    return hermite_normal_form(IntMatrix::from_rows(rows, d));
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix dummy(m.rows(), 0);
    std::size_t r = echelon_with_transform(h, dummy);

    // Keep the nonzero rows, make pivots positive, reduce above-pivot entries.
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(h.row(i));
    const std::size_t d = m.cols();
    std::vector<std::size_t> pivot_col(r, d);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < d; ++j)
            if (rows[i][j] != 0) { pivot_col[i] = j; break; }
        if (rows[i][pivot_col[i]] < 0)
            for (Int& x : rows[i]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            const std::size_t p = pivot_col[i];
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][p].get_mpz_t(), rows[i][p].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t j = 0; j < d; ++j) rows[k][j] -= q * rows[i][j];
        }
    }
    return IntMatrix::from_rows(rows, d);
}

}  // namespace loomgen
