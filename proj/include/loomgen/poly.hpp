#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "loomgen/matrix.hpp"
#include "loomgen/rational.hpp"

namespace loomgen {

struct UnknownVariable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPureDifference : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exponent tuple of a monomial; entries are >= 0, length = variable count.
using Monomial = std::vector<std::int64_t>;

/// Integer vector in Z^d (a binomial's exponent difference).
using ExponentVector = std::vector<std::int64_t>;

/// Graded lexicographic order: higher total degree first, lex tie-break.
struct GradedLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial over Q with a fixed ambient variable count.
/// Terms are kept canonical: distinct monomials, no zero coefficients,
/// graded-lex descending.
class Polynomial {
public:
    explicit Polynomial(std::size_t num_vars = 0) : d_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Rat& c);
    static Polynomial monomial(const Monomial& m, const Rat& c = Rat(1));

    std::size_t num_vars() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat, GradedLexGreater>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(std::uint64_t e) const;
    bool operator==(const Polynomial& o) const = default;

    Rat evaluate(const std::vector<Rat>& point) const;

    /// p(T x): substitutes each variable x_i by the linear form given by
    /// row i of T. T must be d x d.
    Polynomial substitute_linear(const RatMatrix& t) const;

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    std::size_t d_;
    std::map<Monomial, Rat, GradedLexGreater> terms_;
};

/// x^alpha - x^beta with natural alpha != beta (support need not be disjoint;
/// canonical binomials are the disjoint-support representatives).
struct PureDifferenceBinomial {
    Monomial alpha;
    Monomial beta;

    Polynomial to_polynomial() const;
    bool operator==(const PureDifferenceBinomial& o) const = default;
};

struct PolySystem {
    std::vector<std::string> vars;
    std::vector<Polynomial> polys;
};

/// Parses the "vars x y z; p1; p2; ..." input language. '#' starts a
/// comment. Errors carry line:column positions.
PolySystem parse_system(const std::string& text);

/// Succeeds iff p = c * (x^alpha - x^beta), c nonzero rational, alpha != beta.
/// The scalar is stripped and orientation is fixed so the exponent vector's
/// first nonzero entry is positive. Throws NotPureDifference otherwise.
PureDifferenceBinomial classify_pure_difference(const Polynomial& p);

/// alpha - beta componentwise; never zero for a well-formed binomial.
ExponentVector exponent_vector(const PureDifferenceBinomial& b);

/// The unique canonical binomial (v_plus, v_minus) of a nonzero vector,
/// with v_plus = max(v, 0) and v_minus = v_plus - v.
PureDifferenceBinomial canonical_binomial(const ExponentVector& v);

bool is_canonical(const PureDifferenceBinomial& b);

/// True iff gcd of the entries is 1. Throws ZeroVector on v = 0.
bool is_primitive(const ExponentVector& v);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

}  // namespace loomgen
