#include "loomgen/synthesis.hpp"

#include <sstream>

namespace loomgen {

bool LinearLoop::is_diagonal() const {
    for (std::size_t i = 0; i < update.rows(); ++i)
        for (std::size_t j = 0; j < update.cols(); ++j)
            if (i != j && update(i, j) != 0) return false;
    return true;
}

std::string to_string(ExactnessLevel level) {
    switch (level) {
        case ExactnessLevel::InvariantIdealEqualsInput: return "invariant_ideal_equals_input";
        case ExactnessLevel::LatticeIdealEqualsInput: return "lattice_ideal_equals_input";
        case ExactnessLevel::SupersetGuaranteedOnly: return "superset_guaranteed_only";
    }
    return "superset_guaranteed_only";
}

ExactnessLevel exactness_from_string(const std::string& s) {
    if (s == "invariant_ideal_equals_input") return ExactnessLevel::InvariantIdealEqualsInput;
    if (s == "lattice_ideal_equals_input") return ExactnessLevel::LatticeIdealEqualsInput;
    if (s == "superset_guaranteed_only") return ExactnessLevel::SupersetGuaranteedOnly;
    throw ParseError("unknown exactness level '" + s + "'");
}

namespace {

std::vector<Int> first_primes(std::size_t n) {
    std::vector<Int> primes;
    Int p = 1;
    while (primes.size() < n) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primes.push_back(p);
    }
    return primes;
}

}  // namespace

SynthesisReport synthesize_diagonal(const SaturationCertificate& cert,
                                    const std::vector<std::string>& vars) {
    const std::size_t d = cert.a.cols();
    if (vars.size() != d)
        throw DimensionMismatch("variable count does not match certificate dimension");
    const std::size_t s = cert.a.rows();
    auto primes = first_primes(s);

    SynthesisReport rep;
    rep.a = cert.a;
    rep.lattice = cert.original;
    rep.saturation = cert;
    rep.lambdas.resize(d, Rat(1));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < s; ++i) {
            if (!cert.a(i, j).fits_slong_p())
                throw std::overflow_error("matrix A entry too large for exponentiation");
            rep.lambdas[j] *= rat_pow(Rat(primes[i]), cert.a(i, j).get_si());
        }

    rep.loop.vars = vars;
    rep.loop.update = RatMatrix(d, d);
    for (std::size_t j = 0; j < d; ++j) rep.loop.update(j, j) = rep.lambdas[j];
    rep.loop.init.assign(d, Rat(1));
    rep.nontrivial = false;
    for (const Rat& l : rep.lambdas)
        if (l != 1) rep.nontrivial = true;
    return rep;
}

SynthesisReport conjugate(const SynthesisReport& report, const RatMatrix& s) {
    const std::size_t d = report.loop.update.rows();
    if (s.rows() != d || s.cols() != d)
        throw DimensionMismatch("transform matrix must be d x d");
    RatMatrix s_inv = rat_inverse(s);

    SynthesisReport rep = report;
    rep.loop.update = mat_mul(mat_mul(s_inv, report.loop.update), s);
    rep.loop.init = mat_vec(s_inv, report.loop.init);
    rep.transformed = std::make_pair(s, s_inv);
    // Only invariance survives the coordinate change; ideal equality is not
    // claimed for the conjugated loop.
    rep.exactness = {ExactnessLevel::SupersetGuaranteedOnly,
                     "conjugated loop: invariance proved, ideal equality not claimed"};
    return rep;
}

ExactnessResult classify_exactness(const std::vector<PureDifferenceBinomial>& binomials,
                                   const Lattice& lattice,
                                   const SaturationCertificate& cert) {
    (void)lattice;
    (void)cert;
    // The positive-vector clause takes precedence: for x^v - 1 generators we
    // only claim lattice-ideal equality.
    for (std::size_t i = 0; i < binomials.size(); ++i) {
        auto v = exponent_vector(binomials[i]);
        bool positive = !v.empty();
        for (auto x : v)
            if (x <= 0) positive = false;
        if (positive) {
            std::ostringstream os;
            os << "generator " << i + 1 << " has a strictly positive exponent vector";
            return {ExactnessLevel::LatticeIdealEqualsInput, os.str()};
        }
    }
    if (binomials.size() == 1 && is_canonical(binomials.front())) {
        auto v = exponent_vector(binomials.front());
        if (is_primitive(v))
            return {ExactnessLevel::InvariantIdealEqualsInput,
                    "single canonical binomial with primitive exponent vector"};
        return {ExactnessLevel::LatticeIdealEqualsInput,
                "single canonical binomial"};
    }
    return {ExactnessLevel::SupersetGuaranteedOnly, ""};
}

bool is_nontrivial(const SynthesisReport& report) {
    for (const Rat& l : report.lambdas)
        if (l != 1) return true;
    return false;
}

SynthesisReport synthesize_system(const std::vector<std::string>& vars,
                                  const std::vector<PureDifferenceBinomial>& binomials) {
    std::vector<ExponentVector> gens;
    gens.reserve(binomials.size());
    for (const auto& b : binomials) gens.push_back(exponent_vector(b));
    Lattice l = lattice_from_vectors(gens, vars.size());
    SaturationCertificate cert = saturate(l);
    SynthesisReport rep = synthesize_diagonal(cert, vars);
    rep.exactness = classify_exactness(binomials, l, cert);
    return rep;
}

}  // namespace loomgen
