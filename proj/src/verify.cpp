#include "loomgen/verify.hpp"

namespace loomgen {

std::vector<std::vector<Rat>> iterate(const LinearLoop& loop, std::size_t n) {
    std::vector<std::vector<Rat>> points;
    points.reserve(n + 1);
    points.push_back(loop.init);
    for (std::size_t k = 0; k < n; ++k)
        points.push_back(mat_vec(loop.update, points.back()));
    return points;
}

VerificationOutcome verify_bounded(const LinearLoop& loop,
                                   const std::vector<Polynomial>& polys,
                                   std::size_t n) {
    for (const auto& p : polys)
        if (p.num_vars() != loop.vars.size())
            throw DimensionMismatch("polynomial arity does not match loop dimension");

    // Streamed: only the current iterate is kept, the witness for a failing
    // polynomial is its first offending iteration.
    VerificationOutcome out;
    out.verdicts.resize(polys.size(), PolyVerdict{PolyVerdict::PassBounded});
    for (auto& v : out.verdicts) v.bound = n;

    std::vector<Rat> point = loop.init;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) point = mat_vec(loop.update, point);
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (out.verdicts[i].kind == PolyVerdict::Fail) continue;
            Rat val = polys[i].evaluate(point);
            if (val != 0) {
                auto& v = out.verdicts[i];
                v.kind = PolyVerdict::Fail;
                v.witness_n = k;
                v.witness_point = point;
                v.witness_value = val;
            }
        }
    }
    return out;
}

VerificationOutcome verify_symbolic_diagonal(const SynthesisReport& report,
                                             const std::vector<PureDifferenceBinomial>& binomials) {
    const LinearLoop& loop = report.loop;
    const std::size_t d = loop.vars.size();
    if (!loop.is_diagonal())
        throw PreconditionViolated("loop update is not diagonal");
    for (const Rat& x : loop.init)
        if (x != 1) throw PreconditionViolated("loop init is not all ones");
    if (report.lambdas.size() != d)
        throw PreconditionViolated("lambda count does not match dimension");
    for (std::size_t j = 0; j < d; ++j)
        if (loop.update(j, j) != report.lambdas[j])
            throw PreconditionViolated("diagonal does not match the synthesis lambdas");

    // With lambda_j built from column j of A over distinct primes, the
    // exponent lattice of the lambdas is exactly ker A, so membership in
    // ker A decides invariance for all n at once.
    VerificationOutcome out;
    for (const auto& b : binomials) {
        ExponentVector v = exponent_vector(b);
        if (v.size() != d)
            throw DimensionMismatch("binomial arity does not match loop dimension");
        std::vector<Int> iv(d);
        for (std::size_t j = 0; j < d; ++j) iv[j] = v[j];
        auto av = mat_vec(report.a, iv);
        bool in_kernel = true;
        for (const Int& x : av)
            if (x != 0) in_kernel = false;

        PolyVerdict verdict{PolyVerdict::PassSymbolic};
        if (!in_kernel) {
            verdict.kind = PolyVerdict::Fail;
            verdict.offending = v;
        }
        out.verdicts.push_back(std::move(verdict));
    }
    return out;
}

}  // namespace loomgen
