#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "loomgen/loopdoc.hpp"
#include "loomgen/verify.hpp"

using namespace loomgen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelfCheck = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string vec_to_string(const std::vector<Rat>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << rat_to_string(v[i]);
    os << ")";
    return os.str();
}

std::string ivec_to_string(const ExponentVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string int_matrix_to_string(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "; " : "");
        os << "(";
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j).get_str();
        os << ")";
    }
    if (m.rows() == 0) os << "(empty)";
    return os.str();
}

// Classifies every polynomial; on failure reports all offenders at once.
std::vector<PureDifferenceBinomial> classify_all(const PolySystem& sys,
                                                 bool suggest_transform) {
    std::vector<PureDifferenceBinomial> binomials;
    std::vector<std::string> offenders;
    for (const auto& p : sys.polys) {
        try {
            binomials.push_back(classify_pure_difference(p));
        } catch (const NotPureDifference& e) {
            offenders.push_back(p.to_string(sys.vars) + " (" + e.what() + ")");
        }
    }
    if (!offenders.empty()) {
        std::ostringstream os;
        os << "not pure difference binomials:";
        for (const auto& o : offenders) os << "\n  " << o;
        if (suggest_transform)
            os << "\nhint: if the ideal becomes pure difference under a linear change of "
                  "coordinates, supply the matrix with --transform S.json";
        throw NotPureDifference(os.str());
    }
    return binomials;
}

int run_synth(const std::string& system_path, const std::string& transform_path,
              std::size_t check_iters, const std::string& format,
              const std::string& out_path) {
    PolySystem sys = parse_system(read_file(system_path));

    SynthesisReport rep;
    if (transform_path.empty()) {
        auto binomials = classify_all(sys, true);
        rep = synthesize_system(sys.vars, binomials);
    } else {
        RatMatrix s = transform_from_json(read_file(transform_path));
        if (s.rows() != sys.vars.size())
            throw DimensionMismatch("transform matrix dimension does not match system");
        RatMatrix s_inv = rat_inverse(s);
        // Images q_i = p_i(S^-1 x') are the binomials the lattice machinery
        // works on; the loop is then conjugated back to the original
        // coordinates.
        PolySystem image = sys;
        for (auto& p : image.polys) p = p.substitute_linear(s_inv);
        auto binomials = classify_all(image, false);
        rep = conjugate(synthesize_system(sys.vars, binomials), s);
    }

    // Self-check: the emitted loop must satisfy the original polynomials.
    auto check = verify_bounded(rep.loop, sys.polys, check_iters);
    if (!check.all_pass()) {
        std::cerr << "internal error: synthesised loop fails its own verification\n";
        return kExitSelfCheck;
    }

    LoopDocument doc = document_from_report(rep);
    std::string rendered = render(doc, format);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + out_path + "'");
        out << rendered;
    }
    return kExitOk;
}

int run_verify(const std::string& loop_path, const std::string& system_path,
               std::size_t iters) {
    LoopDocument doc = loopdoc_from_json(read_file(loop_path));
    PolySystem sys = parse_system(read_file(system_path));
    if (sys.vars.size() != doc.vars.size())
        throw DimensionMismatch("system and loop dimensions differ");

    auto outcome = verify_bounded(doc.to_loop(), sys.polys, iters);
    for (std::size_t i = 0; i < outcome.verdicts.size(); ++i) {
        const auto& v = outcome.verdicts[i];
        std::cout << sys.polys[i].to_string(sys.vars) << ": ";
        if (v.kind == PolyVerdict::PassBounded) {
            std::cout << "PASS (bounded, n <= " << v.bound
                      << "; not a proof for general loops)\n";
        } else {
            std::cout << "FAIL at n = " << v.witness_n << ", point "
                      << vec_to_string(v.witness_point) << ", value "
                      << rat_to_string(v.witness_value) << "\n";
        }
    }
    return outcome.all_pass() ? kExitOk : kExitVerifyFail;
}

int run_report(const std::string& system_path) {
    PolySystem sys = parse_system(read_file(system_path));
    auto binomials = classify_all(sys, true);
    SynthesisReport rep = synthesize_system(sys.vars, binomials);

    std::cout << "variables: ";
    for (std::size_t i = 0; i < sys.vars.size(); ++i)
        std::cout << (i ? ", " : "") << sys.vars[i];
    std::cout << "\n";

    std::cout << "exponent vectors B:";
    if (binomials.empty()) std::cout << " (empty system, B = {0})";
    std::cout << "\n";
    for (const auto& b : binomials)
        std::cout << "  " << ivec_to_string(exponent_vector(b)) << "\n";

    std::cout << "lattice L basis: " << int_matrix_to_string(rep.lattice.basis) << "\n";
    std::cout << "rank(L): " << rep.lattice.rank() << "\n";
    std::cout << "Sat(L) basis: " << int_matrix_to_string(rep.saturation.saturated.basis)
              << "\n";
    std::cout << "L saturated: " << (rep.lattice == rep.saturation.saturated ? "yes" : "no")
              << "\n";
    std::cout << "A: " << int_matrix_to_string(rep.a) << "\n";
    std::cout << "lambda: " << vec_to_string(rep.lambdas) << "\n";
    std::cout << "nontrivial: " << (rep.nontrivial ? "true" : "false") << "\n";
    std::cout << "exactness: " << to_string(rep.exactness.level);
    if (!rep.exactness.justification.empty())
        std::cout << " (" << rep.exactness.justification << ")";
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "loomgen: synthesise linear loops from pure difference binomial invariants.\n"
        "Scalar multiples of pure difference binomials (e.g. 3x - 3y) are accepted;\n"
        "the scalar is stripped, which leaves the generated ideal unchanged."};
    app.require_subcommand(1);

    std::string system_path, transform_path, out_path, loop_path;
    std::string format = "pseudo";
    std::size_t check_iters = 25, iters = 25;

    auto* synth = app.add_subcommand("synth", "synthesise a loop from an invariant system");
    synth->add_option("system", system_path, "system file (.sys)")->required();
    synth->add_option("--transform", transform_path,
                      "JSON file with a change-of-coordinates matrix S");
    synth->add_option("--check-iters", check_iters, "self-check iteration bound")
        ->default_val(25);
    synth->add_option("--format", format, "output format: pseudo | c | json")
        ->default_val("pseudo");
    synth->add_option("--out", out_path, "write output to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "check invariants against a loop document");
    verify->add_option("loop", loop_path, "loop document (.json)")->required();
    verify->add_option("system", system_path, "system file (.sys)")->required();
    verify->add_option("--iters", iters, "iteration bound")->default_val(25);

    auto* report = app.add_subcommand("report", "print the synthesis ledger without a loop");
    report->add_option("system", system_path, "system file (.sys)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (synth->parsed())
            return run_synth(system_path, transform_path, check_iters, format, out_path);
        if (verify->parsed()) return run_verify(loop_path, system_path, iters);
        return run_report(system_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
