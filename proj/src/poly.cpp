#include "loomgen/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace loomgen {

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da > db;
    return a > b;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rat& c) {
    Polynomial p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rat& c) {
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (m.size() != d_)
        throw DimensionMismatch("monomial length does not match variable count");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (d_ != o.d_)
        throw DimensionMismatch("polynomial variable counts differ");
    Polynomial r(d_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(d_);
            for (std::size_t i = 0; i < d_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial r = Polynomial::constant(d_, Rat(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != d_)
        throw DimensionMismatch("evaluation point has wrong length");
    Rat sum(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < d_; ++i)
            if (m[i] != 0) t *= rat_pow(point[i], m[i]);
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::substitute_linear(const RatMatrix& t) const {
    if (t.rows() != d_ || t.cols() != d_)
        throw DimensionMismatch("substitution matrix must be d x d");
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < d_; ++i) {
        Polynomial li(d_);
        for (std::size_t j = 0; j < d_; ++j) {
            Monomial m(d_, 0);
            m[j] = 1;
            li.add_term(m, t(i, j));
        }
        images.push_back(std::move(li));
    }
    Polynomial r(d_);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(d_, c);
        for (std::size_t i = 0; i < d_; ++i)
            if (m[i] != 0) term = term * images[i].pow(static_cast<std::uint64_t>(m[i]));
        r = r + term;
    }
    return r;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << " ";
        os << vars[i];
        if (m[i] != 1) os << "^" << m[i];
        first = false;
    }
    return os.str();
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono = monomial_to_string(m, vars);
        if (mono.empty()) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << " ";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

Polynomial PureDifferenceBinomial::to_polynomial() const {
    Polynomial p(alpha.size());
    p.add_term(alpha, Rat(1));
    p.add_term(beta, Rat(-1));
    return p;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

constexpr std::int64_t kHardExponentCap = 2147483647;  // 2^31 - 1

std::int64_t exponent_cap() {
    if (const char* env = std::getenv("LOOMGEN_MAX_EXP")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v <= kHardExponentCap) return v;
    }
    return kHardExponentCap;
}

struct Token {
    enum Kind { Ident, Integer, Sym, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_; ++line_; col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_; ++col_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Token::End, "", line_, col_};
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Ident, s_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            tok_ = {Token::Integer, s_.substr(start, pos_ - start), line_, col_};
            col_ += static_cast<int>(pos_ - start);
        } else if (c == '+' || c == '-' || c == '^' || c == '/' || c == ';') {
            tok_ = {Token::Sym, std::string(1, c), line_, col_};
            ++pos_; ++col_;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "' at " +
                             std::to_string(line_) + ":" + std::to_string(col_));
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg + " at " + std::to_string(t.line) + ":" + std::to_string(t.col));
}

class SystemParser {
public:
    explicit SystemParser(const std::string& text) : lex_(text), max_exp_(exponent_cap()) {}

    PolySystem parse() {
        Token kw = lex_.next();
        if (kw.kind != Token::Ident || kw.text != "vars")
            fail(kw, "expected 'vars'");
        while (lex_.peek().kind == Token::Ident) {
            Token v = lex_.next();
            if (var_index_.count(v.text))
                fail(v, "duplicate variable '" + v.text + "'");
            var_index_[v.text] = sys_.vars.size();
            sys_.vars.push_back(v.text);
        }
        if (sys_.vars.empty())
            fail(lex_.peek(), "expected at least one variable name");
        expect_sym(";");
        while (lex_.peek().kind != Token::End) {
            sys_.polys.push_back(parse_poly());
            expect_sym(";");
        }
        return sys_;
    }

private:
    void expect_sym(const std::string& s) {
        Token t = lex_.next();
        if (t.kind != Token::Sym || t.text != s)
            fail(t, "expected '" + s + "'");
    }

    Polynomial parse_poly() {
        Polynomial p(sys_.vars.size());
        int sign = 1;
        if (lex_.peek().kind == Token::Sym &&
            (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            sign = lex_.next().text == "-" ? -1 : 1;
        }
        parse_term(p, sign);
        while (lex_.peek().kind == Token::Sym &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            sign = lex_.next().text == "-" ? -1 : 1;
            parse_term(p, sign);
        }
        return p;
    }

    void parse_term(Polynomial& p, int sign) {
        Rat coeff(sign);
        bool have_any = false;
        if (lex_.peek().kind == Token::Integer) {
            Token n = lex_.next();
            Rat c(Int(n.text), 1);
            if (lex_.peek().kind == Token::Sym && lex_.peek().text == "/") {
                lex_.next();
                Token den = lex_.next();
                if (den.kind != Token::Integer) fail(den, "expected denominator");
                if (Int(den.text) == 0) fail(den, "zero denominator");
                c /= Rat(Int(den.text), 1);
            }
            coeff *= c;
            have_any = true;
        }
        Monomial m(sys_.vars.size(), 0);
        while (lex_.peek().kind == Token::Ident) {
            Token id = lex_.next();
            auto factors = split_vars(id);
            // A trailing ^e binds to the last juxtaposed variable, as in xy^3.
            std::int64_t e = 1;
            if (lex_.peek().kind == Token::Sym && lex_.peek().text == "^") {
                lex_.next();
                Token et = lex_.next();
                if (et.kind != Token::Integer) fail(et, "expected exponent");
                if (et.text.size() > 18) fail(et, "exponent too large");
                e = std::stoll(et.text);
                if (e > max_exp_)
                    fail(et, "exponent exceeds limit " + std::to_string(max_exp_));
            }
            for (std::size_t i = 0; i + 1 < factors.size(); ++i) m[factors[i]] += 1;
            m[factors.back()] += e;
            for (auto x : m)
                if (x > max_exp_)
                    fail(id, "accumulated exponent exceeds limit " + std::to_string(max_exp_));
            have_any = true;
        }
        if (!have_any) fail(lex_.peek(), "expected a term");
        p.add_term(m, coeff);
    }

    // Greedy longest-match decomposition of an identifier into declared
    // variables, so "xy" with vars x y means x*y.
    std::vector<std::size_t> split_vars(const Token& id) {
        std::vector<std::size_t> out;
        std::size_t pos = 0;
        const std::string& s = id.text;
        while (pos < s.size()) {
            std::size_t best_len = 0, best_idx = 0;
            for (std::size_t i = 0; i < sys_.vars.size(); ++i) {
                const std::string& v = sys_.vars[i];
                if (v.size() > best_len && s.compare(pos, v.size(), v) == 0) {
                    best_len = v.size();
                    best_idx = i;
                }
            }
            if (best_len == 0)
                throw UnknownVariable("unknown variable '" + s + "' at " +
                                      std::to_string(id.line) + ":" + std::to_string(id.col));
            out.push_back(best_idx);
            pos += best_len;
        }
        return out;
    }

    Lexer lex_;
    PolySystem sys_;
    std::map<std::string, std::size_t> var_index_;
    std::int64_t max_exp_;
};

}  // namespace

PolySystem parse_system(const std::string& text) {
    return SystemParser(text).parse();
}

PureDifferenceBinomial classify_pure_difference(const Polynomial& p) {
    if (p.term_count() != 2)
        throw NotPureDifference("expected exactly two terms, got " +
                                std::to_string(p.term_count()));
    auto it = p.terms().begin();
    const auto& [m1, c1] = *it++;
    const auto& [m2, c2] = *it;
    if (c1 + c2 != 0)
        throw NotPureDifference("coefficients are not negatives of each other");
    // Orient so the exponent vector's first nonzero entry is positive.
    Monomial alpha = m1, beta = m2;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == beta[i]) continue;
        if (alpha[i] < beta[i]) std::swap(alpha, beta);
        break;
    }
    return {alpha, beta};
}

ExponentVector exponent_vector(const PureDifferenceBinomial& b) {
    ExponentVector v(b.alpha.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.alpha[i] - b.beta[i];
    return v;
}

PureDifferenceBinomial canonical_binomial(const ExponentVector& v) {
    if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }))
        throw ZeroVector("canonical binomial of the zero vector is undefined");
    Monomial plus(v.size()), minus(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        plus[i] = std::max<std::int64_t>(v[i], 0);
        minus[i] = plus[i] - v[i];
    }
    return {plus, minus};
}

bool is_canonical(const PureDifferenceBinomial& b) {
    for (std::size_t i = 0; i < b.alpha.size(); ++i)
        if (std::min(b.alpha[i], b.beta[i]) != 0) return false;
    return true;
}

bool is_primitive(const ExponentVector& v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    if (g == 0)
        throw ZeroVector("primitivity of the zero vector is undefined");
    return g == 1;
}

}  // namespace loomgen
