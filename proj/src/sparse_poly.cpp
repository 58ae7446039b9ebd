#include "chowmot/sparse_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lexer.hpp"

namespace chowmot {

namespace {

// Term-pair count above which operator* switches to the OpenMP kernel.
constexpr std::size_t kParallelWorkThreshold = std::size_t{1} << 15;

void require_same_profile(const SparsePoly& a, const SparsePoly& b) {
    if (a.profile() != b.profile()) {
        throw ProfileMismatchError("polynomials live in different truncated rings");
    }
}

void accumulate(SparsePoly::TermMap& terms, const Exponents& e, const Rational& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

}  // namespace

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

TruncationProfile::TruncationProfile(std::vector<int> caps) : caps_(std::move(caps)) {
    for (int c : caps_) {
        if (c < 0) throw DomainError("truncation cap must be nonnegative");
    }
}

int TruncationProfile::top_degree() const {
    return std::accumulate(caps_.begin(), caps_.end(), 0);
}

bool TruncationProfile::admits(const Exponents& e) const {
    if (e.size() != caps_.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > caps_[i]) return false;
    }
    return true;
}

SparsePoly SparsePoly::zero(const TruncationProfile& profile) {
    return SparsePoly(profile);
}

SparsePoly SparsePoly::one(const TruncationProfile& profile) {
    return constant(profile, 1);
}

SparsePoly SparsePoly::constant(const TruncationProfile& profile, const Rational& c) {
    return monomial(profile, Exponents(static_cast<std::size_t>(profile.arity()), 0), c);
}

SparsePoly SparsePoly::monomial(const TruncationProfile& profile, const Exponents& e,
                                const Rational& c) {
    SparsePoly p(profile);
    if (e.size() != static_cast<std::size_t>(profile.arity())) {
        throw DomainError("exponent vector arity does not match the ring");
    }
    for (int v : e) {
        if (v < 0) throw DomainError("negative exponent");
    }
    if (c != 0 && profile.admits(e)) {
        p.terms_.emplace(e, c);
    }
    return p;
}

SparsePoly SparsePoly::variable(const TruncationProfile& profile, int index) {
    if (index < 0 || index >= profile.arity()) {
        throw DomainError("variable index out of range");
    }
    Exponents e(static_cast<std::size_t>(profile.arity()), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(profile, e, 1);
}

Rational SparsePoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::constant_term() const {
    return coefficient(Exponents(static_cast<std::size_t>(profile_.arity()), 0));
}

int SparsePoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool SparsePoly::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != d) return false;
    }
    return true;
}

void SparsePoly::insert_term(const Exponents& e, const Rational& c) {
    accumulate(terms_, e, c);
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly result(profile_);
    for (const auto& [e, c] : terms_) result.terms_.emplace(e, -c);
    return result;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    require_same_profile(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    require_same_profile(*this, rhs);
    for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
    return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    return mul(lhs, rhs);
}

SparsePoly mul_serial(const SparsePoly& a, const SparsePoly& b) {
    require_same_profile(a, b);
    const auto& caps = a.profile().caps();
    const std::size_t arity = caps.size();
    SparsePoly result(a.profile());
    Exponents e(arity);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool in_ring = true;
            for (std::size_t v = 0; v < arity; ++v) {
                e[v] = ea[v] + eb[v];
                if (e[v] > caps[v]) {
                    in_ring = false;
                    break;
                }
            }
            if (!in_ring) continue;
            accumulate(result.terms_, e, ca * cb);
        }
    }
    return result;
}

SparsePoly mul_parallel(const SparsePoly& a, const SparsePoly& b) {
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    require_same_profile(a, b);
    const auto& caps = a.profile().caps();
    const std::size_t arity = caps.size();

    std::vector<const std::pair<const Exponents, Rational>*> av;
    av.reserve(a.terms_.size());
    for (const auto& term : a.terms_) av.push_back(&term);
    std::vector<const std::pair<const Exponents, Rational>*> bv;
    bv.reserve(b.terms_.size());
    for (const auto& term : b.terms_) bv.push_back(&term);

    const int nthreads = std::max(1, omp_get_max_threads());
    std::vector<SparsePoly::TermMap> partial(static_cast<std::size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
        Exponents e(arity);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(av.size()); ++i) {
            const auto& [ea, ca] = *av[static_cast<std::size_t>(i)];
            for (const auto* tb : bv) {
                const auto& [eb, cb] = *tb;
                bool in_ring = true;
                for (std::size_t v = 0; v < arity; ++v) {
                    e[v] = ea[v] + eb[v];
                    if (e[v] > caps[v]) {
                        in_ring = false;
                        break;
                    }
                }
                if (!in_ring) continue;
                accumulate(local, e, ca * cb);
            }
        }
    }

    // Cancellation can span slices, so merge first and prune after.
    SparsePoly result(a.profile());
    for (auto& local : partial) {
        for (auto& [e, c] : local) accumulate(result.terms_, e, c);
    }
    return result;
#endif
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
#ifdef _OPENMP
    const std::size_t work = a.terms().size() * b.terms().size();
    if (work >= kParallelWorkThreshold && omp_get_max_threads() > 1) {
        return mul_parallel(a, b);
    }
#endif
    return mul_serial(a, b);
}

SparsePoly pow(const SparsePoly& a, int exponent) {
    if (exponent < 0) throw DomainError("negative polynomial power");
    SparsePoly result = SparsePoly::one(a.profile());
    for (int i = 0; i < exponent; ++i) result = mul(result, a);
    return result;
}

SparsePoly exp_nilpotent(const SparsePoly& a) {
    if (a.constant_term() != 0) {
        throw DomainError("exp requires a nilpotent element (zero constant term)");
    }
    SparsePoly result = SparsePoly::one(a.profile());
    SparsePoly term = SparsePoly::one(a.profile());
    const int bound = a.profile().top_degree();
    for (int m = 1; m <= bound; ++m) {
        term = mul(term, a);
        term *= make_rational(1, m);
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

SparsePoly sqrt_unipotent(const SparsePoly& a) {
    if (a.constant_term() != 1) {
        throw DomainError("square root requires constant term 1");
    }
    const int top = a.profile().top_degree();
    // b_0 = 1, b_d = (a_d - sum_{0<i<d} b_i b_{d-i}) / 2.
    std::vector<SparsePoly> b;
    b.push_back(SparsePoly::one(a.profile()));
    for (int d = 1; d <= top; ++d) {
        SparsePoly piece = graded_piece(a, d);
        for (int i = 1; i < d; ++i) {
            piece -= mul(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(d - i)]);
        }
        piece *= make_rational(1, 2);
        b.push_back(std::move(piece));
    }
    SparsePoly result(a.profile());
    for (const auto& piece : b) result += piece;
    return result;
}

SparsePoly invert_unipotent(const SparsePoly& a) {
    if (a.constant_term() != 1) {
        throw DomainError("inverse requires constant term 1");
    }
    const int top = a.profile().top_degree();
    // b_0 = 1, b_d = -sum_{i=1}^{d} a_i b_{d-i}.
    std::vector<SparsePoly> b;
    b.push_back(SparsePoly::one(a.profile()));
    for (int d = 1; d <= top; ++d) {
        SparsePoly piece(a.profile());
        for (int i = 1; i <= d; ++i) {
            piece -= mul(graded_piece(a, i), b[static_cast<std::size_t>(d - i)]);
        }
        b.push_back(std::move(piece));
    }
    SparsePoly result(a.profile());
    for (const auto& piece : b) result += piece;
    return result;
}

SparsePoly graded_piece(const SparsePoly& a, int d) {
    if (d < 0) throw DomainError("graded piece of negative degree");
    SparsePoly result(a.profile());
    for (const auto& [e, c] : a.terms()) {
        if (total_degree(e) == d) result += SparsePoly::monomial(a.profile(), e, c);
    }
    return result;
}

std::string to_string(const SparsePoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;

        const bool constant = total_degree(e) == 0;
        if (coeff != 1 || constant) {
            os << coeff;
            if (!constant) os << "*";
        }
        bool first_var = true;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "h" << (v + 1);
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

namespace {

using detail::Lexer;
using detail::Token;

class PolyParser {
public:
    PolyParser(const std::string& text, const TruncationProfile& profile)
        : lexer_(text), profile_(profile) {}

    SparsePoly parse() {
        SparsePoly result = parse_sum();
        if (lexer_.peek().kind != Token::Kind::End) {
            throw ParseError("unexpected token " + Lexer::describe(lexer_.peek()),
                             lexer_.peek().pos);
        }
        return result;
    }

private:
    SparsePoly parse_sum() {
        SparsePoly result = parse_product();
        while (true) {
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::Plus) {
                lexer_.next();
                result += parse_product();
            } else if (t.kind == Token::Kind::Minus) {
                lexer_.next();
                result -= parse_product();
            } else {
                return result;
            }
        }
    }

    SparsePoly parse_product() {
        SparsePoly result = parse_signed();
        while (true) {
            const Token& t = lexer_.peek();
            if (t.kind == Token::Kind::Star) {
                lexer_.next();
                result = mul(result, parse_signed());
            } else if (t.kind == Token::Kind::Slash) {
                Token slash = lexer_.next();
                SparsePoly divisor = parse_signed();
                if (divisor.degree() > 0) {
                    throw ParseError("division by a non-constant", slash.pos);
                }
                Rational c = divisor.constant_term();
                if (c == 0) {
                    throw ParseError("division by zero", slash.pos);
                }
                result *= Rational(1) / c;
            } else {
                return result;
            }
        }
    }

    SparsePoly parse_signed() {
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.next();
            return -parse_signed();
        }
        if (lexer_.peek().kind == Token::Kind::Plus) {
            lexer_.next();
            return parse_signed();
        }
        return parse_power();
    }

    SparsePoly parse_power() {
        SparsePoly base = parse_atom();
        if (lexer_.peek().kind == Token::Kind::Caret) {
            lexer_.next();
            Token e = lexer_.expect(Token::Kind::Integer, "a nonnegative integer exponent");
            base = pow(base, std::stoi(e.text));
        }
        return base;
    }

    SparsePoly parse_atom() {
        const Token t = lexer_.next();
        switch (t.kind) {
            case Token::Kind::Integer:
                return SparsePoly::constant(profile_, Rational(Integer(t.text)));
            case Token::Kind::LParen: {
                SparsePoly inner = parse_sum();
                lexer_.expect(Token::Kind::RParen, "')'");
                return inner;
            }
            case Token::Kind::Ident:
                return variable_from(t);
            default:
                throw ParseError("unexpected token " + Lexer::describe(t), t.pos);
        }
    }

    SparsePoly variable_from(const Token& t) {
        if (t.text == "h" && profile_.arity() == 1) {
            return SparsePoly::variable(profile_, 0);
        }
        if (t.text.size() >= 2 && t.text[0] == 'h') {
            bool digits = true;
            for (std::size_t i = 1; i < t.text.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) digits = false;
            }
            if (digits) {
                int index = std::stoi(t.text.substr(1)) - 1;
                if (index < 0 || index >= profile_.arity()) {
                    throw ParseError("variable '" + t.text + "' out of range for a ring with " +
                                         std::to_string(profile_.arity()) + " variable(s)",
                                     t.pos);
                }
                return SparsePoly::variable(profile_, index);
            }
        }
        throw ParseError("unknown variable '" + t.text + "'", t.pos);
    }

    Lexer lexer_;
    TruncationProfile profile_;
};

}  // namespace

SparsePoly parse_polynomial(const std::string& text, const TruncationProfile& profile) {
    return PolyParser(text, profile).parse();
}

std::vector<Exponents> profile_box(const TruncationProfile& profile) {
    std::vector<Exponents> box;
    Exponents e(static_cast<std::size_t>(profile.arity()), 0);
    while (true) {
        box.push_back(e);
        int v = profile.arity() - 1;
        while (v >= 0 && e[static_cast<std::size_t>(v)] == profile.cap(v)) {
            e[static_cast<std::size_t>(v)] = 0;
            --v;
        }
        if (v < 0) break;
        ++e[static_cast<std::size_t>(v)];
    }
    std::sort(box.begin(), box.end());
    return box;
}

std::vector<Exponents> monomials_of_degree(const TruncationProfile& profile, int d) {
    std::vector<Exponents> result;
    for (auto& e : profile_box(profile)) {
        if (total_degree(e) == d) result.push_back(std::move(e));
    }
    return result;
}

}  // namespace chowmot
