#include "chowmot/ktheory.hpp"

#include <sstream>

#include "lexer.hpp"

namespace chowmot {

namespace {

void require_same_variety(const KClass& a, const KClass& b) {
    if (a.variety() != b.variety()) {
        throw VarietyMismatchError("K-classes live on different varieties");
    }
}

bool in_box(const Variety& x, const Multidegree& d) {
    if (d.size() != static_cast<std::size_t>(x.factor_count())) return false;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0 || d[i] > x.factor(static_cast<int>(i))) return false;
    }
    return true;
}

/// exp of the nilpotent divisor class sum_i d_i h_i.
SparsePoly line_bundle_character(const Variety& x, const Multidegree& d) {
    const auto profile = x.profile();
    SparsePoly divisor(profile);
    for (int i = 0; i < x.factor_count(); ++i) {
        divisor += SparsePoly::variable(profile, i) *
                   Rational(d[static_cast<std::size_t>(i)]);
    }
    return exp_nilpotent(divisor);
}

/// prod_i ([O(e_i basis twist)] - [O])^{m_i} expanded in the box basis.
/// Its Chern character is prod_i (exp(h_i) - 1)^{m_i}, whose lowest graded
/// piece is exactly h^m: the unitriangular ladder ch_inverse climbs.
KClass difference_basis_element(const Variety& x, const Exponents& m) {
    KClass result(x);
    Multidegree d(m.size(), 0);
    while (true) {
        Rational coeff = 1;
        int parity = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            coeff *= Rational(binomial(m[i], d[i]));
            parity += m[i] - d[i];
        }
        if (parity % 2 != 0) coeff = -coeff;
        result.add_box_term(d, coeff);
        std::size_t v = m.size();
        while (v > 0 && d[v - 1] == m[v - 1]) {
            d[v - 1] = 0;
            --v;
        }
        if (v == 0) break;
        ++d[v - 1];
    }
    return result;
}

/// Truncated series h/(1 - exp(-h)) in the given variable, degree <= cap.
/// Coefficient of h^m is (-1)^m B_m / m!.
SparsePoly todd_factor(const TruncationProfile& profile, int variable, int cap) {
    SparsePoly series(profile);
    for (int m = 0; m <= cap; ++m) {
        Rational coeff = bernoulli(m) / Rational(factorial(m));
        if (m % 2 != 0) coeff = -coeff;
        if (coeff == 0) continue;
        Exponents e(static_cast<std::size_t>(profile.arity()), 0);
        e[static_cast<std::size_t>(variable)] = m;
        series += SparsePoly::monomial(profile, e, coeff);
    }
    return series;
}

}  // namespace

KClass::KClass(Variety variety) : variety_(std::move(variety)) {}

KClass KClass::structure_sheaf(const Variety& x) {
    KClass e(x);
    e.add_box_term(Multidegree(static_cast<std::size_t>(x.factor_count()), 0), 1);
    return e;
}

KClass KClass::line_bundle(const Variety& x, const Multidegree& d) {
    if (d.size() != static_cast<std::size_t>(x.factor_count())) {
        throw DomainError("multidegree arity does not match the variety");
    }
    if (in_box(x, d)) {
        KClass e(x);
        e.add_box_term(d, 1);
        return e;
    }
    return ch_inverse(ChowClass(x, line_bundle_character(x, d)));
}

Rational KClass::rank() const {
    Rational r = 0;
    for (const auto& [d, c] : combo_) r += c;
    return r;
}

void KClass::add_box_term(const Multidegree& d, const Rational& c) {
    if (!in_box(variety_, d)) {
        throw InternalError("multidegree outside the basis box");
    }
    if (c == 0) return;
    auto it = combo_.find(d);
    if (it == combo_.end()) {
        combo_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second == 0) combo_.erase(it);
}

KClass KClass::operator-() const {
    KClass result(variety_);
    for (const auto& [d, c] : combo_) result.combo_.emplace(d, -c);
    return result;
}

KClass& KClass::operator+=(const KClass& rhs) {
    require_same_variety(*this, rhs);
    for (const auto& [d, c] : rhs.combo_) add_box_term(d, c);
    return *this;
}

KClass& KClass::operator-=(const KClass& rhs) {
    require_same_variety(*this, rhs);
    for (const auto& [d, c] : rhs.combo_) add_box_term(d, -c);
    return *this;
}

KClass& KClass::operator*=(const Rational& c) {
    if (c == 0) {
        combo_.clear();
        return *this;
    }
    for (auto& [d, coeff] : combo_) coeff *= c;
    return *this;
}

ChowClass ch(const KClass& e) {
    SparsePoly result(e.variety().profile());
    for (const auto& [d, c] : e.combo()) {
        result += line_bundle_character(e.variety(), d) * c;
    }
    return ChowClass(e.variety(), std::move(result));
}

KClass ch_inverse(const ChowClass& c) {
    const Variety& x = c.variety();
    KClass result(x);
    SparsePoly remainder = c.poly();
    for (int d = 0; d <= x.dimension(); ++d) {
        const SparsePoly piece = graded_piece(remainder, d);
        for (const auto& [e, coeff] : piece.terms()) {
            KClass basis = difference_basis_element(x, e);
            result += basis * coeff;
            remainder -= ch(basis).poly() * coeff;
        }
    }
    if (!remainder.is_zero()) {
        throw InternalError("ch_inverse elimination left a nonzero remainder");
    }
    return result;
}

ChowClass todd(const Variety& x) {
    const auto profile = x.profile();
    SparsePoly result = SparsePoly::one(profile);
    for (int i = 0; i < x.factor_count(); ++i) {
        const SparsePoly factor = todd_factor(profile, i, x.factor(i));
        result = mul(result, pow(factor, x.factor(i) + 1));
    }
    return ChowClass(x, std::move(result));
}

KClass tensor(const KClass& e, const KClass& f) {
    require_same_variety(e, f);
    return ch_inverse(ch(e) * ch(f));
}

KClass dual(const KClass& e) {
    ChowClass character = ch(e);
    SparsePoly flipped(character.poly().profile());
    for (const auto& [exps, coeff] : character.poly().terms()) {
        const Rational c = total_degree(exps) % 2 == 0 ? coeff : -coeff;
        flipped += SparsePoly::monomial(character.poly().profile(), exps, c);
    }
    return ch_inverse(ChowClass(e.variety(), std::move(flipped)));
}

Rational euler_pairing(const KClass& e, const KClass& f) {
    require_same_variety(e, f);
    return degree(ch(dual(e)) * ch(f) * todd(e.variety()));
}

KClass k_pullback(const Projection& p, const KClass& e) {
    if (e.variety() != p.target()) {
        throw VarietyMismatchError("K-pullback input must live on the projection's target");
    }
    KClass result(p.source());
    for (const auto& [d, c] : e.combo()) {
        Multidegree lifted(static_cast<std::size_t>(p.source().factor_count()), 0);
        for (std::size_t j = 0; j < d.size(); ++j) {
            lifted[static_cast<std::size_t>(p.kept()[j])] = d[j];
        }
        result.add_box_term(lifted, c);
    }
    return result;
}

KClass grr_pushforward(const Projection& p, const KClass& e) {
    if (e.variety() != p.source()) {
        throw VarietyMismatchError("K-pushforward input must live on the projection's source");
    }
    const auto profile = p.source().profile();
    // Todd class of the relative tangent bundle: the dropped factors only.
    SparsePoly fiber_todd = SparsePoly::one(profile);
    for (int i : p.dropped()) {
        fiber_todd = mul(fiber_todd,
                         pow(todd_factor(profile, i, p.source().factor(i)),
                             p.source().factor(i) + 1));
    }
    ChowClass integrated =
        pushforward(p, ch(e) * ChowClass(p.source(), std::move(fiber_todd)));
    return ch_inverse(integrated);
}

std::string to_string(const KClass& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : e.combo()) {
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
        if (coeff != 1) os << coeff << "*";
        os << "O";
        if (total_degree(d) != 0) {
            os << "(";
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (i > 0) os << ",";
                os << d[i];
            }
            os << ")";
        }
    }
    return os.str();
}

namespace {

using detail::Lexer;
using detail::Token;

class KClassParser {
public:
    KClassParser(const std::string& text, Variety variety)
        : lexer_(text), variety_(std::move(variety)) {}

    KClass parse() {
        KClass result(variety_);
        bool negative = false;
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.next();
            negative = true;
        }
        result += parse_term(negative);
        while (lexer_.peek().kind != Token::Kind::End) {
            const Token t = lexer_.next();
            if (t.kind == Token::Kind::Plus) {
                result += parse_term(false);
            } else if (t.kind == Token::Kind::Minus) {
                result += parse_term(true);
            } else {
                throw ParseError("expected '+' or '-', found " + Lexer::describe(t), t.pos);
            }
        }
        return result;
    }

private:
    // term := [rational '*']? 'O' [ '(' int (',' int)* ')' ]
    KClass parse_term(bool negative) {
        Rational coeff = negative ? -1 : 1;
        if (lexer_.peek().kind == Token::Kind::Integer) {
            coeff *= parse_coefficient();
            lexer_.expect(Token::Kind::Star, "'*' after a coefficient");
        }
        const Token name = lexer_.expect(Token::Kind::Ident, "a line bundle 'O(...)'");
        if (name.text != "O") {
            throw ParseError("unknown sheaf '" + name.text + "'", name.pos);
        }
        Multidegree d(static_cast<std::size_t>(variety_.factor_count()), 0);
        if (lexer_.peek().kind == Token::Kind::LParen) {
            lexer_.next();
            std::vector<int> twists;
            twists.push_back(parse_signed_int());
            while (lexer_.peek().kind == Token::Kind::Comma) {
                lexer_.next();
                twists.push_back(parse_signed_int());
            }
            const Token close = lexer_.expect(Token::Kind::RParen, "')'");
            if (twists.size() != d.size()) {
                throw ParseError("O(...) arity " + std::to_string(twists.size()) +
                                     " does not match variety with " +
                                     std::to_string(d.size()) + " factor(s)",
                                 close.pos);
            }
            d = std::move(twists);
        }
        return KClass::line_bundle(variety_, d) * coeff;
    }

    Rational parse_coefficient() {
        const Token num = lexer_.expect(Token::Kind::Integer, "an integer");
        Rational value{Integer(num.text)};
        if (lexer_.peek().kind == Token::Kind::Slash) {
            lexer_.next();
            const Token den = lexer_.expect(Token::Kind::Integer, "a denominator");
            Integer d(den.text);
            if (d == 0) throw ParseError("zero denominator", den.pos);
            value /= Rational(d);
        }
        return value;
    }

    int parse_signed_int() {
        bool negative = false;
        if (lexer_.peek().kind == Token::Kind::Minus) {
            lexer_.next();
            negative = true;
        }
        const Token t = lexer_.expect(Token::Kind::Integer, "an integer twist");
        int value = std::stoi(t.text);
        return negative ? -value : value;
    }

    Lexer lexer_;
    Variety variety_;
};

}  // namespace

KClass parse_k_class(const std::string& text, const Variety& x) {
    return KClassParser(text, x).parse();
}

}  // namespace chowmot
