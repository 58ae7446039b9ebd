#include "chowmot/chow.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace chowmot {

Variety::Variety(std::vector<int> factors) : factors_(std::move(factors)) {
    for (int n : factors_) {
        if (n < 0) throw DomainError("projective factor of negative dimension");
    }
}

int Variety::dimension() const {
    return std::accumulate(factors_.begin(), factors_.end(), 0);
}

Variety product(const Variety& a, const Variety& b) {
    std::vector<int> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    return Variety(std::move(factors));
}

Variety product(const std::vector<Variety>& factors) {
    Variety result;
    for (const auto& x : factors) result = product(result, x);
    return result;
}

std::string to_string(const Variety& x) {
    if (x.factor_count() == 0) return "pt";
    std::ostringstream os;
    for (int i = 0; i < x.factor_count(); ++i) {
        if (i > 0) os << "x";
        os << "P" << x.factor(i);
    }
    return os.str();
}

Variety parse_variety(const std::string& text) {
    if (text == "pt") return Variety::point();
    std::vector<int> factors;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != 'P') {
            throw ParseError("expected 'P' in variety '" + text + "'", i);
        }
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) {
            throw ParseError("expected a dimension after 'P' in variety '" + text + "'", i);
        }
        factors.push_back(std::stoi(text.substr(start, i - start)));
        if (i < text.size()) {
            if (text[i] != 'x') {
                throw ParseError("expected 'x' between factors in variety '" + text + "'", i);
            }
            ++i;
            if (i == text.size()) {
                throw ParseError("dangling 'x' in variety '" + text + "'", i);
            }
        }
    }
    if (factors.empty()) {
        throw ParseError("empty variety '" + text + "'", 0);
    }
    return Variety(std::move(factors));
}

ChowClass::ChowClass(Variety variety, SparsePoly poly)
    : variety_(std::move(variety)), poly_(std::move(poly)) {
    if (poly_.profile() != variety_.profile()) {
        throw ProfileMismatchError("class polynomial does not match the variety's Chow ring");
    }
}

ChowClass ChowClass::zero(const Variety& x) {
    return ChowClass(x, SparsePoly::zero(x.profile()));
}

ChowClass ChowClass::one(const Variety& x) {
    return ChowClass(x, SparsePoly::one(x.profile()));
}

ChowClass ChowClass::monomial(const Variety& x, const Exponents& e, const Rational& c) {
    return ChowClass(x, SparsePoly::monomial(x.profile(), e, c));
}

namespace {

void require_same_variety(const ChowClass& a, const ChowClass& b) {
    if (a.variety() != b.variety()) {
        throw VarietyMismatchError("classes live on different varieties");
    }
}

}  // namespace

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
    require_same_variety(*this, rhs);
    poly_ += rhs.poly_;
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
    require_same_variety(*this, rhs);
    poly_ -= rhs.poly_;
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& c) {
    poly_ *= c;
    return *this;
}

ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs) {
    require_same_variety(lhs, rhs);
    return ChowClass(lhs.variety(), mul(lhs.poly(), rhs.poly()));
}

ChowClass graded_piece(const ChowClass& c, int d) {
    return ChowClass(c.variety(), graded_piece(c.poly(), d));
}

std::string to_string(const ChowClass& c) {
    return to_string(c.poly());
}

ChowClass parse_chow_class(const std::string& text, const Variety& x) {
    return ChowClass(x, parse_polynomial(text, x.profile()));
}

Projection::Projection(Variety source, std::vector<int> kept)
    : source_(std::move(source)), kept_(std::move(kept)) {
    for (std::size_t i = 0; i < kept_.size(); ++i) {
        if (kept_[i] < 0 || kept_[i] >= source_.factor_count()) {
            throw DomainError("projection keeps a factor index out of range");
        }
        if (i > 0 && kept_[i] <= kept_[i - 1]) {
            throw DomainError("projection factor indices must be strictly increasing");
        }
    }
    std::vector<int> target_factors;
    target_factors.reserve(kept_.size());
    std::size_t j = 0;
    for (int i = 0; i < source_.factor_count(); ++i) {
        if (j < kept_.size() && kept_[j] == i) {
            target_factors.push_back(source_.factor(i));
            ++j;
        } else {
            dropped_.push_back(i);
        }
    }
    target_ = Variety(std::move(target_factors));
}

Projection Projection::keep_all(const Variety& source) {
    std::vector<int> all(static_cast<std::size_t>(source.factor_count()));
    std::iota(all.begin(), all.end(), 0);
    return Projection(source, std::move(all));
}

int Projection::dropped_dimension() const {
    int d = 0;
    for (int i : dropped_) d += source_.factor(i);
    return d;
}

ChowClass pullback(const Projection& p, const ChowClass& c) {
    if (c.variety() != p.target()) {
        throw VarietyMismatchError("pullback input must live on the projection's target");
    }
    const auto profile = p.source().profile();
    SparsePoly result(profile);
    for (const auto& [e, coeff] : c.poly().terms()) {
        Exponents lifted(static_cast<std::size_t>(p.source().factor_count()), 0);
        for (std::size_t j = 0; j < e.size(); ++j) {
            lifted[static_cast<std::size_t>(p.kept()[j])] = e[j];
        }
        result += SparsePoly::monomial(profile, lifted, coeff);
    }
    return ChowClass(p.source(), std::move(result));
}

ChowClass pushforward(const Projection& p, const ChowClass& c) {
    if (c.variety() != p.source()) {
        throw VarietyMismatchError("pushforward input must live on the projection's source");
    }
    const auto profile = p.target().profile();
    SparsePoly result(profile);
    for (const auto& [e, coeff] : c.poly().terms()) {
        bool survives = true;
        for (int i : p.dropped()) {
            if (e[static_cast<std::size_t>(i)] != p.source().factor(i)) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;
        Exponents projected;
        projected.reserve(p.kept().size());
        for (int i : p.kept()) projected.push_back(e[static_cast<std::size_t>(i)]);
        result += SparsePoly::monomial(profile, projected, coeff);
    }
    return ChowClass(p.target(), std::move(result));
}

Rational degree(const ChowClass& c) {
    return c.poly().coefficient(c.variety().profile().top());
}

ChowClass diagonal(const Variety& x) {
    const Variety xx = product(x, x);
    const auto profile = xx.profile();
    const int k = x.factor_count();
    SparsePoly result = SparsePoly::one(profile);
    for (int i = 0; i < k; ++i) {
        SparsePoly factor_sum(profile);
        for (int j = 0; j <= x.factor(i); ++j) {
            Exponents e(static_cast<std::size_t>(2 * k), 0);
            e[static_cast<std::size_t>(i)] = j;
            e[static_cast<std::size_t>(k + i)] = x.factor(i) - j;
            factor_sum += SparsePoly::monomial(profile, e, 1);
        }
        result = mul(result, factor_sum);
    }
    return ChowClass(xx, std::move(result));
}

}  // namespace chowmot
