#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowmot/chow.hpp"

namespace chowmot {

/// Twist vector of a line bundle O(d1,...,dk), one entry per factor.
using Multidegree = std::vector<int>;

/// An element of K0(X) tensor Q in the line-bundle basis
/// { O(d) : 0 <= d_i <= n_i }. The box multidegrees form a basis, so the
/// representation is unique and equality is decidable; line bundles outside
/// the box are normalized through the Chern character, which is exact.
class KClass {
public:
    explicit KClass(Variety variety);

    static KClass zero(const Variety& x) { return KClass(x); }
    /// [O], the unit of the tensor product.
    static KClass structure_sheaf(const Variety& x);
    /// [O(d)] for an arbitrary integer multidegree, normalized into the box.
    static KClass line_bundle(const Variety& x, const Multidegree& d);

    const Variety& variety() const { return variety_; }
    const std::map<Multidegree, Rational>& combo() const { return combo_; }
    bool is_zero() const { return combo_.empty(); }

    /// Sum of the coefficients.
    Rational rank() const;

    KClass operator-() const;
    KClass& operator+=(const KClass& rhs);
    KClass& operator-=(const KClass& rhs);
    KClass& operator*=(const Rational& c);

    friend KClass operator+(KClass lhs, const KClass& rhs) { return lhs += rhs; }
    friend KClass operator-(KClass lhs, const KClass& rhs) { return lhs -= rhs; }
    friend KClass operator*(KClass lhs, const Rational& c) { return lhs *= c; }
    friend KClass operator*(const Rational& c, KClass rhs) { return rhs *= c; }

    bool operator==(const KClass&) const = default;

    /// In-box accumulation used by the K-theory routines.
    void add_box_term(const Multidegree& d, const Rational& c);

private:
    Variety variety_;
    std::map<Multidegree, Rational> combo_;
};

/// Chern character: [O(d)] -> exp(sum_i d_i h_i). A ring isomorphism onto
/// CH*(X, Q) for the varieties in scope.
ChowClass ch(const KClass& e);

/// Inverse of ch, by triangular elimination from total degree 0 upward in the
/// difference basis prod_i ([O(e_i)] - [O])^{m_i}, whose ch has leading term
/// h^m with coefficient 1.
KClass ch_inverse(const ChowClass& c);

/// Todd class of X: prod over factors of (h / (1 - exp(-h)))^(n+1), with
/// exact Bernoulli-number coefficients.
ChowClass todd(const Variety& x);

/// Tensor product, computed in the Chow ring and normalized back into the
/// box basis: ch_inverse(ch(e) * ch(f)).
KClass tensor(const KClass& e, const KClass& f);

/// Dual: negates the odd-degree graded pieces of ch and normalizes.
KClass dual(const KClass& e);

/// chi(X, E^dual tensor F) = degree(ch(dual e) * ch(f) * todd(X)); an integer
/// whenever e and f have integer coefficients.
Rational euler_pairing(const KClass& e, const KClass& f);

/// p^* on K0: re-indexes multidegrees into the retained factors.
KClass k_pullback(const Projection& p, const KClass& e);

/// p_! via Grothendieck-Riemann-Roch:
/// ch_inverse(pushforward(p, ch(e) * td(fiber))), so that
/// ch(p_! e) * td(target) = p_*(ch(e) * td(source)) holds exactly.
KClass grr_pushforward(const Projection& p, const KClass& e);

/// Text form "3*O(1,0) - 1/2*O(0,2) + O"; multidegree arity must match the
/// variety. Out-of-box twists are accepted and normalized.
std::string to_string(const KClass& e);
KClass parse_k_class(const std::string& text, const Variety& x);

}  // namespace chowmot
