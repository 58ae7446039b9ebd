#pragma once

#include <string>
#include <vector>

#include "chowmot/sparse_poly.hpp"

namespace chowmot {

/// A finite product of projective spaces, recorded by the dimensions of its
/// factors. The empty product is the point.
class Variety {
public:
    Variety() = default;
    explicit Variety(std::vector<int> factors);

    static Variety point() { return Variety(); }
    static Variety projective(int n) { return Variety({n}); }

    int factor_count() const { return static_cast<int>(factors_.size()); }
    int factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& factors() const { return factors_; }

    int dimension() const;

    /// The Chow ring profile: one variable per factor, capped at its dimension.
    TruncationProfile profile() const { return TruncationProfile(factors_); }

    bool operator==(const Variety&) const = default;

private:
    std::vector<int> factors_;
};

Variety product(const Variety& a, const Variety& b);
Variety product(const std::vector<Variety>& factors);

/// "pt", "P2", "P1xP1xP3".
std::string to_string(const Variety& x);
Variety parse_variety(const std::string& text);

/// An element of CH*(X, Q): a polynomial in the hyperplane classes of the
/// factors, truncated at their dimensions.
class ChowClass {
public:
    ChowClass(Variety variety, SparsePoly poly);

    static ChowClass zero(const Variety& x);
    static ChowClass one(const Variety& x);
    static ChowClass monomial(const Variety& x, const Exponents& e, const Rational& c);

    const Variety& variety() const { return variety_; }
    const SparsePoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    ChowClass operator-() const { return ChowClass(variety_, -poly_); }
    ChowClass& operator+=(const ChowClass& rhs);
    ChowClass& operator-=(const ChowClass& rhs);
    ChowClass& operator*=(const Rational& c);

    friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
    friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
    friend ChowClass operator*(ChowClass lhs, const Rational& c) { return lhs *= c; }
    friend ChowClass operator*(const Rational& c, ChowClass rhs) { return rhs *= c; }
    friend ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs);

    bool operator==(const ChowClass&) const = default;

private:
    Variety variety_;
    SparsePoly poly_;
};

ChowClass graded_piece(const ChowClass& c, int d);
std::string to_string(const ChowClass& c);
ChowClass parse_chow_class(const std::string& text, const Variety& x);

/// A projection of a product onto a subset of its factors, recorded by the
/// retained factor indices (strictly increasing).
class Projection {
public:
    Projection(Variety source, std::vector<int> kept);

    static Projection keep_all(const Variety& source);

    const Variety& source() const { return source_; }
    const Variety& target() const { return target_; }
    const std::vector<int>& kept() const { return kept_; }
    const std::vector<int>& dropped() const { return dropped_; }

    /// Total dimension of the dropped factors (the fiber).
    int dropped_dimension() const;

private:
    Variety source_;
    std::vector<int> kept_;
    std::vector<int> dropped_;
    Variety target_;
};

/// Renames the target's variables into the retained source variables: the
/// injective, degree-preserving ring homomorphism p^*.
ChowClass pullback(const Projection& p, const ChowClass& c);

/// Fiber integration p_*: a monomial survives exactly when every dropped
/// variable sits at its top exponent; the degree drops by the fiber dimension.
ChowClass pushforward(const Projection& p, const ChowClass& c);

/// The coefficient of the top monomial: the degree map of CH^dim(X).
Rational degree(const ChowClass& c);

/// The class of the diagonal embedding of X in X x X, with the source factors
/// first and the target factors second. For a single P^n this is
/// sum_i h1^i h2^(n-i); products multiply factorwise.
ChowClass diagonal(const Variety& x);

}  // namespace chowmot
