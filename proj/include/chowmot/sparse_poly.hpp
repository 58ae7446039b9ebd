#pragma once

#include <map>
#include <string>
#include <vector>

#include "chowmot/rational.hpp"

namespace chowmot {

/// Exponent vector of a monomial, one entry per ring variable.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Per-variable exponent caps carving the truncated ring
/// Q[h1,...,hk] / (h1^{c1+1}, ..., hk^{ck+1}) out of the polynomial ring.
/// A monomial exceeding any cap is identically zero.
class TruncationProfile {
public:
    TruncationProfile() = default;
    explicit TruncationProfile(std::vector<int> caps);

    int arity() const { return static_cast<int>(caps_.size()); }
    int cap(int variable) const { return caps_[static_cast<std::size_t>(variable)]; }
    const std::vector<int>& caps() const { return caps_; }

    /// Sum of all caps: the largest total degree that survives truncation.
    int top_degree() const;

    /// True when e has the right arity, is nonnegative, and respects every cap.
    bool admits(const Exponents& e) const;

    /// The top monomial exponent (every variable at its cap).
    Exponents top() const { return caps_; }

    bool operator==(const TruncationProfile&) const = default;

private:
    std::vector<int> caps_;
};

/// Element of the truncated ring, stored sparsely as a map from exponent
/// vectors to nonzero rational coefficients. The map's lexicographic key
/// order is the canonical term order for printing; zero coefficients are
/// never stored, so structural equality is mathematical equality.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, Rational>;

    SparsePoly() = default;  // zero in the empty (point) profile
    explicit SparsePoly(TruncationProfile profile) : profile_(std::move(profile)) {}

    static SparsePoly zero(const TruncationProfile& profile);
    static SparsePoly one(const TruncationProfile& profile);
    static SparsePoly constant(const TruncationProfile& profile, const Rational& c);
    /// c * h^e; the zero polynomial when e violates a cap (the truncation ideal).
    static SparsePoly monomial(const TruncationProfile& profile, const Exponents& e,
                               const Rational& c);
    static SparsePoly variable(const TruncationProfile& profile, int index);

    const TruncationProfile& profile() const { return profile_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const;

    /// Largest total degree in the support; -1 for the zero polynomial.
    int degree() const;
    /// True when every term has total degree d (vacuously true for zero).
    bool is_homogeneous(int d) const;

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    SparsePoly& operator*=(const Rational& c);

    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
    friend SparsePoly operator*(SparsePoly lhs, const Rational& c) { return lhs *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly rhs) { return rhs *= c; }
    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);

    bool operator==(const SparsePoly&) const = default;

    friend SparsePoly mul_serial(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly mul_parallel(const SparsePoly& a, const SparsePoly& b);

private:
    void insert_term(const Exponents& e, const Rational& c);

    TruncationProfile profile_;
    TermMap terms_;
};

/// Reference product: single-threaded distributive multiply-accumulate.
SparsePoly mul_serial(const SparsePoly& a, const SparsePoly& b);

/// OpenMP product: threads accumulate disjoint slices of the term-pair grid
/// into private maps which are then merged. Exact arithmetic makes the result
/// independent of the schedule; agrees with mul_serial bit for bit.
SparsePoly mul_parallel(const SparsePoly& a, const SparsePoly& b);

/// Product used by operator*: dispatches to the parallel kernel when the
/// term-pair count is large enough to amortize thread start-up.
SparsePoly mul(const SparsePoly& a, const SparsePoly& b);

SparsePoly pow(const SparsePoly& a, int exponent);

/// sum_{m>=0} a^m / m!; finite because a is nilpotent. Requires zero
/// constant term.
SparsePoly exp_nilpotent(const SparsePoly& a);

/// The unique square root with constant term 1, computed degree by degree.
/// Requires constant term 1.
SparsePoly sqrt_unipotent(const SparsePoly& a);

/// The multiplicative inverse, computed degree by degree. Requires constant
/// term 1.
SparsePoly invert_unipotent(const SparsePoly& a);

/// Sum of the terms of total degree d.
SparsePoly graded_piece(const SparsePoly& a, int d);

/// Canonical text form: terms in ascending lexicographic order joined by
/// " + " / " - ", coefficients as "p/q", variables h1..hk, unit exponents
/// and unit coefficients omitted. Example: "1 + 2*h1 - 1/2*h1*h2^2".
std::string to_string(const SparsePoly& a);

/// Parses a ring expression over the profile's variables: + - * / ^ and
/// parentheses, with / restricted to division by a nonzero constant. Accepts
/// arbitrary whitespace and term order; a superset of the canonical form.
SparsePoly parse_polynomial(const std::string& text, const TruncationProfile& profile);

/// All exponent vectors the profile admits, in lexicographic order.
std::vector<Exponents> profile_box(const TruncationProfile& profile);

/// The admitted exponent vectors of total degree d, in lexicographic order.
std::vector<Exponents> monomials_of_degree(const TruncationProfile& profile, int d);

}  // namespace chowmot
