#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowmot/correspondence.hpp"

namespace chowmot {

// Conventions, fixed once for the whole library:
//   * the motive functor is covariant and morphisms compose left to right
//     through kernel convolution (f then g);
//   * Hom((X,p,a), (Y,q,b)) sits inside CH^(dim X + b - a)(X x Y), absorbed
//     by the projectors on both sides;
//   * the Tate twist acts by (X,p,m) -> (X,p,m+1); the Lefschetz motive is
//     the twisted unit (pt, 1, -1).

/// True when the endo-correspondence composes with itself to itself, exactly.
bool is_idempotent(const ChowCorrespondence& p);

/// A Chow motive (X, p, m): a variety, an idempotent degree-dim(X) projector
/// and a Tate twist. Validated on construction.
class Motive {
public:
    Motive(Variety variety, ChowCorrespondence projector, int twist);

    /// The twisted unit motive 1(twist) = (pt, 1, twist).
    static Motive unit(int twist = 0);
    /// (X, diagonal, twist): the full motive of the variety.
    static Motive of_variety(const Variety& x, int twist = 0);

    const Variety& variety() const { return variety_; }
    const ChowCorrespondence& projector() const { return projector_; }
    int twist() const { return twist_; }

    Motive twisted(int by) const { return Motive(variety_, projector_, twist_ + by); }

    /// True for twisted unit motives: the Tate-type building blocks.
    bool is_twisted_unit() const;

    bool operator==(const Motive&) const = default;

private:
    Variety variety_;
    ChowCorrespondence projector_;
    int twist_;
};

/// A morphism of motives: a projector-absorbed class on X x Y, homogeneous of
/// degree dim X + to.twist - from.twist.
class MotiveMorphism {
public:
    /// Absorbs raw through the two projectors; raw must be homogeneous of the
    /// hom degree (the zero class always qualifies).
    static MotiveMorphism make(Motive from, Motive to, const ChowClass& raw);
    static MotiveMorphism zero(Motive from, Motive to);
    /// The projector itself, acting as the identity of the motive.
    static MotiveMorphism identity(const Motive& m);

    const Motive& from() const { return from_; }
    const Motive& to() const { return to_; }
    const ChowClass& cls() const { return cls_; }
    bool is_zero() const { return cls_.is_zero(); }

    MotiveMorphism& operator+=(const MotiveMorphism& rhs);
    MotiveMorphism& operator*=(const Rational& c);
    friend MotiveMorphism operator+(MotiveMorphism lhs, const MotiveMorphism& rhs) {
        return lhs += rhs;
    }
    friend MotiveMorphism operator*(MotiveMorphism lhs, const Rational& c) { return lhs *= c; }
    friend MotiveMorphism operator*(const Rational& c, MotiveMorphism rhs) { return rhs *= c; }

    /// Same endpoints after a twist shift: classes are untouched because the
    /// hom degree only depends on the twist difference.
    MotiveMorphism twisted(int by) const;

    bool operator==(const MotiveMorphism&) const = default;

private:
    MotiveMorphism(Motive from, Motive to, ChowClass cls);

    Motive from_;
    Motive to_;
    ChowClass cls_;
};

/// f then g.
MotiveMorphism compose(const MotiveMorphism& f, const MotiveMorphism& g);

/// True when g . f and f . g are the identities of the two endpoints.
bool check_iso_pair(const MotiveMorphism& f, const MotiveMorphism& g);

/// A summand of the motive of a product of projective spaces: the projector,
/// the twisted unit it is isomorphic to, and the mutually inverse witnesses.
struct DecompositionPiece {
    Motive summand;
    Motive tate;                 // (pt, 1, -|d|)
    MotiveMorphism to_tate;      // summand -> tate
    MotiveMorphism from_tate;    // tate -> summand
};

/// The full box-indexed decomposition of (X, diagonal, 0) for a product of
/// projective spaces: projectors prod_i h_i^(n_i - d_i) h_(k+i)^(d_i) with
/// witnesses to (pt, 1, -|d|). Orthogonality and the witness identities are
/// theorems checked by the test suite, not assumptions.
std::vector<DecompositionPiece> decompose_product(const Variety& x);

/// decompose_product for a single P^n: projectors h1^(n-i) h2^i, i = 0..n.
std::vector<DecompositionPiece> decompose_projective(int n);

/// Basis of Hom(m, n): every box monomial of the hom degree pushed through
/// both projectors, then row-reduced over Q. Deterministic order (pivots
/// ascending in the lexicographic monomial order).
std::vector<ChowClass> hom_space(const Motive& m, const Motive& n);

/// A formal finite direct sum of motives.
class MotiveSum {
public:
    MotiveSum() = default;
    explicit MotiveSum(std::vector<Motive> summands) : summands_(std::move(summands)) {}

    const std::vector<Motive>& summands() const { return summands_; }
    int size() const { return static_cast<int>(summands_.size()); }
    const Motive& summand(int i) const { return summands_[static_cast<std::size_t>(i)]; }

    MotiveSum twisted(int by) const;

    bool operator==(const MotiveSum&) const = default;

private:
    std::vector<Motive> summands_;
};

/// A morphism between direct sums: a matrix of motive morphisms,
/// entry(j, i) : from[i] -> to[j]. Composition is matrix product.
class MotiveMatrix {
public:
    static MotiveMatrix zero(MotiveSum from, MotiveSum to);
    static MotiveMatrix identity(const MotiveSum& s);

    const MotiveSum& from() const { return from_; }
    const MotiveSum& to() const { return to_; }
    const MotiveMorphism& entry(int row, int col) const;
    void set_entry(int row, int col, MotiveMorphism f);

    bool is_zero() const;

    MotiveMatrix& operator+=(const MotiveMatrix& rhs);
    friend MotiveMatrix operator+(MotiveMatrix lhs, const MotiveMatrix& rhs) {
        return lhs += rhs;
    }

    MotiveMatrix twisted(int by) const;

    bool operator==(const MotiveMatrix&) const = default;

private:
    MotiveMatrix() = default;

    MotiveSum from_;
    MotiveSum to_;
    std::vector<std::vector<MotiveMorphism>> entries_;  // [row][col]
};

/// f then g, as matrices.
MotiveMatrix compose(const MotiveMatrix& f, const MotiveMatrix& g);

/// The verified Tate-type form of the motive of a product of projective
/// spaces: decomposes it, checks that the witness pairs compose to the
/// identities and that the projectors sum to the diagonal, then returns the
/// direct sum of the twisted units. Throws InternalError when a check fails.
MotiveSum verified_tate_form(const Variety& x);

/// "1", "1(-2)", or "M(P2; pi=...; twist=0)".
std::string to_string(const Motive& m);
std::string to_string(const MotiveSum& s);

}  // namespace chowmot
