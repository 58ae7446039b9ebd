#pragma once

#include <string>

#include "chowmot/ktheory.hpp"

namespace chowmot {

/// A class on X x Y regarded as a generalized morphism X -> Y. Variables of
/// the kernel are split into the source block followed by the target block.
class ChowCorrespondence {
public:
    ChowCorrespondence(Variety source, Variety target, ChowClass kernel);

    /// The diagonal class: the identity of the correspondence category.
    static ChowCorrespondence identity(const Variety& x);
    static ChowCorrespondence zero(const Variety& source, const Variety& target);

    const Variety& source() const { return source_; }
    const Variety& target() const { return target_; }
    const ChowClass& kernel() const { return kernel_; }

    ChowCorrespondence& operator+=(const ChowCorrespondence& rhs);
    ChowCorrespondence& operator*=(const Rational& c);
    friend ChowCorrespondence operator+(ChowCorrespondence lhs, const ChowCorrespondence& rhs) {
        return lhs += rhs;
    }
    friend ChowCorrespondence operator*(ChowCorrespondence lhs, const Rational& c) {
        return lhs *= c;
    }
    friend ChowCorrespondence operator*(const Rational& c, ChowCorrespondence rhs) {
        return rhs *= c;
    }

    bool operator==(const ChowCorrespondence&) const = default;

private:
    Variety source_;
    Variety target_;
    ChowClass kernel_;
};

/// The K0 shadow of a kernel on X x Y.
class KCorrespondence {
public:
    KCorrespondence(Variety source, Variety target, KClass kernel);

    const Variety& source() const { return source_; }
    const Variety& target() const { return target_; }
    const KClass& kernel() const { return kernel_; }

    KCorrespondence& operator+=(const KCorrespondence& rhs);
    KCorrespondence& operator*=(const Rational& c);
    friend KCorrespondence operator+(KCorrespondence lhs, const KCorrespondence& rhs) {
        return lhs += rhs;
    }
    friend KCorrespondence operator*(KCorrespondence lhs, const Rational& c) {
        return lhs *= c;
    }

    bool operator==(const KCorrespondence&) const = default;

private:
    Variety source_;
    Variety target_;
    KClass kernel_;
};

/// Convolution a then b: push forward along X x Y x Z -> X x Z the product of
/// the two pulled-back kernels.
ChowCorrespondence compose(const ChowCorrespondence& a, const ChowCorrespondence& b);

/// Same convolution at K0, with the Riemann-Roch pushforward over the middle
/// factor.
KCorrespondence compose(const KCorrespondence& a, const KCorrespondence& b);

/// The action on Chow groups of the functor the kernel represents:
/// alpha -> pushforward_Y(kernel * pullback_X(alpha)).
ChowClass fm_action(const ChowCorrespondence& a, const ChowClass& alpha);

/// "corr P1 -> P1 : h1 + h2"
std::string to_string(const ChowCorrespondence& a);

}  // namespace chowmot
