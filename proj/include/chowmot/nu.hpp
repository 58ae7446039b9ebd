#pragma once

#include "chowmot/correspondence.hpp"

namespace chowmot {

/// Per-hom-set data for the dictionary between Chow and K0 correspondences:
/// the square root of the Todd class of source x target, computed once and
/// immutable afterwards.
class NuContext {
public:
    NuContext(Variety source, Variety target);

    const Variety& source() const { return source_; }
    const Variety& target() const { return target_; }
    /// Unique unipotent square root; its square is todd(source x target).
    const ChowClass& sqrt_todd() const { return sqrt_todd_; }

private:
    Variety source_;
    Variety target_;
    ChowClass sqrt_todd_;
};

/// The hom-map of the comparison functor from Chow correspondences (modulo
/// Tate twist) to K0 correspondences: the unique K-class E with
/// ch(E) * sqrt(td) = kernel.
KCorrespondence nu_hom(const NuContext& ctx, const ChowCorrespondence& c);
KCorrespondence nu_hom(const ChowCorrespondence& c);

/// The forward Riemann-Roch isomorphism: kernel = ch(E) * sqrt(td). Mutually
/// inverse with nu_hom.
ChowCorrespondence nu_inverse_hom(const NuContext& ctx, const KCorrespondence& e);
ChowCorrespondence nu_inverse_hom(const KCorrespondence& e);

/// The identity of K-composition, defined as the image of the diagonal so the
/// unit law is a theorem under test rather than an axiom.
KCorrespondence k_identity(const Variety& x);

/// The commutative-square check: does transporting the convolution of two
/// Chow kernels agree with the K-convolution of their transports, exactly?
bool check_nu_functorial(const ChowCorrespondence& a, const ChowCorrespondence& b);

}  // namespace chowmot
