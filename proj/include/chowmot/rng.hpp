#pragma once

#include <cstdint>

#include "chowmot/correspondence.hpp"

namespace chowmot {

/// Deterministic splitmix64 stream. Hand-rolled so that seeded sweeps produce
/// identical results on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform-enough integer in [lo, hi], inclusive.
    int range(int lo, int hi);

    bool coin() { return (next() & 1u) != 0; }

    /// Stable substream derivation for per-case seeding.
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b);

    /// Nonzero rational with numerator in [-9, 9] and denominator in [1, 9].
    Rational small_rational();

private:
    std::uint64_t state_;
};

/// Sparse random element: up to max_terms random monomials with small
/// rational coefficients (collisions may cancel, so sparser and occasionally
/// zero results do occur, which is intended).
SparsePoly random_poly(Rng& rng, const TruncationProfile& profile, int max_terms);

/// Random element with zero constant term.
SparsePoly random_nilpotent(Rng& rng, const TruncationProfile& profile, int max_terms);

/// 1 + random nilpotent.
SparsePoly random_unipotent(Rng& rng, const TruncationProfile& profile, int max_terms);

/// Random homogeneous element of total degree d.
SparsePoly random_homogeneous(Rng& rng, const TruncationProfile& profile, int d,
                              int max_terms);

ChowClass random_chow_class(Rng& rng, const Variety& x, int max_terms);

KClass random_k_class(Rng& rng, const Variety& x, int max_terms);

ChowCorrespondence random_correspondence(Rng& rng, const Variety& source,
                                         const Variety& target, int max_terms);

KCorrespondence random_k_correspondence(Rng& rng, const Variety& source,
                                        const Variety& target, int max_terms);

}  // namespace chowmot
