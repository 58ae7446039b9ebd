#include "chowmot/rng.hpp"

namespace chowmot {

std::uint64_t Rng::next() {
    // splitmix64 (Vigna, public domain).
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int Rng::range(int lo, int hi) {
    if (hi < lo) throw DomainError("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

std::uint64_t Rng::mix(std::uint64_t a, std::uint64_t b) {
    Rng r(a ^ (0x9E3779B97F4A7C15ull + (b << 6) + (b >> 2)));
    r.next();
    return r.next() ^ b;
}

Rational Rng::small_rational() {
    int num = 0;
    while (num == 0) num = range(-9, 9);
    const int den = range(1, 9);
    return make_rational(num, den);
}

namespace {

Exponents random_exponents(Rng& rng, const TruncationProfile& profile) {
    Exponents e(static_cast<std::size_t>(profile.arity()));
    for (int i = 0; i < profile.arity(); ++i) {
        e[static_cast<std::size_t>(i)] = rng.range(0, profile.cap(i));
    }
    return e;
}

}  // namespace

SparsePoly random_poly(Rng& rng, const TruncationProfile& profile, int max_terms) {
    SparsePoly p(profile);
    const int terms = rng.range(1, std::max(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        p += SparsePoly::monomial(profile, random_exponents(rng, profile),
                                  rng.small_rational());
    }
    return p;
}

SparsePoly random_nilpotent(Rng& rng, const TruncationProfile& profile, int max_terms) {
    SparsePoly p = random_poly(rng, profile, max_terms);
    const Rational c = p.constant_term();
    if (c != 0) p -= SparsePoly::constant(profile, c);
    return p;
}

SparsePoly random_unipotent(Rng& rng, const TruncationProfile& profile, int max_terms) {
    return SparsePoly::one(profile) + random_nilpotent(rng, profile, max_terms);
}

SparsePoly random_homogeneous(Rng& rng, const TruncationProfile& profile, int d,
                              int max_terms) {
    const auto monomials = monomials_of_degree(profile, d);
    SparsePoly p(profile);
    if (monomials.empty()) return p;
    const int terms = rng.range(1, std::max(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        const auto& e = monomials[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(monomials.size()) - 1))];
        p += SparsePoly::monomial(profile, e, rng.small_rational());
    }
    return p;
}

ChowClass random_chow_class(Rng& rng, const Variety& x, int max_terms) {
    return ChowClass(x, random_poly(rng, x.profile(), max_terms));
}

KClass random_k_class(Rng& rng, const Variety& x, int max_terms) {
    KClass e(x);
    const int terms = rng.range(1, std::max(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        e.add_box_term(random_exponents(rng, x.profile()), rng.small_rational());
    }
    return e;
}

ChowCorrespondence random_correspondence(Rng& rng, const Variety& source,
                                         const Variety& target, int max_terms) {
    return ChowCorrespondence(source, target,
                              random_chow_class(rng, product(source, target), max_terms));
}

KCorrespondence random_k_correspondence(Rng& rng, const Variety& source,
                                        const Variety& target, int max_terms) {
    return KCorrespondence(source, target,
                           random_k_class(rng, product(source, target), max_terms));
}

}  // namespace chowmot
