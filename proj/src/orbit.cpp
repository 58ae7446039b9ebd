#include "chowmot/orbit.hpp"

namespace chowmot {

bool is_tate_type(const MotiveSum& s) {
    for (const auto& m : s.summands()) {
        if (!m.is_twisted_unit()) return false;
    }
    return true;
}

namespace {

void require_tate(const MotiveSum& s) {
    if (!is_tate_type(s)) {
        throw UnsupportedObjectError(
            "orbit-isomorphism decision supports only Tate-type sums (twisted units); "
            "decompose the motive first");
    }
}

}  // namespace

std::pair<MotiveGraded, MotiveGraded> tate_orbit_witnesses(const MotiveSum& m,
                                                           const MotiveSum& n) {
    require_tate(m);
    require_tate(n);
    if (m.size() != n.size()) {
        throw DomainError("witnesses require sums of equal size");
    }
    MotiveGraded f{m, n, {}};
    MotiveGraded g{n, m, {}};
    for (int k = 0; k < m.size(); ++k) {
        const Motive& a = m.summand(k);
        const Motive& b = n.summand(k);
        // Hom(1(s), T^i(1(t))) = CH^(t+i-s)(pt) is Q for i = s - t, else 0.
        {
            const int i = a.twist() - b.twist();
            MotiveMatrix component = MotiveMatrix::zero(m, n.twisted(i));
            component.set_entry(k, k,
                                MotiveMorphism::make(a, b.twisted(i),
                                                     ChowClass::one(Variety::point())));
            f.add_component(i, component);
        }
        {
            const int i = b.twist() - a.twist();
            MotiveMatrix component = MotiveMatrix::zero(n, m.twisted(i));
            component.set_entry(k, k,
                                MotiveMorphism::make(b, a.twisted(i),
                                                     ChowClass::one(Variety::point())));
            g.add_component(i, component);
        }
    }
    return {std::move(f), std::move(g)};
}

bool orbit_iso_tate(const MotiveSum& m, const MotiveSum& n) {
    require_tate(m);
    require_tate(n);
    if (m.size() != n.size()) {
        // Hom components are at most one-dimensional per summand pair, so no
        // pair of graded morphisms can compose to both identities.
        return false;
    }
    auto [f, g] = tate_orbit_witnesses(m, n);
    const bool left = orbit_compose(f, g) == orbit_identity<MotiveCategory>(m);
    const bool right = orbit_compose(g, f) == orbit_identity<MotiveCategory>(n);
    if (!left || !right) {
        throw InternalError("tate orbit witnesses failed to compose to the identities");
    }
    return true;
}

int tate_sum_class(const MotiveSum& m) {
    require_tate(m);
    return m.size();
}

}  // namespace chowmot
