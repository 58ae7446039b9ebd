#pragma once

#include <concepts>
#include <map>
#include <string>

#include "chowmot/motive.hpp"

namespace chowmot {

/// Interface an additive category with an auto-equivalence T must provide to
/// form an orbit category. Morphism values are assumed to know their own
/// endpoints only through the functions below; the generic code never
/// inspects them directly.
template <typename C>
concept AdditiveCategoryModel = requires(const typename C::Obj& x, const typename C::Obj& y,
                                         const typename C::Mor& f, const typename C::Mor& g,
                                         int i) {
    { C::identity(x) } -> std::convertible_to<typename C::Mor>;
    { C::compose(f, g) } -> std::convertible_to<typename C::Mor>;  // f then g
    { C::add(f, g) } -> std::convertible_to<typename C::Mor>;
    { C::zero(x, y) } -> std::convertible_to<typename C::Mor>;
    { C::is_zero(f) } -> std::convertible_to<bool>;
    { C::twist_obj(x, i) } -> std::convertible_to<typename C::Obj>;  // T^i on objects
    { C::twist_mor(f, i) } -> std::convertible_to<typename C::Mor>;  // T^i on morphisms
};

/// A morphism X -> Y of the orbit category A/T: a finitely supported family
/// of components, the i-th living in Hom_A(X, T^i(Y)). No zero components
/// are stored.
template <typename C>
    requires AdditiveCategoryModel<C>
struct GradedMorphism {
    typename C::Obj from;
    typename C::Obj to;
    std::map<int, typename C::Mor> components;

    void set_component(int i, typename C::Mor f) {
        if (C::is_zero(f)) {
            components.erase(i);
        } else {
            components.insert_or_assign(i, std::move(f));
        }
    }

    void add_component(int i, const typename C::Mor& f) {
        auto it = components.find(i);
        if (it == components.end()) {
            if (!C::is_zero(f)) components.emplace(i, f);
            return;
        }
        it->second = C::add(it->second, f);
        if (C::is_zero(it->second)) components.erase(it);
    }

    bool is_zero() const { return components.empty(); }

    bool operator==(const GradedMorphism&) const = default;
};

/// The canonical functor A -> A/T on morphisms: f in the zeroth component,
/// zero elsewhere.
template <typename C>
GradedMorphism<C> orbit_project(const typename C::Obj& from, const typename C::Obj& to,
                                const typename C::Mor& f) {
    GradedMorphism<C> g{from, to, {}};
    g.set_component(0, f);
    return g;
}

template <typename C>
GradedMorphism<C> orbit_identity(const typename C::Obj& x) {
    return orbit_project<C>(x, x, C::identity(x));
}

template <typename C>
GradedMorphism<C> orbit_add(const GradedMorphism<C>& f, const GradedMorphism<C>& g) {
    if (!(f.from == g.from) || !(f.to == g.to)) {
        throw CompositionError("graded morphism sum requires matching endpoints");
    }
    GradedMorphism<C> sum = f;
    for (const auto& [i, mor] : g.components) sum.add_component(i, mor);
    return sum;
}

/// Composition law of the orbit category: the k-th component of (f then g)
/// is sum over i+j=k of T^i(g_j) after f_i.
template <typename C>
GradedMorphism<C> orbit_compose(const GradedMorphism<C>& f, const GradedMorphism<C>& g) {
    if (!(f.to == g.from)) {
        throw CompositionError("graded morphisms are not composable");
    }
    GradedMorphism<C> result{f.from, g.to, {}};
    for (const auto& [i, fi] : f.components) {
        for (const auto& [j, gj] : g.components) {
            result.add_component(i + j, C::compose(fi, C::twist_mor(gj, i)));
        }
    }
    return result;
}

/// "{ -1: <mor>, 0: <mor> }" using the supplied component printer.
template <typename C, typename Printer>
std::string to_string(const GradedMorphism<C>& f, Printer&& print_mor) {
    if (f.components.empty()) return "{ }";
    std::string out = "{ ";
    bool first = true;
    for (const auto& [i, mor] : f.components) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(i) + ": " + print_mor(mor);
    }
    out += " }";
    return out;
}

/// One-object Q-linear toy category with T the identity functor. Orbit
/// composition over it is Laurent-polynomial multiplication, which pins the
/// convolution law down in isolation.
struct LaurentCategory {
    struct Obj {
        bool operator==(const Obj&) const = default;
    };
    using Mor = Rational;

    static Obj the_object() { return Obj{}; }
    static Mor identity(const Obj&) { return 1; }
    static Mor compose(const Mor& f, const Mor& g) { return f * g; }
    static Mor add(const Mor& f, const Mor& g) { return f + g; }
    static Mor zero(const Obj&, const Obj&) { return 0; }
    static bool is_zero(const Mor& f) { return f == 0; }
    static Obj twist_obj(const Obj& x, int) { return x; }
    static Mor twist_mor(const Mor& f, int) { return f; }
};

using LaurentGraded = GradedMorphism<LaurentCategory>;

/// Chow motives (as finite direct sums) with T the Tate twist.
struct MotiveCategory {
    using Obj = MotiveSum;
    using Mor = MotiveMatrix;

    static Mor identity(const Obj& x) { return MotiveMatrix::identity(x); }
    static Mor compose(const Mor& f, const Mor& g) { return chowmot::compose(f, g); }
    static Mor add(const Mor& f, const Mor& g) { return f + g; }
    static Mor zero(const Obj& x, const Obj& y) { return MotiveMatrix::zero(x, y); }
    static bool is_zero(const Mor& f) { return f.is_zero(); }
    static Obj twist_obj(const Obj& x, int i) { return x.twisted(i); }
    static Mor twist_mor(const Mor& f, int i) { return f.twisted(i); }
};

using MotiveGraded = GradedMorphism<MotiveCategory>;

/// True when every summand is a twisted unit motive.
bool is_tate_type(const MotiveSum& s);

/// Decides isomorphism in the orbit category for Tate-type sums by explicitly
/// building the candidate mutually inverse graded morphisms and composing
/// them with the orbit law. Every twisted unit is orbit-isomorphic to the
/// unit, so the answer is simply an equality of summand counts; the witness
/// construction keeps the decision honest. Throws UnsupportedObjectError on
/// non-Tate input.
bool orbit_iso_tate(const MotiveSum& m, const MotiveSum& n);

/// The canonical invariant of the image of a Tate-type sum in the orbit
/// category: its summand count. Two Tate-sum images are isomorphic exactly
/// when their invariants agree.
int tate_sum_class(const MotiveSum& m);

/// The mutually inverse orbit witnesses between two Tate-type sums of equal
/// size (component of the k-th summand pair concentrated in the degree that
/// shifts one twist to the other).
std::pair<MotiveGraded, MotiveGraded> tate_orbit_witnesses(const MotiveSum& m,
                                                           const MotiveSum& n);

}  // namespace chowmot
