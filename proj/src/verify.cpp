#include "chowmot/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chowmot/motive.hpp"
#include "chowmot/ncmot.hpp"
#include "chowmot/nu.hpp"
#include "chowmot/orbit.hpp"
#include "chowmot/rng.hpp"

namespace chowmot {

using nlohmann::json;

bool SuiteResult::ok() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.ok(); });
}

int SuiteResult::total_cases() const {
    int n = 0;
    for (const auto& p : properties) n += p.cases;
    return n;
}

int SuiteResult::total_failures() const {
    int n = 0;
    for (const auto& p : properties) n += p.failures;
    return n;
}

json SuiteResult::first_counterexample() const {
    for (const auto& p : properties) {
        if (!p.first_counterexample.is_null()) return p.first_counterexample;
    }
    return nullptr;
}

namespace {

// A case returns nullopt on success or a counterexample payload.
using CaseFn = std::function<std::optional<json>(Rng&)>;

std::uint64_t name_stream(const std::string& name) {
    // FNV-1a, so a property keeps its substream no matter which suite runs it.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed, int cases,
                            const CaseFn& fn) {
    std::vector<std::pair<int, json>> failures;
    const std::uint64_t stream = Rng::mix(seed, name_stream(name));

#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::pair<int, json>> local;
#pragma omp for schedule(dynamic) nowait
        for (int i = 0; i < cases; ++i) {
            Rng rng(Rng::mix(stream, static_cast<std::uint64_t>(i)));
            std::optional<json> cex;
            try {
                cex = fn(rng);
            } catch (const std::exception& ex) {
                cex = json{{"exception", ex.what()}};
            }
            if (cex) local.emplace_back(i, std::move(*cex));
        }
#pragma omp critical
        failures.insert(failures.end(), local.begin(), local.end());
    }
#else
    for (int i = 0; i < cases; ++i) {
        Rng rng(Rng::mix(stream, static_cast<std::uint64_t>(i)));
        std::optional<json> cex;
        try {
            cex = fn(rng);
        } catch (const std::exception& ex) {
            cex = json{{"exception", ex.what()}};
        }
        if (cex) failures.emplace_back(i, std::move(*cex));
    }
#endif

    std::sort(failures.begin(), failures.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    PropertyResult result;
    result.name = name;
    result.cases = cases;
    result.failures = static_cast<int>(failures.size());
    if (failures.empty()) {
        result.first_counterexample = nullptr;
    } else {
        result.first_counterexample = failures.front().second;
        result.first_counterexample["case"] = failures.front().first;
        result.first_counterexample["property"] = name;
    }
    return result;
}

/// Collects properties of one suite, then runs them with per-name substreams.
class SuiteBuilder {
public:
    SuiteBuilder(std::string suite, std::uint64_t seed, int count)
        : seed_(seed), count_(count) {
        result_.suite = std::move(suite);
        result_.seed = seed;
        result_.count = count;
    }

    /// A randomized property: `count` independent cases.
    void randomized(const std::string& name, const CaseFn& fn) {
        result_.properties.push_back(run_property(name, seed_, count_, fn));
    }

    /// An enumerative property: one case that walks a fixed finite family.
    void enumerative(const std::string& name, const CaseFn& fn) {
        result_.properties.push_back(run_property(name, seed_, 1, fn));
    }

    void append(PropertyResult r) { result_.properties.push_back(std::move(r)); }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
    std::uint64_t seed_;
    int count_;
};

json mismatch(const std::string& what, const std::string& lhs, const std::string& rhs) {
    return json{{"check", what}, {"lhs", lhs}, {"rhs", rhs}};
}

// ---------------------------------------------------------------------------
// Shared pools
// ---------------------------------------------------------------------------

const std::vector<TruncationProfile>& ring_profiles() {
    static const std::vector<TruncationProfile> pool = {
        TruncationProfile({2}),    TruncationProfile({3}),
        TruncationProfile({1, 1}), TruncationProfile({2, 1}),
        TruncationProfile({1, 1, 1}), TruncationProfile({2, 2})};
    return pool;
}

const std::vector<Variety>& small_varieties() {
    static const std::vector<Variety> pool = {
        Variety::point(), Variety::projective(1), Variety::projective(2),
        Variety({1, 1}), Variety({1, 2})};
    return pool;
}

const TruncationProfile& pick(Rng& rng, const std::vector<TruncationProfile>& pool) {
    return pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
}

const Variety& pick(Rng& rng, const std::vector<Variety>& pool) {
    return pool[static_cast<std::size_t>(rng.range(0, static_cast<int>(pool.size()) - 1))];
}

// ---------------------------------------------------------------------------
// ring
// ---------------------------------------------------------------------------

SuiteResult suite_ring(std::uint64_t seed, int count) {
    SuiteBuilder b("ring", seed, count);

    b.randomized("ring-axioms", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly a = random_poly(rng, profile, 4);
        const SparsePoly p = random_poly(rng, profile, 4);
        const SparsePoly c = random_poly(rng, profile, 4);
        const SparsePoly one = SparsePoly::one(profile);
        if ((a + p) + c != a + (p + c)) return mismatch("add-assoc", "", "");
        if (a + p != p + a) return mismatch("add-comm", "", "");
        if (mul(mul(a, p), c) != mul(a, mul(p, c)))
            return mismatch("mul-assoc", to_string(a), to_string(p));
        if (mul(a, p) != mul(p, a)) return mismatch("mul-comm", to_string(a), to_string(p));
        if (mul(a, p + c) != mul(a, p) + mul(a, c))
            return mismatch("distributive", to_string(a), to_string(p));
        if (mul(one, a) != a) return mismatch("unit", to_string(a), "");
        if (!(a - a).is_zero()) return mismatch("additive-inverse", to_string(a), "");
        return std::nullopt;
    });

    b.randomized("truncation-ideal", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly a = random_poly(rng, profile, 6);
        const SparsePoly p = random_poly(rng, profile, 6);
        const SparsePoly prod = mul(a, p);
        for (const auto& [e, coeff] : prod.terms()) {
            if (!profile.admits(e)) {
                return mismatch("cap-violation", to_string(prod), "");
            }
        }
        return std::nullopt;
    });

    b.randomized("grading-convolution", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly a = random_poly(rng, profile, 5);
        const SparsePoly p = random_poly(rng, profile, 5);
        const SparsePoly prod = mul(a, p);
        SparsePoly rebuilt(profile);
        for (int d = 0; d <= profile.top_degree(); ++d) {
            SparsePoly piece(profile);
            for (int i = 0; i <= d; ++i) {
                piece += mul(graded_piece(a, i), graded_piece(p, d - i));
            }
            if (piece != graded_piece(prod, d)) {
                return mismatch("graded-piece d=" + std::to_string(d), to_string(piece),
                                to_string(graded_piece(prod, d)));
            }
            rebuilt += graded_piece(a, d);
        }
        if (rebuilt != a) return mismatch("graded-decomposition", to_string(rebuilt), to_string(a));
        return std::nullopt;
    });

    b.randomized("exp-additivity", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly a = random_nilpotent(rng, profile, 4);
        const SparsePoly p = random_nilpotent(rng, profile, 4);
        const SparsePoly lhs = exp_nilpotent(a + p);
        const SparsePoly rhs = mul(exp_nilpotent(a), exp_nilpotent(p));
        if (lhs != rhs) return mismatch("exp(a+b)=exp(a)exp(b)", to_string(lhs), to_string(rhs));
        return std::nullopt;
    });

    b.randomized("sqrt-square", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly u = random_unipotent(rng, profile, 4);
        const SparsePoly root = sqrt_unipotent(u);
        if (root.constant_term() != 1) return mismatch("sqrt-unipotent", to_string(root), "1");
        if (mul(root, root) != u) {
            return mismatch("sqrt(u)^2=u", to_string(mul(root, root)), to_string(u));
        }
        return std::nullopt;
    });

    b.randomized("invert-inverse", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly u = random_unipotent(rng, profile, 4);
        const SparsePoly inv = invert_unipotent(u);
        if (mul(u, inv) != SparsePoly::one(profile)) {
            return mismatch("u*invert(u)=1", to_string(mul(u, inv)), "1");
        }
        return std::nullopt;
    });

    b.randomized("parallel-matches-serial", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly a = random_poly(rng, profile, 12);
        const SparsePoly p = random_poly(rng, profile, 12);
        const SparsePoly serial = mul_serial(a, p);
        const SparsePoly parallel = mul_parallel(a, p);
        if (serial != parallel) {
            return mismatch("parallel-kernel", to_string(parallel), to_string(serial));
        }
        return std::nullopt;
    });

    b.randomized("parse-print-roundtrip", [](Rng& rng) -> std::optional<json> {
        const auto& profile = pick(rng, ring_profiles());
        const SparsePoly a = random_poly(rng, profile, 5);
        const SparsePoly back = parse_polynomial(to_string(a), profile);
        if (back != a) return mismatch("parse(print(a))=a", to_string(back), to_string(a));
        return std::nullopt;
    });

    return b.take();
}

// ---------------------------------------------------------------------------
// chow
// ---------------------------------------------------------------------------

struct TripleSpec {
    Variety x, y, z;
};

const std::vector<TripleSpec>& projection_triples() {
    static const std::vector<TripleSpec> pool = {
        {Variety::projective(1), Variety::projective(1), Variety::projective(1)},
        {Variety::projective(1), Variety::projective(2), Variety::projective(1)},
        {Variety::projective(2), Variety::projective(1), Variety::projective(2)},
        {Variety({1, 1}), Variety::projective(1), Variety::projective(1)},
    };
    return pool;
}

Projection middle_projection(const TripleSpec& t) {
    const Variety w = product(product(t.x, t.y), t.z);
    std::vector<int> kept;
    for (int i = 0; i < t.x.factor_count(); ++i) kept.push_back(i);
    const int off = t.x.factor_count() + t.y.factor_count();
    for (int i = 0; i < t.z.factor_count(); ++i) kept.push_back(off + i);
    return Projection(w, std::move(kept));
}

SuiteResult suite_chow(std::uint64_t seed, int count) {
    SuiteBuilder b("chow", seed, count);

    b.randomized("pullback-ring-map", [](Rng& rng) -> std::optional<json> {
        const auto& t = projection_triples()[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(projection_triples().size()) - 1))];
        const Projection p = middle_projection(t);
        const ChowClass a = random_chow_class(rng, p.target(), 4);
        const ChowClass c = random_chow_class(rng, p.target(), 4);
        if (pullback(p, a * c) != pullback(p, a) * pullback(p, c)) {
            return mismatch("pullback-multiplicative", to_string(a), to_string(c));
        }
        if (pullback(p, ChowClass::one(p.target())) != ChowClass::one(p.source())) {
            return mismatch("pullback-unital", "", "");
        }
        return std::nullopt;
    });

    b.randomized("projection-formula", [](Rng& rng) -> std::optional<json> {
        const auto& t = projection_triples()[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(projection_triples().size()) - 1))];
        const Projection p = middle_projection(t);
        const ChowClass a = random_chow_class(rng, p.target(), 4);
        const ChowClass c = random_chow_class(rng, p.source(), 4);
        const ChowClass lhs = pushforward(p, pullback(p, a) * c);
        const ChowClass rhs = a * pushforward(p, c);
        if (lhs != rhs) {
            return mismatch("projection-formula", to_string(lhs), to_string(rhs));
        }
        return std::nullopt;
    });

    b.randomized("diagonal-pairing", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        const Variety xx = product(x, x);
        std::vector<int> first(static_cast<std::size_t>(x.factor_count()));
        std::vector<int> second(static_cast<std::size_t>(x.factor_count()));
        for (int i = 0; i < x.factor_count(); ++i) {
            first[static_cast<std::size_t>(i)] = i;
            second[static_cast<std::size_t>(i)] = x.factor_count() + i;
        }
        const Projection p1(xx, std::move(first));
        const Projection p2(xx, std::move(second));
        const ChowClass alpha = random_chow_class(rng, x, 4);
        const ChowClass beta = random_chow_class(rng, x, 4);
        const Rational lhs = degree(diagonal(x) * pullback(p1, alpha) * pullback(p2, beta));
        const Rational rhs = degree(alpha * beta);
        if (lhs != rhs) {
            return mismatch("diagonal-pairing", to_string(lhs), to_string(rhs));
        }
        return std::nullopt;
    });

    b.randomized("pushforward-tower", [](Rng& rng) -> std::optional<json> {
        const auto& t = projection_triples()[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(projection_triples().size()) - 1))];
        const Variety w = product(product(t.x, t.y), t.z);
        const Projection to_xz = middle_projection(t);
        std::vector<int> x_of_xz(static_cast<std::size_t>(t.x.factor_count()));
        for (int i = 0; i < t.x.factor_count(); ++i) x_of_xz[static_cast<std::size_t>(i)] = i;
        const Projection xz_to_x(to_xz.target(), std::move(x_of_xz));
        std::vector<int> x_of_w(static_cast<std::size_t>(t.x.factor_count()));
        for (int i = 0; i < t.x.factor_count(); ++i) x_of_w[static_cast<std::size_t>(i)] = i;
        const Projection w_to_x(w, std::move(x_of_w));
        const ChowClass c = random_chow_class(rng, w, 5);
        const ChowClass two_step = pushforward(xz_to_x, pushforward(to_xz, c));
        const ChowClass direct = pushforward(w_to_x, c);
        if (two_step != direct) {
            return mismatch("pushforward-tower", to_string(two_step), to_string(direct));
        }
        return std::nullopt;
    });

    return b.take();
}

// ---------------------------------------------------------------------------
// grr
// ---------------------------------------------------------------------------

std::int64_t count_monomials_of_degree(int variables, int d) {
    // Plain lattice-point recursion; deliberately avoids the binomial helper.
    if (d < 0) return 0;
    if (variables == 1) return 1;
    std::int64_t total = 0;
    for (int first = 0; first <= d; ++first) {
        total += count_monomials_of_degree(variables - 1, d - first);
    }
    return total;
}

const std::vector<std::pair<Variety, Projection>>& grr_maps() {
    // P1xP1 -> P1, P2xP1 -> P2, P1xP1xP1 -> P1xP1.
    static const std::vector<std::pair<Variety, Projection>> pool = [] {
        std::vector<std::pair<Variety, Projection>> maps;
        const Variety a({1, 1});
        maps.emplace_back(a, Projection(a, {0}));
        const Variety b({2, 1});
        maps.emplace_back(b, Projection(b, {0}));
        const Variety c({1, 1, 1});
        maps.emplace_back(c, Projection(c, {0, 1}));
        return maps;
    }();
    return pool;
}

SuiteResult suite_grr(std::uint64_t seed, int count) {
    SuiteBuilder b("grr", seed, count);

    b.enumerative("hrr-binomial-table", [](Rng&) -> std::optional<json> {
        for (int n = 0; n <= 4; ++n) {
            const Variety x = Variety::projective(n);
            const KClass o = KClass::structure_sheaf(x);
            for (int d = -6; d <= 6; ++d) {
                const KClass od = KClass::line_bundle(x, {d});
                const Rational chi = euler_pairing(o, od);
                const std::int64_t expected = oracle_euler_characteristic(n, d);
                if (!is_integer(chi) || to_int64(chi) != expected) {
                    return mismatch("chi(P^" + std::to_string(n) + ", O(" + std::to_string(d) + "))",
                                    to_string(chi), std::to_string(expected));
                }
            }
        }
        return std::nullopt;
    });

    b.randomized("grr-commutation", [](Rng& rng) -> std::optional<json> {
        const auto& [source, p] = grr_maps()[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(grr_maps().size()) - 1))];
        const KClass e = random_k_class(rng, source, 4);
        const ChowClass lhs = ch(grr_pushforward(p, e)) * todd(p.target());
        const ChowClass rhs = pushforward(p, ch(e) * todd(source));
        if (lhs != rhs) {
            return mismatch("grr-commutation over " + to_string(source),
                            to_string(lhs), to_string(rhs));
        }
        return std::nullopt;
    });

    b.enumerative("ch-box-roundtrip", [](Rng&) -> std::optional<json> {
        for (const Variety& x : varieties_up_to_dimension(4)) {
            for (const Multidegree& d : profile_box(x.profile())) {
                KClass e(x);
                e.add_box_term(d, 1);
                if (ch_inverse(ch(e)) != e) {
                    return mismatch("ch_inverse(ch(O(d))) on " + to_string(x),
                                    to_string(ch_inverse(ch(e))), to_string(e));
                }
            }
            for (const Exponents& e : profile_box(x.profile())) {
                const ChowClass c = ChowClass::monomial(x, e, 1);
                if (ch(ch_inverse(c)) != c) {
                    return mismatch("ch(ch_inverse(h^e)) on " + to_string(x),
                                    to_string(ch(ch_inverse(c))), to_string(c));
                }
            }
        }
        return std::nullopt;
    });

    b.randomized("ch-roundtrip-random", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        const KClass e = random_k_class(rng, x, 4);
        if (ch_inverse(ch(e)) != e) {
            return mismatch("ch_inverse(ch(e))=e", to_string(ch_inverse(ch(e))), to_string(e));
        }
        const ChowClass c = random_chow_class(rng, x, 4);
        if (ch(ch_inverse(c)) != c) {
            return mismatch("ch(ch_inverse(c))=c", to_string(ch(ch_inverse(c))), to_string(c));
        }
        return std::nullopt;
    });

    b.enumerative("todd-multiplicative", [](Rng&) -> std::optional<json> {
        for (const Variety& x : small_varieties()) {
            for (const Variety& y : small_varieties()) {
                const Variety xy = product(x, y);
                std::vector<int> left(static_cast<std::size_t>(x.factor_count()));
                std::vector<int> right(static_cast<std::size_t>(y.factor_count()));
                for (int i = 0; i < x.factor_count(); ++i) left[static_cast<std::size_t>(i)] = i;
                for (int i = 0; i < y.factor_count(); ++i) {
                    right[static_cast<std::size_t>(i)] = x.factor_count() + i;
                }
                const ChowClass lhs = todd(xy);
                const ChowClass rhs = pullback(Projection(xy, left), todd(x)) *
                                      pullback(Projection(xy, right), todd(y));
                if (lhs != rhs) {
                    return mismatch("todd(XxY) on " + to_string(xy), to_string(lhs),
                                    to_string(rhs));
                }
            }
        }
        return std::nullopt;
    });

    b.randomized("euler-integrality", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        KClass e(x);
        KClass f(x);
        for (const Multidegree& d : profile_box(x.profile())) {
            e.add_box_term(d, rng.range(-3, 3));
            f.add_box_term(d, rng.range(-3, 3));
        }
        const Rational chi = euler_pairing(e, f);
        if (!is_integer(chi)) {
            return mismatch("integral-euler on " + to_string(x), to_string(chi), "an integer");
        }
        return std::nullopt;
    });

    b.randomized("euler-kunneth", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        Multidegree d(static_cast<std::size_t>(x.factor_count()));
        for (int i = 0; i < x.factor_count(); ++i) {
            d[static_cast<std::size_t>(i)] = rng.range(0, x.factor(i));
        }
        const Rational chi =
            euler_pairing(KClass::structure_sheaf(x), KClass::line_bundle(x, d));
        Rational expected = 1;
        for (int i = 0; i < x.factor_count(); ++i) {
            const Variety pi = Variety::projective(x.factor(i));
            expected *= euler_pairing(KClass::structure_sheaf(pi),
                                      KClass::line_bundle(pi, {d[static_cast<std::size_t>(i)]}));
        }
        if (chi != expected) {
            return mismatch("euler-kunneth on " + to_string(x), to_string(chi),
                            to_string(expected));
        }
        return std::nullopt;
    });

    b.randomized("grr-functoriality", [](Rng& rng) -> std::optional<json> {
        const auto& t = projection_triples()[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(projection_triples().size()) - 1))];
        const Variety w = product(product(t.x, t.y), t.z);
        const Projection to_xz = middle_projection(t);
        std::vector<int> x_of_xz(static_cast<std::size_t>(t.x.factor_count()));
        for (int i = 0; i < t.x.factor_count(); ++i) x_of_xz[static_cast<std::size_t>(i)] = i;
        const Projection xz_to_x(to_xz.target(), std::move(x_of_xz));
        std::vector<int> x_of_w(static_cast<std::size_t>(t.x.factor_count()));
        for (int i = 0; i < t.x.factor_count(); ++i) x_of_w[static_cast<std::size_t>(i)] = i;
        const Projection w_to_x(w, std::move(x_of_w));
        const KClass e = random_k_class(rng, w, 4);
        const KClass two_step = grr_pushforward(xz_to_x, grr_pushforward(to_xz, e));
        const KClass direct = grr_pushforward(w_to_x, e);
        if (two_step != direct) {
            return mismatch("grr-tower", to_string(two_step), to_string(direct));
        }
        return std::nullopt;
    });

    return b.take();
}

// ---------------------------------------------------------------------------
// corr
// ---------------------------------------------------------------------------

SuiteResult suite_corr(std::uint64_t seed, int count) {
    SuiteBuilder b("corr", seed, count);

    b.randomized("associativity", [](Rng& rng) -> std::optional<json> {
        // Quadruple (P1, P1, P2, P1).
        const Variety x = Variety::projective(1);
        const Variety y = Variety::projective(1);
        const Variety z = Variety::projective(2);
        const Variety w = Variety::projective(1);
        const auto a = random_correspondence(rng, x, y, 4);
        const auto c = random_correspondence(rng, y, z, 4);
        const auto d = random_correspondence(rng, z, w, 4);
        const auto lhs = compose(compose(a, c), d);
        const auto rhs = compose(a, compose(c, d));
        if (lhs != rhs) {
            return mismatch("corr-associativity", to_string(lhs), to_string(rhs));
        }
        return std::nullopt;
    });

    b.randomized("identity-laws", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        const Variety& y = pick(rng, small_varieties());
        const auto a = random_correspondence(rng, x, y, 4);
        if (compose(ChowCorrespondence::identity(x), a) != a) {
            return mismatch("left-identity", to_string(a), "");
        }
        if (compose(a, ChowCorrespondence::identity(y)) != a) {
            return mismatch("right-identity", to_string(a), "");
        }
        return std::nullopt;
    });

    b.enumerative("point-multiplication", [](Rng&) -> std::optional<json> {
        const Variety pt = Variety::point();
        const auto two = ChowCorrespondence(pt, pt, ChowClass::one(pt) * Rational(2));
        const auto three = ChowCorrespondence(pt, pt, ChowClass::one(pt) * Rational(3));
        const auto six = compose(two, three);
        if (six.kernel() != ChowClass::one(pt) * Rational(6)) {
            return mismatch("compose(2,3)=6", to_string(six.kernel()), "6");
        }
        return std::nullopt;
    });

    b.randomized("bilinearity", [](Rng& rng) -> std::optional<json> {
        const Variety x = Variety::projective(1);
        const Variety y = Variety::projective(1);
        const Variety z = Variety::projective(2);
        const auto a1 = random_correspondence(rng, x, y, 4);
        const auto a2 = random_correspondence(rng, x, y, 4);
        const auto c = random_correspondence(rng, y, z, 4);
        const Rational s = rng.small_rational();
        if (compose(a1 + a2, c) != compose(a1, c) + compose(a2, c)) {
            return mismatch("left-additive", "", "");
        }
        if (compose(a1 * s, c) != compose(a1, c) * s) {
            return mismatch("left-scalar", to_string(s), "");
        }
        if (compose(a1, c * s) != compose(a1, c) * s) {
            return mismatch("right-scalar", to_string(s), "");
        }
        return std::nullopt;
    });

    b.randomized("fm-functoriality", [](Rng& rng) -> std::optional<json> {
        const Variety x = Variety::projective(1);
        const Variety y = Variety::projective(2);
        const Variety z = Variety::projective(1);
        const auto a = random_correspondence(rng, x, y, 4);
        const auto c = random_correspondence(rng, y, z, 4);
        const ChowClass alpha = random_chow_class(rng, x, 3);
        const ChowClass lhs = fm_action(compose(a, c), alpha);
        const ChowClass rhs = fm_action(c, fm_action(a, alpha));
        if (lhs != rhs) {
            return mismatch("fm-functoriality", to_string(lhs), to_string(rhs));
        }
        return std::nullopt;
    });

    b.randomized("fm-identity", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        const ChowClass alpha = random_chow_class(rng, x, 4);
        const ChowClass acted = fm_action(ChowCorrespondence::identity(x), alpha);
        if (acted != alpha) {
            return mismatch("fm-identity", to_string(acted), to_string(alpha));
        }
        return std::nullopt;
    });

    b.randomized("k-associativity", [](Rng& rng) -> std::optional<json> {
        const Variety x = Variety::projective(1);
        const Variety y = Variety::projective(1);
        const Variety z = Variety::projective(2);
        const Variety w = Variety::projective(1);
        const auto a = random_k_correspondence(rng, x, y, 3);
        const auto c = random_k_correspondence(rng, y, z, 3);
        const auto d = random_k_correspondence(rng, z, w, 3);
        const auto lhs = compose(compose(a, c), d);
        const auto rhs = compose(a, compose(c, d));
        if (lhs != rhs) {
            return mismatch("k-associativity", to_string(lhs.kernel()), to_string(rhs.kernel()));
        }
        return std::nullopt;
    });

    return b.take();
}

// ---------------------------------------------------------------------------
// motives
// ---------------------------------------------------------------------------

SuiteResult suite_motives(std::uint64_t seed, int count) {
    SuiteBuilder b("motives", seed, count);

    b.enumerative("projective-decomposition", [](Rng&) -> std::optional<json> {
        for (int n = 0; n <= 5; ++n) {
            const auto pieces = decompose_projective(n);
            if (static_cast<int>(pieces.size()) != n + 1) {
                return mismatch("piece-count P^" + std::to_string(n),
                                std::to_string(pieces.size()), std::to_string(n + 1));
            }
            ChowCorrespondence sum =
                ChowCorrespondence::zero(Variety::projective(n), Variety::projective(n));
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                sum += pieces[i].summand.projector();
                for (std::size_t j = 0; j < pieces.size(); ++j) {
                    const auto prod = compose(pieces[i].summand.projector(),
                                              pieces[j].summand.projector());
                    const auto expected = i == j
                                              ? pieces[i].summand.projector()
                                              : ChowCorrespondence::zero(Variety::projective(n),
                                                                         Variety::projective(n));
                    if (prod != expected) {
                        return mismatch("orthogonality P^" + std::to_string(n),
                                        to_string(prod.kernel()), to_string(expected.kernel()));
                    }
                }
                if (!check_iso_pair(pieces[i].to_tate, pieces[i].from_tate)) {
                    return mismatch("witness-pair P^" + std::to_string(n),
                                    to_string(pieces[i].to_tate.cls()),
                                    to_string(pieces[i].from_tate.cls()));
                }
            }
            if (sum != ChowCorrespondence::identity(Variety::projective(n))) {
                return mismatch("sum-to-diagonal P^" + std::to_string(n),
                                to_string(sum.kernel()), "diagonal");
            }
        }
        return std::nullopt;
    });

    b.enumerative("product-decomposition", [](Rng&) -> std::optional<json> {
        for (const Variety& x : {Variety({1, 1}), Variety({1, 2})}) {
            const MotiveSum tate = verified_tate_form(x);
            int expected = 1;
            for (int i = 0; i < x.factor_count(); ++i) expected *= x.factor(i) + 1;
            if (tate.size() != expected) {
                return mismatch("tate-form size on " + to_string(x),
                                std::to_string(tate.size()), std::to_string(expected));
            }
        }
        return std::nullopt;
    });

    b.randomized("iso-rescale-invariance", [](Rng& rng) -> std::optional<json> {
        const auto pieces = decompose_projective(2);
        const auto& piece = pieces[static_cast<std::size_t>(rng.range(0, 2))];
        const Rational c = rng.small_rational();
        const MotiveMorphism f = piece.to_tate * c;
        const MotiveMorphism g = piece.from_tate * (Rational(1) / c);
        if (!check_iso_pair(f, g)) {
            return mismatch("rescaled-witness c=" + to_string(c), to_string(f.cls()),
                            to_string(g.cls()));
        }
        return std::nullopt;
    });

    b.enumerative("orbit-hom-kunneth", [](Rng&) -> std::optional<json> {
        // Twist-summed endomorphism dimensions multiply across factors.
        for (int a = 1; a <= 2; ++a) {
            for (int bdim = 1; bdim <= 2; ++bdim) {
                const Variety x({a, bdim});
                const Motive mx = Motive::of_variety(x);
                int total = 0;
                for (int i = -x.dimension(); i <= x.dimension(); ++i) {
                    total += static_cast<int>(hom_space(mx, mx.twisted(i)).size());
                }
                const int expected = (a + 1) * (a + 1) * (bdim + 1) * (bdim + 1);
                if (total != expected) {
                    return mismatch("orbit-end-dim on " + to_string(x), std::to_string(total),
                                    std::to_string(expected));
                }
            }
        }
        return std::nullopt;
    });

    b.randomized("twist-shift-dims", [](Rng& rng) -> std::optional<json> {
        const auto pieces = decompose_projective(rng.range(1, 2));
        const auto& piece = pieces[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(pieces.size()) - 1))];
        const Motive m = piece.summand;
        const Motive n = piece.tate;
        const int i = rng.range(-3, 3);
        const int delta = rng.range(-2, 2);
        const auto before = hom_space(m, n.twisted(delta));
        const auto after = hom_space(m.twisted(i), n.twisted(delta + i));
        if (before.size() != after.size()) {
            return mismatch("twist-shift-dims i=" + std::to_string(i),
                            std::to_string(before.size()), std::to_string(after.size()));
        }
        return std::nullopt;
    });

    b.randomized("idempotent-scaling", [](Rng& rng) -> std::optional<json> {
        // (c * diagonal)^2 = c^2 * diagonal, so the scaled diagonal is
        // idempotent exactly when c is 1 (c = 0 never occurs here).
        const Variety& x = pick(rng, small_varieties());
        const Rational c = rng.small_rational();
        const bool idem = is_idempotent(ChowCorrespondence::identity(x) * c);
        if (idem != (c == 1)) {
            return mismatch("idempotent-scaling c=" + to_string(c),
                            idem ? "idempotent" : "not idempotent",
                            c == 1 ? "idempotent" : "not idempotent");
        }
        return std::nullopt;
    });

    return b.take();
}

// ---------------------------------------------------------------------------
// orbit
// ---------------------------------------------------------------------------

LaurentGraded random_laurent(Rng& rng) {
    LaurentGraded f{LaurentCategory::the_object(), LaurentCategory::the_object(), {}};
    const int terms = rng.range(1, 3);
    for (int t = 0; t < terms; ++t) {
        f.add_component(rng.range(-3, 3), rng.small_rational());
    }
    return f;
}

MotiveSum random_tate_sum(Rng& rng, int max_size) {
    std::vector<Motive> summands;
    const int size = rng.range(1, max_size);
    for (int i = 0; i < size; ++i) summands.push_back(Motive::unit(rng.range(-3, 3)));
    return MotiveSum(std::move(summands));
}

/// Random graded morphism between Tate sums: each component degree in the
/// window where the twisted hom is nonzero.
MotiveGraded random_tate_graded(Rng& rng, const MotiveSum& from, const MotiveSum& to) {
    MotiveGraded f{from, to, {}};
    for (int col = 0; col < from.size(); ++col) {
        for (int row = 0; row < to.size(); ++row) {
            if (rng.range(0, 2) == 0) continue;  // keep it sparse
            const int i = from.summand(col).twist() - to.summand(row).twist();
            MotiveMatrix component = MotiveMatrix::zero(from, to.twisted(i));
            component.set_entry(row, col,
                                MotiveMorphism::make(from.summand(col),
                                                     to.summand(row).twisted(i),
                                                     ChowClass::one(Variety::point()) *
                                                         rng.small_rational()));
            f.add_component(i, component);
        }
    }
    return f;
}

SuiteResult suite_orbit(std::uint64_t seed, int count) {
    SuiteBuilder b("orbit", seed, count);

    b.enumerative("laurent-binomial-convolution", [](Rng&) -> std::optional<json> {
        LaurentGraded f{LaurentCategory::the_object(), LaurentCategory::the_object(), {}};
        f.set_component(0, 1);
        f.set_component(1, 1);
        const LaurentGraded square = orbit_compose(f, f);
        LaurentGraded expected{LaurentCategory::the_object(), LaurentCategory::the_object(), {}};
        expected.set_component(0, 1);
        expected.set_component(1, 2);
        expected.set_component(2, 1);
        if (square != expected) {
            return mismatch("laurent-square", "", "(1,2,1)");
        }
        return std::nullopt;
    });

    b.randomized("laurent-category-laws", [](Rng& rng) -> std::optional<json> {
        const auto x = LaurentCategory::the_object();
        const LaurentGraded f = random_laurent(rng);
        const LaurentGraded g = random_laurent(rng);
        const LaurentGraded h = random_laurent(rng);
        if (orbit_compose(orbit_compose(f, g), h) != orbit_compose(f, orbit_compose(g, h))) {
            return mismatch("laurent-associativity", "", "");
        }
        const LaurentGraded id = orbit_identity<LaurentCategory>(x);
        if (orbit_compose(id, f) != f || orbit_compose(f, id) != f) {
            return mismatch("laurent-unit", "", "");
        }
        if (orbit_compose(f, orbit_add(g, h)) !=
            orbit_add(orbit_compose(f, g), orbit_compose(f, h))) {
            return mismatch("laurent-additivity", "", "");
        }
        return std::nullopt;
    });

    b.randomized("motive-orbit-associativity", [](Rng& rng) -> std::optional<json> {
        const MotiveSum a = random_tate_sum(rng, 2);
        const MotiveSum c = random_tate_sum(rng, 2);
        const MotiveSum d = random_tate_sum(rng, 2);
        const MotiveGraded f = random_tate_graded(rng, a, c);
        const MotiveGraded g = random_tate_graded(rng, c, d);
        const MotiveGraded h = random_tate_graded(rng, d, a);
        if (orbit_compose(orbit_compose(f, g), h) != orbit_compose(f, orbit_compose(g, h))) {
            return mismatch("motive-orbit-associativity", "", "");
        }
        const auto id = orbit_identity<MotiveCategory>(a);
        if (orbit_compose(id, f) != f || orbit_compose(orbit_compose(f, g), orbit_identity<MotiveCategory>(d)) != orbit_compose(f, g)) {
            return mismatch("motive-orbit-unit", "", "");
        }
        return std::nullopt;
    });

    b.randomized("project-functoriality", [](Rng& rng) -> std::optional<json> {
        // Laurent side.
        const auto x = LaurentCategory::the_object();
        const Rational f = rng.small_rational();
        const Rational g = rng.small_rational();
        const auto lhs = orbit_project<LaurentCategory>(x, x, LaurentCategory::compose(f, g));
        const auto rhs = orbit_compose(orbit_project<LaurentCategory>(x, x, f),
                                       orbit_project<LaurentCategory>(x, x, g));
        if (lhs != rhs) return mismatch("project-functorial-laurent", "", "");

        // Motive side: endomorphisms of M(P^1).
        const MotiveSum m(std::vector<Motive>{Motive::of_variety(Variety::projective(1))});
        const Variety xx = product(Variety::projective(1), Variety::projective(1));
        MotiveMatrix fm = MotiveMatrix::zero(m, m);
        fm.set_entry(0, 0, MotiveMorphism::make(
                               m.summand(0), m.summand(0),
                               ChowClass(xx, random_homogeneous(rng, xx.profile(), 1, 2))));
        MotiveMatrix gm = MotiveMatrix::zero(m, m);
        gm.set_entry(0, 0, MotiveMorphism::make(
                               m.summand(0), m.summand(0),
                               ChowClass(xx, random_homogeneous(rng, xx.profile(), 1, 2))));
        const auto lhs_m = orbit_project<MotiveCategory>(m, m, compose(fm, gm));
        const auto rhs_m = orbit_compose(orbit_project<MotiveCategory>(m, m, fm),
                                         orbit_project<MotiveCategory>(m, m, gm));
        if (lhs_m != rhs_m) return mismatch("project-functorial-motive", "", "");
        return std::nullopt;
    });

    b.enumerative("orbit-end-dimension", [](Rng&) -> std::optional<json> {
        for (int n = 0; n <= 3; ++n) {
            const Motive m = Motive::of_variety(Variety::projective(n));
            int total = 0;
            for (int i = -n; i <= n; ++i) {
                total += static_cast<int>(hom_space(m, m.twisted(i)).size());
            }
            if (total != (n + 1) * (n + 1)) {
                return mismatch("orbit-end-dim P^" + std::to_string(n), std::to_string(total),
                                std::to_string((n + 1) * (n + 1)));
            }
        }
        return std::nullopt;
    });

    b.randomized("tate-iso-decision", [](Rng& rng) -> std::optional<json> {
        const MotiveSum m = random_tate_sum(rng, 4);
        // Shift every twist by the same integer and shuffle: still isomorphic.
        std::vector<Motive> shifted;
        const int shift = rng.range(-2, 2);
        for (const auto& s : m.summands()) shifted.push_back(s.twisted(shift));
        for (int i = static_cast<int>(shifted.size()) - 1; i > 0; --i) {
            std::swap(shifted[static_cast<std::size_t>(i)],
                      shifted[static_cast<std::size_t>(rng.range(0, i))]);
        }
        if (!orbit_iso_tate(m, MotiveSum(shifted))) {
            return mismatch("tate-iso shift+shuffle", to_string(m), to_string(MotiveSum(shifted)));
        }
        // Different summand counts: never isomorphic.
        std::vector<Motive> more = m.summands();
        more.push_back(Motive::unit(rng.range(-3, 3)));
        if (orbit_iso_tate(m, MotiveSum(more))) {
            return mismatch("tate-iso count mismatch", to_string(m), to_string(MotiveSum(more)));
        }
        return std::nullopt;
    });

    b.enumerative("tate-sum-class-family", [](Rng&) -> std::optional<json> {
        for (int n = 0; n <= 5; ++n) {
            if (tate_sum_class(verified_tate_form(Variety::projective(n))) != n + 1) {
                return mismatch("tate-sum-class P^" + std::to_string(n), "", std::to_string(n + 1));
            }
        }
        if (tate_sum_class(verified_tate_form(Variety({1, 1}))) != 4) {
            return mismatch("tate-sum-class P1xP1", "", "4");
        }
        return std::nullopt;
    });

    return b.take();
}

// ---------------------------------------------------------------------------
// nu
// ---------------------------------------------------------------------------

const std::vector<std::pair<Variety, Variety>>& nu_hom_pairs() {
    static const std::vector<std::pair<Variety, Variety>> pool = {
        {Variety::projective(1), Variety::projective(1)},
        {Variety::projective(1), Variety::projective(2)},
        {Variety::projective(2), Variety::projective(1)},
        {Variety({1, 1}), Variety::projective(1)},
    };
    return pool;
}

SuiteResult suite_nu(std::uint64_t seed, int count) {
    SuiteBuilder b("nu", seed, count);

    b.randomized("roundtrip", [](Rng& rng) -> std::optional<json> {
        const auto& [x, y] = nu_hom_pairs()[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(nu_hom_pairs().size()) - 1))];
        const NuContext ctx(x, y);
        const auto c = random_correspondence(rng, x, y, 4);
        if (nu_inverse_hom(ctx, nu_hom(ctx, c)) != c) {
            return mismatch("nu-roundtrip-chow", to_string(c), "");
        }
        const auto e = random_k_correspondence(rng, x, y, 4);
        if (nu_hom(ctx, nu_inverse_hom(ctx, e)) != e) {
            return mismatch("nu-roundtrip-k", to_string(e.kernel()), "");
        }
        // Defining property: ch(nu(c)) * sqrt(td) recovers the kernel.
        const auto transported = nu_hom(ctx, c);
        if (ch(transported.kernel()) * ctx.sqrt_todd() != c.kernel()) {
            return mismatch("nu-defining-property", to_string(c.kernel()), "");
        }
        return std::nullopt;
    });

    for (const auto& triple : {TripleSpec{Variety::projective(1), Variety::projective(1),
                                          Variety::projective(1)},
                               TripleSpec{Variety::projective(1), Variety::projective(2),
                                          Variety::projective(1)},
                               TripleSpec{Variety::projective(2), Variety::projective(1),
                                          Variety::projective(2)}}) {
        b.append(nu_functoriality_sweep(triple.x, triple.y, triple.z, seed, count));
    }

    b.randomized("identity-unit", [](Rng& rng) -> std::optional<json> {
        const auto& [x, y] = nu_hom_pairs()[static_cast<std::size_t>(
            rng.range(0, static_cast<int>(nu_hom_pairs().size()) - 1))];
        const auto e = random_k_correspondence(rng, x, y, 4);
        if (compose(k_identity(x), e) != e) {
            return mismatch("k-left-identity", to_string(e.kernel()), "");
        }
        if (compose(e, k_identity(y)) != e) {
            return mismatch("k-right-identity", to_string(e.kernel()), "");
        }
        return std::nullopt;
    });

    b.enumerative("hom-dimension-transport", [](Rng&) -> std::optional<json> {
        for (const auto& [x, y] : nu_hom_pairs()) {
            const Variety xy = product(x, y);
            const std::size_t chow_dim = profile_box(xy.profile()).size();
            std::size_t k_rank = 1;
            for (int i = 0; i < xy.factor_count(); ++i) {
                k_rank *= static_cast<std::size_t>(xy.factor(i) + 1);
            }
            if (chow_dim != k_rank) {
                return mismatch("hom-dimension-transport on " + to_string(xy),
                                std::to_string(chow_dim), std::to_string(k_rank));
            }
        }
        return std::nullopt;
    });

    b.enumerative("sqrt-todd-contract", [](Rng&) -> std::optional<json> {
        for (const auto& [x, y] : nu_hom_pairs()) {
            const NuContext ctx(x, y);
            if (ctx.sqrt_todd() * ctx.sqrt_todd() != todd(product(x, y))) {
                return mismatch("sqrt-todd on " + to_string(product(x, y)),
                                to_string(ctx.sqrt_todd()), "");
            }
        }
        return std::nullopt;
    });

    return b.take();
}

// ---------------------------------------------------------------------------
// nm
// ---------------------------------------------------------------------------

SuiteResult suite_nm(std::uint64_t seed, int count) {
    SuiteBuilder b("nm", seed, count);

    b.enumerative("unitriangular-family", [](Rng&) -> std::optional<json> {
        for (const Variety& x : varieties_up_to_dimension(5)) {
            const auto matrix = euler_matrix(beilinson_collection(x));
            if (!is_unitriangular(matrix)) {
                return mismatch("unitriangular on " + to_string(x), "", "");
            }
        }
        return std::nullopt;
    });

    b.enumerative("euler-matrix-oracle", [](Rng&) -> std::optional<json> {
        for (const Variety& x : {Variety::projective(1), Variety::projective(2),
                                 Variety::projective(3), Variety({1, 1})}) {
            const auto collection = beilinson_collection(x);
            const auto matrix = euler_matrix(collection);
            for (std::size_t i = 0; i < collection.twists.size(); ++i) {
                for (std::size_t j = 0; j < collection.twists.size(); ++j) {
                    Multidegree diff(collection.twists[i].size());
                    for (std::size_t v = 0; v < diff.size(); ++v) {
                        diff[v] = collection.twists[j][v] - collection.twists[i][v];
                    }
                    const std::int64_t expected = oracle_euler_characteristic(x, diff);
                    if (matrix[i][j] != expected) {
                        return mismatch("euler-oracle on " + to_string(x),
                                        std::to_string(matrix[i][j]), std::to_string(expected));
                    }
                }
            }
        }
        return std::nullopt;
    });

    b.randomized("rank-multiplicative", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        const Variety& y = pick(rng, small_varieties());
        if (x.dimension() + y.dimension() > 4) return std::nullopt;
        const int lhs = nm_object(product(x, y)).rank;
        const int rhs = nm_object(x).rank * nm_object(y).rank;
        if (lhs != rhs) {
            return mismatch("rank-multiplicative on " + to_string(product(x, y)),
                            std::to_string(lhs), std::to_string(rhs));
        }
        return std::nullopt;
    });

    b.enumerative("rank-equals-chow-dimension", [](Rng&) -> std::optional<json> {
        for (const Variety& x : varieties_up_to_dimension(5)) {
            const int rank = nm_object(x).rank;
            const int chow = static_cast<int>(profile_box(x.profile()).size());
            if (rank != chow) {
                return mismatch("rank vs chow-dim on " + to_string(x), std::to_string(rank),
                                std::to_string(chow));
            }
        }
        return std::nullopt;
    });

    b.enumerative("nm-matches-orbit-family", [](Rng&) -> std::optional<json> {
        for (const Variety& x : varieties_up_to_dimension(5)) {
            if (!nm_matches_orbit(x)) {
                return mismatch("nm-matches-orbit on " + to_string(x), "", "");
            }
        }
        return std::nullopt;
    });

    b.enumerative("nm-iso-examples", [](Rng&) -> std::optional<json> {
        const NCMotive p3 = nm_object(Variety::projective(3));
        const NCMotive p1p1 = nm_object(Variety({1, 1}));
        if (!nm_iso(p3, p1p1)) {
            return mismatch("NM(P3) iso NM(P1xP1)", std::to_string(p3.rank),
                            std::to_string(p1p1.rank));
        }
        if (nm_iso(nm_object(Variety::projective(1)), nm_object(Variety::projective(2)))) {
            return mismatch("NM(P1) not iso NM(P2)", "2", "3");
        }
        // Orbit-side ranks agree as well.
        if (tate_sum_class(verified_tate_form(Variety::projective(3))) !=
            tate_sum_class(verified_tate_form(Variety({1, 1})))) {
            return mismatch("orbit ranks of P3 and P1xP1", "", "");
        }
        return std::nullopt;
    });

    b.randomized("nm-iso-equivalence", [](Rng& rng) -> std::optional<json> {
        const Variety& x = pick(rng, small_varieties());
        const Variety& y = pick(rng, small_varieties());
        const Variety& z = pick(rng, small_varieties());
        const NCMotive a = nm_object(x);
        const NCMotive bb = nm_object(y);
        const NCMotive c = nm_object(z);
        if (!nm_iso(a, a)) return mismatch("nm-iso-reflexive", "", "");
        if (nm_iso(a, bb) != nm_iso(bb, a)) return mismatch("nm-iso-symmetric", "", "");
        if (nm_iso(a, bb) && nm_iso(bb, c) && !nm_iso(a, c)) {
            return mismatch("nm-iso-transitive", "", "");
        }
        return std::nullopt;
    });

    return b.take();
}

}  // namespace

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

PropertyResult nu_functoriality_sweep(const Variety& x, const Variety& y, const Variety& z,
                                      std::uint64_t seed, int count) {
    const std::string name =
        "nu-functorial-" + to_string(x) + "-" + to_string(y) + "-" + to_string(z);
    // Contexts are shared across cases; they are immutable after construction.
    const NuContext xy(x, y);
    const NuContext yz(y, z);
    const NuContext xz(x, z);
    return run_property(name, seed, count, [&](Rng& rng) -> std::optional<json> {
        const auto a = random_correspondence(rng, x, y, 4);
        const auto b = random_correspondence(rng, y, z, 4);
        const KCorrespondence lhs = nu_hom(xz, compose(a, b));
        const KCorrespondence rhs = compose(nu_hom(xy, a), nu_hom(yz, b));
        if (lhs != rhs) {
            return json{{"check", "nu-functoriality"},
                        {"a", to_string(a.kernel())},
                        {"b", to_string(b.kernel())},
                        {"lhs", to_string(lhs.kernel())},
                        {"rhs", to_string(rhs.kernel())}};
        }
        return std::nullopt;
    });
}

std::int64_t oracle_euler_characteristic(int n, int d) {
    if (n < 0) throw DomainError("negative projective dimension");
    if (d >= 0) return count_monomials_of_degree(n + 1, d);
    if (d >= -n) return 0;
    const std::int64_t dual_count = count_monomials_of_degree(n + 1, -d - n - 1);
    return n % 2 == 0 ? dual_count : -dual_count;
}

std::int64_t oracle_euler_characteristic(const Variety& x, const Multidegree& d) {
    if (d.size() != static_cast<std::size_t>(x.factor_count())) {
        throw DomainError("multidegree arity does not match the variety");
    }
    std::int64_t total = 1;
    for (int i = 0; i < x.factor_count(); ++i) {
        total *= oracle_euler_characteristic(x.factor(i), d[static_cast<std::size_t>(i)]);
    }
    return total;
}

std::vector<Variety> varieties_up_to_dimension(int max_dim) {
    std::vector<Variety> all = {Variety::point()};
    // Ordered factor lists with parts >= 1 (compositions), dimension by dimension.
    std::function<void(std::vector<int>&, int)> extend = [&](std::vector<int>& prefix,
                                                             int remaining) {
        if (!prefix.empty()) all.push_back(Variety(prefix));
        for (int next = 1; next <= remaining; ++next) {
            prefix.push_back(next);
            extend(prefix, remaining - next);
            prefix.pop_back();
        }
    };
    std::vector<int> prefix;
    extend(prefix, max_dim);
    return all;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"ring", "chow",   "grr", "corr",
                                                   "motives", "orbit", "nu",  "nm", "all"};
    return names;
}

SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int count) {
    if (count <= 0) throw DomainError("sweep count must be positive");
    if (suite == "ring") return suite_ring(seed, count);
    if (suite == "chow") return suite_chow(seed, count);
    if (suite == "grr") return suite_grr(seed, count);
    if (suite == "corr") return suite_corr(seed, count);
    if (suite == "motives") return suite_motives(seed, count);
    if (suite == "orbit") return suite_orbit(seed, count);
    if (suite == "nu") return suite_nu(seed, count);
    if (suite == "nm") return suite_nm(seed, count);
    if (suite == "all") {
        SuiteResult all;
        all.suite = "all";
        all.seed = seed;
        all.count = count;
        for (const auto& name : suite_names()) {
            if (name == "all") continue;
            SuiteResult part = run_suite(name, seed, count);
            for (auto& p : part.properties) {
                p.name = name + "/" + p.name;
                all.properties.push_back(std::move(p));
            }
        }
        return all;
    }
    throw DomainError("unknown suite '" + suite + "'; expected one of ring, chow, grr, corr, "
                      "motives, orbit, nu, nm, all");
}

nlohmann::json to_json(const SuiteResult& result) {
    json properties = json::array();
    for (const auto& p : result.properties) {
        properties.push_back(json{{"name", p.name},
                                  {"cases", p.cases},
                                  {"failures", p.failures},
                                  {"first_counterexample", p.first_counterexample}});
    }
    return json{{"suite", result.suite},
                {"seed", result.seed},
                {"count", result.count},
                {"ok", result.ok()},
                {"cases", result.total_cases()},
                {"failures", result.total_failures()},
                {"first_counterexample", result.first_counterexample()},
                {"properties", properties}};
}

std::string to_text(const SuiteResult& result) {
    std::ostringstream os;
    for (const auto& p : result.properties) {
        os << (p.ok() ? "[PASS] " : "[FAIL] ") << p.name << " (" << p.cases
           << (p.cases == 1 ? " case" : " cases");
        if (!p.ok()) os << ", " << p.failures << " failed";
        os << ")\n";
        if (!p.ok()) {
            os << "       first counterexample: " << p.first_counterexample.dump() << "\n";
        }
    }
    os << (result.ok() ? "PASS" : "FAIL") << ": suite '" << result.suite << "', "
       << result.total_cases() << " cases, " << result.total_failures() << " failures (seed "
       << result.seed << ")\n";
    return os.str();
}

}  // namespace chowmot
