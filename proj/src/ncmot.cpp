#include "chowmot/ncmot.hpp"

#include <algorithm>

#include "chowmot/motive.hpp"
#include "chowmot/orbit.hpp"

namespace chowmot {

ExceptionalCollection beilinson_collection(const Variety& x) {
    std::vector<Multidegree> twists = profile_box(x.profile());
    std::sort(twists.begin(), twists.end(), [](const Multidegree& a, const Multidegree& b) {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    ExceptionalCollection c{x, std::move(twists), {}};
    c.objects.reserve(c.twists.size());
    for (const auto& d : c.twists) c.objects.push_back(KClass::line_bundle(x, d));
    return c;
}

IntMatrix euler_matrix(const ExceptionalCollection& c) {
    const std::size_t r = c.objects.size();
    IntMatrix m(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            const Rational chi = euler_pairing(c.objects[i], c.objects[j]);
            if (!is_integer(chi)) {
                throw InternalError("Euler pairing of an integral collection is not integral: " +
                                    to_string(chi));
            }
            m[i][j] = to_int64(chi);
        }
    }
    return m;
}

bool is_unitriangular(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i][i] != 1) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (m[i][j] != 0) return false;
        }
    }
    return true;
}

NCMotive nm_object(const Variety& x) {
    const auto collection = beilinson_collection(x);
    NCMotive nm;
    nm.rank = static_cast<int>(collection.objects.size());
    nm.euler = euler_matrix(collection);
    if (!is_unitriangular(nm.euler)) {
        throw InternalError("Beilinson collection failed the unitriangularity check");
    }
    return nm;
}

bool nm_iso(const NCMotive& a, const NCMotive& b) {
    return a.rank == b.rank;
}

bool nm_matches_orbit(const Variety& x) {
    return nm_object(x).rank == tate_sum_class(verified_tate_form(x));
}

}  // namespace chowmot
