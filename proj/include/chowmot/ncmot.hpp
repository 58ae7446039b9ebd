#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowmot/ktheory.hpp"

namespace chowmot {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// An ordered collection of K-classes whose Euler pairing Gram matrix is
/// unitriangular: the K0-visible shadow of an exceptional collection.
struct ExceptionalCollection {
    Variety variety;
    std::vector<Multidegree> twists;  // labels, in collection order
    std::vector<KClass> objects;
};

/// The line bundles O(d), 0 <= d_i <= n_i, ordered by total degree then
/// lexicographically. Full and exceptional on products of projective spaces.
ExceptionalCollection beilinson_collection(const Variety& x);

/// Gram matrix chi(E_i, E_j) of the Euler pairing. Throws InternalError if an
/// entry fails to be an integer (a bug, not a user error).
IntMatrix euler_matrix(const ExceptionalCollection& c);

/// Diagonal all 1, strictly lower triangle all 0.
bool is_unitriangular(const IntMatrix& m);

/// The K0-level noncommutative motive of a variety with a full exceptional
/// collection of length r: a free object of rank r together with the Gram
/// matrix of its generating collection.
struct NCMotive {
    int rank = 0;
    IntMatrix euler;
};

NCMotive nm_object(const Variety& x);

/// Free objects over a base with K0 = Z are isomorphic exactly when their
/// ranks agree.
bool nm_iso(const NCMotive& a, const NCMotive& b);

/// Object-level consistency of the comparison square: the collection length
/// must match the verified Tate decomposition count of the Chow motive.
bool nm_matches_orbit(const Variety& x);

}  // namespace chowmot
