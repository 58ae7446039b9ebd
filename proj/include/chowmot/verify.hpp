#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chowmot/chow.hpp"
#include "chowmot/ktheory.hpp"

namespace chowmot {

/// Outcome of one property sweep.
struct PropertyResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    nlohmann::json first_counterexample;  // null when all cases passed

    bool ok() const { return failures == 0; }
};

/// Outcome of a named suite: a list of property sweeps.
struct SuiteResult {
    std::string suite;
    std::uint64_t seed = 0;
    int count = 0;
    std::vector<PropertyResult> properties;

    bool ok() const;
    int total_cases() const;
    int total_failures() const;
    /// The first counterexample across properties, null when green.
    nlohmann::json first_counterexample() const;
};

/// ring, chow, grr, corr, motives, orbit, nu, nm — and all.
const std::vector<std::string>& suite_names();

/// Runs the named randomized invariant sweep. Deterministic given the seed:
/// each case draws from its own substream, so results do not depend on
/// thread scheduling. Unknown names raise DomainError.
SuiteResult run_suite(const std::string& suite, std::uint64_t seed, int count);

/// The comparison-square sweep over one triple of varieties, shared by the
/// nu suite and the nu-check command.
PropertyResult nu_functoriality_sweep(const Variety& x, const Variety& y, const Variety& z,
                                      std::uint64_t seed, int count);

/// Independent combinatorial oracle for chi(P^n, O(d)): lattice-point
/// counting for d >= 0 (monomials of degree d in n+1 variables), zero in the
/// vanishing band -n <= d <= -1, and the duality sign rule
/// chi(d) = (-1)^n chi(-d - n - 1) below it. Shares no code with the
/// K-theory route it checks.
std::int64_t oracle_euler_characteristic(int n, int d);

/// Factorwise product of the per-factor oracle values.
std::int64_t oracle_euler_characteristic(const Variety& x, const Multidegree& d);

/// All products of projective spaces (ordered factor lists, each factor of
/// dimension >= 1) with total dimension <= max_dim, plus the point.
std::vector<Variety> varieties_up_to_dimension(int max_dim);

nlohmann::json to_json(const SuiteResult& result);
std::string to_text(const SuiteResult& result);

}  // namespace chowmot
