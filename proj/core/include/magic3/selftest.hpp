#ifndef MAGIC3_SELFTEST_HPP_
#define MAGIC3_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "magic3/series.hpp"

namespace magic3 {

struct SelftestResult {
    bool passed = true;
    /// Human-readable counterexample when passed is false.
    std::string failure;
    std::vector<CountReport> counts;
};

/// For every s in [0, max_s]: four-way count agreement, family/brute-force
/// set equality, no repeated family squares, construct/decompose
/// round-trips in both directions, and the reduced-form lemma.
SelftestResult run_selftest(std::uint64_t max_s);

}  // namespace magic3

#endif  // MAGIC3_SELFTEST_HPP_
