#pragma once

#include <cstdint>
#include <vector>

namespace spanlab {

/// Set L of integers in [1, floor(p/ell)] such that ell*x0 = x1+...+x_ell has
/// only the all-equal solution with all terms in L.
struct AvgFreeSet {
    int64_t p = 0;
    int ell = 2;
    std::vector<int64_t> members;  // strictly increasing

    // Measured density ratio p/|L|.
    double xi() const { return members.empty() ? 0.0 : double(p) / double(members.size()); }
};

enum class AvgFreeStatus { valid, violation, incomplete };

struct AvgFreeCheck {
    AvgFreeStatus status = AvgFreeStatus::valid;
    int64_t x0 = 0;               // witness when status == violation
    std::vector<int64_t> terms;   // the ell summands of the witness
};

// Enumeration budget for the ell >= 3 check (DP cells). Larger inputs report
// VERIFICATION_INCOMPLETE instead of guessing.
inline constexpr int64_t kAvgFreeCheckBudget = 200'000'000;

// Exhaustive check: pair scan for ell == 2, bounded sum-DP for ell >= 3.
AvgFreeCheck is_avgfree(const AvgFreeSet& s);

// Deterministic construction over [1, floor(p/ell)]. Sweeps no-carry digit
// representations grouped by squared digit norm plus, for small ranges, the
// greedy sequence, and keeps the largest result. Size is at least the
// pigeonhole bound ceil(C/R) of the best digit configuration, where C counts
// in-range digit vectors and R the distinct squared norms.
AvgFreeSet behrend_set(int64_t p, int ell);

// The pigeonhole lower bound the digit sweep guarantees for (p, ell).
int64_t behrend_digit_bound(int64_t p, int ell);

// Maximum-cardinality set by exhaustive search; requires floor(p/ell) <= 24.
AvgFreeSet brute_force_max_avgfree(int64_t p, int ell);

// Label set used by the instance builders: exact maximum when the range is
// small enough to search, behrend_set otherwise.
AvgFreeSet labels_for(int64_t p, int ell);

}  // namespace spanlab
