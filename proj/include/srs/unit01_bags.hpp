#pragma once

// The 4/3-robust first-stage algorithm for unit jobs and 0/1 speeds.
// Writing k for the optimal makespan ceil(n/m) on all m machines, the
// construction dispatches on k and m: scaled fluid bags for k >= 11, a
// rounded profile for k in {9,10} on many machines, packing by the
// optimal schedule for k <= 2, a four-size table for 3 <= k <= 8 on
// many machines, and a feasibility search over bag-size multisets for
// the remaining small cases.

#include "srs/core.hpp"

namespace srs::unit01 {

enum class Branch { trivial_k12, table_B, rounding_910, scaled_sand_11, search };

const char* branch_name(Branch b);

struct Unit01Plan {
    int m = 1;                // number of bags emitted (after padding)
    long long n = 0;
    long long k_bar = 0;      // ceil(n/m), invariant under the m-1 reduction
    long long ell = 0;        // n = m_effective * k_bar - ell, 0 <= ell < min{m_effective, k_bar}
    int m_effective = 1;      // bag count after the m-1 reduction
    Branch branch = Branch::search;
    std::vector<long long> bags;  // m sizes, nondecreasing, summing to n
};

// Builds the 4/3-robust plan. While ceil(n/m) == ceil(n/(m-1)) the
// instance is solved with m-1 bags and padded with an empty bag, since
// the optimum on all machines does not change.
Unit01Plan build_43(long long n, int m);

// Feasibility search replacing the integer program for small cases:
// finds bag-size multiplicities y_p, p in 1..floor(4k/3), with sum m
// and volume n such that for every count m' <= m of surviving machines
// the bags pack into m' bins of capacity floor(4/3 * ceil(n/m')).
// First feasible multiset in a fixed enumeration order (larger sizes
// preferred). Throws invariant_violation when the search is exhausted.
Unit01Plan search_43(long long n, int m);

// Multiplicities (x0+x1, x2, x3) of the four-size table for m bags,
// depending on m mod 5; x3 = x0 + x1 and the sizes are
// ceil(2k/3)-1, ceil(2k/3), k, floor(4k/3).
struct TableCounts {
    long long x01 = 0, x2 = 0, x3 = 0;
};
TableCounts table_b_counts(int m);

// Upper bound on the exact makespan of the plan on m_prime unit-speed
// machines: the smaller of plain LPT and the folding assignment.
long long plan_upper_bound(const Unit01Plan& plan, int m_prime);

// True iff the plan packs into m_prime machines within
// floor(4/3 * ceil(n/m')) for EVERY m' in 1..upto (exact bin packing
// when exact = true, otherwise the LPT/folding upper bound).
struct PlanCheck {
    bool ok = true;
    int failing_m_prime = 0;
    long long load = 0, bound = 0;
};
PlanCheck verify_plan_43(const Unit01Plan& plan, int upto, bool exact);

// Sweeps every (m, k, ell) with m <= max_m, k <= max_k,
// ell < min{m, k} and ceil(n/m) < ceil(n/(m-1)); returns the list of
// failures (empty on success).
struct GridFailure {
    int m;
    long long k_bar, ell;
    PlanCheck check;
};
std::vector<GridFailure> verify_grid43(int max_m, long long max_k, bool exact, int jobs = 0);

}  // namespace srs::unit01
