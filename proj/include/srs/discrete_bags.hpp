#pragma once

// Bag constructions for discrete jobs: LPT bagging, the odd-size
// construction for unit jobs, discretization of fluid plans, the
// combined 1.8-robust dispatcher, and the optimal two- and
// three-machine unit-job constructions.

#include "srs/core.hpp"
#include "srs/fluid_bags.hpp"

namespace srs::discrete {

// Longest processing time first: jobs in nonincreasing order (ties by
// input position), each to the currently smallest bag (ties to the
// lowest index). (2 - 1/m)-robust.
BagProfile lpt_bags(const Instance& inst);

// Unit jobs packed into bags of sizes 2q-1 and 2q+1 with at most one
// bag of size 2q, where q is the integer with n/m in [2q-1, 2q+1]
// (smaller q when n/m is an odd integer). (2 - 1/(q+1))-robust.
struct OddPlan {
    long long q = 0;
    int m_small = 0;   // bags of size 2q-1
    int m_medium = 0;  // bags of size 2q, zero or one
    int m_big = 0;     // bags of size 2q+1
    BagProfile bags;
};
OddPlan oddalgo(long long n, int m);

// Scales a fluid plan to total volume n, inflates every bag by
// (1 + m/n), and fills unit jobs greedily into the floored capacities
// in nondecreasing capacity order. The inflation guarantees all n jobs
// fit; robustness degrades by the factor (1 + m/n).
BagProfile sand_to_bricks(const Instance& inst, const BagProfile& base);
BagProfile sand_to_bricks(const Instance& inst, const SampledProfile& base);

// 1.8-robust for unit jobs: the odd-size construction for n/m < 8,
// otherwise the scaled general-speed fluid plan.
BagProfile combined18(long long n, int m);

// Optimal unit-job constructions for two and three machines with
// robustness 4/3 and 3/2. The three-machine formulas require n > 3;
// below that each job gets its own bag.
BagProfile optimal_m2(long long n);
BagProfile optimal_m3(long long n);

}  // namespace srs::discrete
