#pragma once

// Second stage: placing bags onto machines once speeds are revealed.
// Exact optimum via depth-first search, capacity-bounded LPT, and the
// folding strategies for 0/1 speeds.

#include "srs/core.hpp"

namespace srs::second_stage {

// Exact minimum makespan over all bag-to-machine maps. Machines are
// deduplicated by speed and loads canonicalized inside each group, with
// incumbent pruning; still exponential, so guarded by
// exact_assign_limit() machines.
AssignmentResult assign_exact(const BagProfile& bags, const SpeedConfig& cfg);
AssignmentResult2 assign_exact(const SampledProfile& bags, const SpeedConfig& cfg);

// Folding assignment for 0/1 speeds with m_prime working machines and
// bags sorted nondecreasing: with t = m - m_prime <= m/2 failures, bag
// i <= t goes on machine 2t-i+1 and bag i > t stays on machine i. For
// t > m/2 the solution for 2*m_prime working machines is computed and
// machine pairs are merged, recursively, which at most doubles the
// makespan while the optimum exactly doubles.
AssignmentResult assign_fold01(const BagProfile& bags, int m_prime);
AssignmentResult2 assign_fold01(const SampledProfile& bags, int m_prime);

// Plain LPT onto m_prime identical machines; an upper bound on the
// exact assignment used when the exact search is out of reach.
AssignmentResult assign_lpt_unit(const BagProfile& bags, int m_prime);

// Capacity-bounded LPT: machine i accepts bags while its load stays
// within rho * s_i. Bags are placed in nonincreasing size order onto
// the least loaded machine (by load/speed, ties to the lowest index)
// with enough remaining capacity. Single-job bags larger than every
// multi-job bag are pre-placed on the machines an optimal job schedule
// uses for them, when such a schedule is supplied.
struct CapacityAssignResult {
    bool ok = false;
    int failed_bag = -1;  // bag that did not fit, when !ok
    AssignmentResult assignment;
};

CapacityAssignResult assign_lpt_capacity(const BagProfile& bags, const SpeedConfig& cfg,
                                         const Rat& rho,
                                         const std::vector<int>* opt_job_schedule = nullptr);

// Weighted variant used for bag families with few distinct sizes and
// integer speeds: each bag consumes an integer weight and machine i has
// integer capacity s_i. Bags go in nonincreasing size order to the
// least loaded machine whose remaining weight capacity suffices.
struct WeightedAssignResult {
    bool ok = false;
    int failed_bag = -1;
    std::vector<long long> loads;  // realized bag volume per machine
    long long makespan_num = 0;    // max over machines of load (volume), before dividing by speed
};

WeightedAssignResult assign_weighted_capacity(const std::vector<long long>& sizes,
                                              const std::vector<long long>& weights,
                                              const std::vector<long long>& capacities);

// Exact minimum makespan of placing integer-size bags on m_prime
// identical unit-speed machines.
long long exact_makespan_identical(const std::vector<long long>& sizes, int m_prime);

// True iff the integer sizes fit into m_prime bins of the given capacity.
bool bins_feasible(const std::vector<long long>& sizes, int m_prime, long long capacity);

}  // namespace srs::second_stage
