#pragma once

// Domain types for speed-robust scheduling plus the full-information
// optimum solvers used as the denominator of every robustness ratio.
//
// Jobs are grouped into at most m "bags" before machine speeds are
// known; once speeds s_1..s_m are revealed, bags are placed onto
// machines without being split and the makespan is compared against the
// optimum computed with full knowledge of the speeds.

#include "srs/rational.hpp"
#include "srs/root2.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srs {

// Thrown when a certified claim fails internally; the CLI maps it to a
// distinct exit code so CI can tell claim violations from usage errors.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Instance

// A scheduling instance: either n discrete jobs with nonnegative
// processing times, or a fluid volume of infinitesimal jobs.
struct Instance {
    std::vector<Rat> jobs;  // empty when fluid
    int m = 1;              // number of machines (= number of bags)
    bool fluid = false;
    Rat fluid_volume = 0;

    Instance() = default;
    Instance(std::vector<Rat> js, int machines);

    static Instance fluid_of(Rat volume, int machines);
    static Instance units(long long n, int machines);

    long long n() const { return static_cast<long long>(jobs.size()); }
    bool unit() const;           // all processing times equal 1
    Rat total_volume() const;    // sum of p_j, or the fluid volume
};

// ---------------------------------------------------------------------------
// SpeedConfig

// Machine speeds, canonically sorted nondecreasing. At least one speed
// must be positive.
struct SpeedConfig {
    std::vector<Rat> speeds;

    SpeedConfig() = default;
    explicit SpeedConfig(std::vector<Rat> s);

    // t working machines of speed one, the rest failed.
    static SpeedConfig zero_one(int m, int working);

    int m() const { return static_cast<int>(speeds.size()); }
    int failed() const;   // machines with speed 0
    int working() const { return m() - failed(); }
    Rat total() const;

    // Same ratios, rescaled so that the speeds sum to the given total.
    SpeedConfig normalized_to(const Rat& total_target) const;
};

// ---------------------------------------------------------------------------
// BagProfile

enum class ProfileKind { fluid, discrete };

// First-stage output: m bag sizes. Discrete profiles also carry the
// job-to-bag map; fluid profiles may have total size above the job
// volume (the excess is simply unused).
struct BagProfile {
    ProfileKind kind = ProfileKind::fluid;
    std::vector<Rat> sizes;
    std::vector<int> job_map;  // job index -> bag index, discrete only

    int m() const { return static_cast<int>(sizes.size()); }
    Rat total() const;
};

// Fluid profile over Q[sqrt(2)]; produced by the sampled construction
// whose sizes are irrational.
struct SampledProfile {
    std::vector<Root2> sizes;

    int m() const { return static_cast<int>(sizes.size()); }
    Root2 total() const;
};

// Checks a profile against the instance it claims to pack: matching m,
// bag sizes consistent with the job map (discrete), total size covering
// the volume (fluid). Throws std::invalid_argument on mismatch.
void validate_profile(const BagProfile& bags, const Instance& inst);

// ---------------------------------------------------------------------------
// AssignmentResult

template <class T>
struct BasicAssignment {
    std::vector<int> bag_to_machine;  // bag index -> machine index
    std::vector<T> loads;             // per machine, failed machines stay 0
    T makespan{};
};

using AssignmentResult = BasicAssignment<Rat>;
using AssignmentResult2 = BasicAssignment<Root2>;

// ---------------------------------------------------------------------------
// Full-information optimum

struct OptResult {
    Rat makespan;
    std::vector<int> job_to_machine;  // empty for fluid instances
};

// Exact minimum makespan of scheduling the jobs themselves (not bags).
// Fluid: volume / sum of speeds. Unit jobs: parametric search over
// candidate makespans c/s_i. General: branch and bound, guarded by
// opt_job_limit() jobs.
OptResult opt_full_info(const Instance& inst, const SpeedConfig& cfg);

// ceil(n/m): optimum for n unit jobs on m unit-speed machines.
long long opt_m_unit(long long n, int m);

// Default guards; both can be raised via environment variables
// SPEEDROBUST_EXACT_LIMIT (machines in the exact bag assignment) and
// SPEEDROBUST_OPT_JOB_LIMIT (jobs in the branch-and-bound solver).
int exact_assign_limit();
long long opt_job_limit();

}  // namespace srs
