#pragma once

// Bag constructions for infinitesimal jobs: the general-speed sand
// construction with bound m^m/(m^m-(m-1)^m), and two constructions for
// 0/1 speeds -- a sampled profile-function variant bounded by
// (1+sqrt(2))/2 and an exact per-m optimal one.

#include "srs/core.hpp"

namespace srs::fluid {

// ---------------------------------------------------------------------------
// General speeds

// Plan with exact rational bag sizes t_k/L summing to 1, where
// U = m^m, L = m^m - (m-1)^m and t_k = (m-1)^(m-k) * m^(k-1).
struct FluidGeneralPlan {
    int m = 1;
    Int U;                  // m^m
    Int L;                  // m^m - (m-1)^m
    std::vector<Int> t;     // t_1..t_m
    Rat rho;                // U/L, the robustness factor
    BagProfile bags;        // sizes t_k/L, total volume 1
};

FluidGeneralPlan sandalg_general(int m);

// Exact U/L and its double approximation 1/(1 - (1-1/m)^m); the latter
// stays finite for very large m.
Rat rho_general(int m);
double rho_general_double(int m);

// The m speed configurations targeting each bag size: configuration k
// has m-1 machines of speed t_k/U and one of speed 1-(m-1)t_k/U, so the
// speeds sum to 1.
std::vector<SpeedConfig> adversary_configs_Sk(const FluidGeneralPlan& plan);

// ---------------------------------------------------------------------------
// 0/1 speeds

// max over integer t <= m/2 of m(m-t) / (m^2 - 2mt + 2t^2), with the
// smallest maximizing t. This is the optimal robustness factor for
// infinitesimal jobs when every machine has speed 0 or 1.
struct RhoZeroOne {
    Rat value;
    int t_star = 0;
};
RhoZeroOne rho01(int m);

// Sampled construction: bag i gets f((i-1/2)/m) where
// f(x) = min{1/2 + rho*x, rho} with rho = (1+sqrt(2))/2. The sizes are
// exact in Q[sqrt(2)] and their total is at least m.
SampledProfile sandalg01_sampled(int m);

// The exact construction matching rho01(m) for every m. For m >= 6 the
// first 2*t_star bags come in equal pairs a_{2i-1} = a_{2i} that grow by
// a common increment delta chosen from a provably nonempty interval;
// the remaining bags all equal rho01(m).
struct Fluid01Plan {
    int m = 1;
    int t_star = 0;
    Rat rho;          // rho01(m)
    Rat a_bar;        // average of the first 2*t_star bags (m >= 3)
    Rat delta;        // pair increment (0 when t_star <= 1)
    Rat delta_prime;  // a_{2t*+1} - a_{2t*}
    Rat delta_lo, delta_hi;  // feasible interval bounds (m >= 6)
    BagProfile bags;  // m sizes, nondecreasing, total exactly m
};

Fluid01Plan sandalg01_exact(int m);

// Feasible interval [max{L1,L2}, min{U1,U2,U3}] for the pair increment,
// exposed for verification. Requires t_star >= 2 (i.e. m >= 6).
struct DeltaInterval {
    Rat lo, hi;
    Rat l1, l2, u1, u2, u3;
};
DeltaInterval delta_interval(int m);

// Consistency checks of a plan against its defining constraints; throws
// invariant_violation on the first failure.
void check_plan(const FluidGeneralPlan& plan);
void check_plan(const Fluid01Plan& plan);

}  // namespace srs::fluid
