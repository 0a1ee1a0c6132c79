#pragma once

// Robustness evaluation: worst-case ratio of the second-stage makespan
// to the full-information optimum over families of speed
// configurations, plus the explicit lower-bound certificates.

#include "srs/core.hpp"
#include "srs/second_stage.hpp"

#include <functional>
#include <string>

namespace srs::adversary {

template <class T>
struct RobustnessRow {
    SpeedConfig cfg;
    T alg{};       // second-stage makespan achieved for the bags
    T opt{};       // full-information optimum
    T ratio{};     // alg / opt
    bool exact_alg = true;  // false when alg is only an upper bound
};

template <class T>
struct RobustnessReport {
    std::string family;
    std::vector<RobustnessRow<T>> rows;
    T max_ratio{};
    std::size_t argmax = 0;
    bool certified = true;   // false for heuristic searches (lower bound only)
    bool exact = true;       // all rows evaluated with the exact assignment

    void finalize() {
        exact = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            exact = exact && rows[i].exact_alg;
            if (i == 0 || max_ratio < rows[i].ratio) {
                max_ratio = rows[i].ratio;
                argmax = i;
            }
        }
    }
};

using ReportR = RobustnessReport<Rat>;
using Report2 = RobustnessReport<Root2>;

enum class AssignMode { automatic, exact, fold, lpt };

// Worst case over the 0/1 configurations t = 0..m-1 (m-t working
// machines). The assignment is exact up to exact_assign_limit()
// machines; beyond that fluid profiles use folding and discrete
// profiles LPT, and the report is marked as an upper bound.
ReportR evaluate_01(const BagProfile& bags, const Instance& inst,
                    AssignMode mode = AssignMode::automatic);
Report2 evaluate_01(const SampledProfile& bags, const Instance& inst,
                    AssignMode mode = AssignMode::automatic);

// Exact ratio for every configuration in the family; the maximum is a
// certified lower bound on the true robustness factor.
ReportR evaluate_family(const BagProfile& bags, const Instance& inst,
                        const std::vector<SpeedConfig>& family,
                        const std::string& family_name = "file");

// Heuristic worst-case search: a grid over the normalized speed
// simplex (sum of speeds = job volume) at resolution 1/D, plus
// configurations with m-1 equal slow machines targeting each bag at a
// sweep of ratios, plus one round of local refinement at step 1/(4D).
struct SearchBudget {
    int grid_resolution = 24;
    int refine_rounds = 1;
    int target_steps = 24;
    int jobs = 0;  // worker threads; 0 = hardware default
};

ReportR search_speeds(const BagProfile& bags, const Instance& inst,
                      const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Certificates and games

// Lower-bound certificate for 756 unit jobs on six machines: six speed
// rows covering all bag profiles, with forced ratio phi = 589/391.
struct CertificateRow {
    long long size_threshold;   // row applies when a_i >= this
    long long suffix_threshold; // then the largest bags total at least this
    long long prefix_bound;     // equivalent prefix form (0 when unused)
    long long s_slow, s_fast;   // five machines of s_slow, one of s_fast
    Rat phi;                    // forced ratio for the row
};

struct LowerBoundCertificate {
    long long n = 756;
    int m = 6;
    std::vector<CertificateRow> rows;
    long long covering_sum = 0;  // max total bag size when no row applies
    Rat phi;                     // min over rows
};

LowerBoundCertificate certify_m6();

// The two concluding two-strategy games for unit jobs and 0/1 speeds.
// Each game pits two algorithm behaviours (perfectly balanced bags vs.
// one bigger bag) against two adversary choices (one machine fails or
// none does) and reports the ratio forced on each behaviour.
struct GameBranch {
    std::string label;
    Rat forced_ratio;     // max over the two adversary choices
    Rat ratio_fail;       // ratio when one machine fails
    Rat ratio_all_up;     // ratio when no machine fails
};

struct GameResult {
    long long n;
    int m;
    GameBranch balanced;  // every bag of size n/m
    GameBranch unbalanced;
    Rat value;            // min over branches: forced lower bound
};

GameResult example_game_two_per_bag(int m);    // 2m jobs, m > 2
GameResult example_game_three_per_bag(int m);  // 3m jobs, m > 3

// Demo instances showing what bag balance does and does not buy.
struct DemoInstance {
    Instance inst;
    BagProfile bags;
    SpeedConfig cfg;
    Rat forced_ratio;  // certified ratio of the profile under cfg
};

// k+1 bags of size k for k^2 unit jobs plus one job of size k on
// m = k^2+1 machines: minimizing the largest bag forces ratio >= k.
DemoInstance min_max_bag_demo(long long k);

// m bags of size 2m-1 from (2m-1)m unit jobs against speeds
// {m, 2m, ..., 2m}: balanced bags force ratio >= 2 - 1/m.
DemoInstance balanced_demo(int m);

}  // namespace srs::adversary
