#include "srs/second_stage.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

namespace srs::second_stage {

namespace {

std::vector<Int> scale_speeds(const SpeedConfig& cfg) {
    Int common = 1;
    for (const Rat& s : cfg.speeds) common = boost::multiprecision::lcm(common, den(s));
    std::vector<Int> out;
    out.reserve(cfg.speeds.size());
    for (const Rat& s : cfg.speeds) out.push_back(num(s) * (common / den(s)));
    return out;
}

template <class T, class S>
T mul_ts(const T& x, const S& y) {
    if constexpr (std::is_same_v<T, Root2>) return x * Root2(Rat(y));
    else return x * T(y);
}

// Exact bag-to-machine optimum by depth-first search. Bags are taken in
// nonincreasing order; machines with equal speed and equal load are
// interchangeable and only branched once, equal bags are forced onto
// nondecreasing machine indices, and branches that cannot beat the
// incumbent (per-machine or by total remaining capacity) are cut.
template <class T, class S>
struct BagAssigner {
    std::vector<T> bags;  // nonincreasing
    std::vector<S> speeds;
    std::vector<T> loads;
    std::vector<int> assign, best_assign;
    T best_l{};
    S best_s{1};
    bool has_best = false;
    bool proven = false;
    T total_volume{};
    S total_speed{};

    static bool frac_less(const T& a, const S& b, const T& c, const S& d) {
        if constexpr (std::is_same_v<T, long long> && std::is_same_v<S, long long>)
            return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
        else
            return mul_ts(a, d) < mul_ts(c, b);
    }

    int machines() const { return static_cast<int>(speeds.size()); }

    void consider(const std::vector<int>& candidate) {
        std::vector<T> l(speeds.size(), T(0));
        for (std::size_t j = 0; j < bags.size(); ++j)
            l[static_cast<std::size_t>(candidate[j])] += bags[j];
        T ml{};
        S ms{1};
        bool first = true;
        for (int i = 0; i < machines(); ++i) {
            if (speeds[static_cast<std::size_t>(i)] == 0) continue;
            if (first || frac_less(ml, ms, l[static_cast<std::size_t>(i)], speeds[static_cast<std::size_t>(i)])) {
                ml = l[static_cast<std::size_t>(i)];
                ms = speeds[static_cast<std::size_t>(i)];
                first = false;
            }
        }
        if (!has_best || frac_less(ml, ms, best_l, best_s)) {
            best_l = ml;
            best_s = ms;
            best_assign = candidate;
            has_best = true;
        }
    }

    void lpt_seed() {
        std::vector<int> cand(bags.size(), 0);
        std::vector<T> l(speeds.size(), T(0));
        for (std::size_t j = 0; j < bags.size(); ++j) {
            int pick = -1;
            for (int i = 0; i < machines(); ++i) {
                if (speeds[static_cast<std::size_t>(i)] == 0) continue;
                if (pick < 0 || frac_less(l[static_cast<std::size_t>(i)] + bags[j],
                                          speeds[static_cast<std::size_t>(i)],
                                          l[static_cast<std::size_t>(pick)] + bags[j],
                                          speeds[static_cast<std::size_t>(pick)]))
                    pick = i;
            }
            cand[j] = pick;
            l[static_cast<std::size_t>(pick)] += bags[j];
        }
        consider(cand);
    }

    bool capacity_prune(const T& remaining) const {
        if constexpr (std::is_same_v<T, long long> && std::is_same_v<S, long long>) {
            __int128 room = 0;
            const __int128 need = static_cast<__int128>(remaining) * best_s;
            for (int i = 0; i < machines(); ++i) {
                __int128 gap = static_cast<__int128>(best_l) * speeds[static_cast<std::size_t>(i)] -
                               static_cast<__int128>(loads[static_cast<std::size_t>(i)]) * best_s;
                if (gap > 0) room += gap;
                if (room > need) return false;
            }
            return true;
        } else {
            T room{};
            const T need = mul_ts(remaining, best_s);
            for (int i = 0; i < machines(); ++i) {
                T gap = mul_ts(best_l, speeds[static_cast<std::size_t>(i)]) -
                        mul_ts(loads[static_cast<std::size_t>(i)], best_s);
                if (gap > T(0)) room += gap;
                if (room > need) return false;
            }
            return true;
        }
    }

    void dfs(std::size_t level, const T& cur_l, const S& cur_s, const T& remaining) {
        if (proven) return;
        if (level == bags.size()) {
            if (!has_best || frac_less(cur_l, cur_s, best_l, best_s)) {
                best_l = cur_l;
                best_s = cur_s;
                best_assign = assign;
                has_best = true;
                if (!frac_less(total_volume, total_speed, best_l, best_s)) proven = true;
            }
            return;
        }
        if (capacity_prune(remaining)) return;
        const T& p = bags[level];
        int from = 0;
        if (level > 0 && bags[level] == bags[level - 1]) from = assign[level - 1];
        for (int i = from; i < machines(); ++i) {
            const S& si = speeds[static_cast<std::size_t>(i)];
            if (si == 0) continue;
            bool dup = false;
            for (int k = from; k < i; ++k)
                if (speeds[static_cast<std::size_t>(k)] == si &&
                    loads[static_cast<std::size_t>(k)] == loads[static_cast<std::size_t>(i)]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            T nl = loads[static_cast<std::size_t>(i)] + p;
            if (has_best && !frac_less(nl, si, best_l, best_s)) continue;
            T nml = cur_l;
            S nms = cur_s;
            if (frac_less(nml, nms, nl, si)) { nml = nl; nms = si; }
            loads[static_cast<std::size_t>(i)] += p;
            assign[level] = i;
            dfs(level + 1, nml, nms, remaining - p);
            loads[static_cast<std::size_t>(i)] -= p;
            if (proven) return;
        }
    }

    void solve() {
        loads.assign(speeds.size(), T(0));
        assign.assign(bags.size(), -1);
        total_volume = T(0);
        for (const T& b : bags) total_volume += b;
        total_speed = S(0);
        for (const S& s : speeds) total_speed += s;
        lpt_seed();
        if (!frac_less(total_volume, total_speed, best_l, best_s)) { proven = true; return; }
        dfs(0, T(0), S(1), total_volume);
    }
};

template <class T>
BasicAssignment<T> exact_impl(const std::vector<T>& sizes, const SpeedConfig& cfg) {
    const int m = cfg.m();
    if (m > exact_assign_limit())
        throw std::invalid_argument("instance too large for exact assignment (m > " +
                                    std::to_string(exact_assign_limit()) + ")");
    std::vector<std::size_t> order;  // nonzero bags, size-descending
    for (std::size_t j = 0; j < sizes.size(); ++j)
        if (!(sizes[j] == T(0))) order.push_back(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sizes[y] < sizes[x]; });

    BagAssigner<T, Int> solver;
    solver.speeds = scale_speeds(cfg);
    for (std::size_t j : order) solver.bags.push_back(sizes[j]);
    solver.solve();

    BasicAssignment<T> out;
    out.bag_to_machine.assign(sizes.size(), -1);
    int first_working = 0;
    while (cfg.speeds[static_cast<std::size_t>(first_working)] == 0) ++first_working;
    for (std::size_t j = 0; j < sizes.size(); ++j) out.bag_to_machine[j] = first_working;
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        out.bag_to_machine[order[pos]] = solver.best_assign[pos];
    out.loads.assign(static_cast<std::size_t>(m), T(0));
    for (std::size_t j = 0; j < sizes.size(); ++j)
        out.loads[static_cast<std::size_t>(out.bag_to_machine[j])] += sizes[j];
    // recompute the makespan from the map against the original speeds,
    // exactly in the bag field
    bool have = false;
    T best{};
    for (int i = 0; i < m; ++i) {
        const Rat& si = cfg.speeds[static_cast<std::size_t>(i)];
        if (si == 0) continue;
        T completion = out.loads[static_cast<std::size_t>(i)];
        if constexpr (std::is_same_v<T, Root2>)
            completion = completion / Root2(si);
        else
            completion = completion / T(si);
        if (!have || best < completion) { best = completion; have = true; }
    }
    out.makespan = best;
    return out;
}

}  // namespace

AssignmentResult assign_exact(const BagProfile& bags, const SpeedConfig& cfg) {
    if (cfg.m() != bags.m())
        throw std::invalid_argument("dimension mismatch between profile and speeds");
    return exact_impl<Rat>(bags.sizes, cfg);
}

AssignmentResult2 assign_exact(const SampledProfile& bags, const SpeedConfig& cfg) {
    if (cfg.m() != bags.m())
        throw std::invalid_argument("dimension mismatch between profile and speeds");
    return exact_impl<Root2>(bags.sizes, cfg);
}

// ---------------------------------------------------------------------------
// Folding

namespace {

template <class T>
BasicAssignment<T> fold_impl(const std::vector<T>& sizes, int m_prime) {
    const int m = static_cast<int>(sizes.size());
    if (m_prime <= 0) throw std::invalid_argument("no working machine");
    if (m_prime > m) throw std::invalid_argument("more working machines than bags");

    std::vector<std::size_t> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sizes[x] < sizes[y]; });

    // machine index for the i-th smallest bag (0-based), on m machines of
    // which the first t fail
    std::vector<int> machine_of_rank(sizes.size(), -1);
    const int t = m - m_prime;
    if (2 * m_prime >= m) {
        for (int b = 0; b < m; ++b)
            machine_of_rank[static_cast<std::size_t>(b)] = b < t ? 2 * t - b - 1 : b;
    } else {
        // fewer than half the machines work: reuse the solution for twice as
        // many working machines and merge machine pairs
        BasicAssignment<T> inner = fold_impl(sizes, 2 * m_prime);
        std::vector<int> remap(sizes.size(), -1);
        const int inner_first = m - 2 * m_prime;
        const int outer_first = m - m_prime;
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            int im = inner.bag_to_machine[j];
            remap[j] = outer_first + (im - inner_first) / 2;
        }
        BasicAssignment<T> out;
        out.bag_to_machine = remap;
        out.loads.assign(sizes.size(), T(0));
        for (std::size_t j = 0; j < sizes.size(); ++j)
            out.loads[static_cast<std::size_t>(remap[j])] += sizes[j];
        out.makespan = T(0);
        for (const T& l : out.loads)
            if (out.makespan < l) out.makespan = l;
        return out;
    }

    BasicAssignment<T> out;
    out.bag_to_machine.assign(sizes.size(), -1);
    for (int rank = 0; rank < m; ++rank)
        out.bag_to_machine[order[static_cast<std::size_t>(rank)]] =
            machine_of_rank[static_cast<std::size_t>(rank)];
    out.loads.assign(sizes.size(), T(0));
    for (std::size_t j = 0; j < sizes.size(); ++j)
        out.loads[static_cast<std::size_t>(out.bag_to_machine[j])] += sizes[j];
    out.makespan = T(0);
    for (const T& l : out.loads)
        if (out.makespan < l) out.makespan = l;
    return out;
}

}  // namespace

AssignmentResult assign_fold01(const BagProfile& bags, int m_prime) {
    return fold_impl<Rat>(bags.sizes, m_prime);
}

AssignmentResult2 assign_fold01(const SampledProfile& bags, int m_prime) {
    return fold_impl<Root2>(bags.sizes, m_prime);
}

// ---------------------------------------------------------------------------
// LPT variants

AssignmentResult assign_lpt_unit(const BagProfile& bags, int m_prime) {
    const int m = bags.m();
    if (m_prime <= 0) throw std::invalid_argument("no working machine");
    if (m_prime > m) throw std::invalid_argument("more working machines than bags");
    const int t = m - m_prime;

    std::vector<std::size_t> order(bags.sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return bags.sizes[y] < bags.sizes[x]; });

    AssignmentResult out;
    out.bag_to_machine.assign(bags.sizes.size(), -1);
    out.loads.assign(bags.sizes.size(), Rat(0));
    for (std::size_t j : order) {
        int pick = t;
        for (int i = t + 1; i < m; ++i)
            if (out.loads[static_cast<std::size_t>(i)] < out.loads[static_cast<std::size_t>(pick)])
                pick = i;
        out.bag_to_machine[j] = pick;
        out.loads[static_cast<std::size_t>(pick)] += bags.sizes[j];
    }
    out.makespan = 0;
    for (const Rat& l : out.loads)
        if (out.makespan < l) out.makespan = l;
    return out;
}

CapacityAssignResult assign_lpt_capacity(const BagProfile& bags, const SpeedConfig& cfg,
                                         const Rat& rho,
                                         const std::vector<int>* opt_job_schedule) {
    if (cfg.m() != bags.m())
        throw std::invalid_argument("dimension mismatch between profile and speeds");
    const int m = cfg.m();

    CapacityAssignResult res;
    res.assignment.bag_to_machine.assign(bags.sizes.size(), -1);
    res.assignment.loads.assign(static_cast<std::size_t>(m), Rat(0));
    auto& loads = res.assignment.loads;

    std::vector<bool> placed(bags.sizes.size(), false);

    // pre-placement of oversized single-job bags along an optimal schedule
    if (opt_job_schedule != nullptr && !bags.job_map.empty()) {
        std::vector<int> jobs_per_bag(bags.sizes.size(), 0);
        std::vector<int> single_job(bags.sizes.size(), -1);
        for (std::size_t j = 0; j < bags.job_map.size(); ++j) {
            int b = bags.job_map[j];
            jobs_per_bag[static_cast<std::size_t>(b)]++;
            single_job[static_cast<std::size_t>(b)] = static_cast<int>(j);
        }
        Rat largest_multi = 0;
        for (std::size_t b = 0; b < bags.sizes.size(); ++b)
            if (jobs_per_bag[b] >= 2 && largest_multi < bags.sizes[b]) largest_multi = bags.sizes[b];
        for (std::size_t b = 0; b < bags.sizes.size(); ++b) {
            if (jobs_per_bag[b] != 1 || !(bags.sizes[b] > largest_multi)) continue;
            int machine = (*opt_job_schedule)[static_cast<std::size_t>(single_job[b])];
            res.assignment.bag_to_machine[b] = machine;
            loads[static_cast<std::size_t>(machine)] += bags.sizes[b];
            placed[b] = true;
        }
    }

    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < bags.sizes.size(); ++j)
        if (!placed[j]) order.push_back(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return bags.sizes[y] < bags.sizes[x]; });

    for (std::size_t j : order) {
        const Rat& size = bags.sizes[j];
        int pick = -1;
        Rat pick_completion = 0;
        for (int i = 0; i < m; ++i) {
            const Rat& si = cfg.speeds[static_cast<std::size_t>(i)];
            if (si == 0) continue;
            if (loads[static_cast<std::size_t>(i)] + size > rho * si) continue;  // no room
            Rat completion = loads[static_cast<std::size_t>(i)] / si;
            if (pick < 0 || completion < pick_completion) {
                pick = i;
                pick_completion = completion;
            }
        }
        if (pick < 0) {
            res.ok = false;
            res.failed_bag = static_cast<int>(j);
            return res;
        }
        res.assignment.bag_to_machine[j] = pick;
        loads[static_cast<std::size_t>(pick)] += size;
    }

    res.ok = true;
    res.assignment.makespan = 0;
    for (int i = 0; i < m; ++i) {
        const Rat& si = cfg.speeds[static_cast<std::size_t>(i)];
        if (si == 0) continue;
        Rat completion = loads[static_cast<std::size_t>(i)] / si;
        if (res.assignment.makespan < completion) res.assignment.makespan = completion;
    }
    return res;
}

WeightedAssignResult assign_weighted_capacity(const std::vector<long long>& sizes,
                                              const std::vector<long long>& weights,
                                              const std::vector<long long>& capacities) {
    if (sizes.size() != weights.size())
        throw std::invalid_argument("sizes and weights length mismatch");
    WeightedAssignResult res;
    res.loads.assign(capacities.size(), 0);
    std::vector<long long> used(capacities.size(), 0);

    std::vector<std::size_t> order(sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sizes[y] < sizes[x]; });

    for (std::size_t j : order) {
        int pick = -1;
        for (std::size_t i = 0; i < capacities.size(); ++i) {
            if (capacities[i] == 0) continue;
            if (used[i] + weights[j] > capacities[i]) continue;
            if (pick < 0 || static_cast<__int128>(res.loads[i]) * capacities[static_cast<std::size_t>(pick)] <
                                static_cast<__int128>(res.loads[static_cast<std::size_t>(pick)]) * capacities[i])
                pick = static_cast<int>(i);
        }
        if (pick < 0) {
            res.ok = false;
            res.failed_bag = static_cast<int>(j);
            return res;
        }
        used[static_cast<std::size_t>(pick)] += weights[j];
        res.loads[static_cast<std::size_t>(pick)] += sizes[j];
    }
    res.ok = true;
    res.makespan_num = 0;
    for (long long l : res.loads) res.makespan_num = std::max(res.makespan_num, l);
    return res;
}

// ---------------------------------------------------------------------------
// Identical machines, integer sizes

long long exact_makespan_identical(const std::vector<long long>& sizes, int m_prime) {
    if (m_prime <= 0) throw std::invalid_argument("no working machine");
    BagAssigner<long long, long long> solver;
    for (long long v : sizes)
        if (v != 0) solver.bags.push_back(v);
    std::sort(solver.bags.begin(), solver.bags.end(), std::greater<>());
    solver.speeds.assign(static_cast<std::size_t>(m_prime), 1);
    if (solver.bags.empty()) return 0;
    solver.solve();
    return solver.best_l;
}

namespace {

struct BinPacker {
    std::vector<long long> items;  // nonincreasing
    std::vector<long long> bins;
    long long cap = 0;

    bool ffd() const {
        std::vector<long long> load(bins.size(), 0);
        for (long long v : items) {
            bool ok = false;
            for (std::size_t i = 0; i < load.size(); ++i)
                if (load[i] + v <= cap) {
                    load[i] += v;
                    ok = true;
                    break;
                }
            if (!ok) return false;
        }
        return true;
    }

    bool dfs(std::size_t level) {
        if (level == items.size()) return true;
        long long v = items[level];
        for (std::size_t i = 0; i < bins.size(); ++i) {
            if (bins[i] + v > cap) continue;
            bool dup = false;
            for (std::size_t k = 0; k < i; ++k)
                if (bins[k] == bins[i]) { dup = true; break; }
            if (dup) continue;
            bins[i] += v;
            if (dfs(level + 1)) return true;
            bins[i] -= v;
            if (bins[i] == 0) break;  // empty bins are interchangeable
        }
        return false;
    }
};

}  // namespace

bool bins_feasible(const std::vector<long long>& sizes, int m_prime, long long capacity) {
    if (m_prime <= 0) return sizes.empty();
    BinPacker packer;
    long long total = 0;
    for (long long v : sizes) {
        if (v == 0) continue;
        if (v > capacity) return false;
        packer.items.push_back(v);
        total += v;
    }
    if (total > capacity * static_cast<long long>(m_prime)) return false;
    if (static_cast<int>(packer.items.size()) <= m_prime) return true;
    std::sort(packer.items.begin(), packer.items.end(), std::greater<>());
    packer.bins.assign(static_cast<std::size_t>(m_prime), 0);
    packer.cap = capacity;
    if (packer.ffd()) return true;
    return packer.dfs(0);
}

}  // namespace srs::second_stage
