#include "srs/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace srs {

// ---------------------------------------------------------------------------
// Types

Instance::Instance(std::vector<Rat> js, int machines) : jobs(std::move(js)), m(machines) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    for (const Rat& p : jobs)
        if (p < 0) throw std::invalid_argument("negative processing time");
}

Instance Instance::fluid_of(Rat volume, int machines) {
    if (machines < 1) throw std::invalid_argument("machine count must be positive");
    if (volume < 0) throw std::invalid_argument("negative volume");
    Instance inst;
    inst.m = machines;
    inst.fluid = true;
    inst.fluid_volume = std::move(volume);
    return inst;
}

Instance Instance::units(long long n, int machines) {
    if (n < 0) throw std::invalid_argument("negative job count");
    return Instance(std::vector<Rat>(static_cast<std::size_t>(n), Rat(1)), machines);
}

bool Instance::unit() const {
    if (fluid || jobs.empty()) return false;
    return std::all_of(jobs.begin(), jobs.end(), [](const Rat& p) { return p == 1; });
}

Rat Instance::total_volume() const {
    if (fluid) return fluid_volume;
    Rat sum = 0;
    for (const Rat& p : jobs) sum += p;
    return sum;
}

SpeedConfig::SpeedConfig(std::vector<Rat> s) : speeds(std::move(s)) {
    if (speeds.empty()) throw std::invalid_argument("empty speed configuration");
    bool positive = false;
    for (const Rat& v : speeds) {
        if (v < 0) throw std::invalid_argument("negative speed");
        positive |= v > 0;
    }
    if (!positive) throw std::invalid_argument("no working machine");
    std::sort(speeds.begin(), speeds.end());
}

SpeedConfig SpeedConfig::zero_one(int m, int working) {
    if (working < 1 || working > m) throw std::invalid_argument("bad working machine count");
    std::vector<Rat> s(static_cast<std::size_t>(m), Rat(0));
    for (int i = m - working; i < m; ++i) s[static_cast<std::size_t>(i)] = 1;
    return SpeedConfig(std::move(s));
}

int SpeedConfig::failed() const {
    int t = 0;
    for (const Rat& v : speeds) t += v == 0 ? 1 : 0;
    return t;
}

Rat SpeedConfig::total() const {
    Rat sum = 0;
    for (const Rat& v : speeds) sum += v;
    return sum;
}

SpeedConfig SpeedConfig::normalized_to(const Rat& total_target) const {
    Rat sum = total();
    SpeedConfig out = *this;
    for (Rat& v : out.speeds) v = v * total_target / sum;
    return out;
}

Rat BagProfile::total() const {
    Rat sum = 0;
    for (const Rat& v : sizes) sum += v;
    return sum;
}

Root2 SampledProfile::total() const {
    Root2 sum;
    for (const Root2& v : sizes) sum += v;
    return sum;
}

void validate_profile(const BagProfile& bags, const Instance& inst) {
    if (bags.m() != inst.m)
        throw std::invalid_argument("dimension mismatch: profile has " +
                                    std::to_string(bags.m()) + " bags, instance has " +
                                    std::to_string(inst.m) + " machines");
    for (const Rat& v : bags.sizes)
        if (v < 0) throw std::invalid_argument("negative bag size");
    if (bags.kind == ProfileKind::discrete) {
        if (inst.fluid) throw std::invalid_argument("discrete profile for fluid instance");
        if (static_cast<long long>(bags.job_map.size()) != inst.n())
            throw std::invalid_argument("job map size does not match instance");
        std::vector<Rat> sums(static_cast<std::size_t>(bags.m()), Rat(0));
        for (std::size_t j = 0; j < bags.job_map.size(); ++j) {
            int b = bags.job_map[j];
            if (b < 0 || b >= bags.m()) throw std::invalid_argument("job map out of range");
            sums[static_cast<std::size_t>(b)] += inst.jobs[j];
        }
        for (int b = 0; b < bags.m(); ++b)
            if (sums[static_cast<std::size_t>(b)] != bags.sizes[static_cast<std::size_t>(b)])
                throw std::invalid_argument("bag size disagrees with mapped jobs at bag " +
                                            std::to_string(b));
    } else {
        if (bags.total() < inst.total_volume())
            throw std::invalid_argument("fluid profile smaller than job volume");
    }
}

// ---------------------------------------------------------------------------
// Guards

namespace {

long long env_limit(const char* name, long long fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    long long v = std::strtoll(raw, &end, 10);
    if (end == raw || v < 1) return fallback;
    return v;
}

}  // namespace

int exact_assign_limit() {
    static const int limit = static_cast<int>(env_limit("SPEEDROBUST_EXACT_LIMIT", 14));
    return limit;
}

long long opt_job_limit() {
    static const long long limit = env_limit("SPEEDROBUST_OPT_JOB_LIMIT", 20);
    return limit;
}

// ---------------------------------------------------------------------------
// Full-information optimum

long long opt_m_unit(long long n, int m) {
    if (n < 0 || m < 1) throw std::invalid_argument("opt_m_unit: bad arguments");
    return (n + m - 1) / m;
}

namespace {

// Scales rationals to integers over a common denominator. Returns the
// scale factor.
Int scale_to_ints(const std::vector<Rat>& values, std::vector<Int>& out) {
    Int common = 1;
    for (const Rat& v : values) common = boost::multiprecision::lcm(common, den(v));
    out.clear();
    out.reserve(values.size());
    for (const Rat& v : values) out.push_back(num(v) * (common / den(v)));
    return common;
}

// Minimum makespan for n equal jobs of size one on integer speeds:
// parametric search over candidate makespans c/s. A makespan T is
// feasible iff sum_i floor(s_i * T) >= n, which is monotone in T, and
// the optimum is one of the breakpoints c/s_i with c in 1..n.
struct UnitOpt {
    Int c = 0, s = 1;  // makespan c/s
    std::vector<long long> capacities;
};

UnitOpt opt_unit_int(long long n, const std::vector<Int>& speeds) {
    auto feasible = [&](const Int& c, const Int& s) {
        Int covered = 0;
        for (const Int& si : speeds) {
            covered += (si * c) / s;
            if (covered >= n) return true;
        }
        return false;
    };
    UnitOpt best;
    bool have = false;
    std::vector<Int> distinct(speeds);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const Int& s : distinct) {
        if (s == 0) continue;
        Int lo = 1, hi = n;  // optimum is at most n/s_max <= n/s in these units
        if (!feasible(hi, s)) continue;
        while (lo < hi) {
            Int mid = (lo + hi) / 2;
            if (feasible(mid, s)) hi = mid; else lo = mid + 1;
        }
        if (!have || lo * best.s < best.c * s) { best.c = lo; best.s = s; have = true; }
    }
    if (!have) throw invariant_violation("unit optimum: no feasible makespan");
    best.capacities.clear();
    for (const Int& si : speeds)
        best.capacities.push_back(((si * best.c) / best.s).convert_to<long long>());
    return best;
}

// Branch and bound over job-to-machine maps, jobs in nonincreasing
// order. Machines with equal speed and equal load are interchangeable
// and only tried once; equal jobs are forced onto nondecreasing machine
// indices.
template <class V, class P>
struct JobBnb {
    std::vector<V> jobs;          // sorted nonincreasing
    std::vector<int> order;       // sorted position -> original job index
    std::vector<V> speeds;
    std::vector<V> loads;
    std::vector<int> assign, best_assign;
    V best_l{}, best_s{1};        // incumbent makespan best_l / best_s
    bool has_best = false;
    V total_volume{}, total_speed{};
    bool proven = false;          // incumbent met the volume lower bound

    static bool frac_less(const V& a, const V& b, const V& c, const V& d) {
        return P(a) * P(d) < P(c) * P(b);
    }

    int machines() const { return static_cast<int>(speeds.size()); }

    void try_improve_from(const std::vector<int>& candidate) {
        std::vector<V> l(speeds.size(), V(0));
        for (std::size_t j = 0; j < jobs.size(); ++j)
            l[static_cast<std::size_t>(candidate[j])] += jobs[j];
        V ml{}, ms{1};
        bool first = true;
        for (int i = 0; i < machines(); ++i) {
            if (speeds[static_cast<std::size_t>(i)] == 0) continue;
            const V& li = l[static_cast<std::size_t>(i)];
            const V& si = speeds[static_cast<std::size_t>(i)];
            if (first || frac_less(ml, ms, li, si)) { ml = li; ms = si; first = false; }
        }
        if (!has_best || frac_less(ml, ms, best_l, best_s)) {
            best_l = ml;
            best_s = ms;
            best_assign = candidate;
            has_best = true;
        }
    }

    void lpt_seed() {
        std::vector<int> cand(jobs.size(), 0);
        std::vector<V> l(speeds.size(), V(0));
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            int pick = -1;
            for (int i = 0; i < machines(); ++i) {
                if (speeds[static_cast<std::size_t>(i)] == 0) continue;
                if (pick < 0 ||
                    frac_less(l[static_cast<std::size_t>(i)] + jobs[j],
                              speeds[static_cast<std::size_t>(i)],
                              l[static_cast<std::size_t>(pick)] + jobs[j],
                              speeds[static_cast<std::size_t>(pick)]))
                    pick = i;
            }
            cand[j] = pick;
            l[static_cast<std::size_t>(pick)] += jobs[j];
        }
        try_improve_from(cand);
    }

    // prune when the capacity left below the incumbent cannot absorb the
    // remaining volume: sum_i max(0, best*s_i - load_i) must be >= remaining
    bool capacity_prune(const V& remaining) const {
        P room = 0;
        const P need = P(remaining) * P(best_s);
        for (int i = 0; i < machines(); ++i) {
            P gap = P(best_l) * P(speeds[static_cast<std::size_t>(i)]) -
                    P(loads[static_cast<std::size_t>(i)]) * P(best_s);
            if (gap > 0) room += gap;
            if (room > need) return false;
        }
        return true;
    }

    void dfs(std::size_t level, const V& cur_l, const V& cur_s, const V& remaining) {
        if (proven) return;
        if (level == jobs.size()) {
            if (frac_less(cur_l, cur_s, best_l, best_s)) {
                best_l = cur_l;
                best_s = cur_s;
                best_assign = assign;
                if (!frac_less(total_volume, total_speed, best_l, best_s)) proven = true;
            }
            return;
        }
        if (capacity_prune(remaining)) return;
        const V& p = jobs[level];
        int from = 0;
        if (level > 0 && jobs[level] == jobs[level - 1]) from = assign[level - 1];
        for (int i = from; i < machines(); ++i) {
            const V& si = speeds[static_cast<std::size_t>(i)];
            if (si == 0) continue;
            bool dup = false;
            for (int k = from; k < i; ++k)
                if (speeds[static_cast<std::size_t>(k)] == si &&
                    loads[static_cast<std::size_t>(k)] == loads[static_cast<std::size_t>(i)]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            V nl = loads[static_cast<std::size_t>(i)] + p;
            if (!frac_less(nl, si, best_l, best_s)) continue;  // cannot beat incumbent
            V nml = cur_l, nms = cur_s;
            if (frac_less(nml, nms, nl, si)) { nml = nl; nms = si; }
            loads[static_cast<std::size_t>(i)] += p;
            assign[level] = i;
            dfs(level + 1, nml, nms, remaining - p);
            loads[static_cast<std::size_t>(i)] -= p;
            if (proven) return;
        }
    }

    void solve() {
        loads.assign(speeds.size(), V(0));
        assign.assign(jobs.size(), -1);
        total_volume = V(0);
        for (const V& p : jobs) total_volume += p;
        total_speed = V(0);
        for (const V& s : speeds) total_speed += s;
        lpt_seed();
        if (!frac_less(total_volume, total_speed, best_l, best_s)) { proven = true; return; }
        dfs(0, V(0), V(1), total_volume);
    }
};

bool fits_int64(const Int& v) { return v <= Int(std::numeric_limits<long long>::max() / 4); }

}  // namespace

OptResult opt_full_info(const Instance& inst, const SpeedConfig& cfg) {
    if (cfg.m() != inst.m)
        throw std::invalid_argument("dimension mismatch: config has " + std::to_string(cfg.m()) +
                                    " speeds, instance has " + std::to_string(inst.m));
    Rat total_speed = cfg.total();
    if (inst.fluid) return {inst.total_volume() / total_speed, {}};
    if (inst.n() == 0) return {Rat(0), {}};

    std::vector<Int> speeds_int;
    scale_to_ints(cfg.speeds, speeds_int);

    const Rat p0 = inst.jobs[0];
    const bool all_equal =
        std::all_of(inst.jobs.begin(), inst.jobs.end(), [&](const Rat& p) { return p == p0; });
    if (all_equal && p0 == 0) return {Rat(0), std::vector<int>(inst.jobs.size(), cfg.m() - 1)};
    if (all_equal) {
        UnitOpt u = opt_unit_int(inst.n(), speeds_int);
        std::vector<int> schedule(static_cast<std::size_t>(inst.n()), -1);
        long long placed = 0;
        for (int i = 0; i < cfg.m() && placed < inst.n(); ++i)
            for (long long c = 0; c < u.capacities[static_cast<std::size_t>(i)] && placed < inst.n(); ++c)
                schedule[static_cast<std::size_t>(placed++)] = i;
        if (placed < inst.n()) throw invariant_violation("unit optimum: capacity shortfall");
        // speeds were scaled up to integers, shrinking the makespan by the
        // same factor; undo it and apply the common job size
        Int f = 1;
        for (const Rat& s : cfg.speeds) f = boost::multiprecision::lcm(f, den(s));
        Rat makespan = Rat(u.c) / Rat(u.s) * Rat(f) * p0;
        return {makespan, schedule};
    }

    if (inst.n() > opt_job_limit())
        throw std::invalid_argument("instance too large for exact job scheduling (n > " +
                                    std::to_string(opt_job_limit()) + ")");

    std::vector<Int> jobs_int;
    Int job_scale = scale_to_ints(inst.jobs, jobs_int);
    Int speed_scale = 1;
    for (const Rat& s : cfg.speeds) speed_scale = boost::multiprecision::lcm(speed_scale, den(s));

    std::vector<std::size_t> order(jobs_int.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return jobs_int[x] > jobs_int[y]; });

    Int vol = 0, maxs = 0;
    for (const Int& p : jobs_int) vol += p;
    for (const Int& s : speeds_int) maxs = std::max(maxs, s);

    Rat best;
    std::vector<int> best_assign_sorted;
    if (fits_int64(vol) && fits_int64(maxs)) {
        JobBnb<long long, __int128> solver;
        for (std::size_t idx : order) solver.jobs.push_back(jobs_int[idx].convert_to<long long>());
        for (const Int& s : speeds_int) solver.speeds.push_back(s.convert_to<long long>());
        solver.solve();
        best = Rat(Int(solver.best_l) * speed_scale, Int(solver.best_s) * job_scale);
        best_assign_sorted = solver.best_assign;
    } else {
        JobBnb<Int, Int> solver;
        for (std::size_t idx : order) solver.jobs.push_back(jobs_int[idx]);
        solver.speeds = speeds_int;
        solver.solve();
        best = Rat(solver.best_l * speed_scale, solver.best_s * job_scale);
        best_assign_sorted = solver.best_assign;
    }
    std::vector<int> schedule(jobs_int.size(), -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        schedule[order[pos]] = best_assign_sorted[pos];
    return {best, schedule};
}

}  // namespace srs
