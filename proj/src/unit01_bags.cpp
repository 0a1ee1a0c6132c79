#include "srs/unit01_bags.hpp"

#include "srs/discrete_bags.hpp"
#include "srs/fluid_bags.hpp"
#include "srs/parallel.hpp"
#include "srs/second_stage.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace srs::unit01 {

namespace {

long long ceil_ll(long long a, long long b) { return (a + b - 1) / b; }

long long p_max_for(long long k) { return 4 * k / 3; }

std::vector<long long> to_ll(const BagProfile& bags) {
    std::vector<long long> out;
    out.reserve(bags.sizes.size());
    for (const Rat& v : bags.sizes) out.push_back(v.convert_to<long long>());
    return out;
}

void fill_rooms_asc(Unit01Plan& plan, const std::vector<long long>& rooms, long long n) {
    // rooms are nondecreasing; place jobs into the smallest rooms first
    long long total = 0;
    for (long long r : rooms) total += r;
    if (total < n) throw invariant_violation("rounded capacities below job count");
    plan.bags.assign(rooms.size(), 0);
    long long placed = 0;
    for (std::size_t b = 0; b < rooms.size() && placed < n; ++b) {
        long long take = std::min(rooms[b], n - placed);
        plan.bags[b] = take;
        placed += take;
    }
    if (placed != n) throw invariant_violation("unit fill incomplete");
}

Unit01Plan build_core(long long n, int m) {
    Unit01Plan plan;
    plan.m = m;
    plan.m_effective = m;
    plan.n = n;
    plan.k_bar = ceil_ll(n, m);
    plan.ell = static_cast<long long>(m) * plan.k_bar - n;
    const long long k = plan.k_bar;
    const long long ell = plan.ell;

    if (k >= 11) {
        plan.branch = Branch::scaled_sand_11;
        BagProfile filled = discrete::sand_to_bricks(Instance::units(n, m), fluid::sandalg01_sampled(m));
        plan.bags = to_ll(filled);
        std::sort(plan.bags.begin(), plan.bags.end());
    } else if ((k == 9 || k == 10) && m >= 40) {
        plan.branch = Branch::rounding_910;
        const Root2 rho = rho_zero_one_limit();
        const Root2 low = Root2(Rat(2)) / (Root2(Rat(3)) * rho);  // 2/(3 rho)
        std::vector<long long> rooms;
        rooms.reserve(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) {
            Root2 profile = low + Root2(Rat(4, 3)) * Root2(Rat(2 * i - 1, 2 * m));
            if (Root2(Rat(4, 3)) < profile) profile = Root2(Rat(4, 3));
            rooms.push_back(floor_exact(Root2(Rat(n, m)) * profile).convert_to<long long>());
        }
        fill_rooms_asc(plan, rooms, n);
    } else if (k <= 2) {
        plan.branch = Branch::trivial_k12;
        // pack along the optimal schedule on m machines: ell bags of k-1,
        // the rest of size k
        plan.bags.assign(static_cast<std::size_t>(m), k);
        for (long long b = 0; b < ell; ++b) plan.bags[static_cast<std::size_t>(b)] = k - 1;
    } else if (m >= 50) {
        plan.branch = Branch::table_B;
        TableCounts counts = table_b_counts(m);
        const long long a1 = ceil_ll(2 * k, 3);
        const long long a0 = a1 - 1;
        const long long a2 = k;
        const long long a3 = p_max_for(k);
        const long long x0 = ell;
        const long long x1 = counts.x01 - ell;
        if (x1 < 0) throw invariant_violation("table construction: ell too large");
        if (a0 * x0 + a1 * x1 + a2 * counts.x2 + a3 * counts.x3 != n)
            throw invariant_violation("table construction: volume identity fails");
        plan.bags.reserve(static_cast<std::size_t>(m));
        for (long long c = 0; c < x0; ++c) plan.bags.push_back(a0);
        for (long long c = 0; c < x1; ++c) plan.bags.push_back(a1);
        for (long long c = 0; c < counts.x2; ++c) plan.bags.push_back(a2);
        for (long long c = 0; c < counts.x3; ++c) plan.bags.push_back(a3);
    } else {
        return search_43(n, m);
    }

    return plan;
}

void check_plan(const Unit01Plan& plan) {
    long long total = 0;
    long long prev = 0;
    const long long cap = p_max_for(plan.k_bar);
    for (long long v : plan.bags) {
        if (v < 0 || v > cap) throw invariant_violation("bag size outside [0, 4k/3]");
        if (v < prev) throw invariant_violation("bags not nondecreasing");
        prev = v;
        total += v;
    }
    if (total != plan.n) throw invariant_violation("bag sizes do not sum to n");
}

}  // namespace

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::trivial_k12: return "trivial_k12";
        case Branch::table_B: return "table_B";
        case Branch::rounding_910: return "rounding_910";
        case Branch::scaled_sand_11: return "scaled_sand_11";
        case Branch::search: return "search";
    }
    return "?";
}

TableCounts table_b_counts(int m) {
    TableCounts c;
    const long long fifth = m / 5;
    switch (m % 5) {
        case 0: c = {2 * fifth, fifth, 2 * fifth}; break;
        case 1: c = {2 * fifth, fifth + 1, 2 * fifth}; break;
        case 2: c = {2 * fifth + 1, fifth, 2 * fifth + 1}; break;
        case 3: c = {2 * fifth + 1, fifth + 1, 2 * fifth + 1}; break;
        default: c = {2 * fifth + 1, fifth + 2, 2 * fifth + 1}; break;
    }
    if (c.x01 + c.x2 + c.x3 != m) throw invariant_violation("table counts do not sum to m");
    return c;
}

Unit01Plan build_43(long long n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
    // while dropping a bag leaves the optimum unchanged, build fewer bags
    int m_eff = m;
    while (m_eff >= 2 && ceil_ll(n, m_eff) == ceil_ll(n, m_eff - 1)) --m_eff;
    Unit01Plan plan = build_core(n, m_eff);
    if (m_eff < m) {
        plan.bags.insert(plan.bags.begin(), static_cast<std::size_t>(m - m_eff), 0);
        plan.m = m;
    }
    check_plan(plan);
    return plan;
}

Unit01Plan search_43(long long n, int m) {
    const long long k = ceil_ll(n, m);
    if (m > 50 || k > 10)
        throw std::invalid_argument("feasibility search limited to m <= 50 and k <= 10");
    const long long p_max = p_max_for(k);

    std::vector<long long> bounds(static_cast<std::size_t>(m) + 1, 0);
    for (int mp = 1; mp <= m; ++mp)
        bounds[static_cast<std::size_t>(mp)] = 4 * ceil_ll(n, mp) / 3;

    std::vector<long long> counts(static_cast<std::size_t>(p_max) + 1, 0);
    std::vector<long long> sizes;

    auto feasible_everywhere = [&]() {
        sizes.clear();
        for (long long p = p_max; p >= 1; --p)
            for (long long c = 0; c < counts[static_cast<std::size_t>(p)]; ++c) sizes.push_back(p);
        for (int mp = m; mp >= 1; --mp)
            if (!second_stage::bins_feasible(sizes, mp, bounds[static_cast<std::size_t>(mp)]))
                return false;
        return true;
    };

    // choose multiplicities for sizes p_max down to 1, larger counts first
    std::function<bool(long long, long long, long long)> dfs =
        [&](long long p, long long bags_left, long long vol_left) -> bool {
        if (p == 0) return bags_left == 0 && vol_left == 0 && feasible_everywhere();
        if (vol_left < bags_left) return false;           // every bag needs a job
        if (vol_left > bags_left * p) return false;       // even all-p bags fall short
        long long hi = std::min(bags_left, vol_left / p);
        for (long long c = hi; c >= 0; --c) {
            counts[static_cast<std::size_t>(p)] = c;
            if (dfs(p - 1, bags_left - c, vol_left - c * p)) return true;
        }
        counts[static_cast<std::size_t>(p)] = 0;
        return false;
    };

    if (!dfs(p_max, m, n)) throw invariant_violation("no 4/3-robust profile found");

    Unit01Plan plan;
    plan.m = m;
    plan.m_effective = m;
    plan.n = n;
    plan.k_bar = k;
    plan.ell = static_cast<long long>(m) * k - n;
    plan.branch = Branch::search;
    for (long long p = 1; p <= p_max; ++p)
        for (long long c = 0; c < counts[static_cast<std::size_t>(p)]; ++c) plan.bags.push_back(p);
    return plan;
}

long long plan_upper_bound(const Unit01Plan& plan, int m_prime) {
    BagProfile profile;
    profile.kind = ProfileKind::discrete;
    for (long long v : plan.bags) profile.sizes.emplace_back(v);
    Rat lpt = second_stage::assign_lpt_unit(profile, m_prime).makespan;
    Rat fold = second_stage::assign_fold01(profile, m_prime).makespan;
    return std::min(lpt, fold).convert_to<long long>();
}

PlanCheck verify_plan_43(const Unit01Plan& plan, int upto, bool exact) {
    PlanCheck res;
    std::vector<long long> nonzero;
    for (long long v : plan.bags)
        if (v > 0) nonzero.push_back(v);
    for (int mp = 1; mp <= upto; ++mp) {
        long long bound = 4 * ceil_ll(plan.n, mp) / 3;
        long long load;
        if (exact) {
            load = second_stage::exact_makespan_identical(nonzero, mp);
        } else {
            load = plan_upper_bound(plan, mp);
        }
        if (load > bound) return {false, mp, load, bound};
    }
    return res;
}

std::vector<GridFailure> verify_grid43(int max_m, long long max_k, bool exact, int jobs) {
    struct Case {
        int m;
        long long k, ell;
    };
    std::vector<Case> cases;
    for (int m = 1; m <= max_m; ++m)
        for (long long k = 1; k <= max_k; ++k)
            for (long long ell = 0; ell < std::min<long long>(m, k); ++ell) {
                long long n = m * k - ell;
                if (m > 1 && ceil_ll(n, m) == ceil_ll(n, m - 1)) continue;
                cases.push_back({m, k, ell});
            }
    std::vector<GridFailure> failures;
    std::mutex mtx;
    parallel_for(cases.size(), jobs, [&](std::size_t idx) {
        const Case& c = cases[idx];
        long long n = static_cast<long long>(c.m) * c.k - c.ell;
        Unit01Plan plan = build_43(n, c.m);
        PlanCheck check = verify_plan_43(plan, c.m, exact);
        if (!check.ok) {
            std::lock_guard<std::mutex> lock(mtx);
            failures.push_back({c.m, c.k, c.ell, check});
        }
    });
    std::sort(failures.begin(), failures.end(), [](const GridFailure& x, const GridFailure& y) {
        return std::tie(x.m, x.k_bar, x.ell) < std::tie(y.m, y.k_bar, y.ell);
    });
    return failures;
}

}  // namespace srs::unit01
