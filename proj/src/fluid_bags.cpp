#include "srs/fluid_bags.hpp"

#include <algorithm>
#include <cmath>

namespace srs::fluid {

// ---------------------------------------------------------------------------
// General speeds

FluidGeneralPlan sandalg_general(int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    FluidGeneralPlan plan;
    plan.m = m;
    const auto um = static_cast<unsigned>(m);
    plan.U = ipow(Int(m), um);
    plan.L = plan.U - ipow(Int(m - 1), um);
    plan.t.reserve(um);
    for (int k = 1; k <= m; ++k)
        plan.t.push_back(ipow(Int(m - 1), static_cast<unsigned>(m - k)) *
                         ipow(Int(m), static_cast<unsigned>(k - 1)));
    plan.rho = Rat(plan.U, plan.L);
    plan.bags.kind = ProfileKind::fluid;
    for (const Int& tk : plan.t) plan.bags.sizes.emplace_back(tk, plan.L);
    check_plan(plan);
    return plan;
}

Rat rho_general(int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    Int u = ipow(Int(m), static_cast<unsigned>(m));
    return Rat(u, u - ipow(Int(m - 1), static_cast<unsigned>(m)));
}

double rho_general_double(int m) {
    if (m == 1) return 1.0;
    // 1 / (1 - (1-1/m)^m), stable for very large m
    double x = static_cast<double>(m) * std::log1p(-1.0 / static_cast<double>(m));
    return 1.0 / (-std::expm1(x));
}

std::vector<SpeedConfig> adversary_configs_Sk(const FluidGeneralPlan& plan) {
    std::vector<SpeedConfig> out;
    out.reserve(static_cast<std::size_t>(plan.m));
    for (int k = 0; k < plan.m; ++k) {
        Rat slow(plan.t[static_cast<std::size_t>(k)], plan.U);
        std::vector<Rat> speeds(static_cast<std::size_t>(plan.m), slow);
        speeds.back() = Rat(1) - Rat(plan.m - 1) * slow;
        out.emplace_back(std::move(speeds));
    }
    return out;
}

void check_plan(const FluidGeneralPlan& plan) {
    Int sum_t = 0;
    for (const Int& tk : plan.t) sum_t += tk;
    if (sum_t != plan.L) throw invariant_violation("bag numerators do not sum to L");
    Int prefix = 0;
    for (int k = 0; k < plan.m; ++k) {
        const Int& tk = plan.t[static_cast<std::size_t>(k)];
        if (prefix != Int(plan.m - 1) * tk - plan.U + plan.L)
            throw invariant_violation("prefix identity fails at bag " + std::to_string(k + 1));
        if (k + 1 < plan.m && plan.t[static_cast<std::size_t>(k + 1)] < tk)
            throw invariant_violation("bag sizes not nondecreasing");
        prefix += tk;
    }
    Rat total = 0;
    for (const Rat& a : plan.bags.sizes) total += a;
    if (total != 1) throw invariant_violation("bag sizes do not sum to one");
    if (plan.rho != Rat(plan.U, plan.L)) throw invariant_violation("stored rho mismatch");
}

// ---------------------------------------------------------------------------
// 0/1 speeds

RhoZeroOne rho01(int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    RhoZeroOne best{Rat(1), 0};  // t = 0 gives ratio 1
    for (int t = 1; 2 * t <= m; ++t) {
        Rat value(Int(m) * (m - t), Int(m) * m - 2 * Int(m) * t + 2 * Int(t) * t);
        if (value > best.value) best = {value, t};
    }
    return best;
}

SampledProfile sandalg01_sampled(int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    const Root2 rho = rho_zero_one_limit();
    SampledProfile out;
    out.sizes.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        Root2 linear = Root2(Rat(1, 2)) + rho * Root2(Rat(2 * i - 1, 2 * m));
        out.sizes.push_back(linear < rho ? linear : rho);
    }
    return out;
}

DeltaInterval delta_interval(int m) {
    RhoZeroOne r = rho01(m);
    const int t = r.t_star;
    if (t < 2) throw std::invalid_argument("delta interval needs t_star >= 2 (m >= 6)");
    const Rat& rho = r.value;
    DeltaInterval iv;
    iv.l1 = Rat(m) * (rho - 1) / (Int(t) * (t + 1));
    iv.l2 = Rat(m) * rho / (Int(m - t) * (m - t + 1));
    iv.u1 = Rat(m) * (rho - 1) / (Int(t) * (t - 1));
    iv.u2 = rho / (t - 1);
    iv.u3 = Rat(m) * rho / (Int(m - t) * (m - t - 1));
    iv.lo = std::max(iv.l1, iv.l2);
    iv.hi = std::min({iv.u1, iv.u2, iv.u3});
    if (iv.lo > iv.hi) throw invariant_violation("empty delta interval at m = " + std::to_string(m));
    return iv;
}

Fluid01Plan sandalg01_exact(int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    Fluid01Plan plan;
    plan.m = m;
    plan.bags.kind = ProfileKind::fluid;

    if (m <= 2) {
        plan.t_star = 0;
        plan.rho = 1;
        plan.bags.sizes.assign(static_cast<std::size_t>(m), Rat(1));
        return plan;
    }

    RhoZeroOne r = rho01(m);
    plan.t_star = r.t_star;
    plan.rho = r.value;

    if (m <= 5) {
        // small cases with t_star = 1; sizes fixed per machine count
        if (m == 3) plan.bags.sizes = {Rat(9, 10), Rat(9, 10), Rat(6, 5)};
        if (m == 4) plan.bags.sizes = {Rat(4, 5), Rat(4, 5), Rat(6, 5), Rat(6, 5)};
        if (m == 5) plan.bags.sizes = {Rat(25, 34), Rat(25, 34), Rat(40, 34), Rat(40, 34), Rat(40, 34)};
        plan.a_bar = (plan.bags.sizes[0] + plan.bags.sizes[1]) / 2;
        plan.delta = 0;
        plan.delta_prime = plan.rho - plan.bags.sizes[1];
        check_plan(plan);
        return plan;
    }

    const int t = plan.t_star;
    DeltaInterval iv = delta_interval(m);
    plan.delta_lo = iv.lo;
    plan.delta_hi = iv.hi;
    plan.delta = (iv.lo + iv.hi) / 2;

    // first 2t bags in equal pairs around their average a_bar, then the
    // plateau at rho
    plan.a_bar = (Rat(m) - plan.rho * (m - 2 * t)) / (2 * t);
    plan.bags.sizes.assign(static_cast<std::size_t>(m), plan.rho);
    for (int i = 1; i <= t; ++i) {
        Rat pair = plan.a_bar + plan.delta * Rat(2 * i - t - 1, 2);
        plan.bags.sizes[static_cast<std::size_t>(2 * i - 2)] = pair;
        plan.bags.sizes[static_cast<std::size_t>(2 * i - 1)] = pair;
    }
    plan.delta_prime = plan.rho - plan.bags.sizes[static_cast<std::size_t>(2 * t - 1)];
    check_plan(plan);
    return plan;
}

void check_plan(const Fluid01Plan& plan) {
    const int m = plan.m;
    const int t = plan.t_star;
    const auto& a = plan.bags.sizes;
    if (static_cast<int>(a.size()) != m) throw invariant_violation("bag count mismatch");

    RhoZeroOne r = rho01(m);
    if (m <= 2) {
        if (plan.rho != 1) throw invariant_violation("trivial case must have rho 1");
    } else if (r.value != plan.rho || r.t_star != t) {
        throw invariant_violation("stored rho or t_star mismatch");
    }

    Rat total = 0;
    for (const Rat& v : a) total += v;
    if (total != m) throw invariant_violation("bag sizes do not sum to m");

    for (int i = 0; i < m; ++i) {
        if (a[static_cast<std::size_t>(i)] < 0 || a[static_cast<std::size_t>(i)] > plan.rho)
            throw invariant_violation("bag size outside [0, rho]");
        if (i + 1 < m && a[static_cast<std::size_t>(i + 1)] < a[static_cast<std::size_t>(i)])
            throw invariant_violation("bag sizes not nondecreasing");
    }
    for (int j = 2 * t; j < m; ++j)
        if (a[static_cast<std::size_t>(j)] != plan.rho)
            throw invariant_violation("plateau bag differs from rho");
    if (t >= 1) {
        Rat pair_sum_target = plan.rho * Rat(m, m - t);
        for (int i = 1; i <= t; ++i) {
            if (a[static_cast<std::size_t>(2 * i - 2)] != a[static_cast<std::size_t>(2 * i - 1)])
                throw invariant_violation("pair bags differ");
            if (a[static_cast<std::size_t>(i - 1)] + a[static_cast<std::size_t>(2 * t - i)] != pair_sum_target)
                throw invariant_violation("pair sum violated");
        }
    }
    if (m >= 6) {
        for (int i = 1; i < t; ++i)
            if (a[static_cast<std::size_t>(2 * i)] - a[static_cast<std::size_t>(2 * i - 2)] != plan.delta)
                throw invariant_violation("pair increment differs from delta");
        if (plan.delta < plan.delta_lo || plan.delta > plan.delta_hi)
            throw invariant_violation("delta outside its feasible interval");
        if (plan.delta_prime < 0 || plan.delta_prime > plan.delta)
            throw invariant_violation("delta_prime outside [0, delta]");
        if (plan.rho - a[static_cast<std::size_t>(2 * t - 1)] != plan.delta_prime)
            throw invariant_violation("stored delta_prime mismatch");
    }
}

}  // namespace srs::fluid
