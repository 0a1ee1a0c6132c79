#include "srs/discrete_bags.hpp"

#include <algorithm>
#include <numeric>

namespace srs::discrete {

BagProfile lpt_bags(const Instance& inst) {
    if (inst.fluid) throw std::invalid_argument("discrete bagging needs discrete jobs");
    const int m = inst.m;
    BagProfile out;
    out.kind = ProfileKind::discrete;
    out.sizes.assign(static_cast<std::size_t>(m), Rat(0));
    out.job_map.assign(inst.jobs.size(), -1);

    std::vector<std::size_t> order(inst.jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return inst.jobs[y] < inst.jobs[x];
    });
    for (std::size_t j : order) {
        int pick = 0;
        for (int b = 1; b < m; ++b)
            if (out.sizes[static_cast<std::size_t>(b)] < out.sizes[static_cast<std::size_t>(pick)])
                pick = b;
        out.job_map[j] = pick;
        out.sizes[static_cast<std::size_t>(pick)] += inst.jobs[j];
    }
    return out;
}

OddPlan oddalgo(long long n, int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    if (n < m) throw std::invalid_argument("lambda below one");
    OddPlan plan;
    // smallest q with n/m <= 2q+1
    plan.q = (n - m + 2 * m - 1) / (2 * m);
    const long long q = plan.q;

    if (q == 0) {  // n == m, one job per bag
        plan.m_big = m;
        plan.bags.kind = ProfileKind::discrete;
        plan.bags.sizes.assign(static_cast<std::size_t>(m), Rat(1));
        plan.bags.job_map.resize(static_cast<std::size_t>(n));
        for (long long j = 0; j < n; ++j) plan.bags.job_map[static_cast<std::size_t>(j)] = static_cast<int>(j);
        return plan;
    }

    // m bags of size 2q-1, then two extra jobs per bag until at most one
    // job remains
    long long rest = n - static_cast<long long>(m) * (2 * q - 1);
    if (rest < 0 || rest > 2 * m) throw invariant_violation("odd construction: bad remainder");
    plan.m_big = static_cast<int>(rest / 2);
    plan.m_medium = static_cast<int>(rest % 2);
    plan.m_small = m - plan.m_big - plan.m_medium;

    plan.bags.kind = ProfileKind::discrete;
    plan.bags.sizes.reserve(static_cast<std::size_t>(m));
    for (int b = 0; b < plan.m_big; ++b) plan.bags.sizes.emplace_back(2 * q + 1);
    for (int b = 0; b < plan.m_medium; ++b) plan.bags.sizes.emplace_back(2 * q);
    for (int b = 0; b < plan.m_small; ++b) plan.bags.sizes.emplace_back(2 * q - 1);

    long long check = (2 * q + 1) * plan.m_big + 2 * q * plan.m_medium + (2 * q - 1) * plan.m_small;
    if (check != n) throw invariant_violation("odd construction: volume identity fails");

    plan.bags.job_map.resize(static_cast<std::size_t>(n));
    long long j = 0;
    for (int b = 0; b < m; ++b) {
        long long size = plan.bags.sizes[static_cast<std::size_t>(b)].convert_to<long long>();
        for (long long c = 0; c < size; ++c) plan.bags.job_map[static_cast<std::size_t>(j++)] = b;
    }
    return plan;
}

namespace {

// Shared fill: integer per-bag room in nondecreasing capacity order.
BagProfile fill_units(long long n, std::vector<std::pair<Int, std::size_t>> rooms) {
    std::stable_sort(rooms.begin(), rooms.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    BagProfile out;
    out.kind = ProfileKind::discrete;
    out.sizes.assign(rooms.size(), Rat(0));
    out.job_map.resize(static_cast<std::size_t>(n));
    long long placed = 0;
    for (std::size_t slot = 0; slot < rooms.size() && placed < n; ++slot) {
        long long take = std::min<long long>(rooms[slot].first.convert_to<long long>(), n - placed);
        out.sizes[slot] = take;
        for (long long c = 0; c < take; ++c) out.job_map[static_cast<std::size_t>(placed++)] = static_cast<int>(slot);
    }
    if (placed < n) throw invariant_violation("scaled fluid bags cannot hold all jobs");
    return out;
}

}  // namespace

BagProfile sand_to_bricks(const Instance& inst, const BagProfile& base) {
    if (!inst.unit()) throw std::invalid_argument("scaled fill needs unit jobs");
    if (base.m() != inst.m) throw std::invalid_argument("dimension mismatch with base plan");
    const long long n = inst.n();
    Rat total = base.total();
    if (total <= 0) throw std::invalid_argument("empty base plan");
    // rescale to total n, inflate by (1 + m/n), floor to integer room
    std::vector<std::pair<Int, std::size_t>> rooms;
    rooms.reserve(base.sizes.size());
    for (std::size_t b = 0; b < base.sizes.size(); ++b) {
        Rat capacity = base.sizes[b] * Rat(n + inst.m) / total;
        rooms.emplace_back(rat_floor(capacity), b);
    }
    return fill_units(n, std::move(rooms));
}

BagProfile sand_to_bricks(const Instance& inst, const SampledProfile& base) {
    if (!inst.unit()) throw std::invalid_argument("scaled fill needs unit jobs");
    if (base.m() != inst.m) throw std::invalid_argument("dimension mismatch with base plan");
    const long long n = inst.n();
    Root2 total = base.total();
    std::vector<std::pair<Int, std::size_t>> rooms;
    rooms.reserve(base.sizes.size());
    for (std::size_t b = 0; b < base.sizes.size(); ++b) {
        Root2 capacity = (base.sizes[b] * Root2(Rat(n + inst.m))) / total;
        rooms.emplace_back(floor_exact(capacity), b);
    }
    return fill_units(n, std::move(rooms));
}

BagProfile combined18(long long n, int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    if (n < 8 * static_cast<long long>(m)) return oddalgo(n, m).bags;
    return sand_to_bricks(Instance::units(n, m), fluid::sandalg_general(m).bags);
}

BagProfile optimal_m2(long long n) {
    if (n < 1) throw std::invalid_argument("need at least one job");
    const long long a1 = 4 * (n / 4 + 1) / 3;
    const long long a2 = 4 * ((n + 1) / 2) / 3;
    if (a1 + a2 < n) throw invariant_violation("two-bag capacities below job count");
    // fill greedily, largest bag first
    const long long b2 = std::min(n, a2);
    const long long b1 = n - b2;
    BagProfile out;
    out.kind = ProfileKind::discrete;
    out.sizes = {Rat(b1), Rat(b2)};
    out.job_map.resize(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) out.job_map[static_cast<std::size_t>(j)] = j < b2 ? 1 : 0;
    return out;
}

BagProfile optimal_m3(long long n) {
    if (n < 1) throw std::invalid_argument("need at least one job");
    BagProfile out;
    out.kind = ProfileKind::discrete;
    if (n <= 3) {  // below the formula domain: one job per bag
        out.sizes.assign(3, Rat(0));
        out.job_map.resize(static_cast<std::size_t>(n));
        for (long long j = 0; j < n; ++j) {
            out.sizes[static_cast<std::size_t>(j)] = 1;
            out.job_map[static_cast<std::size_t>(j)] = static_cast<int>(j);
        }
        return out;
    }
    const long long a1 = 3 * (n / 3 + 1) / 4;
    const long long a3 = 3 * ((n + 2) / 3) / 2;
    const long long a2 = n - a1 - a3;
    if (a2 < 0) throw invariant_violation("middle bag negative");
    out.sizes = {Rat(a1), Rat(a2), Rat(a3)};
    out.job_map.resize(static_cast<std::size_t>(n));
    long long j = 0;
    for (int b = 0; b < 3; ++b) {
        long long size = out.sizes[static_cast<std::size_t>(b)].convert_to<long long>();
        for (long long c = 0; c < size; ++c) out.job_map[static_cast<std::size_t>(j++)] = b;
    }
    return out;
}

}  // namespace srs::discrete
