#include "srs/adversary.hpp"

#include "srs/fluid_bags.hpp"
#include "srs/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace srs::adversary {

namespace {

Rat opt_against_01(const Instance& inst, int m_prime) {
    if (inst.fluid) return inst.total_volume() / m_prime;
    if (inst.unit()) return Rat(opt_m_unit(inst.n(), m_prime));
    return opt_full_info(inst, SpeedConfig::zero_one(inst.m, m_prime)).makespan;
}

template <class P, class T>
RobustnessReport<T> evaluate01_impl(const P& bags, const Instance& inst, AssignMode mode,
                                    bool discrete_profile) {
    if (bags.m() != inst.m)
        throw std::invalid_argument("dimension mismatch between profile and instance");
    RobustnessReport<T> report;
    report.family = "zero-one";
    const int m = inst.m;
    for (int t = 0; t < m; ++t) {
        const int m_prime = m - t;
        AssignMode effective = mode;
        if (effective == AssignMode::automatic)
            effective = m <= exact_assign_limit()
                            ? AssignMode::exact
                            : (discrete_profile ? AssignMode::lpt : AssignMode::fold);
        RobustnessRow<T> row;
        row.cfg = SpeedConfig::zero_one(m, m_prime);
        switch (effective) {
            case AssignMode::exact:
                row.alg = second_stage::assign_exact(bags, row.cfg).makespan;
                row.exact_alg = true;
                break;
            case AssignMode::fold:
                row.alg = second_stage::assign_fold01(bags, m_prime).makespan;
                row.exact_alg = false;
                break;
            case AssignMode::lpt:
                if constexpr (std::is_same_v<P, BagProfile>) {
                    row.alg = second_stage::assign_lpt_unit(bags, m_prime).makespan;
                } else {
                    row.alg = second_stage::assign_fold01(bags, m_prime).makespan;
                }
                row.exact_alg = false;
                break;
            default:
                throw std::invalid_argument("bad assignment mode");
        }
        row.opt = T(opt_against_01(inst, m_prime));
        row.ratio = row.alg / row.opt;
        report.rows.push_back(std::move(row));
    }
    report.finalize();
    return report;
}

}  // namespace

ReportR evaluate_01(const BagProfile& bags, const Instance& inst, AssignMode mode) {
    return evaluate01_impl<BagProfile, Rat>(bags, inst, mode,
                                            bags.kind == ProfileKind::discrete);
}

Report2 evaluate_01(const SampledProfile& bags, const Instance& inst, AssignMode mode) {
    return evaluate01_impl<SampledProfile, Root2>(bags, inst, mode, false);
}

ReportR evaluate_family(const BagProfile& bags, const Instance& inst,
                        const std::vector<SpeedConfig>& family,
                        const std::string& family_name) {
    ReportR report;
    report.family = family_name;
    report.rows.resize(family.size());
    parallel_for(family.size(), 0, [&](std::size_t i) {
        RobustnessRow<Rat>& row = report.rows[i];
        row.cfg = family[i];
        row.alg = second_stage::assign_exact(bags, row.cfg).makespan;
        row.opt = opt_full_info(inst, row.cfg).makespan;
        row.ratio = row.alg / row.opt;
    });
    report.finalize();
    return report;
}

// ---------------------------------------------------------------------------
// Heuristic worst-case search

namespace {

std::string config_key(const std::vector<Rat>& speeds) {
    std::string key;
    for (const Rat& s : speeds) {
        key += rat_str(s);
        key += ';';
    }
    return key;
}

void grid_configs(int m, const Rat& total, int resolution,
                  std::map<std::string, SpeedConfig>& out) {
    // sorted compositions of `resolution` into m nonnegative parts
    std::vector<int> parts(static_cast<std::size_t>(m), 0);
    std::function<void(int, int, int)> rec = [&](int idx, int remaining, int minimum) {
        if (idx == m - 1) {
            if (remaining < minimum) return;
            parts[static_cast<std::size_t>(idx)] = remaining;
            std::vector<Rat> speeds;
            speeds.reserve(static_cast<std::size_t>(m));
            for (int c : parts) speeds.push_back(total * Rat(c, resolution));
            SpeedConfig cfg(std::move(speeds));
            out.emplace(config_key(cfg.speeds), std::move(cfg));
            return;
        }
        for (int c = minimum; c <= remaining; ++c) {
            parts[static_cast<std::size_t>(idx)] = c;
            rec(idx + 1, remaining - c, c);
        }
    };
    rec(0, resolution, 0);
}

}  // namespace

ReportR search_speeds(const BagProfile& bags, const Instance& inst, const SearchBudget& budget) {
    if (inst.m > 6) throw std::invalid_argument("speed search limited to m <= 6");
    if (inst.n() > 12) throw std::invalid_argument("speed search limited to n <= 12");
    if (bags.m() != inst.m)
        throw std::invalid_argument("dimension mismatch between profile and instance");

    const int m = inst.m;
    const Rat total = inst.total_volume();
    if (total <= 0) throw std::invalid_argument("empty instance");

    std::map<std::string, SpeedConfig> pending;  // key -> config, deduplicated
    std::set<std::string> seen;
    grid_configs(m, total, budget.grid_resolution, pending);

    // configurations with m-1 equal slow machines targeting bag k at a
    // sweep of ratios
    std::vector<Rat> sorted_sizes = bags.sizes;
    std::sort(sorted_sizes.begin(), sorted_sizes.end());
    for (const Rat& a : sorted_sizes) {
        if (a == 0) continue;
        for (int j = 0; j <= budget.target_steps; ++j) {
            Rat rho = 1 + Rat(j, budget.target_steps > 0 ? budget.target_steps : 1);
            Rat slow = a / rho;
            Rat fast = total - Rat(m - 1) * slow;
            if (fast < 0) continue;
            std::vector<Rat> speeds(static_cast<std::size_t>(m), slow);
            speeds.back() = fast;
            SpeedConfig cfg(std::move(speeds));
            pending.emplace(config_key(cfg.speeds), std::move(cfg));
        }
    }

    ReportR report;
    report.family = "heuristic-search";
    report.certified = false;

    auto evaluate_batch = [&](std::vector<SpeedConfig> batch) {
        std::vector<RobustnessRow<Rat>> rows(batch.size());
        parallel_for(batch.size(), budget.jobs, [&](std::size_t i) {
            rows[i].cfg = batch[i];
            rows[i].alg = second_stage::assign_exact(bags, batch[i]).makespan;
            rows[i].opt = opt_full_info(inst, batch[i]).makespan;
            rows[i].ratio = rows[i].alg / rows[i].opt;
        });
        for (auto& row : rows) report.rows.push_back(std::move(row));
    };

    std::vector<SpeedConfig> batch;
    for (auto& [key, cfg] : pending) {
        if (seen.insert(key).second) batch.push_back(std::move(cfg));
    }
    pending.clear();
    evaluate_batch(std::move(batch));
    report.finalize();

    // local refinement around the best configuration found
    const Rat step = total / Rat(4LL * std::max(1, budget.grid_resolution));
    for (int round = 0; round < budget.refine_rounds; ++round) {
        SpeedConfig base = report.rows[report.argmax].cfg;
        std::vector<SpeedConfig> extra;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i == j || base.speeds[static_cast<std::size_t>(i)] < step) continue;
                std::vector<Rat> speeds = base.speeds;
                speeds[static_cast<std::size_t>(i)] -= step;
                speeds[static_cast<std::size_t>(j)] += step;
                SpeedConfig cfg(std::move(speeds));
                std::string key = config_key(cfg.speeds);
                if (seen.insert(key).second) extra.push_back(std::move(cfg));
            }
        }
        if (extra.empty()) break;
        evaluate_batch(std::move(extra));
        report.finalize();
    }
    return report;
}

// ---------------------------------------------------------------------------
// Certificates

LowerBoundCertificate certify_m6() {
    LowerBoundCertificate cert;
    const long long thresholds[6] = {77, 92, 110, 133, 159, 190};
    const long long suffixes[6] = {756, 680, 589, 480, 348, 190};
    const long long prefixes[6] = {0, 76, 167, 276, 408, 566};
    const long long slow[6] = {51, 61, 73, 88, 105, 126};
    const long long fast[6] = {501, 451, 391, 318, 231, 226};

    cert.covering_sum = 0;
    for (int i = 0; i < 6; ++i) cert.covering_sum += thresholds[i] - 1;
    if (cert.covering_sum >= cert.n)
        throw invariant_violation("covering argument fails: some row must apply");

    for (int i = 0; i < 6; ++i) {
        CertificateRow row{thresholds[i], suffixes[i], prefixes[i], slow[i], fast[i], Rat(0)};
        if (5 * row.s_slow + row.s_fast < cert.n)
            throw invariant_violation("certificate row lacks speed capacity");
        // rows 1..5 force either a big bag on a slow machine or the whole
        // suffix onto the fast machine; the last row pins the largest bag
        // on uniform machines, so only the slow term applies
        if (i < 5)
            row.phi = std::min(Rat(row.size_threshold, row.s_slow),
                               Rat(row.suffix_threshold, row.s_fast));
        else
            row.phi = Rat(row.size_threshold, row.s_slow);

        // the adversary must be able to finish all jobs at makespan 1
        std::vector<Rat> speeds(5, Rat(row.s_slow));
        speeds.push_back(Rat(i < 5 ? row.s_fast : row.s_slow));
        Rat opt = opt_full_info(Instance::units(cert.n, cert.m), SpeedConfig(speeds)).makespan;
        if (opt > 1) throw invariant_violation("certificate row optimum above one");

        cert.rows.push_back(row);
    }
    cert.phi = cert.rows[0].phi;
    for (const auto& row : cert.rows) cert.phi = std::min(cert.phi, row.phi);
    if (cert.phi != Rat(589, 391))
        throw invariant_violation("certificate value differs from 589/391");
    if (!(cert.phi > fluid::rho_general(6)))
        throw invariant_violation("certificate does not beat the fluid bound");
    return cert;
}

// ---------------------------------------------------------------------------
// Two-strategy games

namespace {

BagProfile units_profile(const std::vector<long long>& sizes) {
    BagProfile out;
    out.kind = ProfileKind::discrete;
    long long n = 0;
    for (long long v : sizes) n += v;
    out.job_map.reserve(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        out.sizes.emplace_back(sizes[b]);
        for (long long c = 0; c < sizes[b]; ++c) out.job_map.push_back(static_cast<int>(b));
    }
    return out;
}

Rat makespan_01(const BagProfile& bags, int m_prime) {
    if (bags.m() <= exact_assign_limit())
        return second_stage::assign_exact(bags, SpeedConfig::zero_one(bags.m(), m_prime)).makespan;
    return second_stage::assign_lpt_unit(bags, m_prime).makespan;
}

GameBranch play_01_branch(std::string label, const BagProfile& bags, long long n, int m) {
    GameBranch branch;
    branch.label = std::move(label);
    branch.ratio_fail = makespan_01(bags, m - 1) / Rat(opt_m_unit(n, m - 1));
    branch.ratio_all_up = makespan_01(bags, m) / Rat(opt_m_unit(n, m));
    branch.forced_ratio = std::max(branch.ratio_fail, branch.ratio_all_up);
    return branch;
}

}  // namespace

GameResult example_game_two_per_bag(int m) {
    if (m <= 2) throw std::invalid_argument("game needs m > 2");
    GameResult game;
    game.m = m;
    game.n = 2LL * m;
    std::vector<long long> balanced(static_cast<std::size_t>(m), 2);
    std::vector<long long> unbalanced(static_cast<std::size_t>(m), 2);
    unbalanced.front() = 1;
    unbalanced.back() = 3;
    game.balanced = play_01_branch("two-per-bag", units_profile(balanced), game.n, m);
    game.unbalanced = play_01_branch("one-bag-of-three", units_profile(unbalanced), game.n, m);
    game.value = std::min(game.balanced.forced_ratio, game.unbalanced.forced_ratio);
    return game;
}

GameResult example_game_three_per_bag(int m) {
    if (m <= 3) throw std::invalid_argument("game needs m > 3");
    GameResult game;
    game.m = m;
    game.n = 3LL * m;
    std::vector<long long> balanced(static_cast<std::size_t>(m), 3);
    std::vector<long long> unbalanced(static_cast<std::size_t>(m), 3);
    unbalanced.front() = 2;
    unbalanced.back() = 4;
    game.balanced = play_01_branch("three-per-bag", units_profile(balanced), game.n, m);
    game.unbalanced = play_01_branch("one-bag-of-four", units_profile(unbalanced), game.n, m);
    game.value = std::min(game.balanced.forced_ratio, game.unbalanced.forced_ratio);
    return game;
}

// ---------------------------------------------------------------------------
// Demo instances

DemoInstance min_max_bag_demo(long long k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    DemoInstance demo;
    const int m = static_cast<int>(k * k + 1);
    std::vector<Rat> jobs;
    jobs.emplace_back(k);
    for (long long j = 0; j < k * k; ++j) jobs.emplace_back(1);
    demo.inst = Instance(std::move(jobs), m);

    // k+1 bags of size k (the job of size k alone, units k at a time),
    // remaining bags empty: the largest bag is as small as possible
    demo.bags.kind = ProfileKind::discrete;
    demo.bags.sizes.assign(static_cast<std::size_t>(m), Rat(0));
    demo.bags.job_map.assign(static_cast<std::size_t>(k * k + 1), 0);
    for (long long b = 0; b <= k; ++b) demo.bags.sizes[static_cast<std::size_t>(b)] = k;
    for (long long j = 1; j <= k * k; ++j)
        demo.bags.job_map[static_cast<std::size_t>(j)] = static_cast<int>(1 + (j - 1) / k);

    std::vector<Rat> speeds(static_cast<std::size_t>(k * k), Rat(1));
    speeds.emplace_back(k);
    demo.cfg = SpeedConfig(std::move(speeds));

    Rat alg = second_stage::assign_exact(demo.bags, demo.cfg).makespan;
    Rat opt = opt_full_info(demo.inst, demo.cfg).makespan;
    demo.forced_ratio = alg / opt;
    return demo;
}

DemoInstance balanced_demo(int m) {
    if (m < 1) throw std::invalid_argument("machine count must be positive");
    DemoInstance demo;
    const long long k = 2LL * m - 1;
    demo.inst = Instance::units(k * m, m);
    std::vector<long long> sizes(static_cast<std::size_t>(m), k);
    demo.bags = units_profile(sizes);

    std::vector<Rat> speeds(static_cast<std::size_t>(m), Rat(2LL * m));
    speeds.front() = Rat(m);
    demo.cfg = SpeedConfig(std::move(speeds));

    Rat alg = second_stage::assign_exact(demo.bags, demo.cfg).makespan;
    Rat opt = opt_full_info(demo.inst, demo.cfg).makespan;
    demo.forced_ratio = alg / opt;
    return demo;
}

}  // namespace srs::adversary
