#include "doctest.h"

#include "srs/core.hpp"

#include <random>

using namespace srs;

namespace {

// Independent oracle: enumerate all m^n job-to-machine maps.
Rat brute_force_opt(const std::vector<long long>& jobs, const std::vector<long long>& speeds) {
    const std::size_t n = jobs.size();
    const std::size_t m = speeds.size();
    std::vector<int> map(n, 0);
    long long best_l = 0;
    long long best_s = 1;
    bool have = false;
    for (;;) {
        std::vector<long long> loads(m, 0);
        bool valid = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (speeds[static_cast<std::size_t>(map[j])] == 0) { valid = false; break; }
            loads[static_cast<std::size_t>(map[j])] += jobs[j];
        }
        if (valid) {
            long long ml = 0, ms = 1;
            bool first = true;
            for (std::size_t i = 0; i < m; ++i) {
                if (speeds[i] == 0) continue;
                if (first || static_cast<__int128>(ml) * speeds[i] < static_cast<__int128>(loads[i]) * ms) {
                    ml = loads[i];
                    ms = speeds[i];
                    first = false;
                }
            }
            if (!have || static_cast<__int128>(ml) * best_s < static_cast<__int128>(best_l) * ms) {
                best_l = ml;
                best_s = ms;
                have = true;
            }
        }
        std::size_t pos = 0;
        while (pos < n && ++map[pos] == static_cast<int>(m)) map[pos++] = 0;
        if (pos == n) break;
    }
    REQUIRE(have);
    return Rat(best_l, best_s);
}

Instance make_instance(const std::vector<long long>& jobs, int m) {
    std::vector<Rat> js;
    for (long long p : jobs) js.emplace_back(p);
    return Instance(std::move(js), m);
}

SpeedConfig make_config(const std::vector<long long>& speeds) {
    std::vector<Rat> s;
    for (long long v : speeds) s.emplace_back(v);
    return SpeedConfig(std::move(s));
}

}  // namespace

TEST_CASE("type invariants") {
    CHECK_THROWS_AS(Instance({Rat(-1)}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Instance({Rat(1)}, 0), std::invalid_argument);
    CHECK_THROWS_AS(SpeedConfig({Rat(0), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(SpeedConfig({Rat(1), Rat(-1)}), std::invalid_argument);
    SpeedConfig cfg({Rat(3), Rat(1), Rat(0), Rat(2)});
    CHECK(cfg.speeds == std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(3)});  // canonical order
    CHECK(cfg.failed() == 1);
    CHECK(cfg.working() == 3);
    CHECK(Instance::units(5, 3).unit());
    CHECK_FALSE(Instance({Rat(1), Rat(2)}, 2).unit());
    CHECK(Instance::fluid_of(Rat(7), 4).total_volume() == 7);
}

TEST_CASE("profile validation") {
    Instance inst = Instance::units(4, 2);
    BagProfile bags;
    bags.kind = ProfileKind::discrete;
    bags.sizes = {Rat(3), Rat(1)};
    bags.job_map = {0, 0, 0, 1};
    CHECK_NOTHROW(validate_profile(bags, inst));
    bags.sizes = {Rat(2), Rat(2)};
    CHECK_THROWS_AS(validate_profile(bags, inst), std::invalid_argument);
    BagProfile wrong_m;
    wrong_m.sizes = {Rat(4)};
    CHECK_THROWS_AS(validate_profile(wrong_m, inst), std::invalid_argument);
}

TEST_CASE("opt_m_unit") {
    CHECK(opt_m_unit(756, 6) == 126);
    CHECK(opt_m_unit(0, 5) == 0);
    CHECK(opt_m_unit(20, 10) == 2);
    CHECK(opt_m_unit(7, 2) == 4);
}

TEST_CASE("full-information optimum on given examples") {
    // seven unit jobs on two unit machines
    CHECK(opt_full_info(Instance::units(7, 2), make_config({1, 1})).makespan == 4);
    // fluid volume one against speeds summing to one
    CHECK(opt_full_info(Instance::fluid_of(Rat(1), 3),
                        SpeedConfig({Rat(1, 6), Rat(1, 3), Rat(1, 2)}))
              .makespan == 1);
    // one job of size three plus nine units, nine unit machines and one of
    // speed three: everything fits at makespan one
    std::vector<long long> jobs{3, 1, 1, 1, 1, 1, 1, 1, 1, 1};
    std::vector<long long> speeds{1, 1, 1, 1, 1, 1, 1, 1, 1, 3};
    CHECK(opt_full_info(make_instance(jobs, 10), make_config(speeds)).makespan == 1);
}

TEST_CASE("unit jobs against zero-one speeds give ceil(n/working)") {
    for (int m = 1; m <= 6; ++m)
        for (long long n = 1; n <= 25; ++n)
            for (int w = 1; w <= m; ++w) {
                Rat opt = opt_full_info(Instance::units(n, m), SpeedConfig::zero_one(m, w)).makespan;
                CHECK(opt == Rat(opt_m_unit(n, w)));
            }
}

TEST_CASE("optimum matches brute force on random instances") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> m_dist(1, 4);
    std::uniform_int_distribution<long long> size_dist(1, 8);
    std::uniform_int_distribution<long long> speed_dist(0, 9);
    for (int trial = 0; trial < 30; ++trial) {
        int m = m_dist(rng);
        std::uniform_int_distribution<int> n_dist(1, trial < 25 ? 8 : 10);
        int n = n_dist(rng);
        std::vector<long long> jobs;
        for (int j = 0; j < n; ++j) jobs.push_back(size_dist(rng));
        std::vector<long long> speeds;
        bool positive = false;
        for (int i = 0; i < m; ++i) {
            speeds.push_back(speed_dist(rng));
            positive |= speeds.back() > 0;
        }
        if (!positive) speeds.back() = 1;
        std::sort(speeds.begin(), speeds.end());

        Instance inst = make_instance(jobs, m);
        SpeedConfig cfg = make_config(speeds);
        OptResult got = opt_full_info(inst, cfg);
        CHECK(got.makespan == brute_force_opt(jobs, speeds));

        // the returned schedule realizes the claimed makespan
        std::vector<Rat> loads(static_cast<std::size_t>(m), Rat(0));
        for (std::size_t j = 0; j < jobs.size(); ++j) {
            REQUIRE(got.job_to_machine[j] >= 0);
            REQUIRE(cfg.speeds[static_cast<std::size_t>(got.job_to_machine[j])] > 0);
            loads[static_cast<std::size_t>(got.job_to_machine[j])] += inst.jobs[j];
        }
        Rat recomputed = 0;
        for (int i = 0; i < m; ++i)
            if (cfg.speeds[static_cast<std::size_t>(i)] > 0)
                recomputed = std::max(recomputed, loads[static_cast<std::size_t>(i)] /
                                                      cfg.speeds[static_cast<std::size_t>(i)]);
        CHECK(recomputed == got.makespan);
    }
}

TEST_CASE("optimum invariant under speed scaling and permutation") {
    std::vector<long long> jobs{5, 3, 3, 2, 1};
    Instance inst = make_instance(jobs, 3);
    SpeedConfig cfg = make_config({1, 2, 4});
    Rat base = opt_full_info(inst, cfg).makespan;
    SpeedConfig scaled({Rat(7, 3), Rat(14, 3), Rat(28, 3)});  // times 7/3
    CHECK(opt_full_info(inst, scaled).makespan == base / Rat(7, 3));
    SpeedConfig shuffled({Rat(4), Rat(1), Rat(2)});  // canonical form sorts
    CHECK(opt_full_info(inst, shuffled).makespan == base);
}

TEST_CASE("optimum guards") {
    CHECK_THROWS_AS(opt_full_info(Instance::units(4, 2), make_config({1, 1, 1})),
                    std::invalid_argument);
    // 21 distinct-size jobs exceed the search guard
    std::vector<Rat> many;
    for (int j = 1; j <= 21; ++j) many.emplace_back(j);
    CHECK_THROWS_AS(opt_full_info(Instance(std::move(many), 2), make_config({1, 1})),
                    std::invalid_argument);
    // all-equal jobs take the parametric route and are exempt
    CHECK(opt_full_info(Instance::units(100, 2), make_config({1, 1})).makespan == 50);
}

TEST_CASE("single machine degenerates to volume over speed") {
    Instance inst = make_instance({3, 4}, 1);
    CHECK(opt_full_info(inst, make_config({2})).makespan == Rat(7, 2));
    CHECK(opt_full_info(Instance::fluid_of(Rat(5), 1), make_config({2})).makespan == Rat(5, 2));
}
