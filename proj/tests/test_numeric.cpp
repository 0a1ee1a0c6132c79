#include "doctest.h"

#include "srs/rational.hpp"
#include "srs/root2.hpp"

#include <random>

using namespace srs;

TEST_CASE("rational parsing and formatting round-trips") {
    CHECK(parse_rat("4/19") == Rat(4, 19));
    CHECK(parse_rat("-3/6") == Rat(-1, 2));
    CHECK(parse_rat("42") == Rat(42));
    CHECK(parse_rat("0.8") == Rat(4, 5));
    CHECK(parse_rat("1.25e2") == Rat(125));
    CHECK(parse_rat("2.5e-1") == Rat(1, 4));
    CHECK(rat_str(Rat(4, 19)) == "4/19");
    CHECK(rat_str(Rat(-10, 5)) == "-2");
    CHECK(parse_rat(rat_str(Rat(123456789, 987654321))) == Rat(123456789, 987654321));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
}

TEST_CASE("floor and ceiling division") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(ceil_div(Int(7), Int(2)) == 4);
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_ceil(Rat(7, 2)) == 4);
    CHECK(ipow(Int(3), 5) == 243);
    CHECK(ipow(Int(0), 0) == 1);
}

TEST_CASE("root2 arithmetic agrees with doubles") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-20, 20);
    std::uniform_int_distribution<int> denom(1, 9);
    auto rand_val = [&] { return Root2(Rat(coef(rng), denom(rng)), Rat(coef(rng), denom(rng))); };
    for (int trial = 0; trial < 500; ++trial) {
        Root2 x = rand_val();
        Root2 y = rand_val();
        CHECK((x + y).to_double() == doctest::Approx(x.to_double() + y.to_double()).epsilon(1e-12));
        CHECK((x - y).to_double() == doctest::Approx(x.to_double() - y.to_double()).epsilon(1e-12));
        CHECK((x * y).to_double() == doctest::Approx(x.to_double() * y.to_double()).epsilon(1e-12));
        if (!(y == Root2(0)))
            CHECK((x / y).to_double() == doctest::Approx(x.to_double() / y.to_double()).epsilon(1e-10));
        // ordering must match the double ordering away from ties
        if (std::abs(x.to_double() - y.to_double()) > 1e-9)
            CHECK((x < y) == (x.to_double() < y.to_double()));
    }
}

TEST_CASE("root2 division is exact inverse") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        Root2 x(Rat(coef(rng), 3), Rat(coef(rng), 4));
        Root2 y(Rat(coef(rng), 2), Rat(coef(rng), 5));
        if (y == Root2(0)) continue;
        CHECK((x / y) * y == x);
    }
}

TEST_CASE("root2 exact floor") {
    CHECK(floor_exact(Root2(Rat(0), Rat(1))) == 1);    // sqrt(2)
    CHECK(floor_exact(Root2(Rat(0), Rat(-1))) == -2);  // -sqrt(2)
    CHECK(floor_exact(Root2(Rat(3))) == 3);
    CHECK(floor_exact(Root2(Rat(-3))) == -3);
    CHECK(floor_exact(Root2(Rat(0), Rat(5))) == 7);    // 5 sqrt(2) = 7.07
    CHECK(floor_exact(rho_zero_one_limit()) == 1);
    CHECK(floor_exact(profile_breakpoint()) == 0);

    // near-integer stress: floor(k * (a+b*sqrt2)) must match exact compare
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> coef(-50, 50);
    std::uniform_int_distribution<int> denom(1, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        Root2 x(Rat(coef(rng), denom(rng)), Rat(coef(rng), denom(rng)));
        Int f = floor_exact(x);
        CHECK(Root2(Rat(f)) <= x);
        CHECK(x < Root2(Rat(f + 1)));
    }
}

TEST_CASE("root2 sign of mixed terms") {
    // 99/70 is slightly above sqrt(2): 99^2 = 9801 > 2*70^2 = 9800
    CHECK(Root2(Rat(99, 70), Rat(-1)).sign() == 1);
    // 98/70 is below
    CHECK(Root2(Rat(98, 70), Rat(-1)).sign() == -1);
    CHECK(Root2(Rat(0)).sign() == 0);
    CHECK((rho_zero_one_limit() * rho_zero_one_limit() -
           rho_zero_one_limit() - Root2(Rat(1, 4)))
              .sign() == 0);  // rho^2 = rho + 1/4
}
