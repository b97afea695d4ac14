#include <doctest.h>

#include <random>

#include "polyu/ternary_form.hpp"

using namespace polyu;

TEST_CASE("form parsing") {
    TernaryForm d = TernaryForm::parse("diag:1,3,3");
    CHECK(d == TernaryForm::diagonal(1, 3, 3));
    CHECK(d.notation() == "diag:1,3,3");

    TernaryForm g = TernaryForm::parse("gram:4,1,0;1,7,0;0,0,27");
    CHECK(g.at(0, 1) == 1);
    CHECK(g.at(1, 0) == 1);
    CHECK(g.notation() == "gram:4,1,0;1,7,0;0,0,27");
    CHECK(TernaryForm::parse(g.notation()) == g);

    // Upper-triangle layout.
    CHECK(TernaryForm::parse("gram:4,1,0;7,0;27") == g);

    CHECK_THROWS_AS(TernaryForm::parse("diag:1,2"), Error);
    CHECK_THROWS_AS(TernaryForm::parse("1,2,3"), Error);
    CHECK_THROWS_AS(TernaryForm::parse("gram:1,2,3;4,5,6;7,8,9"), Error);  // asymmetric
}

TEST_CASE("positive definiteness is enforced") {
    CHECK_THROWS_AS(TernaryForm::diagonal(1, 1, 0), Error);
    CHECK_THROWS_AS(TernaryForm::diagonal(-1, 1, 1), Error);
    CHECK_THROWS_AS(TernaryForm::from_gram({1, 2, 0, 2, 1, 0, 0, 0, 5}), Error);  // indefinite block
}

TEST_CASE("evaluation") {
    TernaryForm f = TernaryForm::diagonal(1, 3, 3);
    CHECK(f.eval({1, 1, 1}) == 7);
    CHECK(f.eval({0, 0, 0}) == 0);
    TernaryForm m2 = TernaryForm::parse("gram:4,1,0;1,7,0;0,0,27");
    CHECK(m2.eval({1, 0, 0}) == 4);
    CHECK(m2.eval({1, 1, 0}) == 4 + 7 + 2);
}

TEST_CASE("bilinear form polarizes the quadratic form") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<i64> entry(-4, 4);
    TernaryForm f = TernaryForm::parse("gram:7,-3,2;-3,9,3;2,3,16");
    for (int trial = 0; trial < 50; ++trial) {
        Vec3 u = {entry(rng), entry(rng), entry(rng)};
        Vec3 v = {entry(rng), entry(rng), entry(rng)};
        Vec3 sum = {u[0] + v[0], u[1] + v[1], u[2] + v[2]};
        CHECK(f.eval(sum) == f.eval(u) + f.eval(v) + 2 * f.bilinear(u, v));
        CHECK(f.bilinear(u, v) == f.bilinear(v, u));
    }
}

TEST_CASE("adjugate identity") {
    for (const char* text : {"diag:1,3,3", "gram:7,-3,2;-3,9,3;2,3,16", "gram:2,1,0;1,5,0;0,0,27",
                             "gram:12,0,0;0,18,6;0,6,14"}) {
        TernaryForm f = TernaryForm::parse(text);
        Mat3 adj = f.adjugate();
        i64 det = f.det();
        // M * adj == det * I.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                i64 s = 0;
                for (int k = 0; k < 3; ++k) s += f.at(i, k) * adj[static_cast<std::size_t>(3 * k + j)];
                CHECK(s == (i == j ? det : 0));
            }
    }
}
