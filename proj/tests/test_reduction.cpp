#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyu/reduction.hpp"

using namespace polyu;

TEST_CASE("reduction plan from the octagonal part") {
    ReductionPlan plan = reduction_plan(std::vector<i64>{1, 3});
    CHECK(plan.beta_sum == 4);
    CHECK(plan.residues == std::vector<i64>{1});
    CHECK(plan.nu.at(1) == 1);

    CHECK(reduction_plan(std::vector<i64>{3}).residues.empty());

    plan = reduction_plan(std::vector<i64>{1, 1, 3});
    CHECK(plan.beta_sum == 5);
    CHECK(plan.residues == std::vector<i64>{2});
    CHECK(plan.nu.at(2) == 1);

    CHECK_THROWS_AS(reduction_plan(std::vector<i64>{}), Error);
}

TEST_CASE("exponents satisfy the sandwich inequality") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<i64> coeff(1, 30);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<i64> betas;
        for (int i = std::uniform_int_distribution<int>(1, 5)(rng); i-- > 0;) betas.push_back(coeff(rng));
        std::sort(betas.begin(), betas.end());
        ReductionPlan plan = reduction_plan(betas);
        for (i64 n : plan.residues) {
            int nu = plan.nu.at(n);
            CHECK(nu >= 1);
            i64 low = n, high = n;
            for (int k = 0; k < nu - 1; ++k) low *= 4;
            for (int k = 0; k < nu; ++k) high *= 4;
            CHECK(low < plan.beta_sum);
            CHECK(plan.beta_sum <= high);
            CHECK(n % 3 == plan.beta_sum % 3);
            CHECK(n >= 1);
            CHECK(n < plan.beta_sum);
        }
    }
}

TEST_CASE("congruence equation solver agrees with the reference recursion") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<i64> coeff(1, 8);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<i64> alphas, betas;
        for (int i = std::uniform_int_distribution<int>(0, 2)(rng); i-- > 0;) alphas.push_back(coeff(rng));
        for (int i = std::uniform_int_distribution<int>(1, 3)(rng); i-- > 0;) betas.push_back(coeff(rng));
        for (i64 target = 0; target <= 120; ++target)
            CHECK(octagonal_congruence_solvable(alphas, betas, target) ==
                  oracles::congruence_equation(alphas, betas, target));
    }
}

TEST_CASE("reduction gate on worked cases") {
    // Vacuous: single octagonal coefficient 3 gives an empty residue set.
    CHECK(reduction_check(MixedSum::parse("1,1|3")).passed);
    CHECK(reduction_check(MixedSum::parse("1|1,3")).passed);
    CHECK_THROWS_AS(reduction_check(MixedSum::parse("1,1|")), Error);
}
