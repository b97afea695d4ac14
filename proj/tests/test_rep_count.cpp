#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyu/rep_count.hpp"

using namespace polyu;

TEST_CASE("representation counts") {
    CHECK(rep_count(0, TernaryForm::diagonal(5, 7, 9)) == 1);  // only the zero vector
    CHECK(rep_count(4, TernaryForm::diagonal(1, 3, 3)) == 10);
    CHECK(rep_count(4, TernaryForm::diagonal(1, 27, 27)) == 2);
    CHECK(rep_count(-3, TernaryForm::diagonal(1, 1, 1)) == 0);
}

TEST_CASE("counts match a full box scan") {
    std::vector<TernaryForm> forms = {TernaryForm::diagonal(1, 2, 5),
                                      TernaryForm::parse("gram:2,1,0;1,5,0;0,0,6"),
                                      TernaryForm::parse("gram:7,-3,2;-3,9,3;2,3,16")};
    for (const TernaryForm& f : forms)
        for (i64 n = 0; n <= 40; ++n)
            CHECK(rep_count(n, f) == oracles::rep_count_small(f.gram(), n, 10));
}

TEST_CASE("bulk counts agree with single counts") {
    for (const char* text : {"diag:1,3,3", "gram:4,1,0;1,7,0;0,0,27", "gram:5,-2,2;-2,8,1;2,1,8"}) {
        TernaryForm f = TernaryForm::parse(text);
        auto counts = rep_counts_up_to(f, 200);
        for (i64 n = 0; n <= 200; ++n) CHECK(static_cast<i64>(counts[static_cast<std::size_t>(n)]) == rep_count(n, f));
    }
}

TEST_CASE("vector enumeration is consistent") {
    TernaryForm f = TernaryForm::diagonal(1, 3, 3);
    auto vecs = vectors_representing(f, 4);
    CHECK(static_cast<i64>(vecs.size()) == rep_count(4, f));
    for (const Vec3& v : vecs) CHECK(f.eval(v) == 4);
}

TEST_CASE("represented-set complements match the published shapes") {
    CHECK(represented_complement(TernaryForm::diagonal(1, 1, 1), 30) == std::vector<i64>{7, 15, 23, 28});
    CHECK(represented_complement(TernaryForm::diagonal(1, 1, 2), 30) == std::vector<i64>{14, 30});
    CHECK(represented_complement(TernaryForm::diagonal(1, 2, 5), 60) ==
          std::vector<i64>{10, 15, 35, 40, 60});
}

TEST_CASE("counts are invariant under unimodular change of basis") {
    std::mt19937 rng(17);
    // Random products of elementary transvections keep the determinant 1.
    auto random_unimodular = [&]() {
        Mat3 u = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        for (int step = 0; step < 4; ++step) {
            int i = std::uniform_int_distribution<int>(0, 2)(rng);
            int j = std::uniform_int_distribution<int>(0, 2)(rng);
            if (i == j) continue;
            i64 c = std::uniform_int_distribution<i64>(-2, 2)(rng);
            for (int k = 0; k < 3; ++k)
                u[static_cast<std::size_t>(3 * i + k)] += c * u[static_cast<std::size_t>(3 * j + k)];
        }
        return u;
    };
    TernaryForm f = TernaryForm::parse("gram:2,1,0;1,3,1;0,1,4");
    for (int trial = 0; trial < 10; ++trial) {
        Mat3 u = random_unimodular();
        // f'(x) = f(Ux): gram U^t M U.
        Mat3 m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                i64 s = 0;
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l)
                        s += u[static_cast<std::size_t>(3 * k + i)] * f.at(k, l) *
                             u[static_cast<std::size_t>(3 * l + j)];
                m[static_cast<std::size_t>(3 * i + j)] = s;
            }
        TernaryForm fprime = TernaryForm::from_gram(m);
        for (i64 n : {1, 2, 3, 10, 37, 90}) CHECK(rep_count(n, f) == rep_count(n, fprime));
    }
}

TEST_CASE("genus count identity on a short range") {
    // 10 - 2 = 4*2 + 4*0 at n = 4; full scan to 2000.
    CHECK(rep_count(4, siegel_form_133()) - rep_count(4, siegel_form_1_27_27()) ==
          4 * rep_count(4, siegel_form_m2()) + 4 * rep_count(4, siegel_form_m3()));
    CHECK(rep_count(1, siegel_form_133()) == 2);
    CHECK(rep_count(1, siegel_form_1_27_27()) == 2);
    CHECK(siegel_identity_check(2000));
}
