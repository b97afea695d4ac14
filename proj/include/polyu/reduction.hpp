#ifndef POLYU_REDUCTION_HPP
#define POLYU_REDUCTION_HPP

#include <map>
#include <span>
#include <vector>

#include "polyu/mixed_sum.hpp"

namespace polyu {

// Data for reducing a bounded-universality check modulo powers of 4:
// with s = beta_1 + ... + beta_v,
//   E  = { 1 <= n < s : n == s (mod 3) }
//   nu(n) = the unique exponent with 4^(nu-1) * n < s <= 4^nu * n.
struct ReductionPlan {
    i64 beta_sum = 0;
    std::vector<i64> residues;  // E, ascending
    std::map<i64, int> nu;
};

ReductionPlan reduction_plan(std::span<const i64> betas);

struct ReductionCheck {
    bool passed = true;
    std::vector<i64> failing;  // members of E with no admissible solution
};

// For every n in E, verifies by exhaustive search that
//   3*sum alpha_i x_i^2 + sum beta_j y_j^2 = 4^nu(n) * n
// is solvable with every y_j not divisible by 3. Requires a nonempty
// octagonal part.
ReductionCheck reduction_check(const MixedSum& phi);

// Solvability of 3*sum alpha_i x_i^2 + sum beta_j y_j^2 = target with all
// y_j != 0 (mod 3). The search space is finite; no bound parameter needed.
bool octagonal_congruence_solvable(std::span<const i64> alphas, std::span<const i64> betas, i64 target);

}  // namespace polyu

#endif
