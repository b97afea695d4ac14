#include "polyu/reduction.hpp"

#include <functional>
#include <numeric>

namespace polyu {

ReductionPlan reduction_plan(std::span<const i64> betas) {
    if (betas.empty()) fail(errc::invalid_argument, "reduction plan needs a nonempty octagonal part");
    ReductionPlan plan;
    for (i64 b : betas) plan.beta_sum = checked_add(plan.beta_sum, b);
    for (i64 n = 1; n < plan.beta_sum; ++n) {
        if (n % 3 != plan.beta_sum % 3) continue;
        plan.residues.push_back(n);
        int nu = 1;
        i64 pow = 4;  // 4^nu
        while (checked_mul(pow, n) < plan.beta_sum) {
            pow = checked_mul(pow, 4);
            ++nu;
        }
        // Here 4^(nu-1) * n < beta_sum <= 4^nu * n.
        plan.nu.emplace(n, nu);
    }
    return plan;
}

bool octagonal_congruence_solvable(std::span<const i64> alphas, std::span<const i64> betas, i64 target) {
    if (target < 0) return false;
    // Recurse over octagonal variables (y != 0 mod 3), then square variables.
    std::function<bool(std::size_t, i64)> solve_squares = [&](std::size_t i, i64 rem) -> bool {
        if (i == alphas.size()) return rem == 0;
        i64 step = 3 * alphas[i];
        if (i + 1 == alphas.size()) {
            if (rem % step != 0) return false;
            return is_square(rem / step);
        }
        for (i64 x = 0; step * x * x <= rem; ++x)
            if (solve_squares(i + 1, rem - step * x * x)) return true;
        return false;
    };
    std::function<bool(std::size_t, i64)> solve_octs = [&](std::size_t j, i64 rem) -> bool {
        if (j == betas.size()) {
            if (alphas.empty()) return rem == 0;
            return solve_squares(0, rem);
        }
        for (i64 y = 1; betas[j] * y * y <= rem; ++y) {
            if (y % 3 == 0) continue;
            if (solve_octs(j + 1, rem - betas[j] * y * y)) return true;
        }
        return false;
    };
    return solve_octs(0, target);
}

ReductionCheck reduction_check(const MixedSum& phi) {
    if (phi.octagonals().empty())
        fail(errc::invalid_argument, "reduction check needs a nonempty octagonal part");
    ReductionPlan plan = reduction_plan(phi.octagonals());
    ReductionCheck result;
    for (i64 n : plan.residues) {
        i64 target = n;
        for (int k = 0; k < plan.nu.at(n); ++k) target = checked_mul(target, 4);
        if (!octagonal_congruence_solvable(phi.squares(), phi.octagonals(), target)) {
            result.passed = false;
            result.failing.push_back(n);
        }
    }
    return result;
}

}  // namespace polyu
