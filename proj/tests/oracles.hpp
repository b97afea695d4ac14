// Independent reference implementations used to check the engine. These
// deliberately share no code with the library: plain scans and unmemoized
// recursion only.
#ifndef POLYU_TEST_ORACLES_HPP
#define POLYU_TEST_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

using i64 = std::int64_t;

inline i64 polygonal(int m, i64 x) { return ((m - 2) * x * x - (m - 4) * x) / 2; }

// {P_m(x) : x in Z} restricted to [0, bound], by scanning a wide argument range.
inline std::vector<i64> polygonal_set(int m, i64 bound) {
    std::set<i64> vals;
    for (i64 x = -bound - 2; x <= bound + 2; ++x) {
        i64 v = polygonal(m, x);
        if (v >= 0 && v <= bound) vals.insert(v);
    }
    return {vals.begin(), vals.end()};
}

// Plain recursion over the terms, no memoization.
inline bool represents(const std::vector<i64>& squares, const std::vector<i64>& octagonals,
                       std::size_t si, std::size_t oi, i64 remaining) {
    if (remaining < 0) return false;
    if (si < squares.size()) {
        for (i64 x = 0; squares[si] * x * x <= remaining; ++x)
            if (represents(squares, octagonals, si + 1, oi, remaining - squares[si] * x * x)) return true;
        return false;
    }
    if (oi < octagonals.size()) {
        for (i64 y = 0;; ++y) {
            i64 vpos = polygonal(8, y);
            if (octagonals[oi] * vpos > remaining) break;
            if (represents(squares, octagonals, si, oi + 1, remaining - octagonals[oi] * vpos)) return true;
            i64 vneg = polygonal(8, -y);
            if (y > 0 && octagonals[oi] * vneg <= remaining &&
                represents(squares, octagonals, si, oi + 1, remaining - octagonals[oi] * vneg))
                return true;
        }
        return false;
    }
    return remaining == 0;
}

inline bool represents(const std::vector<i64>& squares, const std::vector<i64>& octagonals, i64 n) {
    return represents(squares, octagonals, 0, 0, n);
}

// Solvability of 3*sum alpha x^2 + sum beta z^2 = target with every z != 0 mod 3,
// the congruence-equation side of the representation identity.
inline bool congruence_equation(const std::vector<i64>& alphas, const std::vector<i64>& betas,
                                std::size_t ai, std::size_t bi, i64 remaining) {
    if (remaining < 0) return false;
    if (ai < alphas.size()) {
        for (i64 x = 0; 3 * alphas[ai] * x * x <= remaining; ++x)
            if (congruence_equation(alphas, betas, ai + 1, bi, remaining - 3 * alphas[ai] * x * x))
                return true;
        return false;
    }
    if (bi < betas.size()) {
        for (i64 z = 1; betas[bi] * z * z <= remaining; ++z) {
            if (z % 3 == 0) continue;
            if (congruence_equation(alphas, betas, ai, bi + 1, remaining - betas[bi] * z * z)) return true;
        }
        return false;
    }
    return remaining == 0;
}

inline bool congruence_equation(const std::vector<i64>& alphas, const std::vector<i64>& betas,
                                i64 target) {
    return congruence_equation(alphas, betas, 0, 0, target);
}

// r(n, f) by scanning the full coordinate box |v_i| <= isqrt(n / min diag-ish);
// safe because f is positive definite: f(v) >= v_i^2 * lambda with lambda the
// smallest eigenvalue, bounded below by 1/ (sum of |adj| row) ... instead we
// use the crude but certain bound |v_i| <= n for tiny n.
inline i64 rep_count_small(const std::array<i64, 9>& gram, i64 n, i64 box) {
    auto eval = [&](i64 x, i64 y, i64 z) {
        return gram[0] * x * x + gram[4] * y * y + gram[8] * z * z + 2 * gram[1] * x * y +
               2 * gram[2] * x * z + 2 * gram[5] * y * z;
    };
    i64 count = 0;
    for (i64 x = -box; x <= box; ++x)
        for (i64 y = -box; y <= box; ++y)
            for (i64 z = -box; z <= box; ++z)
                if (eval(x, y, z) == n) ++count;
    return count;
}

// Shape families used by the represented-set claims.
inline std::vector<i64> shape_pow_times_progression(i64 base, int exp_step, int exp_offset, i64 mult,
                                                    i64 residue, i64 bound) {
    std::set<i64> out;
    for (int l = 0;; ++l) {
        i64 p = 1;
        bool overflow = false;
        for (int e = 0; e < exp_step * l + exp_offset; ++e) {
            p *= base;
            if (p > bound) {
                overflow = true;
                break;
            }
        }
        if (overflow) break;
        for (i64 k = 0; p * (mult * k + residue) <= bound; ++k) out.insert(p * (mult * k + residue));
    }
    return {out.begin(), out.end()};
}

}  // namespace oracles

#endif
