#ifndef POLYU_REP_COUNT_HPP
#define POLYU_REP_COUNT_HPP

#include <optional>
#include <vector>

#include "polyu/ternary_form.hpp"

namespace polyu {

// Exact number of integer vectors v with f(v) = n. Enumerates inside the
// ellipsoid f <= n using the box bounds v_i^2 <= n * adj_ii / det.
i64 rep_count(i64 n, const TernaryForm& f);

// All v with f(v) = n, sorted. rep_count(n, f) == vectors_representing(f, n).size().
std::vector<Vec3> vectors_representing(const TernaryForm& f, i64 n);

// counts[n] = rep_count(n, f) for all 0 <= n <= bound, from one sweep of the
// ellipsoid f <= bound.
std::vector<std::uint32_t> rep_counts_up_to(const TernaryForm& f, i64 bound);

// Q(f) restricted to [0, bound].
std::vector<i64> represented_set(const TernaryForm& f, i64 bound);
std::vector<i64> represented_complement(const TernaryForm& f, i64 bound);

// Verifies r(n, <1,3,3>) - r(n, <1,27,27>) = 4 r(n, M2) + 4 r(n, M3) for all
// n <= bound with n == 1 (mod 3), where M2, M3 are the two non-diagonal
// classes in the genus of <1,27,27>. Returns the first failing n, if any.
std::optional<i64> siegel_identity_first_failure(i64 bound);
inline bool siegel_identity_check(i64 bound) { return !siegel_identity_first_failure(bound).has_value(); }

// The four forms tied together by the identity above.
const TernaryForm& siegel_form_133();
const TernaryForm& siegel_form_1_27_27();
const TernaryForm& siegel_form_m2();
const TernaryForm& siegel_form_m3();

}  // namespace polyu

#endif
