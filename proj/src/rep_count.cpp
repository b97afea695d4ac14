#include "polyu/rep_count.hpp"

#include <algorithm>

namespace polyu {

namespace {

// Box bound b_i with |v_i| <= b_i whenever f(v) <= n.
Vec3 box_bounds(const TernaryForm& f, i64 n) {
    Mat3 adj = f.adjugate();
    i64 det = f.det();
    Vec3 b;
    for (int i = 0; i < 3; ++i)
        b[static_cast<std::size_t>(i)] =
            isqrt(floor_div(checked_mul(n, adj[static_cast<std::size_t>(4 * i)]), det));
    return b;
}

// Integer solutions v2 of a*v2^2 + b*v2 + c == 0 appended via callback.
template <typename F>
void quadratic_roots(i64 a, i64 b, i64 c, F&& emit) {
    i64 disc = b * b - 4 * a * c;
    if (disc < 0) return;
    i64 s = isqrt(disc);
    if (s * s != disc) return;
    if ((-b + s) % (2 * a) == 0) emit((-b + s) / (2 * a));
    if (s != 0 && (-b - s) % (2 * a) == 0) emit((-b - s) / (2 * a));
}

}  // namespace

std::vector<Vec3> vectors_representing(const TernaryForm& f, i64 n) {
    if (n < 0) return {};
    if (n == 0) return {Vec3{0, 0, 0}};
    std::vector<Vec3> out;
    Vec3 b = box_bounds(f, n);
    const i64 a00 = f.at(0, 0), a11 = f.at(1, 1), a22 = f.at(2, 2);
    const i64 a01 = f.at(0, 1), a02 = f.at(0, 2), a12 = f.at(1, 2);
    for (i64 v0 = -b[0]; v0 <= b[0]; ++v0) {
        for (i64 v1 = -b[1]; v1 <= b[1]; ++v1) {
            i64 lin = 2 * (a02 * v0 + a12 * v1);
            i64 rest = a00 * v0 * v0 + a11 * v1 * v1 + 2 * a01 * v0 * v1 - n;
            quadratic_roots(a22, lin, rest, [&](i64 v2) { out.push_back({v0, v1, v2}); });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 rep_count(i64 n, const TernaryForm& f) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    i64 count = 0;
    Vec3 b = box_bounds(f, n);
    const i64 a00 = f.at(0, 0), a11 = f.at(1, 1), a22 = f.at(2, 2);
    const i64 a01 = f.at(0, 1), a02 = f.at(0, 2), a12 = f.at(1, 2);
    for (i64 v0 = -b[0]; v0 <= b[0]; ++v0) {
        for (i64 v1 = -b[1]; v1 <= b[1]; ++v1) {
            i64 lin = 2 * (a02 * v0 + a12 * v1);
            i64 rest = a00 * v0 * v0 + a11 * v1 * v1 + 2 * a01 * v0 * v1 - n;
            quadratic_roots(a22, lin, rest, [&](i64) { ++count; });
        }
    }
    return count;
}

std::vector<std::uint32_t> rep_counts_up_to(const TernaryForm& f, i64 bound) {
    if (bound < 0) fail(errc::invalid_argument, "bound must be nonnegative");
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(bound) + 1, 0);
    Vec3 b = box_bounds(f, bound);
    const i64 a00 = f.at(0, 0), a11 = f.at(1, 1), a22 = f.at(2, 2);
    const i64 a01 = f.at(0, 1), a02 = f.at(0, 2), a12 = f.at(1, 2);
    for (i64 v0 = -b[0]; v0 <= b[0]; ++v0) {
        for (i64 v1 = -b[1]; v1 <= b[1]; ++v1) {
            i64 lin = 2 * (a02 * v0 + a12 * v1);
            i64 rest = a00 * v0 * v0 + a11 * v1 * v1 + 2 * a01 * v0 * v1;
            // v2 range with f(v0,v1,v2) <= bound.
            i64 disc = lin * lin - 4 * a22 * (rest - bound);
            if (disc < 0) continue;
            i64 s = isqrt(disc);
            i64 lo = ceil_div(-lin - s, 2 * a22);
            i64 hi = floor_div(-lin + s, 2 * a22);
            for (i64 v2 = lo; v2 <= hi; ++v2) {
                i64 value = a22 * v2 * v2 + lin * v2 + rest;
                if (value <= bound) ++counts[static_cast<std::size_t>(value)];
            }
        }
    }
    return counts;
}

std::vector<i64> represented_set(const TernaryForm& f, i64 bound) {
    auto counts = rep_counts_up_to(f, bound);
    std::vector<i64> out;
    for (i64 n = 0; n <= bound; ++n)
        if (counts[static_cast<std::size_t>(n)] > 0) out.push_back(n);
    return out;
}

std::vector<i64> represented_complement(const TernaryForm& f, i64 bound) {
    auto counts = rep_counts_up_to(f, bound);
    std::vector<i64> out;
    for (i64 n = 0; n <= bound; ++n)
        if (counts[static_cast<std::size_t>(n)] == 0) out.push_back(n);
    return out;
}

const TernaryForm& siegel_form_133() {
    static const TernaryForm f = TernaryForm::diagonal(1, 3, 3);
    return f;
}
const TernaryForm& siegel_form_1_27_27() {
    static const TernaryForm f = TernaryForm::diagonal(1, 27, 27);
    return f;
}
const TernaryForm& siegel_form_m2() {
    static const TernaryForm f = TernaryForm::from_gram({4, 1, 0, 1, 7, 0, 0, 0, 27});
    return f;
}
const TernaryForm& siegel_form_m3() {
    static const TernaryForm f = TernaryForm::from_gram({7, -3, 2, -3, 9, 3, 2, 3, 16});
    return f;
}

std::optional<i64> siegel_identity_first_failure(i64 bound) {
    auto big = rep_counts_up_to(siegel_form_133(), bound);
    auto small = rep_counts_up_to(siegel_form_1_27_27(), bound);
    auto m2 = rep_counts_up_to(siegel_form_m2(), bound);
    auto m3 = rep_counts_up_to(siegel_form_m3(), bound);
    for (i64 n = 1; n <= bound; ++n) {
        if (n % 3 != 1) continue;
        auto i = static_cast<std::size_t>(n);
        i64 lhs = static_cast<i64>(big[i]) - static_cast<i64>(small[i]);
        i64 rhs = 4 * (static_cast<i64>(m2[i]) + static_cast<i64>(m3[i]));
        if (lhs != rhs) return n;
    }
    return std::nullopt;
}

}  // namespace polyu
