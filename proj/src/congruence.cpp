#include "polyu/congruence.hpp"

#include <algorithm>
#include <set>

#include "polyu/rep_count.hpp"

namespace polyu {

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i64 s = 0;
            for (int k = 0; k < 3; ++k)
                s += a[static_cast<std::size_t>(3 * i + k)] * b[static_cast<std::size_t>(3 * k + j)];
            out[static_cast<std::size_t>(3 * i + j)] = s;
        }
    return out;
}

Vec3 mat_apply(const Mat3& m, const Vec3& v) {
    Vec3 out{};
    for (int i = 0; i < 3; ++i) {
        i64 s = 0;
        for (int j = 0; j < 3; ++j) s += m[static_cast<std::size_t>(3 * i + j)] * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

Vec3 reduce_mod(const Vec3& v, i64 d) {
    Vec3 out;
    for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = ((v[static_cast<std::size_t>(i)] % d) + d) % d;
    return out;
}

Vec3 pair_representative(const Vec3& v, i64 d) {
    Vec3 a = reduce_mod(v, d);
    Vec3 b = reduce_mod({-v[0], -v[1], -v[2]}, d);
    return std::min(a, b);
}

Vec3 primitive_signed(const Vec3& v) {
    i64 g = gcd_i64(gcd_i64(v[0], v[1]), v[2]);
    if (g == 0) return {0, 0, 0};
    Vec3 out = {v[0] / g, v[1] / g, v[2] / g};
    for (i64 c : out) {
        if (c > 0) break;
        if (c < 0) {
            out = {-out[0], -out[1], -out[2]};
            break;
        }
    }
    return out;
}

std::vector<Vec3> congruence_classes(const TernaryForm& g, i64 d, i64 a) {
    if (d < 1) fail(errc::invalid_argument, "modulus must be positive");
    if (a < 0 || a >= d) fail(errc::invalid_argument, "residue must satisfy 0 <= a < d");
    std::vector<Vec3> out;
    for (i64 x = 0; x < d; ++x)
        for (i64 y = 0; y < d; ++y)
            for (i64 z = 0; z < d; ++z) {
                Vec3 v = {x, y, z};
                if (((g.eval(v) % d) + d) % d == a) out.push_back(v);
            }
    return out;
}

std::vector<Mat3> transformation_set(const TernaryForm& f, const TernaryForm& g, i64 d) {
    if (d < 1) fail(errc::invalid_argument, "modulus must be positive");
    std::array<std::vector<Vec3>, 3> columns;
    for (int j = 0; j < 3; ++j)
        columns[static_cast<std::size_t>(j)] = vectors_representing(f, d * d * g.at(j, j));
    std::vector<Mat3> out;
    for (const Vec3& t0 : columns[0]) {
        for (const Vec3& t1 : columns[1]) {
            if (f.bilinear(t0, t1) != d * d * g.at(0, 1)) continue;
            for (const Vec3& t2 : columns[2]) {
                if (f.bilinear(t0, t2) != d * d * g.at(0, 2)) continue;
                if (f.bilinear(t1, t2) != d * d * g.at(1, 2)) continue;
                out.push_back(Mat3{t0[0], t1[0], t2[0], t0[1], t1[1], t2[1], t0[2], t1[2], t2[2]});
            }
        }
    }
    return out;
}

std::vector<Vec3> CongruenceCertificate::bad_pairs() const {
    std::set<Vec3> reps;
    for (const Vec3& v : bad) reps.insert(pair_representative(v, d));
    return {reps.begin(), reps.end()};
}

CongruenceCertificate good_partition(const TernaryForm& f, const TernaryForm& g, i64 d, i64 a) {
    CongruenceCertificate cert{f, g, d, a, {}, {}, {}, std::nullopt, {}};
    cert.residues = congruence_classes(g, d, a);
    // Residues transported to 0 mod d by some T, i.e. the union of the
    // kernels of T mod d over the transformation set.
    std::set<Mat3> reduced;
    for (const Mat3& T : transformation_set(f, g, d)) {
        Mat3 r;
        for (std::size_t i = 0; i < 9; ++i) r[i] = ((T[i] % d) + d) % d;
        reduced.insert(r);
    }
    std::set<Vec3> transported;
    for (const Mat3& T : reduced)
        for (i64 x = 0; x < d; ++x)
            for (i64 y = 0; y < d; ++y)
                for (i64 z = 0; z < d; ++z) {
                    Vec3 v = {x, y, z};
                    if (reduce_mod(mat_apply(T, v), d) == Vec3{0, 0, 0}) transported.insert(v);
                }
    for (const Vec3& v : cert.residues) {
        if (transported.contains(v))
            cert.good.push_back(v);
        else
            cert.bad.push_back(v);
    }
    return cert;
}

bool prec_check(const TernaryForm& f, const TernaryForm& g, i64 d, i64 a, i64 spot_bound) {
    CongruenceCertificate cert = good_partition(f, g, d, a);
    if (!cert.bad.empty()) return false;
    // Spot-verify the implied inclusion S_{d,a} cap Q(g) subset Q(f).
    auto qg = rep_counts_up_to(g, spot_bound);
    auto qf = rep_counts_up_to(f, spot_bound);
    for (i64 n = a; n <= spot_bound; n += d) {
        if (qg[static_cast<std::size_t>(n)] > 0 && qf[static_cast<std::size_t>(n)] == 0)
            fail(errc::internal, "empty bad set but " + std::to_string(n) +
                                     " is a counterexample to the progression inclusion");
    }
    return true;
}

namespace {

using i128 = __int128;
using Mat3w = std::array<i128, 9>;

Mat3w widen(const Mat3& m) {
    Mat3w out;
    for (std::size_t i = 0; i < 9; ++i) out[i] = m[i];
    return out;
}

Mat3w mul_w(const Mat3w& a, const Mat3w& b) {
    Mat3w out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i128 s = 0;
            for (int k = 0; k < 3; ++k)
                s += a[static_cast<std::size_t>(3 * i + k)] * b[static_cast<std::size_t>(3 * k + j)];
            out[static_cast<std::size_t>(3 * i + j)] = s;
        }
    return out;
}

// Finite-order elements of the integral orthogonal group of a positive
// definite ternary lattice have order at most 24, so it suffices to compare
// T^k against d^k I for k <= 24.
bool has_infinite_order(const Mat3& T, i64 d) {
    Mat3w power = widen(T);
    i128 scale = d;
    for (int k = 1; k <= 24; ++k) {
        bool identity = true;
        for (int i = 0; i < 3 && identity; ++i)
            for (int j = 0; j < 3 && identity; ++j)
                if (power[static_cast<std::size_t>(3 * i + j)] != (i == j ? scale : 0)) identity = false;
        if (identity) return false;
        power = mul_w(power, widen(T));
        scale *= d;
    }
    return true;
}

i64 trace(const Mat3& m) { return m[0] + m[4] + m[8]; }

i64 det3(const Mat3& m) {
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

// Sum of principal 2x2 minors.
i64 minor_sum(const Mat3& m) {
    return (m[0] * m[4] - m[1] * m[3]) + (m[0] * m[8] - m[2] * m[6]) + (m[4] * m[8] - m[5] * m[7]);
}

std::vector<i64> integer_eigenvalues(const Mat3& T) {
    // Characteristic polynomial x^3 - tr x^2 + m x - det; integer roots
    // divide the determinant.
    i64 c2 = trace(T), c1 = minor_sum(T), c0 = det3(T);
    auto eval = [&](i64 x) { return ((x - c2) * x + c1) * x - c0; };
    std::vector<i64> roots;
    if (c0 == 0) {
        // x (x^2 - c2 x + c1): quadratic factor handled directly.
        roots.push_back(0);
        i64 disc = c2 * c2 - 4 * c1;
        if (disc >= 0 && is_square(disc)) {
            i64 s = isqrt(disc);
            if ((c2 + s) % 2 == 0) roots.push_back((c2 + s) / 2);
            if (s != 0 && (c2 - s) % 2 == 0) roots.push_back((c2 - s) / 2);
        }
    }
    i64 abs0 = c0 < 0 ? -c0 : c0;
    for (i64 p = 1; p * p <= abs0; ++p) {
        if (abs0 % p != 0) continue;
        for (i64 q : {p, abs0 / p}) {
            for (i64 root : {q, -q}) {
                if (eval(root) == 0 && std::find(roots.begin(), roots.end(), root) == roots.end())
                    roots.push_back(root);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

PmeResult pme_check(const TernaryForm& f, const TernaryForm& g, i64 d, i64 a, const Mat3& T) {
    if (d < 1) fail(errc::invalid_argument, "modulus must be positive");
    PmeResult res;
    // (ii) T^t M_g T == d^2 M_g.
    Mat3 Tt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Tt[static_cast<std::size_t>(3 * i + j)] = T[static_cast<std::size_t>(3 * j + i)];
    Mat3 lhs = mat_mul(Tt, mat_mul(g.gram(), T));
    res.isometry_identity = true;
    for (std::size_t i = 0; i < 9; ++i)
        if (lhs[i] != d * d * g.gram()[i]) res.isometry_identity = false;
    // (i) infinite order of (1/d) T.
    res.infinite_order = has_infinite_order(T, d);
    // (iii) transport of every bad class.
    CongruenceCertificate cert = good_partition(f, g, d, a);
    res.bad_transported = true;
    for (const Vec3& v : cert.bad)
        if (reduce_mod(mat_apply(T, v), d) != Vec3{0, 0, 0}) res.bad_transported = false;
    res.verdict = res.infinite_order && res.isometry_identity && res.bad_transported;
    // Primitive integral eigenvectors, one per sign pair.
    res.eigenvalues = integer_eigenvalues(T);
    for (i64 lambda : res.eigenvalues) {
        Mat3 K = T;
        K[0] -= lambda;
        K[4] -= lambda;
        K[8] -= lambda;
        // Kernel of a rank-2 matrix is spanned by any nonzero cross product
        // of two rows.
        std::array<Vec3, 3> rows = {Vec3{K[0], K[1], K[2]}, Vec3{K[3], K[4], K[5]}, Vec3{K[6], K[7], K[8]}};
        auto cross = [](const Vec3& u, const Vec3& v) {
            return Vec3{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        };
        Vec3 kernel = {0, 0, 0};
        for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
            Vec3 c = cross(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
            if (c != Vec3{0, 0, 0}) {
                kernel = c;
                break;
            }
        }
        if (kernel == Vec3{0, 0, 0}) {
            // All row pairs parallel: the eigenspace has dimension >= 2.
            res.higher_dimensional_eigenspace = true;
            continue;
        }
        Vec3 z = primitive_signed(kernel);
        if (mat_apply(T, z) != Vec3{lambda * z[0], lambda * z[1], lambda * z[2]})
            fail(errc::internal, "eigenvector extraction produced a non-eigenvector");
        res.eigenvectors.push_back(z);
    }
    return res;
}

std::optional<i64> pme_conclusion_first_failure(const TernaryForm& f, const TernaryForm& g, i64 d,
                                                i64 a, const Mat3& T, i64 bound) {
    if (a < 0 || a >= d) fail(errc::invalid_argument, "residue must satisfy 0 <= a < d");
    PmeResult pme = pme_check(f, g, d, a, T);
    auto qg = rep_counts_up_to(g, bound);
    auto qf = rep_counts_up_to(f, bound);
    // n is excluded when it is g(z) * s^2 for every reported eigenvector z.
    // With a higher-dimensional eigenspace (or none found) nothing is
    // excluded, which only makes the check stricter.
    auto excluded = [&](i64 n) {
        if (pme.eigenvectors.empty() || pme.higher_dimensional_eigenspace) return false;
        for (const Vec3& z : pme.eigenvectors) {
            i64 gz = g.eval(z);
            if (gz == 0 || n % gz != 0 || !is_square(n / gz)) return false;
        }
        return true;
    };
    for (i64 n = a; n <= bound; n += d) {
        auto i = static_cast<std::size_t>(n);
        if (qg[i] > 0 && qf[i] == 0 && !excluded(n)) return n;
    }
    return std::nullopt;
}

}  // namespace polyu
