#ifndef POLYU_CONGRUENCE_HPP
#define POLYU_CONGRUENCE_HPP

#include <optional>
#include <vector>

#include "polyu/ternary_form.hpp"

namespace polyu {

// Residue vectors v in (Z/dZ)^3 with g(v) == a (mod d), by full scan.
std::vector<Vec3> congruence_classes(const TernaryForm& g, i64 d, i64 a);

// All integral T with T^t M_f T = d^2 M_g. Columns are found among the
// finitely many vectors representing d^2 * g_jj under f, then filtered by the
// bilinear cross conditions.
std::vector<Mat3> transformation_set(const TernaryForm& f, const TernaryForm& g, i64 d);

// Partition of the residue classes: v is good when some T in the
// transformation set maps it into d * Z^3, i.e. T v == 0 (mod d); the rest
// is bad. The split depends only on v mod d.
struct CongruenceCertificate {
    TernaryForm f, g;
    i64 d = 1, a = 0;
    std::vector<Vec3> residues;  // R(g, d, a)
    std::vector<Vec3> good;
    std::vector<Vec3> bad;
    std::optional<Mat3> witness;          // transport matrix for the bad classes
    std::vector<Vec3> eigenvectors;       // primitive, one per sign pair
    // Sign-pair representatives of the bad classes: min(v, -v mod d) lexicographically.
    std::vector<Vec3> bad_pairs() const;
};

CongruenceCertificate good_partition(const TernaryForm& f, const TernaryForm& g, i64 d, i64 a);

// True iff the bad set is empty. A true result implies that every value of g
// in the progression a mod d lies in Q(f); that inclusion is re-verified on
// represented sets up to spot_bound and an internal failure is raised should
// it ever not hold.
bool prec_check(const TernaryForm& f, const TernaryForm& g, i64 d, i64 a, i64 spot_bound = 2000);

struct PmeResult {
    bool infinite_order = false;    // (1/d) T is of infinite order
    bool isometry_identity = false; // T^t M_g T == d^2 M_g
    bool bad_transported = false;   // T v == 0 (mod d) for every bad class v
    bool verdict = false;           // all three
    std::vector<i64> eigenvalues;           // integer eigenvalues of T
    std::vector<Vec3> eigenvectors;         // primitive, one per sign pair, leading entry > 0
    bool higher_dimensional_eigenspace = false;
};

// Checks the three transport-matrix conditions for (f, g, d, a, T). Finite
// order of (1/d) T is decided by testing T^k == d^k I for k = 1..24: a
// finite-order isometry of a positive definite ternary lattice has order at
// most 24, so surviving all 24 powers proves infinite order.
PmeResult pme_check(const TernaryForm& f, const TernaryForm& g, i64 d, i64 a, const Mat3& T);

// Empirical verification of the transport conclusion: every n <= bound with
// n == a (mod d), n in Q(g) and n not of the form g(z) * s^2 for all reported
// eigenvectors z lies in Q(f). Returns the first counterexample, if any.
std::optional<i64> pme_conclusion_first_failure(const TernaryForm& f, const TernaryForm& g, i64 d,
                                                i64 a, const Mat3& T, i64 bound);
inline bool pme_conclusion_check(const TernaryForm& f, const TernaryForm& g, i64 d, i64 a,
                                 const Mat3& T, i64 bound) {
    return !pme_conclusion_first_failure(f, g, d, a, T, bound).has_value();
}

// Helpers shared with the verification layer.
Mat3 mat_mul(const Mat3& a, const Mat3& b);
Vec3 mat_apply(const Mat3& m, const Vec3& v);
Vec3 reduce_mod(const Vec3& v, i64 d);
Vec3 pair_representative(const Vec3& v, i64 d);  // min(v, -v) mod d, lexicographic
Vec3 primitive_signed(const Vec3& v);            // divide by gcd, first nonzero entry > 0

}  // namespace polyu

#endif
