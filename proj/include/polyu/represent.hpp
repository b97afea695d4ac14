#ifndef POLYU_REPRESENT_HPP
#define POLYU_REPRESENT_HPP

#include <array>
#include <optional>
#include <vector>

#include "polyu/mixed_sum.hpp"

namespace polyu {

// P_m(x) = ((m-2)x^2 - (m-4)x)/2 for x ranging over all integers.
// Only m = 4 (squares) and m = 8 (octagonal, 3x^2 - 2x) are supported.
i64 polygonal_value(int m, i64 x);

// All generalized m-gonal values <= bound, sorted ascending, deduplicated,
// starting at 0.
std::vector<i64> polygonal_values_up_to(int m, i64 bound);

// Bitmap of {0, ..., bound} with bit n set iff n is represented by the sum.
class RepSieve {
public:
    RepSieve(const MixedSum& phi, i64 bound);

    i64 bound() const noexcept { return bound_; }
    bool test(i64 n) const noexcept {
        return static_cast<std::uint64_t>(n) <= static_cast<std::uint64_t>(bound_) &&
               (words_[static_cast<std::size_t>(n >> 6)] >> (n & 63)) & 1u;
    }
    // Least positive non-represented value, if any.
    std::optional<i64> first_gap() const;
    std::vector<i64> gaps() const;

private:
    i64 bound_;
    std::vector<std::uint64_t> words_;
};

// Single-value decision: exists (x_i, y_j) with
//   sum alpha_i P4(x_i) + sum beta_j P8(y_j) = n.
// Depth-first search over per-term value lists, largest coefficient first,
// candidate values from the largest, with a failure cache on
// (term index, remainder).
bool is_represented(const MixedSum& phi, i64 n);

struct Witness {
    std::vector<i64> xs;  // square arguments, aligned with phi.squares()
    std::vector<i64> ys;  // octagonal arguments, aligned with phi.octagonals()
};

// Smallest witness in lexicographic order over the absolute values of
// (x-part, y-part), preferring nonnegative arguments on ties. Square
// arguments are reported nonnegative.
std::optional<Witness> find_witness(const MixedSum& phi, i64 n);

// The mixed sum is universal iff it represents these 19 integers.
inline constexpr std::array<i64, 19> critical_integers = {1,  2,  3,  4,  5,  6,  7,  8,  9, 10,
                                                          12, 13, 14, 15, 18, 20, 30, 60, 61};

bool criterion_universal(const MixedSum& phi);

struct TruantReport {
    enum class Verdict { universal, non_universal };
    Verdict verdict = Verdict::universal;
    std::optional<i64> truant;  // present iff non_universal
    i64 searched_bound = 0;
    bool criterion_passed = false;
};

// Scans n = 1..bound (bound >= 61). Returns the least non-represented n as
// truant, or a universal verdict when all are represented and the 19-integer
// criterion agrees. All values represented with the criterion failing is an
// indeterminate outcome and throws; it would contradict the classification
// this engine reproduces.
TruantReport truant(const MixedSum& phi, i64 bound);

// All positive n <= bound not represented by phi.
std::vector<i64> exceptional_set(const MixedSum& phi, i64 bound);

}  // namespace polyu

#endif
