#ifndef POLYU_MIXED_SUM_HPP
#define POLYU_MIXED_SUM_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "polyu/common.hpp"

namespace polyu {

// A weighted sum of generalized square (4-gonal) and octagonal (8-gonal)
// numbers. Both coefficient multisets are kept sorted ascending, so two sums
// are equal iff they have the same canonical form. The empty sum is valid and
// represents only 0.
class MixedSum {
public:
    MixedSum() = default;
    MixedSum(std::vector<i64> squares, std::vector<i64> octagonals);

    // Text notation "a1,a2,...|b1,b2,..."; either side may be empty, e.g.
    // "1,2,5|5,5" or "|1,1,2". Spaces are accepted as separators as well.
    static MixedSum parse(std::string_view text);
    std::string notation() const;
    // Same notation with spaces instead of commas inside each side; keeps CSV
    // fields free of commas.
    std::string notation_spaced() const;

    const std::vector<i64>& squares() const noexcept { return squares_; }
    const std::vector<i64>& octagonals() const noexcept { return octagonals_; }
    std::size_t arity() const noexcept { return squares_.size() + octagonals_.size(); }
    bool empty() const noexcept { return squares_.empty() && octagonals_.empty(); }

    MixedSum with_square(i64 c) const;
    MixedSum with_octagonal(i64 c) const;
    // All distinct sums obtained by removing one coefficient.
    std::vector<MixedSum> leave_one_out() const;

    friend bool operator==(const MixedSum&, const MixedSum&) = default;
    friend std::strong_ordering operator<=>(const MixedSum&, const MixedSum&) = default;

private:
    std::vector<i64> squares_;
    std::vector<i64> octagonals_;
};

}  // namespace polyu

#endif
