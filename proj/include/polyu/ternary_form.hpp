#ifndef POLYU_TERNARY_FORM_HPP
#define POLYU_TERNARY_FORM_HPP

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "polyu/common.hpp"

namespace polyu {

using Vec3 = std::array<i64, 3>;
using Mat3 = std::array<i64, 9>;  // row-major

// Positive definite integral ternary quadratic form, stored as its symmetric
// Gram matrix. f(v) = v M v^t.
class TernaryForm {
public:
    static TernaryForm diagonal(i64 a, i64 b, i64 c);
    static TernaryForm from_gram(const Mat3& gram);
    // "diag:1,3,3" or "gram:4,1,0;1,7,0;0,0,27" (full rows; the upper
    // triangle "gram:4,1,0;7,0;27" is accepted too).
    static TernaryForm parse(std::string_view text);

    std::string notation() const;
    const Mat3& gram() const noexcept { return m_; }
    i64 at(int i, int j) const noexcept { return m_[static_cast<std::size_t>(3 * i + j)]; }
    bool is_diagonal() const noexcept;

    i64 eval(const Vec3& v) const noexcept;
    // u M v^t; integral because M is.
    i64 bilinear(const Vec3& u, const Vec3& v) const noexcept;
    i64 det() const noexcept;
    Mat3 adjugate() const noexcept;

    friend bool operator==(const TernaryForm&, const TernaryForm&) = default;
    friend std::strong_ordering operator<=>(const TernaryForm&, const TernaryForm&) = default;

private:
    explicit TernaryForm(const Mat3& m);
    Mat3 m_{};
};

}  // namespace polyu

#endif
