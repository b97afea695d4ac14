#ifndef POLYU_COMMON_HPP
#define POLYU_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyu {

using i64 = std::int64_t;

// Error taxonomy mirrored by the C API status codes.
enum class errc {
    invalid_argument,
    overflow,
    indeterminate,
    unknown_table,
    io,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// floor(sqrt(n)) for n >= 0, exact.
inline i64 isqrt(i64 n) {
    if (n < 0) fail(errc::invalid_argument, "isqrt of negative value");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

// Floor/ceil division for b > 0.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline i64 ceil_div(i64 a, i64 b) { return -floor_div(-a, b); }

inline i64 checked_mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in multiplication");
    return out;
}

inline i64 checked_add(i64 a, i64 b) {
    i64 out;
    if (__builtin_add_overflow(a, b, &out)) fail(errc::overflow, "integer overflow in addition");
    return out;
}

inline i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace polyu

#endif
