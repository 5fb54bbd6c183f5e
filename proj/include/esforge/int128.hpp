#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace esforge {

using i128 = __int128;
using u128 = unsigned __int128;

// Raised when an exact computation would leave the signed 128-bit range.
// The value is never wrapped; callers are expected to reduce parameters.
class OverflowBeyondSupportedWidth : public std::overflow_error {
public:
    explicit OverflowBeyondSupportedWidth(const std::string& what)
        : std::overflow_error(what) {}
};

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowBeyondSupportedWidth("128-bit add overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowBeyondSupportedWidth("128-bit sub overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowBeyondSupportedWidth("128-bit mul overflow");
    return r;
}

// Non-throwing variants for code that wants to fall back to wider arithmetic.
inline bool try_mul(i128 a, i128 b, i128& out) { return !__builtin_mul_overflow(a, b, &out); }
inline bool try_add(i128 a, i128 b, i128& out) { return !__builtin_add_overflow(a, b, &out); }

std::string to_string(i128 v);
std::string to_string(u128 v);

// Parses an optionally signed decimal string; throws std::invalid_argument on
// malformed input and std::out_of_range past the 128-bit range.
i128 parse_i128(std::string_view s);

struct SqrtResult {
    i128 root;       // floor(sqrt(v))
    bool is_square;  // root * root == v
};

// Exact integer square root by Newton iteration; no floating point in the
// contract. Pre: v >= 0 (throws std::invalid_argument otherwise).
SqrtResult integer_sqrt_checked(i128 v);

// gcd for 128-bit operands (std::gcd is not guaranteed for __int128).
i128 gcd_i128(i128 a, i128 b);

// ceil(a / b) for a >= 0, b > 0.
inline i128 ceil_div(i128 a, i128 b) { return (a + b - 1) / b; }

}  // namespace esforge
