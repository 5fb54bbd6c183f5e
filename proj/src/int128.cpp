#include "esforge/int128.hpp"

#include <cctype>
#include <limits>

namespace esforge {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int pos = sizeof(buf);
    while (v != 0) {
        buf[--pos] = char('0' + int(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, sizeof(buf) - pos);
}

std::string to_string(i128 v) {
    if (v < 0) {
        // negate via unsigned to survive the minimum value
        u128 mag = u128(0) - u128(v);
        return "-" + to_string(mag);
    }
    return to_string(u128(v));
}

i128 parse_i128(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_i128: empty string");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("parse_i128: no digits");
    u128 acc = 0;
    const u128 limit = neg ? (u128(1) << 127) : (u128(1) << 127) - 1;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("parse_i128: non-digit character");
        unsigned d = unsigned(s[i] - '0');
        if (acc > (limit - d) / 10)
            throw std::out_of_range("parse_i128: value exceeds 128-bit range");
        acc = acc * 10 + d;
    }
    return neg ? -i128(acc) : i128(acc);
}

namespace {

int bit_width_u128(u128 v) {
    uint64_t hi = uint64_t(v >> 64);
    if (hi) return 128 - __builtin_clzll(hi);
    uint64_t lo = uint64_t(v);
    return lo ? 64 - __builtin_clzll(lo) : 0;
}

}  // namespace

SqrtResult integer_sqrt_checked(i128 v) {
    if (v < 0) throw std::invalid_argument("integer_sqrt_checked: negative input");
    u128 u = u128(v);
    if (u < 2) return {i128(u), true};
    // start above the root, then Newton steps descend to floor(sqrt(u))
    u128 x = u128(1) << ((bit_width_u128(u) + 1) / 2);
    u128 y = (x + u / x) / 2;
    while (y < x) {
        x = y;
        y = (x + u / x) / 2;
    }
    return {i128(x), x * x == u};
}

i128 gcd_i128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace esforge
