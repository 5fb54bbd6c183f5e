#include "esforge/core_f.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

namespace esforge {

const char* method_tag_name(MethodTag tag) {
    switch (tag) {
        case MethodTag::Mod4Zero: return "Mod4Zero";
        case MethodTag::Mod4Two: return "Mod4Two";
        case MethodTag::Mod4Three: return "Mod4Three";
        case MethodTag::DivisorB: return "DivisorB";
        case MethodTag::ParametricSearch: return "ParametricSearch";
        case MethodTag::Oracle: return "Oracle";
    }
    return "?";
}

std::string ConstructionMethod::label() const {
    switch (tag) {
        case MethodTag::DivisorB:
            return "DivisorB(" + to_string(b) + ")";
        case MethodTag::ParametricSearch:
            return "ParametricSearch(x=" + to_string(x) + ",t=" + to_string(t) + ")";
        default:
            return tag_name();
    }
}

namespace {

void check_parametrization(const Parametrization& p) {
    if (p.k < 4) throw std::invalid_argument("parametrization: k must be >= 4");
    if (p.n < 1) throw std::invalid_argument("parametrization: n must be positive");
    if (p.x < 1) throw std::invalid_argument("parametrization: x must be positive");
    if (p.t < 1) throw std::invalid_argument("parametrization: t must be positive");
}

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 mag = neg ? u128(0) - u128(v) : u128(v);
    mpz_class hi(uint64_t(mag >> 64));
    mpz_class out = (hi << 64) + uint64_t(mag);
    return neg ? mpz_class(-out) : out;
}

}  // namespace

i128 eval_F(const Parametrization& p) {
    check_parametrization(p);
    i128 d = checked_sub(checked_mul(p.k, p.x), p.n);  // kx - n, sign free
    i128 td = checked_mul(p.t, d);
    i128 lead = checked_mul(td, td);
    i128 tail = checked_mul(2, checked_mul(checked_mul(p.n, p.x), p.t));
    return checked_sub(lead, tail);
}

namespace {

// n < kx and t (kx - n)^2 >= 2 n x. The second condition holds on a prefix
// of n (its left side falls and right side grows with n), so the domain is
// one contiguous interval.
bool domain_holds(int64_t k, i128 x, i128 t, i128 n) {
    i128 d = checked_sub(checked_mul(k, x), n);
    if (d <= 0) return false;
    i128 lhs = checked_mul(t, checked_mul(d, d));
    i128 rhs = checked_mul(2, checked_mul(n, x));
    return lhs >= rhs;
}

}  // namespace

std::optional<AdmissibleDomain> admissible_domain(int64_t k, i128 x, i128 t, i128 n1) {
    if (k < 4) throw std::invalid_argument("admissible_domain: k must be >= 4");
    if (x < 1 || t < 1) throw std::invalid_argument("admissible_domain: x, t must be positive");
    if (n1 < 2) throw std::invalid_argument("admissible_domain: n1 must be >= 2");

    i128 kx = checked_mul(k, x);
    if (n1 >= kx) return std::nullopt;

    // Closed form: the boundary is the lower root of
    // t n^2 - 2x(tk+1) n + t k^2 x^2 = 0, i.e. kx + (x/t)(1 - sqrt(2tk+1)).
    // The float estimate can be off by an ulp, so correct it against the
    // defining inequality afterwards.
    long double xd = static_cast<long double>(x);
    long double td = static_cast<long double>(t);
    long double kd = static_cast<long double>(k);
    long double est = kd * xd + (xd / td) * (1.0L - sqrtl(2.0L * td * kd + 1.0L));
    i128 n = static_cast<i128>(floorl(est));
    if (n > kx - 1) n = kx - 1;
    if (n < n1 - 1) n = n1 - 1;

    while (n >= n1 && !domain_holds(k, x, t, n)) --n;
    while (n + 1 < kx && domain_holds(k, x, t, n + 1)) ++n;
    if (n < n1) return std::nullopt;

    AdmissibleDomain dom;
    dom.k = k;
    dom.x = x;
    dom.t = t;
    dom.n1 = n1;
    dom.n_min = n1;
    dom.n_max = n;
    dom.f_at_min = eval_F({k, n1, x, t});
    dom.f_at_max = eval_F({k, n, x, t});
    return dom;
}

SolveViaFResult solve_via_F(const Parametrization& p, const ConstructionMethod& method) {
    check_parametrization(p);
    i128 d = checked_sub(checked_mul(p.k, p.x), p.n);
    if (d <= 0) return {SolveViaFStatus::OutOfDomain, std::nullopt, 0};

    i128 f = eval_F(p);
    if (f < 0) return {SolveViaFStatus::OutOfDomain, std::nullopt, f};

    auto [root, is_square] = integer_sqrt_checked(f);
    if (!is_square) return {SolveViaFStatus::NotASquare, std::nullopt, f};

    i128 td = checked_mul(p.t, d);
    i128 y = checked_add(td, root);
    i128 z = checked_sub(td, root);
    assert(z >= 1);  // m < t(kx-n) since 2nxt > 0

    Solution sol;
    sol.k = p.k;
    sol.n = p.n;
    sol.x = p.x;
    sol.y = y;
    sol.z = z;
    sol.method = method;
    sol.t = p.t;
    sol.m = root;
    if (!verify_identity(sol.k, sol.n, sol.x, sol.y, sol.z))
        throw std::logic_error("solve_via_F: recovered triple fails the exact identity");
    return {SolveViaFStatus::Solved, sol, f};
}

SolveViaFResult solve_via_F(const Parametrization& p) {
    return solve_via_F(p, ConstructionMethod::parametric(p.x, p.t));
}

RecoverTResult recover_t(int64_t k, i128 n, i128 x, i128 y, i128 z) {
    if (!verify_identity(k, n, x, y, z))
        return {RecoverTStatus::IdentityViolation, 0};

    // The identity forces 1/x < k/n, so kx - n > 0 here.
    i128 d = checked_sub(checked_mul(k, x), n);
    assert(d > 0);

    i128 s = checked_add(y, z);
    i128 d2 = checked_mul(2, d);
    if (s % d2 != 0) return {RecoverTStatus::NonIntegerT, 0};
    i128 t = s / d2;
    if (t < 1) return {RecoverTStatus::NonIntegerT, 0};

    // The dual form yz = 2nxt must agree (it does whenever the identity
    // holds; checked anyway since it is the theorem's other face).
    i128 yz, nx, nxt, rhs;
    if (try_mul(y, z, yz) && try_mul(n, x, nx) && try_mul(nx, t, nxt) &&
        try_mul(2, nxt, rhs)) {
        if (yz != rhs) return {RecoverTStatus::NonIntegerT, 0};
    } else {
        mpz_class big_yz = mpz_from_i128(y) * mpz_from_i128(z);
        mpz_class big_rhs = 2 * mpz_from_i128(n) * mpz_from_i128(x) * mpz_from_i128(t);
        if (big_yz != big_rhs) return {RecoverTStatus::NonIntegerT, 0};
    }
    return {RecoverTStatus::Recovered, t};
}

bool verify_identity(int64_t k, i128 n, i128 x, i128 y, i128 z) {
    if (n < 1 || x < 1 || y < 1 || z < 1) return false;

    i128 xy, yz, zx, s1, s2, lhs, xyz, rhs;
    bool ok = try_mul(x, y, xy) && try_mul(y, z, yz) && try_mul(z, x, zx) &&
              try_add(xy, yz, s1) && try_add(s1, zx, s2) && try_mul(n, s2, lhs) &&
              try_mul(xy, z, xyz) && try_mul(i128(k), xyz, rhs);
    if (ok) return lhs == rhs;

    // an intermediate left the 128-bit range: redo in arbitrary precision
    mpz_class bn = mpz_from_i128(n), bx = mpz_from_i128(x);
    mpz_class by = mpz_from_i128(y), bz = mpz_from_i128(z);
    mpz_class blhs = bn * (bx * by + by * bz + bz * bx);
    mpz_class brhs = k * bx * by * bz;
    return blhs == brhs;
}

int64_t default_n1(int64_t k) {
    if (k <= 4) return 2;
    if (k == 5) return 11;
    return std::max<int64_t>(2, (k + 2) / 3);
}

}  // namespace esforge
