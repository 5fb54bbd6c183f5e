#pragma once

#include <optional>

#include "esforge/int128.hpp"
#include "esforge/method.hpp"

namespace esforge {

// Evaluation point of the fundamental function
//   F(n) = t^2 (k x - n)^2 - 2 n x t.
// Whenever the point is used for solving, k x > n must hold.
struct Parametrization {
    int64_t k;  // numerator of k/n, k >= 4
    i128 n;     // denominator, n >= 2
    i128 x;     // first unit-fraction denominator candidate, x >= 1
    i128 t;     // auxiliary parameter, t >= 1
};

// Maximal contiguous interval [n_min, n_max] of n with n < kx and
// t (kx - n)^2 >= 2 n x, for fixed (k, x, t). F is nonnegative and strictly
// decreasing on it, so f_at_min is the largest value attained and f_at_max
// the smallest.
struct AdmissibleDomain {
    int64_t k;
    i128 x;
    i128 t;
    i128 n1;        // configured lower threshold
    i128 n_min;     // == n1 when the interval is non-empty
    i128 n_max;
    i128 f_at_min;  // F(n_min), upper bound of F on the interval
    i128 f_at_max;  // F(n_max), minimum of F on the interval
};

// A verified triple (x, y, z) with k/n = 1/x + 1/y + 1/z, tagged with the
// construction that produced it. t and m are present when the solution came
// out of F, in which case y = t(kx-n) + m and z = t(kx-n) - m.
struct Solution {
    int64_t k;
    i128 n;
    i128 x;
    i128 y;
    i128 z;
    ConstructionMethod method;
    std::optional<i128> t;
    std::optional<i128> m;
};

// Exact evaluation of F; throws OverflowBeyondSupportedWidth rather than
// wrapping. The result may be negative (t below the domain threshold).
i128 eval_F(const Parametrization& p);

// Empty domain is a value (nullopt), not an error: harness code iterates
// over many (x, t) pairs and most of them have nothing to offer.
std::optional<AdmissibleDomain> admissible_domain(int64_t k, i128 x, i128 t, i128 n1);

enum class SolveViaFStatus {
    Solved,
    NotASquare,   // F >= 0 but not a perfect square
    OutOfDomain,  // F < 0, or k x <= n
};

struct SolveViaFResult {
    SolveViaFStatus status;
    std::optional<Solution> solution;
    i128 f = 0;  // evaluated F (meaningful whenever k x > n)
};

// Quadratic-equivalence solver: when F(p) is a perfect square m^2, returns
// y = t(kx-n) + m, z = t(kx-n) - m, verified against the exact identity
// before returning. z >= 1 is guaranteed by m < t(kx-n).
SolveViaFResult solve_via_F(const Parametrization& p,
                            const ConstructionMethod& method);
SolveViaFResult solve_via_F(const Parametrization& p);

enum class RecoverTStatus {
    Recovered,
    NonIntegerT,        // (y+z) / (2(kx-n)) is not a positive integer
    IdentityViolation,  // (x, y, z) is not a solution for (k, n)
};

struct RecoverTResult {
    RecoverTStatus status;
    i128 t = 0;
};

// Inverts the parametrization: t = (y+z)/(2(kx-n)) = yz/(2nx). Both forms
// must agree and be a positive integer, otherwise NonIntegerT (the small-n
// phenomenon for k >= 5; we classify, never guess).
RecoverTResult recover_t(int64_t k, i128 n, i128 x, i128 y, i128 z);

// true iff n (xy + yz + zx) == k x y z, evaluated exactly. Arithmetic runs
// in checked 128-bit and promotes to arbitrary precision when an
// intermediate would overflow. Non-positive arguments yield false.
bool verify_identity(int64_t k, i128 n, i128 x, i128 y, i128 z);

// Lower threshold of the quadratic equivalence: 2 for k = 4, 11 for k = 5,
// and max(2, ceil(k/3)) as a configurable default beyond that (the exact
// value is open).
int64_t default_n1(int64_t k);

}  // namespace esforge
