#pragma once

#include <string>

#include "esforge/int128.hpp"

namespace esforge {

enum class MethodTag {
    Mod4Zero,          // n = 4r,   x = r+1, t = r(r+1)/2
    Mod4Two,           // n = 4r+2, x = r+1, t = (2r+1)(r+1)
    Mod4Three,         // n = 4r+3, x = r+1, t = 2n(r+1)
    DivisorB,          // n = 1 mod 4 with divisor b = 3 mod 4, x = (n+b)/4
    ParametricSearch,  // scan over (x, t) for a perfect-square F
    Oracle,            // exhaustive enumeration fallback
};

constexpr int kMethodTagCount = 6;

const char* method_tag_name(MethodTag tag);

// Discriminated method tag. DivisorB carries its divisor, ParametricSearch
// the (x, t) pair that produced the hit.
struct ConstructionMethod {
    MethodTag tag;
    i128 b = 0;  // DivisorB only
    i128 x = 0;  // ParametricSearch only
    i128 t = 0;  // ParametricSearch only

    static ConstructionMethod mod4_zero() { return {MethodTag::Mod4Zero}; }
    static ConstructionMethod mod4_two() { return {MethodTag::Mod4Two}; }
    static ConstructionMethod mod4_three() { return {MethodTag::Mod4Three}; }
    static ConstructionMethod divisor_b(i128 b) { return {MethodTag::DivisorB, b}; }
    static ConstructionMethod parametric(i128 x, i128 t) {
        return {MethodTag::ParametricSearch, 0, x, t};
    }
    static ConstructionMethod oracle() { return {MethodTag::Oracle}; }

    const char* tag_name() const { return method_tag_name(tag); }

    // Human-readable form, e.g. "DivisorB(11)" or "ParametricSearch(x=2,t=4)".
    std::string label() const;
};

}  // namespace esforge
