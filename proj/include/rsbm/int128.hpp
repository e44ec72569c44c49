#pragma once

#include <string>

#include "rsbm/errors.hpp"

namespace rsbm {

// 128-bit signed integers for the exact counting sequences. The sequences
// grow geometrically; 128 bits cover every k <= 20 for degrees up to 60.
// Checked multiply/add throw OverflowError past that boundary instead of
// wrapping.
using int128 = __int128;

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit integer overflow in multiply");
    return r;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit integer overflow in add");
    return r;
}

inline int128 checked_sub(int128 a, int128 b) {
    int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit integer overflow in subtract");
    return r;
}

inline std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string out;
    while (u > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) out.push_back('-');
    return std::string(out.rbegin(), out.rend());
}

} // namespace rsbm
