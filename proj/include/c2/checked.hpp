#pragma once

#include <cstdint>

#include "c2/errors.hpp"

namespace c2::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("add");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("sub");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("mul");
    return r;
}

inline std::int64_t pow2(std::int64_t k) {
    if (k < 0 || k > 62) throw ArithmeticOverflow("pow2");
    return std::int64_t{1} << k;
}

// Exact division; the caller asserts divisibility, a remainder is a bug upstream.
inline std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* where) {
    if (b == 0 || a % b != 0) throw NormalFormFailure(std::string("non-integral coefficient in ") + where);
    return a / b;
}

inline int popcount(std::int64_t k) { return __builtin_popcountll(static_cast<unsigned long long>(k)); }

}  // namespace c2::checked
