#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "veronese/errors.hpp"

namespace veronese {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Exact binomial coefficient with overflow detection.
inline Int checked_binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r*(n-k+i)/i is exact: the running value is C(n-k+i, i)
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

/// x mod m normalized into [0, m).
inline Int pos_mod(Int x, Int m) {
    Int r = x % m;
    return r < 0 ? r + m : r;
}

inline Int vec_sum(const IntVec& v) {
    Int s = 0;
    for (Int x : v) s = checked_add(s, x);
    return s;
}

inline bool is_nonincreasing(const IntVec& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

inline bool is_nonnegative(const IntVec& v) {
    for (Int x : v)
        if (x < 0) return false;
    return true;
}

/// Pascal triangle rows 0..rows, columns 0..maxcol; result[a][b] = C(a,b)
/// for b <= min(a, maxcol). Capping the column keeps entries small even for
/// long rows.
inline std::vector<std::vector<Int>> pascal_table(Int rows, Int maxcol) {
    std::vector<std::vector<Int>> pas(static_cast<std::size_t>(rows) + 1);
    for (Int a = 0; a <= rows; ++a) {
        const Int width = std::min(a, maxcol);
        auto& row = pas[static_cast<std::size_t>(a)];
        row.assign(static_cast<std::size_t>(width) + 1, 1);
        for (Int b = 1; b <= width; ++b) {
            const auto& prev = pas[static_cast<std::size_t>(a - 1)];
            const Int up = (static_cast<std::size_t>(b) < prev.size())
                               ? prev[static_cast<std::size_t>(b)]
                               : 0;
            row[static_cast<std::size_t>(b)] =
                checked_add(prev[static_cast<std::size_t>(b - 1)], up);
        }
    }
    return pas;
}

/// Visit all length-n vectors of nonnegative integers summing to s,
/// in ascending lexicographic order.
inline void for_each_composition(Int s, Int n,
                                 const std::function<void(const IntVec&)>& fn) {
    if (s < 0) return;
    if (n <= 0) {
        if (s == 0) fn(IntVec{});
        return;
    }
    const std::size_t last = static_cast<std::size_t>(n) - 1;
    IntVec e(static_cast<std::size_t>(n), 0);
    e[last] = s;
    for (;;) {
        fn(e);
        std::size_t i = last;
        while (i > 0 && e[i] == 0) --i;
        if (i == 0) break;
        Int moved = e[i] - 1;
        e[i - 1] += 1;
        e[i] = 0;
        e[last] += moved;
    }
}

/// All partitions with exactly `nparts` parts (zeros allowed) and size
/// at most max_size, as nonincreasing vectors, in a fixed deterministic order.
inline std::vector<IntVec> partitions_up_to(Int max_size, Int nparts) {
    std::vector<IntVec> out;
    if (nparts < 0 || max_size < 0) return out;
    if (nparts == 0) {
        out.push_back(IntVec{});
        return out;
    }
    IntVec cur(static_cast<std::size_t>(nparts), 0);
    std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t pos, Int maxval, Int left) {
        if (pos == cur.size()) {
            out.push_back(cur);
            return;
        }
        Int hi = std::min<Int>(maxval, left);
        for (Int v = 0; v <= hi; ++v) {
            cur[pos] = v;
            rec(pos + 1, v, left - v);
        }
    };
    rec(0, max_size, max_size);
    return out;
}

} // namespace veronese
