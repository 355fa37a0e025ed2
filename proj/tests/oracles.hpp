#pragma once

// Test-only brute-force oracles. Nothing here calls into the library's
// search or DP code; predicates are restated from their definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Set = std::vector<std::int64_t>;

inline bool schreier_ell(const Set &a, std::int64_t ell)
{
    if (a.empty())
        return true;
    auto size = static_cast<std::int64_t>(a.size());
    return a.front() >= ell * size - ell + 1;
}

inline bool sparse(const Set &a, bool strict)
{
    for (std::size_t i = 2; i < a.size(); ++i) {
        auto g1 = a[i - 1] - a[i - 2];
        auto g2 = a[i] - a[i - 1];
        if (strict ? !(g2 > g1) : !(g2 >= g1))
            return false;
    }
    return true;
}

// Every subset of {1, ..., top} containing top, in lexicographic order.
inline std::vector<Set> subsets_with_top(std::int64_t top, const std::function<bool(const Set &)> &keep)
{
    std::vector<Set> out;
    const std::int64_t inner = top - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner); ++mask) {
        Set s;
        for (std::int64_t i = 0; i < inner; ++i)
            if (mask >> i & 1)
                s.push_back(i + 1);
        s.push_back(top);
        if (keep(s))
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Number of partitions of n into parts from [lo, hi] accepted by `ok`,
// counted by plain recursion on the largest part.
inline std::uint64_t partitions(std::int64_t n, std::int64_t lo, std::int64_t hi, bool distinct,
                                const std::function<bool(std::int64_t)> &ok)
{
    if (n == 0)
        return 1;
    std::uint64_t total = 0;
    for (std::int64_t largest = std::min(hi, n); largest >= lo; --largest)
        if (ok(largest))
            total += partitions(n - largest, lo, distinct ? largest - 1 : largest, distinct, ok);
    return total;
}

// All partitions of n as nondecreasing part lists (any part >= 1).
inline void all_partitions(std::int64_t n, std::int64_t lo, Set &cur, std::vector<Set> &out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (std::int64_t v = lo; v <= n; ++v) {
        cur.push_back(v);
        all_partitions(n - v, v, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Set> all_partitions(std::int64_t n)
{
    std::vector<Set> out;
    Set cur;
    all_partitions(n, 1, cur, out);
    return out;
}

// Pascal's triangle entry.
inline std::uint64_t pascal(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::vector<std::uint64_t> row{1};
    for (std::int64_t i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(row.size() + 1, 1);
        for (std::size_t j = 1; j < row.size(); ++j)
            next[j] = row[j - 1] + row[j];
        row = next;
    }
    return row[static_cast<std::size_t>(k)];
}

} // namespace oracle
