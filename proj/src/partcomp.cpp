#include "schreier/partcomp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schreier {

namespace {

// Partitions of `total` into parts from [lo, hi] that pass `c.admits`, with
// exactly `parts` parts when given. Table over (remaining sum, smallest
// admissible next part, parts still to place).
Count bounded_count(Int total, Int lo, Int hi, std::optional<Int> parts, const PartitionConstraint &c)
{
    if (total < 0)
        return 0;
    if (parts && *parts < 0)
        return 0;
    lo = std::max<Int>(lo, 1);
    hi = std::min(hi, total);
    if (total == 0)
        return (!parts || *parts == 0) ? 1 : 0;
    if (hi < lo)
        return 0;

    const std::size_t sums = static_cast<std::size_t>(total) + 1;
    const std::size_t mins = static_cast<std::size_t>(hi - lo) + 2; // lo..hi+1
    const std::size_t counts = parts ? static_cast<std::size_t>(*parts) + 1 : 1;
    std::vector<Count> table(sums * mins * counts, 0);
    auto at = [&](Int r, Int v, std::size_t j) -> Count & {
        return table[(static_cast<std::size_t>(r) * mins + static_cast<std::size_t>(v - lo)) * counts + j];
    };

    // nothing left to place once the smallest next part exceeds hi
    for (std::size_t j = 0; j < counts; ++j)
        at(0, hi + 1, j) = (!parts || j == 0) ? 1 : 0;

    for (Int v = hi; v >= lo; --v) {
        const bool ok = c.admits(v);
        const Int next = c.distinct ? v + 1 : v;
        for (Int r = 0; r <= total; ++r) {
            for (std::size_t j = 0; j < counts; ++j) {
                Count ways = at(r, v + 1, j);
                if (ok && v <= r && (!parts || j >= 1)) {
                    std::size_t jj = parts ? j - 1 : 0;
                    if (r == v)
                        ways = checked_add(ways, Count{(!parts || jj == 0) ? 1u : 0u});
                    else if (next <= hi)
                        ways = checked_add(ways, at(r - v, next, jj));
                }
                at(r, v, j) = ways;
            }
        }
    }
    return at(total, lo, counts - 1);
}

void list_partitions(Int remaining, Int lo, const PartitionConstraint &c, std::vector<Int> &cur,
                     std::vector<Partition> &out)
{
    if (remaining == 0) {
        if (c.num_parts && static_cast<Int>(cur.size()) != *c.num_parts)
            return;
        if (c.top_gap) {
            if (cur.size() < 2)
                return;
            if (cur[cur.size() - 1] - cur[cur.size() - 2] != *c.top_gap)
                return;
        }
        out.emplace_back(PartMultiset(cur));
        return;
    }
    if (c.num_parts && static_cast<Int>(cur.size()) >= *c.num_parts)
        return;
    for (Int v = lo; v <= remaining; ++v) {
        if (!c.admits(v))
            continue;
        cur.push_back(v);
        list_partitions(remaining - v, c.distinct ? v + 1 : v, c, cur, out);
        cur.pop_back();
    }
}

void list_compositions(Int remaining, Int v, Int slots, std::vector<Int> &cur, std::vector<Composition> &out)
{
    if (slots == 0) {
        if (remaining == 0)
            out.emplace_back(cur);
        return;
    }
    for (Int first = v; first <= remaining - v * (slots - 1); ++first) {
        cur.push_back(first);
        list_compositions(remaining - first, v, slots - 1, cur, out);
        cur.pop_back();
    }
}

std::string join(std::span<const Int> xs, char open, char close)
{
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    os << close;
    return os.str();
}

} // namespace

Partition::Partition(PartMultiset parts) : parts_(std::move(parts))
{
    if (!parts_.empty() && parts_[0] < 1)
        throw DomainError("partition parts must be positive: " + to_string(parts_));
    target_ = parts_.sum();
}

Partition::Partition(std::initializer_list<Int> parts) : Partition(PartMultiset(parts)) {}

Composition::Composition(std::vector<Int> parts) : parts_(std::move(parts))
{
    for (Int p : parts_) {
        if (p < 1)
            throw DomainError("composition parts must be positive");
        target_ = checked_add(target_, p);
    }
}

std::string to_string(const Partition &p) { return to_string(p.parts()); }

std::string to_string(const Composition &c) { return join(c.parts(), '(', ')'); }

PartitionConstraint parts_at_least(Int ell) { return PartitionConstraint{std::max<Int>(ell, 1), false, {}, {}, {}}; }

PartitionConstraint distinct_parts_at_least(Int ell)
{
    return PartitionConstraint{std::max<Int>(ell, 1), true, {}, {}, {}};
}

PartitionConstraint avoid_two_through(Int ell)
{
    PartitionConstraint c;
    c.allowed = [ell](Int v) { return v == 1 || v > ell; };
    return c;
}

PartitionConstraint avoid_two_through_and_large_evens(Int ell)
{
    PartitionConstraint c;
    c.allowed = [ell](Int v) { return (v == 1 || v > ell) && (v % 2 == 1 || v <= 2 * ell); };
    return c;
}

Count count_partitions(Int n, const PartitionConstraint &c)
{
    if (n < 0)
        return 0;
    if (!c.top_gap)
        return bounded_count(n, c.min_part, n, c.num_parts, c);

    if (!c.num_parts || *c.num_parts < 2)
        throw ParamError("top_gap needs at least two parts");
    const Int gap = *c.top_gap;
    if (gap < 0 || (c.distinct && gap == 0))
        return 0;
    // fix the second largest part s and the largest s + gap
    Count total = 0;
    for (Int s = std::max<Int>(c.min_part, 1); 2 * s + gap <= n; ++s) {
        if (!c.admits(s) || !c.admits(s + gap))
            continue;
        Int hi = c.distinct ? s - 1 : s;
        total = checked_add(total, bounded_count(n - 2 * s - gap, c.min_part, hi, *c.num_parts - 2, c));
    }
    return total;
}

std::vector<Partition> enum_partitions(Int n, const PartitionConstraint &c)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<Int> cur;
    list_partitions(n, std::max<Int>(c.min_part, 1), c, cur, out);
    return out;
}

Count count_E(Int n, Int ell) { return count_partitions(n, parts_at_least(ell)); }

Count count_E_distinct(Int n, Int ell) { return count_partitions(n, distinct_parts_at_least(ell)); }

Count count_E_k(Int n, Int ell, Int k)
{
    auto c = parts_at_least(ell);
    c.num_parts = k;
    return count_partitions(n, c);
}

Count count_E_kq(Int n, Int ell, Int k, Int q)
{
    auto c = parts_at_least(ell);
    c.num_parts = k;
    c.top_gap = q;
    return count_partitions(n, c);
}

Count count_E_distinct_k(Int n, Int ell, Int k)
{
    auto c = distinct_parts_at_least(ell);
    c.num_parts = k;
    return count_partitions(n, c);
}

Count count_E_distinct_kq(Int n, Int ell, Int k, Int q)
{
    auto c = distinct_parts_at_least(ell);
    c.num_parts = k;
    c.top_gap = q;
    return count_partitions(n, c);
}

Count count_p(Int n) { return count_E(n, 1); }

Count count_p_k(Int n, Int k) { return count_E_k(n, 1, k); }

Count count_G(Int n, Int ell) { return count_partitions(n, avoid_two_through(ell)); }

Count count_H(Int n, Int ell) { return count_partitions(n, avoid_two_through_and_large_evens(ell)); }

Count binomial(Int n, Int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Count r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r becomes binom(n - k + i, i) = r * (n - k + i) / i; after removing
        // gcd(r, i) the remaining divisor goes into (n - k + i) exactly
        auto top = static_cast<Count>(n - k + i);
        auto den = static_cast<Count>(i);
        Count g = std::gcd(r, den);
        r /= g;
        den /= g;
        r = checked_mul(r, top / den);
    }
    return r;
}

Count count_c(Int u, Int v, Int s)
{
    if (u < 1 || v < 1 || s < 1)
        throw ParamError("count_c needs u, v, s >= 1");
    Int floor_total = checked_mul(v, s);
    if (u < floor_total)
        return 0;
    return binomial(u - floor_total + s - 1, s - 1);
}

Count count_c_total(Int u, Int v)
{
    if (u < 1 || v < 1)
        throw ParamError("count_c_total needs u, v >= 1");
    Count total = 0;
    for (Int s = 1; s * v <= u; ++s)
        total = checked_add(total, count_c(u, v, s));
    return total;
}

std::vector<Composition> enum_compositions(Int u, Int v, Int s)
{
    if (u < 1 || v < 1 || s < 1)
        throw ParamError("enum_compositions needs u, v, s >= 1");
    std::vector<Composition> out;
    std::vector<Int> cur;
    list_compositions(u, v, s, cur, out);
    return out;
}

SeriesTruncation series_product(const std::vector<SeriesFactor> &factors, Int degree)
{
    if (degree < 0)
        throw ParamError("series_product: degree must be >= 0");
    const auto len = static_cast<std::size_t>(degree) + 1;
    std::vector<Count> coef(len, 0);
    coef[0] = 1;
    std::vector<Count> next(len);
    for (const auto &f : factors) {
        if (f.exponent < 1)
            throw ParamError("series_product: factor exponent must be >= 1");
        if (f.exponent > degree)
            continue;
        const auto step = static_cast<std::size_t>(f.exponent);
        for (std::size_t d = 0; d < len; ++d) {
            Count acc = coef[d];
            if (f.kind == SeriesFactor::Kind::Binary) {
                if (d >= step)
                    acc = checked_add(acc, coef[d - step]);
            } else {
                for (std::size_t t = step; t <= d; t += step)
                    acc = checked_add(acc, coef[d - t]);
            }
            next[d] = acc;
        }
        coef.swap(next);
    }
    return SeriesTruncation{degree, std::move(coef)};
}

namespace {

std::vector<SeriesFactor> geometric_where(Int from, Int degree, const std::function<bool(Int)> &keep)
{
    std::vector<SeriesFactor> out;
    for (Int i = std::max<Int>(from, 1); i <= degree; ++i)
        if (keep(i))
            out.push_back({SeriesFactor::Kind::Geometric, i});
    return out;
}

} // namespace

std::vector<SeriesFactor> psi_factors(Int ell, Int degree)
{
    return geometric_where(ell + 1, degree, [](Int) { return true; });
}

std::vector<SeriesFactor> psi_distinct_factors(Int ell, Int degree)
{
    std::vector<SeriesFactor> out;
    for (Int i = std::max<Int>(ell + 1, 1); i <= degree; ++i)
        out.push_back({SeriesFactor::Kind::Binary, i});
    return out;
}

std::vector<SeriesFactor> theta_factors(Int ell, Int degree)
{
    std::vector<SeriesFactor> out;
    for (Int i = 1; i <= ell; ++i)
        if (ell + i <= degree)
            out.push_back({SeriesFactor::Kind::Geometric, ell + i});
    for (Int j = ell; 2 * j + 1 <= degree; ++j)
        out.push_back({SeriesFactor::Kind::Geometric, 2 * j + 1});
    return out;
}

std::vector<SeriesFactor> g_factors(Int ell, Int degree)
{
    return geometric_where(1, degree, [ell](Int i) { return i == 1 || i > ell; });
}

std::vector<SeriesFactor> h_factors(Int ell, Int degree)
{
    return geometric_where(1, degree, [ell](Int i) { return (i == 1 || i > ell) && (i % 2 == 1 || i <= 2 * ell); });
}

} // namespace schreier
