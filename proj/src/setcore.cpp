#include "schreier/setcore.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace schreier {

namespace {

template <typename Range>
std::string braced(const Range &r)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Int x : r) {
        if (!first)
            os << ',';
        os << x;
        first = false;
    }
    os << '}';
    return os.str();
}

PartMultiset consecutive_differences(std::span<const Int> xs)
{
    if (xs.size() < 2)
        throw SizeError("difference multiset needs at least two entries");
    std::vector<Int> d;
    d.reserve(xs.size() - 1);
    for (std::size_t i = 1; i < xs.size(); ++i)
        d.push_back(checked_sub(xs[i], xs[i - 1]));
    return PartMultiset(std::move(d));
}

// Sizes up to 2 are sparse by convention; otherwise compare successive gaps.
bool gaps_grow(const FiniteSet &a, bool strict)
{
    auto e = a.elements();
    for (std::size_t i = 2; i < e.size(); ++i) {
        Int cur = e[i] - e[i - 1];
        Int prev = e[i - 1] - e[i - 2];
        if (strict ? cur <= prev : cur < prev)
            return false;
    }
    return true;
}

} // namespace

FiniteSet::FiniteSet(std::vector<Int> elements) : elems_(std::move(elements))
{
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1)
            throw DomainError("set elements must be positive: " + braced(elems_));
        if (i > 0 && elems_[i] <= elems_[i - 1])
            throw DomainError("set elements must be strictly increasing: " + braced(elems_));
    }
}

FiniteSet::FiniteSet(std::initializer_list<Int> elements)
    : FiniteSet(std::vector<Int>(elements))
{
}

Int FiniteSet::min() const
{
    if (elems_.empty())
        throw SizeError("min of empty set");
    return elems_.front();
}

Int FiniteSet::max() const
{
    if (elems_.empty())
        throw SizeError("max of empty set");
    return elems_.back();
}

bool FiniteSet::contains(Int x) const
{
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

PartMultiset::PartMultiset(std::vector<Int> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end());
    if (!parts_.empty() && parts_.front() < 0)
        throw NegativePartError("negative entry in multiset " + braced(parts_));
}

PartMultiset::PartMultiset(std::initializer_list<Int> parts)
    : PartMultiset(std::vector<Int>(parts))
{
}

Int PartMultiset::sum() const
{
    Int s = 0;
    for (Int p : parts_)
        s = checked_add(s, p);
    return s;
}

bool is_schreier(const FiniteSet &a)
{
    return a.empty() || a.min() >= static_cast<Int>(a.size());
}

bool is_ell_strong_schreier(const FiniteSet &a, Int ell)
{
    if (a.empty())
        return true;
    Int size = static_cast<Int>(a.size());
    // min A >= ell*|A| - ell + 1
    Int bound = checked_add(checked_mul(ell, checked_sub(size, 1)), Int{1});
    return a.min() >= bound;
}

bool is_sparse(const FiniteSet &a) { return gaps_grow(a, false); }

bool is_strongly_sparse(const FiniteSet &a) { return gaps_grow(a, true); }

PartMultiset diff_multiset(const FiniteSet &a) { return consecutive_differences(a.elements()); }

PartMultiset diff_multiset(const PartMultiset &m) { return consecutive_differences(m.parts()); }

PartMultiset shift_multiset(const PartMultiset &m, Int c)
{
    std::vector<Int> out;
    out.reserve(m.size());
    for (Int p : m.parts()) {
        Int s = checked_add(p, c);
        if (s < 0)
            throw NegativePartError("shift by " + std::to_string(c) + " makes an entry negative");
        out.push_back(s);
    }
    return PartMultiset(std::move(out));
}

std::string to_string(const FiniteSet &a) { return braced(a.elements()); }

std::string to_string(const PartMultiset &m) { return braced(m.parts()); }

std::ostream &operator<<(std::ostream &os, const FiniteSet &a) { return os << to_string(a); }

std::ostream &operator<<(std::ostream &os, const PartMultiset &m) { return os << to_string(m); }

} // namespace schreier
