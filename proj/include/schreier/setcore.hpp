#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "schreier/checked.hpp"

namespace schreier {

/// Finite set of positive integers, stored as a strictly increasing list.
class FiniteSet {
public:
    FiniteSet() = default;
    /// Throws DomainError unless `elements` is strictly increasing and positive.
    explicit FiniteSet(std::vector<Int> elements);
    FiniteSet(std::initializer_list<Int> elements);

    std::span<const Int> elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    Int min() const;
    Int max() const;
    bool contains(Int x) const;
    Int operator[](std::size_t i) const { return elems_[i]; }

    auto operator<=>(const FiniteSet &) const = default;
    bool operator==(const FiniteSet &) const = default;

private:
    std::vector<Int> elems_;
};

/// Multiset of nonnegative integers, kept sorted nondecreasing.
class PartMultiset {
public:
    PartMultiset() = default;
    /// Sorts the input. Throws NegativePartError on a negative entry.
    explicit PartMultiset(std::vector<Int> parts);
    PartMultiset(std::initializer_list<Int> parts);

    std::span<const Int> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    Int sum() const;
    Int operator[](std::size_t i) const { return parts_[i]; }

    auto operator<=>(const PartMultiset &) const = default;
    bool operator==(const PartMultiset &) const = default;

private:
    std::vector<Int> parts_;
};

bool is_schreier(const FiniteSet &a);
bool is_ell_strong_schreier(const FiniteSet &a, Int ell);
bool is_sparse(const FiniteSet &a);
bool is_strongly_sparse(const FiniteSet &a);

// Sorted consecutive differences; throws SizeError on fewer than two entries.
PartMultiset diff_multiset(const FiniteSet &a);
PartMultiset diff_multiset(const PartMultiset &m);

PartMultiset shift_multiset(const PartMultiset &m, Int c);

std::string to_string(const FiniteSet &a);
std::string to_string(const PartMultiset &m);
std::ostream &operator<<(std::ostream &os, const FiniteSet &a);
std::ostream &operator<<(std::ostream &os, const PartMultiset &m);

} // namespace schreier
