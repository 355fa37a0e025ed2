#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schreier/setcore.hpp"

namespace schreier {

/// Partition of `target` into positive parts, stored nondecreasing.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError on a part < 1.
    explicit Partition(PartMultiset parts);
    Partition(std::initializer_list<Int> parts);

    const PartMultiset &parts() const { return parts_; }
    Int target() const { return target_; }
    std::size_t size() const { return parts_.size(); }

    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

private:
    PartMultiset parts_;
    Int target_ = 0;
};

/// Ordered tuple of positive parts.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<Int> parts);

    std::span<const Int> parts() const { return parts_; }
    Int target() const { return target_; }
    std::size_t size() const { return parts_.size(); }

    auto operator<=>(const Composition &) const = default;
    bool operator==(const Composition &) const = default;

private:
    std::vector<Int> parts_;
    Int target_ = 0;
};

std::string to_string(const Partition &p);
std::string to_string(const Composition &c);

// Restriction on the parts of a partition. `allowed` is consulted in addition
// to the lower bound; a null predicate allows every part >= min_part.
struct PartitionConstraint {
    Int min_part = 1;
    bool distinct = false;
    std::optional<Int> num_parts;
    std::optional<Int> top_gap; // largest minus second largest part (needs num_parts >= 2)
    std::function<bool(Int)> allowed;

    bool admits(Int part) const { return part >= min_part && (!allowed || allowed(part)); }
};

PartitionConstraint parts_at_least(Int ell);
PartitionConstraint distinct_parts_at_least(Int ell);
// no parts in {2, ..., ell}
PartitionConstraint avoid_two_through(Int ell);
// no parts in {2, ..., ell} and no even part above 2 ell
PartitionConstraint avoid_two_through_and_large_evens(Int ell);

/// DP count over (remaining sum, smallest admissible next part, parts left).
Count count_partitions(Int n, const PartitionConstraint &c);

/// Brute-force listing in lexicographic order of nondecreasing part lists.
std::vector<Partition> enum_partitions(Int n, const PartitionConstraint &c);

Count count_E(Int n, Int ell);
Count count_E_distinct(Int n, Int ell);
Count count_E_k(Int n, Int ell, Int k);
Count count_E_kq(Int n, Int ell, Int k, Int q);
Count count_E_distinct_k(Int n, Int ell, Int k);
Count count_E_distinct_kq(Int n, Int ell, Int k, Int q);
Count count_p(Int n);
Count count_p_k(Int n, Int k);
Count count_G(Int n, Int ell);
Count count_H(Int n, Int ell);

Count binomial(Int n, Int k);

/// Compositions of u into exactly s parts, each >= v (stars and bars).
Count count_c(Int u, Int v, Int s);
/// Compositions of u into any number of parts, each >= v.
Count count_c_total(Int u, Int v);

/// Lexicographic listing of compositions of u into s parts each >= v.
std::vector<Composition> enum_compositions(Int u, Int v, Int s);

struct SeriesFactor {
    enum class Kind {
        Geometric, // 1 / (1 - x^i)
        Binary,    // 1 + x^i
    };
    Kind kind;
    Int exponent;
};

struct SeriesTruncation {
    Int degree = 0;
    std::vector<Count> coefficients; // index 0..degree
};

/// Exact product of the factors truncated at degree N.
SeriesTruncation series_product(const std::vector<SeriesFactor> &factors, Int degree);

// Generating functions of the restricted partition counts, as factor lists
// truncated at `degree`.
std::vector<SeriesFactor> psi_factors(Int ell, Int degree);          // parts >= ell + 1
std::vector<SeriesFactor> psi_distinct_factors(Int ell, Int degree); // distinct parts >= ell + 1
// parts in {ell+1, ..., 2 ell} or odd parts >= 2 ell + 1
std::vector<SeriesFactor> theta_factors(Int ell, Int degree);
std::vector<SeriesFactor> g_factors(Int ell, Int degree);
std::vector<SeriesFactor> h_factors(Int ell, Int degree);

} // namespace schreier
