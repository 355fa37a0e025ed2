#pragma once

#include <string>
#include <utility>
#include <vector>

#include "schreier/families.hpp"
#include "schreier/partcomp.hpp"

namespace schreier {

// Sets of {1..n} with max n, min m + 1, Schreier and sparse, onto partitions
// of n - 1 into exactly m parts. Requires n >= m + 1 and m >= 1.
Partition prop1_forward(const FiniteSet &f, Int n, Int m);
FiniteSet prop1_inverse(const Partition &p, Int n, Int m);

// Members of F_script(n, ell) with k + 1 elements and minimum ell k + q onto
// partitions of n into k parts >= ell + 1 whose two largest parts differ by
// q - 1. Requires k >= 2, q >= 1, n >= ell + 1.
Partition lemma6_forward(const FiniteSet &f, Int n, Int ell, Int k, Int q);
FiniteSet lemma6_inverse(const Partition &p, Int n, Int ell, Int k, Int q);

// Strongly sparse counterpart: members of F_script_strong(n, ell) with k + 1
// elements and minimum ell k + q onto partitions of n into k distinct parts
// >= ell + 1 whose two largest parts differ by q.
Partition lemma6s_forward(const FiniteSet &f, Int n, Int ell, Int k, Int q);
FiniteSet lemma6s_inverse(const Partition &p, Int n, Int ell, Int k, Int q);

// Lower bound on the parts of the codomain of the strongly sparse map.
// Established by the STRONG_COUNTERPART sweep.
inline constexpr Int kStrongCodomainShift = 1;

/// Replace n by n + 1. Throws DomainError unless n = max A.
FiniteSet thm2_shift(const FiniteSet &a, Int n);

/// For A = {a_1 < ... < a_p, n+1} with p >= 2 and A sparse and ell-strong
/// Schreier: whether n + 1 + a_{p-1} == 2 a_p.
bool claim9_check(const FiniteSet &a, Int n, Int ell = 0);

/// The unsimplified form: if a_p < n then {a_1, ..., a_p, n} is not sparse.
bool literal_condition_iii(const FiniteSet &a, Int n);

// Partition family the bijection maps onto.
struct PartitionQuery {
    Int n = 0;
    Int min_part = 1;
    bool distinct = false;
    Int num_parts = 1;
    std::optional<Int> top_gap;

    PartitionConstraint constraint() const;
    std::string describe() const;
};

struct BijectionWitness {
    FamilyQuery domain_query;
    PartitionQuery codomain_query;
    std::vector<std::pair<FiniteSet, Partition>> pairs;
};

struct BijectionCheck {
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    bool well_defined = true; // every image lies in the codomain
    bool injective = true;
    bool surjective = true;
    bool roundtrip = true; // inverse . forward and forward . inverse are identities
    std::string first_problem;

    bool ok() const { return well_defined && injective && surjective && roundtrip; }
};

BijectionWitness prop1_witness(Int n, Int m);
BijectionWitness lemma6_witness(Int n, Int ell, Int k, Int q);
BijectionWitness lemma6s_witness(Int n, Int ell, Int k, Int q);

/// Extensional check of a witness against the enumerated codomain, using the
/// matching inverse map.
BijectionCheck check_prop1(Int n, Int m);
BijectionCheck check_lemma6(Int n, Int ell, Int k, Int q);
BijectionCheck check_lemma6s(Int n, Int ell, Int k, Int q);

} // namespace schreier
