#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schreier/setcore.hpp"

namespace schreier {

// Indexed set families. Parameter usage per family:
//   A, A_strong, B, F_script, F_script_strong   n, ell
//   B_sized                                     n, ell, m (set size)
//   F_prop1                                     n, m (required minimum)
//   F_script_k, F_script_strong_k               n, ell, k (set size)
//   F_script_kq, F_script_strong_kq             n, ell, k (set size), q (required minimum)
enum class Family {
    A,
    A_strong,
    B,
    B_sized,
    F_prop1,
    F_script,
    F_script_k,
    F_script_kq,
    F_script_strong,
    F_script_strong_k,
    F_script_strong_kq,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family> &all_families();

struct FamilyQuery {
    Family family = Family::A;
    Int n = 1;
    std::optional<Int> ell;
    std::optional<Int> k;
    std::optional<Int> q;
    std::optional<Int> m;

    /// Throws ParamError if a required parameter is missing, an unused one is
    /// present, or a value is out of range.
    void validate() const;

    static FamilyQuery a(Int n, Int ell) { return {Family::A, n, ell, {}, {}, {}}; }
    static FamilyQuery a_strong(Int n, Int ell) { return {Family::A_strong, n, ell, {}, {}, {}}; }
    static FamilyQuery b(Int n, Int ell) { return {Family::B, n, ell, {}, {}, {}}; }
    static FamilyQuery b_sized(Int n, Int ell, Int m) { return {Family::B_sized, n, ell, {}, {}, m}; }
    static FamilyQuery f_prop1(Int n, Int min) { return {Family::F_prop1, n, {}, {}, {}, min}; }
    static FamilyQuery f_script(Int n, Int ell) { return {Family::F_script, n, ell, {}, {}, {}}; }
    static FamilyQuery f_script_k(Int n, Int ell, Int k) { return {Family::F_script_k, n, ell, k, {}, {}}; }
    static FamilyQuery f_script_kq(Int n, Int ell, Int k, Int q)
    {
        return {Family::F_script_kq, n, ell, k, q, {}};
    }
    static FamilyQuery f_script_strong(Int n, Int ell) { return {Family::F_script_strong, n, ell, {}, {}, {}}; }
    static FamilyQuery f_script_strong_k(Int n, Int ell, Int k)
    {
        return {Family::F_script_strong_k, n, ell, k, {}, {}};
    }
    static FamilyQuery f_script_strong_kq(Int n, Int ell, Int k, Int q)
    {
        return {Family::F_script_strong_kq, n, ell, k, q, {}};
    }
};

std::string describe(const FamilyQuery &q);

/// Members of the family, each once, in lexicographic order of element lists.
std::vector<FiniteSet> enum_family(const FamilyQuery &q);

/// Number of members, counted by the same pruned search without storing sets.
Count count_family(const FamilyQuery &q);

/// Sets {a_1 < ... < a_p, n+1} with p >= 2 that are ell-strong Schreier and
/// sparse (strongly sparse when `strong`). No condition on the last two gaps.
std::vector<FiniteSet> enum_script_candidates(Int n, Int ell, bool strong = false);

struct CountTable {
    std::vector<Int> ns;
    std::vector<Int> ells;
    // values[row][col] is the count at (ells[row], ns[col])
    std::vector<std::vector<Count>> values;
};

struct IntRange {
    Int lo = 0;
    Int hi = -1;

    bool empty() const { return hi < lo; }
    std::vector<Int> values() const;
};

using CellCounter = std::function<Count(Int n, Int ell)>;

/// Generic table sweep: row per ell, column per n.
CountTable count_table(const CellCounter &cell, IntRange n_range, IntRange ell_range);

/// Table of count_family for an (n, ell) family (A, A_strong, B, F_script, F_script_strong).
CountTable count_table(Family family, IntRange n_range, IntRange ell_range);

} // namespace schreier
