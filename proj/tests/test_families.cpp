#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "schreier/families.hpp"

using namespace schreier;

namespace {

std::vector<oracle::Set> raw(const std::vector<FiniteSet> &sets)
{
    std::vector<oracle::Set> out;
    for (auto &s : sets)
        out.emplace_back(s.elements().begin(), s.elements().end());
    return out;
}

// condition on the last two elements below the top of a script-family set
bool script_tail(const oracle::Set &s, std::int64_t apex)
{
    auto p = s.size() - 1; // index of top
    return apex + s[p - 2] == 2 * s[p - 1];
}

} // namespace

TEST_CASE("enum_family examples")
{
    CHECK(enum_family(FamilyQuery::f_script(4, 1)) == std::vector<FiniteSet>{{3, 4, 5}});
    CHECK(enum_family(FamilyQuery::a(1, 3)) == std::vector<FiniteSet>{{1}});
    // lexicographic order of element lists puts {3,4,6} before {3,6}
    CHECK(enum_family(FamilyQuery::f_prop1(6, 3)) == std::vector<FiniteSet>{{3, 4, 6}, {3, 6}});
    CHECK(enum_family(FamilyQuery::b_sized(5, 1, 2)) == std::vector<FiniteSet>{{2, 5}, {3, 5}, {4, 5}});
}

TEST_CASE("ell-strong first member of F_script is {2l+1, 2l+2, 2l+3}")
{
    for (Int ell = 0; ell <= 6; ++ell) {
        CHECK(enum_family(FamilyQuery::f_script(2 * ell + 2, ell)) ==
              std::vector<FiniteSet>{{2 * ell + 1, 2 * ell + 2, 2 * ell + 3}});
        for (Int n = 1; n <= 2 * ell + 1; ++n)
            CHECK(count_family(FamilyQuery::f_script(n, ell)) == 0);
    }
}

TEST_CASE("count_family examples")
{
    CHECK(count_family(FamilyQuery::a(16, 0)) == 684);
    CHECK(count_family(FamilyQuery::a_strong(17, 1)) == 93);
    CHECK(count_family(FamilyQuery::a(10, 2)) == 15);
}

TEST_CASE("enumerators agree with bitmask oracle")
{
    for (Int n = 1; n <= 14; ++n) {
        CAPTURE(n);
        for (Int ell = 0; ell <= 3; ++ell) {
            CAPTURE(ell);
            auto keep_a = [&](const oracle::Set &s) { return oracle::sparse(s, false) && oracle::schreier_ell(s, ell); };
            auto keep_as = [&](const oracle::Set &s) { return oracle::sparse(s, true) && oracle::schreier_ell(s, ell); };
            auto keep_b = [&](const oracle::Set &s) { return oracle::schreier_ell(s, ell); };
            CHECK(raw(enum_family(FamilyQuery::a(n, ell))) == oracle::subsets_with_top(n, keep_a));
            CHECK(raw(enum_family(FamilyQuery::a_strong(n, ell))) == oracle::subsets_with_top(n, keep_as));
            CHECK(raw(enum_family(FamilyQuery::b(n, ell))) == oracle::subsets_with_top(n, keep_b));
            for (Int m = 1; m <= n + 1; ++m)
                CHECK(raw(enum_family(FamilyQuery::b_sized(n, ell, m))) ==
                      oracle::subsets_with_top(n, [&](const oracle::Set &s) {
                          return keep_b(s) && static_cast<Int>(s.size()) == m;
                      }));

            auto script = [&](const oracle::Set &s, bool strong) {
                return s.size() >= 3 && oracle::sparse(s, strong) && oracle::schreier_ell(s, ell) &&
                       script_tail(s, strong ? n : n + 1);
            };
            auto script_all = oracle::subsets_with_top(n + 1, [&](const oracle::Set &s) { return script(s, false); });
            auto strong_all = oracle::subsets_with_top(n + 1, [&](const oracle::Set &s) { return script(s, true); });
            CHECK(raw(enum_family(FamilyQuery::f_script(n, ell))) == script_all);
            CHECK(raw(enum_family(FamilyQuery::f_script_strong(n, ell))) == strong_all);
            auto refine = [](const std::vector<oracle::Set> &all, Int k, std::optional<Int> q) {
                std::vector<oracle::Set> out;
                for (auto &s : all)
                    if (static_cast<Int>(s.size()) == k && (!q || s.front() == *q))
                        out.push_back(s);
                return out;
            };
            for (Int k = 3; k <= 6; ++k) {
                CHECK(raw(enum_family(FamilyQuery::f_script_k(n, ell, k))) == refine(script_all, k, {}));
                CHECK(raw(enum_family(FamilyQuery::f_script_strong_k(n, ell, k))) == refine(strong_all, k, {}));
                for (Int q = 1; q <= n; ++q) {
                    CHECK(raw(enum_family(FamilyQuery::f_script_kq(n, ell, k, q))) == refine(script_all, k, q));
                    CHECK(raw(enum_family(FamilyQuery::f_script_strong_kq(n, ell, k, q))) ==
                          refine(strong_all, k, q));
                }
            }
        }
        for (Int min = 1; min <= n + 1; ++min)
            CHECK(raw(enum_family(FamilyQuery::f_prop1(n, min))) ==
                  oracle::subsets_with_top(n, [&](const oracle::Set &s) {
                      return s.front() == min && oracle::sparse(s, false) && oracle::schreier_ell(s, 1);
                  }));
    }
}

TEST_CASE("count_family equals enumeration length and output is lexicographic")
{
    for (Family f : all_families())
        for (Int n = 1; n <= 12; ++n) {
            FamilyQuery q{f, n, {}, {}, {}, {}};
            if (f != Family::F_prop1)
                q.ell = 1;
            if (f == Family::F_script_k || f == Family::F_script_kq || f == Family::F_script_strong_k ||
                f == Family::F_script_strong_kq)
                q.k = 3;
            if (f == Family::F_script_kq || f == Family::F_script_strong_kq)
                q.q = 3;
            if (f == Family::B_sized)
                q.m = 3;
            if (f == Family::F_prop1)
                q.m = 2;
            auto sets = enum_family(q);
            CAPTURE(describe(q));
            CHECK(count_family(q) == sets.size());
            CHECK(std::is_sorted(sets.begin(), sets.end()));
            CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
        }
}

TEST_CASE("family invariants")
{
    for (Int n = 1; n <= 18; ++n)
        for (Int ell = 0; ell <= 4; ++ell) {
            CAPTURE(n);
            CAPTURE(ell);
            auto big = enum_family(FamilyQuery::a(n, ell));
            auto small = enum_family(FamilyQuery::a(n, ell + 1));
            CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
            for (auto &s : big) {
                CHECK(s.max() == n);
                CHECK(is_sparse(s));
                CHECK(is_ell_strong_schreier(s, ell));
            }
            if (n <= ell + 1)
                CHECK(count_family(FamilyQuery::a(n, ell)) == 1);

            Count by_size = 0;
            for (Int m = 1; m <= n; ++m)
                by_size += count_family(FamilyQuery::b_sized(n, ell, m));
            CHECK(by_size == count_family(FamilyQuery::b(n, ell)));
            for (auto &s : enum_family(FamilyQuery::f_script(n, ell)))
                CHECK(s.max() == n + 1);
        }
}

TEST_CASE("Schreier sets containing n are counted by Fibonacci numbers")
{
    Count a = 1, b = 1;
    for (Int n = 1; n <= 25; ++n) {
        CHECK(count_family(FamilyQuery::b(n, 1)) == a);
        Count c = a + b;
        a = b;
        b = c;
    }
    CHECK(count_family(FamilyQuery::b(10, 1)) == 55);
}

TEST_CASE("F_prop1 outside the stated range")
{
    // min n forces F = {n}; min above n admits nothing
    CHECK(enum_family(FamilyQuery::f_prop1(5, 5)) == std::vector<FiniteSet>{{5}});
    CHECK(count_family(FamilyQuery::f_prop1(5, 6)) == 0);
    CHECK(count_family(FamilyQuery::f_prop1(1, 1)) == 1);
}

TEST_CASE("malformed queries")
{
    CHECK_THROWS_AS(count_family({Family::A, 0, 1, {}, {}, {}}), ParamError);
    CHECK_THROWS_AS(count_family({Family::A, 3, {}, {}, {}, {}}), ParamError);
    CHECK_THROWS_AS(count_family({Family::A, 3, -1, {}, {}, {}}), ParamError);
    CHECK_THROWS_AS(count_family({Family::A, 3, 1, 2, {}, {}}), ParamError);
    CHECK_THROWS_AS(count_family({Family::B_sized, 3, 1, {}, {}, {}}), ParamError);
    CHECK_THROWS_AS(count_family({Family::F_prop1, 3, 1, {}, {}, 2}), ParamError);
    CHECK_THROWS_AS(count_family({Family::F_script_kq, 3, 1, 3, 0, {}}), ParamError);
    CHECK_THROWS_AS(enum_script_candidates(0, 1), ParamError);
}

TEST_CASE("family names round trip")
{
    for (Family f : all_families())
        CHECK(parse_family(family_name(f)) == f);
    CHECK_FALSE(parse_family("Z").has_value());
}

TEST_CASE("count_table")
{
    auto t = count_table(Family::A, {1, 16}, {0, 3});
    REQUIRE(t.values.size() == 4);
    CHECK(t.values[0].back() == 684);
    CHECK(t.values[2][9] == 15);
    CHECK(t.values[3] == std::vector<Count>{1, 1, 1, 1, 2, 3, 4, 5, 7, 9, 12, 15, 20, 25, 32, 40});

    auto t2 = count_table(Family::A_strong, {1, 17}, {0, 3});
    CHECK(t2.values[1].back() == 93);
    CHECK(t2.values[0] == std::vector<Count>{1, 2, 3, 5, 7, 10, 14, 19, 25, 33, 43, 55, 70, 88, 110, 137, 169});

    auto one = count_table(Family::A, {1, 1}, {5, 5});
    CHECK(one.values == std::vector<std::vector<Count>>{{1}});

    CHECK_THROWS_AS(count_table(Family::A, {3, 2}, {0, 1}), ParamError);
    CHECK_THROWS_AS(count_table(Family::B_sized, {1, 2}, {0, 1}), ParamError);
}
