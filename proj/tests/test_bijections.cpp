#include <doctest.h>

#include <set>

#include "schreier/bijections.hpp"

using namespace schreier;

TEST_CASE("prop1 forward and inverse")
{
    CHECK(prop1_forward({3, 6}, 6, 2) == Partition{1, 4});
    CHECK(prop1_forward({3, 4, 6}, 6, 2) == Partition{2, 3});
    CHECK(prop1_inverse(Partition{1, 4}, 6, 2) == FiniteSet{3, 6});
    CHECK(prop1_inverse(Partition{2, 3}, 6, 2) == FiniteSet{3, 4, 6});

    // all ones: n - 1 = m
    for (Int m = 1; m <= 6; ++m) {
        Partition ones(PartMultiset(std::vector<Int>(static_cast<std::size_t>(m), 1)));
        CHECK(prop1_inverse(ones, m + 1, m) == FiniteSet{m + 1});
        CHECK(prop1_forward({m + 1}, m + 1, m) == ones);
    }
    // each padded copy of m + 1 contributes a part equal to 1
    Partition img = prop1_forward({4, 9}, 9, 3);
    CHECK(img == Partition{1, 1, 6});
}

TEST_CASE("prop1 rejects inputs outside its domain")
{
    CHECK_THROWS_AS(prop1_forward({3, 5, 6}, 6, 2), DomainError); // not sparse
    CHECK_THROWS_AS(prop1_forward({2, 6}, 6, 2), DomainError);    // wrong minimum
    CHECK_THROWS_AS(prop1_forward({3, 5}, 6, 2), DomainError);    // missing n
    CHECK_THROWS_AS(prop1_forward({3, 4, 5, 6}, 6, 2), DomainError);
    CHECK_THROWS_AS(prop1_inverse(Partition{1, 3}, 6, 2), DomainError);
    CHECK_THROWS_AS(prop1_inverse(Partition{5}, 6, 2), DomainError);
}

TEST_CASE("prop1 is a bijection for n <= 20")
{
    for (Int n = 2; n <= 20; ++n)
        for (Int m = 1; m <= n - 1; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            auto c = check_prop1(n, m);
            CHECK(c.ok());
            CHECK(c.domain_size == c.codomain_size);
            CHECK(c.domain_size == count_p_k(n - 1, m));
            for (auto &[f, p] : prop1_witness(n, m).pairs)
                CHECK(p.target() == n - 1);
        }
}

TEST_CASE("lemma6 forward and inverse")
{
    CHECK(lemma6_forward({3, 4, 5}, 4, 1, 2, 1) == Partition{2, 2});
    CHECK(lemma6_inverse(Partition{2, 2}, 4, 1, 2, 1) == FiniteSet{3, 4, 5});
    // 5 + 3 != 2 * 4
    CHECK_THROWS_AS(lemma6_forward({3, 4, 6}, 5, 1, 2, 1), DomainError);
    CHECK_THROWS_AS(lemma6_forward({3, 4, 5}, 4, 1, 2, 2), DomainError);
    CHECK_THROWS_AS(lemma6_inverse(Partition{2, 3}, 5, 1, 2, 1), DomainError); // top gap 1, expected 0
    CHECK_THROWS_AS(lemma6_inverse(Partition{1, 3}, 4, 1, 2, 3), DomainError); // part below ell + 1
}

TEST_CASE("lemma6 is a bijection on every enumerated domain")
{
    for (Int n = 1; n <= 20; ++n)
        for (Int ell = 0; ell <= 3; ++ell) {
            if (n < ell + 1)
                continue;
            for (Int k = 2; k <= n; ++k)
                for (Int q = 1; q <= n + 1 - ell * k; ++q) {
                    CAPTURE(n);
                    CAPTURE(ell);
                    CAPTURE(k);
                    CAPTURE(q);
                    auto c = check_lemma6(n, ell, k, q);
                    CHECK(c.ok());
                    CHECK(c.domain_size == count_E_kq(n, ell + 1, k, q - 1));
                    for (auto &[f, p] : lemma6_witness(n, ell, k, q).pairs) {
                        CHECK(p.target() == n);
                        CHECK(p.size() == static_cast<std::size_t>(k));
                    }
                }
        }
}

TEST_CASE("strongly sparse counterpart")
{
    // smallest nonempty instance in the sweep over n <= 20, ell <= 2
    std::optional<std::tuple<Int, Int, Int, Int>> first;
    for (Int n = 1; n <= 20 && !first; ++n)
        for (Int ell = 0; ell <= 2 && !first; ++ell)
            for (Int k = 2; k <= n && !first; ++k)
                for (Int q = 1; q <= n + 1 && !first; ++q)
                    if (n >= ell + 1 && count_family(FamilyQuery::f_script_strong_kq(n, ell, k + 1, ell * k + q)) > 0)
                        first = {n, ell, k, q};
    REQUIRE(first);
    auto [n0, ell0, k0, q0] = *first;
    CHECK(n0 == 3);
    CHECK(ell0 == 0);
    CHECK(k0 == 2);
    CHECK(q0 == 1);
    // 3 + 1 = 2 * 2, gaps 1 < 2
    auto domain = enum_family(FamilyQuery::f_script_strong_kq(3, 0, 3, 1));
    CHECK(domain == std::vector<FiniteSet>{{1, 2, 4}});
    Partition img = lemma6s_forward({1, 2, 4}, 3, 0, 2, 1);
    CHECK(img == Partition{1, 2});
    CHECK(lemma6s_inverse(img, 3, 0, 2, 1) == FiniteSet{1, 2, 4});
    CHECK_THROWS_AS(lemma6s_forward({1, 3, 5}, 4, 0, 2, 1), DomainError);

    for (Int n = 1; n <= 20; ++n)
        for (Int ell = 0; ell <= 3; ++ell) {
            if (n < ell + 1)
                continue;
            for (Int k = 2; k <= n; ++k)
                for (Int q = 1; q <= n + 1; ++q) {
                    CAPTURE(n);
                    CAPTURE(ell);
                    CAPTURE(k);
                    CAPTURE(q);
                    auto c = check_lemma6s(n, ell, k, q);
                    CHECK(c.ok());
                    CHECK(c.domain_size == count_E_distinct_kq(n, ell + kStrongCodomainShift, k, q));
                }
        }
}

TEST_CASE("thm2_shift")
{
    CHECK(thm2_shift({6}, 6) == FiniteSet{7});
    CHECK(thm2_shift({3, 4, 6}, 6) == FiniteSet{3, 4, 7});
    CHECK_THROWS_AS(thm2_shift({3, 4}, 6), DomainError);
    CHECK_THROWS_AS(thm2_shift({3, 6, 7}, 6), DomainError);
}

TEST_CASE("shift image is {{n+1}} plus C_n plus D_n")
{
    for (Int ell = 0; ell <= 3; ++ell)
        for (Int n = ell + 1; n <= 18; ++n) {
            CAPTURE(n);
            CAPTURE(ell);
            auto domain = enum_family(FamilyQuery::a(n, ell));
            std::set<FiniteSet> image;
            for (auto &a : domain)
                image.insert(thm2_shift(a, n));
            CHECK(image.size() == domain.size());

            std::set<FiniteSet> expected{FiniteSet{n + 1}};
            for (Int m = ell + 1; m <= n - 1; ++m)
                expected.insert(FiniteSet{m, n + 1});
            // D_n: {a_1 < ... < a_p, n+1}, p >= 2, a_p < n, prefix ell-strong Schreier and sparse
            for (auto &b : enum_family(FamilyQuery::a(n + 1, ell))) {
                if (b.size() < 3 || b[b.size() - 2] >= n)
                    continue;
                std::vector<Int> prefix(b.elements().begin(), b.elements().end() - 1);
                FiniteSet head(prefix);
                if (is_ell_strong_schreier(head, ell) && is_sparse(head)) {
                    // must still be sparse with n in place of n + 1
                    std::vector<Int> lowered(prefix);
                    lowered.push_back(n);
                    if (is_sparse(FiniteSet(lowered)))
                        expected.insert(b);
                }
            }
            CHECK(image == expected);
        }
}

TEST_CASE("claim9")
{
    CHECK(claim9_check({3, 4, 5}, 4, 1));
    CHECK_FALSE(claim9_check({3, 4, 7}, 6, 1));
    CHECK_THROWS_AS(claim9_check({3, 5}, 4), DomainError);
    CHECK_THROWS_AS(claim9_check({1, 3, 4, 6}, 5), DomainError); // not sparse
    CHECK_THROWS_AS(claim9_check({2, 3, 5}, 4, 1), DomainError); // not Schreier

    Count candidates = 0;
    for (Int n = 1; n <= 18; ++n)
        for (Int ell = 0; ell <= 3; ++ell)
            for (auto &a : enum_script_candidates(n, ell)) {
                ++candidates;
                CAPTURE(to_string(a));
                CHECK(claim9_check(a, n, ell) == literal_condition_iii(a, n));
            }
    CHECK(candidates > 0);
}
