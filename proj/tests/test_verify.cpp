#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "schreier/verify.hpp"

using namespace schreier;

TEST_CASE("every identity passes at the default bounds")
{
    auto reports = verify_all(VerifyBounds{});
    REQUIRE(reports.size() == all_identities().size());
    for (auto &r : reports) {
        CAPTURE(identity_name(r.identity));
        CHECK(r.passed());
        CHECK(r.checked > 0);
        CHECK_FALSE(r.lhs_method.empty());
        CHECK_FALSE(r.rhs_method.empty());
    }
}

TEST_CASE("empty bounds check nothing")
{
    for (auto &r : verify_all(VerifyBounds::none())) {
        CAPTURE(identity_name(r.identity));
        CHECK(r.checked == 0);
        CHECK(r.passed());
    }
}

TEST_CASE("degenerate sweeps with n <= ell")
{
    VerifyBounds b{3, 4, 5, 1};
    for (auto id : all_identities()) {
        CAPTURE(identity_name(id));
        CHECK(verify(id, b).passed());
    }
}

TEST_CASE("results do not depend on the thread count")
{
    VerifyBounds one{14, 2, 20, 1};
    VerifyBounds four = one;
    four.threads = 4;
    auto a = verify_all(one);
    auto b = verify_all(four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].identity == b[i].identity);
        CHECK(a[i].checked == b[i].checked);
        CHECK(a[i].failures.size() == b[i].failures.size());
        CHECK(a[i].notes == b[i].notes);
    }
}

TEST_CASE("golden tables")
{
    auto r = verify_tables();
    CHECK(r.passed());
    CHECK(r.checked >= 64);

    auto cell = [](const golden::Table &t, Int n, Int ell) {
        return t.rows.at(static_cast<std::size_t>(ell - t.first_ell)).at(static_cast<std::size_t>(n - t.first_n));
    };
    CHECK(cell(golden::table1_A(), 16, 0) == 684);
    CHECK(cell(golden::table2_A_strong(), 17, 1) == 93);
    CHECK(cell(golden::table3_E(), 16, 2) == 55);
    CHECK(cell(golden::table4_E_distinct(), 16, 1) == 32);
    CHECK(cell(golden::table5_G(), 16, 3) == 51);
    CHECK(cell(golden::table6_H(), 16, 1) == 93);

    std::size_t entries = 0;
    for (auto &row : golden::table1_A().rows)
        entries += row.size();
    CHECK(entries == 64);

    // parts odd or equal to 2
    const auto &a = golden::a038348_prefix();
    REQUIRE(a.size() == 17);
    for (Int n = 0; n <= 16; ++n)
        CHECK(a[static_cast<std::size_t>(n)] ==
              oracle::partitions(n, 1, n, false, [](Int v) { return v % 2 == 1 || v == 2; }));
}

TEST_CASE("strong counterpart records the confirmed subscript")
{
    auto r = verify(IdentityId::STRONG_COUNTERPART, VerifyBounds{12, 2, 0, 1});
    CHECK(r.passed());
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes.back() == "confirmed codomain subscript: ell+1");
}

TEST_CASE("eq1 lists Fibonacci numbers")
{
    auto r = verify(IdentityId::EQ1_FIBONACCI, VerifyBounds{10, 0, 0, 1});
    CHECK(r.passed());
    CHECK(r.checked == 10);
}

TEST_CASE("identity names")
{
    for (auto id : all_identities())
        CHECK(parse_identity(identity_name(id)) == id);
    CHECK(parse_identity("EQ1") == IdentityId::EQ1_FIBONACCI);
    CHECK(parse_identity("TABLES") == IdentityId::APPENDIX_TABLES);
    CHECK(parse_identity("GF") == IdentityId::GF_THETA_EQ_PSI);
    CHECK(parse_identity("STRONG") == IdentityId::STRONG_COUNTERPART);
    CHECK_FALSE(parse_identity("THM99"));
    CHECK_FALSE(parse_identity(""));
}
