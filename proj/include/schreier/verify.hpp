#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schreier/checked.hpp"

namespace schreier {

enum class IdentityId {
    EQ1_FIBONACCI,
    PROP1,
    COR4,
    LEMMA6,
    COR7,
    COR8,
    THM2_E31,
    THM2_E32,
    THM3_E40,
    THM3_E41,
    THM10,
    THM10_TOTAL,
    CLAIM9,
    STRONG_COUNTERPART,
    GF_THETA_EQ_PSI,
    APPENDIX_TABLES,
};

std::string_view identity_name(IdentityId id);
/// Accepts the full name or a short alias such as "EQ1" or "TABLES".
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId> &all_identities();

// Sweep bounds. n runs over 1..max_n, ell over 0..max_ell (1..max_ell where
// the identity needs ell >= 1), series degrees over 0..gf_degree.
struct VerifyBounds {
    Int max_n = 20;
    Int max_ell = 3;
    Int gf_degree = 40;
    unsigned threads = 0; // 0 = hardware concurrency

    static VerifyBounds none() { return {0, -1, -1, 0}; }
};

struct Failure {
    std::vector<std::pair<std::string, Int>> params;
    Count lhs = 0;
    Count rhs = 0;
    std::string what; // which comparison failed
};

struct VerifyReport {
    IdentityId identity = IdentityId::EQ1_FIBONACCI;
    VerifyBounds bounds;
    std::string lhs_method;
    std::string rhs_method;
    Count checked = 0;
    std::vector<Failure> failures; // in sweep order, so the first is minimal
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

/// Throws OverflowError from the counters.
VerifyReport verify(IdentityId id, const VerifyBounds &bounds);
std::vector<VerifyReport> verify_all(const VerifyBounds &bounds);
/// Recomputes the six golden tables (independent of bounds).
VerifyReport verify_tables();

namespace golden {

// Appendix tables: rows are ell = first_ell.., columns n = first_n..
struct Table {
    std::string_view name;
    Int first_n;
    Int first_ell;
    std::vector<std::vector<Count>> rows;
};

const Table &table1_A();
const Table &table2_A_strong();
const Table &table3_E();
const Table &table4_E_distinct();
const Table &table5_G();
const Table &table6_H();

// a(0..16) of the OEIS sequence A038348 (|H_{n,1}|)
const std::vector<Count> &a038348_prefix();

} // namespace golden

} // namespace schreier
