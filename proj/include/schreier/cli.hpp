#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "schreier/families.hpp"

namespace schreier::cli {

enum ExitCode : int {
    kOk = 0,
    kOverflow = 1,
    kUsage = 2,
    kIdentityFailure = 3,
};

enum class OutputFormat { plain, csv, json, bfile };

std::optional<OutputFormat> parse_format(std::string_view s);

/// "a..b" (inclusive) or a single integer "a".
std::optional<IntRange> parse_range(std::string_view s);

// Count families addressable by (n, ell): set families and restricted
// partition families alike.
std::optional<CellCounter> sequence_counter(std::string_view family);

std::string format_table(const CountTable &t, std::string_view family, OutputFormat fmt);

/// Inverse of format_table for the CSV form. Throws ParamError on malformed input.
CountTable parse_csv_table(std::string_view text);

/// Entry point behind the `schreier` executable. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace schreier::cli
