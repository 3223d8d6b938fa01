#pragma once

#include <istream>
#include <ostream>
#include <utility>
#include <vector>

#include "regdiv/common.hpp"

namespace regdiv {

using BFileEntry = std::pair<BigInt, BigInt>;

// OEIS b-file: one "n value" per line, '\n' terminated, no header, no
// trailing whitespace.
void write_bfile_line(std::ostream& os, const BigInt& n, const BigInt& value);
void write_bfile(std::ostream& os, const std::vector<BFileEntry>& entries);

// Strict reader for the format written above; throws DomainError on any
// deviation (blank lines, extra spaces, comments, non-digits).
std::vector<BFileEntry> parse_bfile(std::istream& is);

}  // namespace regdiv
