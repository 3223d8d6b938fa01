#include "regdiv/bfile.hpp"

#include <string>

namespace regdiv {

namespace {

BigInt parse_integer(const std::string& text, std::size_t line_no) {
  const bool negative = !text.empty() && text[0] == '-';
  const std::size_t start = negative ? 1 : 0;
  if (text.size() == start) throw DomainError("b-file line " + std::to_string(line_no) + ": empty field");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw DomainError("b-file line " + std::to_string(line_no) + ": bad integer '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace

void write_bfile_line(std::ostream& os, const BigInt& n, const BigInt& value) {
  os << n << ' ' << value << '\n';
}

void write_bfile(std::ostream& os, const std::vector<BFileEntry>& entries) {
  for (const auto& [n, v] : entries) write_bfile_line(os, n, v);
}

std::vector<BFileEntry> parse_bfile(std::istream& is) {
  std::vector<BFileEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
      throw DomainError("b-file line " + std::to_string(line_no) + ": expected 'n value'");
    }
    out.emplace_back(parse_integer(line.substr(0, space), line_no),
                     parse_integer(line.substr(space + 1), line_no));
  }
  return out;
}

}  // namespace regdiv
