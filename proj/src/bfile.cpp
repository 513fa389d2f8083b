#include "fencetile/bfile.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fencetile {

namespace {

// Decimal integer without leading zeros or "-0", so that parsing and
// re-emitting reproduces the text exactly.
bool is_canonical_integer(std::string_view s) {
  const std::size_t from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == from || s.find_first_not_of("0123456789", from) != std::string_view::npos) return false;
  if (s[from] == '0') return s.size() == 1;
  return true;
}

}  // namespace

std::string format_bfile(const std::vector<BFileEntry>& entries) {
  std::ostringstream out;
  for (const auto& [n, value] : entries) out << n << ' ' << value << '\n';
  return out.str();
}

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    if (eol == std::string_view::npos) throw std::invalid_argument("b-file line " + std::to_string(line_no) + " is not newline-terminated");
    const std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol + 1);

    const std::size_t space = line.find(' ');
    if (space == std::string_view::npos) throw std::invalid_argument("b-file line " + std::to_string(line_no) + " lacks a separator");
    const std::string_view index = line.substr(0, space);
    const std::string_view value = line.substr(space + 1);

    if (!is_canonical_integer(index) || !is_canonical_integer(value)) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + " has a malformed number");
    }
    std::int64_t n = 0;
    auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), n);
    if (ec != std::errc() || ptr != index.data() + index.size()) {
      throw std::invalid_argument("b-file line " + std::to_string(line_no) + " has a malformed index");
    }
    entries.emplace_back(n, BigNat(std::string(value)));
  }
  return entries;
}

}  // namespace fencetile
