#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fencetile/bignat.hpp"

namespace fencetile {

using BFileEntry = std::pair<std::int64_t, BigNat>;

// OEIS b-file: "n a(n)" per line, single space, newline-terminated, no header.
std::string format_bfile(const std::vector<BFileEntry>& entries);
// Accepts exactly the format above; throws std::invalid_argument otherwise.
std::vector<BFileEntry> parse_bfile(std::string_view text);

}  // namespace fencetile
