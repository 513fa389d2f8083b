#include "fencetile/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "fencetile/bfile.hpp"
#include "fencetile/identities.hpp"
#include "fencetile/riordan.hpp"
#include "fencetile/sequences.hpp"
#include "fencetile/tiling.hpp"
#include "fencetile/triangles.hpp"

namespace fencetile::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SequenceId require_sequence(const std::string& name, std::int64_t m) {
  auto id = parse_sequence_id(name, m);
  if (!id) throw UsageError("unknown sequence '" + name + "' (expected F, f, J, A, B, goldenRect, Am or A<m>)");
  return *id;
}

TriangleId require_triangle(const std::string& name) {
  if (name == "board") return TriangleId::Board;
  if (name == "ntile") return TriangleId::NTile;
  if (name == "half") return TriangleId::Half;
  throw UsageError("unknown triangle '" + name + "' (expected board, ntile or half)");
}

RangeOverride parse_ranges(const std::vector<std::string>& items) {
  RangeOverride ranges;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    const auto colon = item.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || colon == std::string::npos) {
      throw UsageError("range '" + item + "' must look like name=lo:hi");
    }
    try {
      ranges[item.substr(0, eq)] = {std::stoll(item.substr(eq + 1, colon - eq - 1)), std::stoll(item.substr(colon + 1))};
    } catch (const std::logic_error&) {
      throw UsageError("range '" + item + "' has non-numeric bounds");
    }
  }
  return ranges;
}

struct Options {
  std::string seq_id;
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t m = 2;

  std::string kind;
  std::int64_t rows = 0;
  bool csv = false;
  std::int64_t n = 0;
  int cap = -1;

  std::string p;
  std::string q;

  std::string identity;
  std::int64_t max_n = kDefaultMaxN;
  std::string format = "text";
  std::vector<std::string> ranges;
};

void print_sequence(const Options& o, std::ostream& out) {
  const SequenceId id = require_sequence(o.seq_id, o.m);
  if (o.from > o.to) throw UsageError("--from must not exceed --to");
  std::vector<BFileEntry> entries;
  for (std::int64_t n = o.from; n <= o.to; ++n) entries.emplace_back(n, sequence_value(id, n));
  out << format_bfile(entries);
}

void print_triangle(const Options& o, std::ostream& out) {
  const TriangleId id = require_triangle(o.kind);
  if (o.rows < 0) throw UsageError("--rows must be non-negative");
  out << (o.csv ? format_triangle_csv(id, o.rows) : format_triangle_text(id, o.rows));
}

EnumerationLimits limits_for(const Options& o) {
  EnumerationLimits limits;
  if (o.cap >= 0) limits.max_board_length = limits.max_tile_count = o.cap;
  return limits;
}

void print_enumeration(const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("n must be non-negative");
  const EnumerationLimits limits = limits_for(o);
  const int n = static_cast<int>(o.n);
  if (o.kind == "board") {
    if (n > limits.max_board_length) throw InstanceTooLarge("board length exceeds enumeration cap");
    for_each_board_tiling_by_cells(n, 1, [&](const CellOccupancy& occ) { out << to_metatiles(occ).to_string() << '\n'; });
  } else if (o.kind == "ntile") {
    if (n > limits.max_tile_count) throw InstanceTooLarge("tile count exceeds enumeration cap");
    for_each_n_tiling(n, [&](const Tiling& t) { out << t.to_string() << '\n'; });
  } else {
    throw UsageError("unknown tiling kind '" + o.kind + "' (expected board or ntile)");
  }
}

void print_classification(const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("n must be non-negative");
  const EnumerationLimits limits = limits_for(o);
  std::vector<BigNat> histogram;
  if (o.kind == "board") {
    histogram = classify_board_tilings(static_cast<int>(o.n), limits);
  } else if (o.kind == "ntile") {
    histogram = classify_n_tilings(static_cast<int>(o.n), limits);
  } else {
    throw UsageError("unknown tiling kind '" + o.kind + "' (expected board or ntile)");
  }
  for (std::size_t k = 0; k < histogram.size(); ++k) out << k << ' ' << histogram[k] << '\n';
}

void print_riordan(const Options& o, std::ostream& out) {
  if (o.rows < 0) throw UsageError("--rows must be non-negative");
  const RationalSeries p = RationalSeries::parse(o.p);
  const RationalSeries q = RationalSeries::parse(o.q);
  const RiordanArray array(p, q, o.rows);
  for (std::int64_t n = 0; n <= o.rows; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      if (k) out << ' ';
      out << array.at(n, k);
    }
    out << '\n';
  }
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.format != "text" && o.format != "kv") throw UsageError("--format must be text or kv");
  if (o.max_n < 1) throw UsageError("--max must be at least 1");
  std::vector<IdentityReport> reports;
  if (!o.identity.empty()) {
    std::optional<RangeOverride> ranges;
    if (!o.ranges.empty()) ranges = parse_ranges(o.ranges);
    reports.push_back(verify_identity(o.identity, ranges, o.max_n));
  } else {
    if (!o.ranges.empty()) throw UsageError("--range requires --id");
    reports = verify_all(o.max_n);
  }
  out << (o.format == "kv" ? format_reports_kv(reports) : format_reports_text(reports));
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed(); });
  return ok ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square and (1,1)-fence tilings: sequences, triangles, enumerators and identity checks", "fencetile"};
  app.require_subcommand(1);
  Options o;

  auto* seq = app.add_subcommand("seq", "Print \"n value\" lines of a named sequence");
  seq->add_option("id", o.seq_id, "F, f, J, A, B, goldenRect, Am or A<m>")->required();
  seq->add_option("--from", o.from, "First index")->capture_default_str();
  seq->add_option("--to", o.to, "Last index")->required();
  seq->add_option("--m", o.m, "Fence family parameter for Am")->capture_default_str();

  auto* bfile = app.add_subcommand("bfile", "Emit an OEIS b-file for a named sequence");
  bfile->add_option("id", o.seq_id, "F, f, J, A, B, goldenRect, Am or A<m>")->required();
  bfile->add_option("--from", o.from, "First index")->capture_default_str();
  bfile->add_option("--to", o.to, "Last index")->required();
  bfile->add_option("--m", o.m, "Fence family parameter for Am")->capture_default_str();

  auto* triangle = app.add_subcommand("triangle", "Print rows 0..R of a triangle");
  triangle->add_option("kind", o.kind, "board, ntile or half")->required();
  triangle->add_option("--rows", o.rows, "Last row")->required();
  triangle->add_flag("--csv", o.csv, "CSV with header n,k,value");

  auto* enumerate = app.add_subcommand("enumerate", "List tilings as metatile symbol strings");
  enumerate->add_option("kind", o.kind, "board or ntile")->required();
  enumerate->add_option("n", o.n, "Board length or tile count")->required();
  enumerate->add_option("--cap", o.cap, "Override the exhaustive-enumeration cap");

  auto* classify = app.add_subcommand("classify", "Histogram of fence counts by exhaustive enumeration");
  classify->add_option("kind", o.kind, "board or ntile")->required();
  classify->add_option("n", o.n, "Board length or tile count")->required();
  classify->add_option("--cap", o.cap, "Override the exhaustive-enumeration cap");

  auto* riordan = app.add_subcommand("riordan", "Print rows 0..R of the (p, q) Riordan array");
  riordan->add_option("--p", o.p, "NUM/DEN coefficient lists, constant term first")->required();
  riordan->add_option("--q", o.q, "NUM/DEN coefficient lists, constant term first")->required();
  riordan->add_option("--rows", o.rows, "Last row")->required();

  auto* verify = app.add_subcommand("verify", "Check registered identities");
  verify->add_option("--id", o.identity, "Single identity id");
  verify->add_option("--max", o.max_n, "Range scale")->capture_default_str();
  verify->add_option("--format", o.format, "text or kv")->capture_default_str();
  verify->add_option("--range", o.ranges, "Override a parameter range, name=lo:hi (with --id)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq || *bfile) {
      print_sequence(o, out);
    } else if (*triangle) {
      print_triangle(o, out);
    } else if (*enumerate) {
      print_enumeration(o, out);
    } else if (*classify) {
      print_classification(o, out);
    } else if (*riordan) {
      print_riordan(o, out);
    } else if (*verify) {
      return run_verify(o, out);
    }
  } catch (const InstanceTooLarge& e) {
    err << "instance too large: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace fencetile::cli
