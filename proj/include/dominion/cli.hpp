#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dominion/big_count.hpp"
#include "dominion/families.hpp"

namespace dominion::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kMismatch = 2 };

enum class Method { closed_form, dp, oracle };
std::string_view to_string(Method method) noexcept;

enum class OutputFormat { table, json, csv };

/// One computed tree: what it was, how big, and its (gamma, zeta).
struct ReportRow {
  std::string family;  // family string form, or the input file path
  std::uint64_t n_vertices = 0;
  std::uint64_t gamma = 0;
  BigCount zeta;
  Method method = Method::dp;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

std::string format_rows(std::span<const ReportRow> rows, OutputFormat format);
std::vector<ReportRow> parse_rows_csv(std::string_view text);
std::vector<ReportRow> parse_rows_json(std::string_view text);

/// Runs the DP on an edge-list file (if `input` names an existing file) or on
/// a family string. For families with a closed form the two are compared and
/// Error(MismatchDetected) is thrown on disagreement.
ReportRow cmd_compute(std::string_view input);

/// Edge-list text of a family; cmd_generate writes it to `out_path`.
std::string generate_edge_list(std::string_view spec);
void cmd_generate(std::string_view spec, const std::string& out_path);

/// Closed-form evaluators used by verify-tables. Tests swap them out to
/// inject faults.
struct TableEvaluators {
  std::function<BigCount(std::uint64_t)> fibonacci;
  std::function<DominationSummary(std::uint64_t, families::Parity)> alternating;
};
TableEvaluators default_evaluators();

struct VerifiedCell {
  std::string table;   // "table1" or "table2"
  std::string family;  // e.g. "alt-even:n=6"
  std::string quantity;  // "gamma" or "zeta"
  std::string expected;  // value printed in (or implied by) the table
  std::string fibonacci;  // F_t for the table's printed index; zeta cells of table 1 only
  std::string closed_form;
  std::string dp;
  std::string oracle;  // empty when the tree exceeds the oracle cap
  bool ok = false;
};

struct VerifyReport {
  std::vector<VerifiedCell> cells;
  bool all_ok() const noexcept;
  std::size_t table1_cells() const noexcept;
};

VerifyReport cmd_verify_tables(const TableEvaluators& evaluators = default_evaluators());

/// Full command-line entry point (arguments without the program name);
/// returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        const TableEvaluators& evaluators = default_evaluators());

}  // namespace dominion::cli
