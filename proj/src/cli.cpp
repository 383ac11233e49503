#include "dominion/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dominion/closed_form.hpp"
#include "dominion/dp_counter.hpp"
#include "dominion/error.hpp"
#include "dominion/family_spec.hpp"
#include "dominion/oracle.hpp"
#include "dominion/perturbation.hpp"

namespace dominion::cli {

namespace {

using families::Parity;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_file(std::string_view input) {
  std::error_code ec;
  return std::filesystem::is_regular_file(std::filesystem::path(input), ec);
}

struct LoadedInput {
  std::string name;
  Tree tree;
  std::optional<FamilySpec> spec;
};

LoadedInput load(std::string_view input) {
  if (is_file(input)) {
    const std::string path(input);
    return {path, parse_edge_list(read_file(path)), std::nullopt};
  }
  FamilySpec spec = parse_family_spec(input);
  Tree tree = make_tree(spec);
  return {to_string(spec), std::move(tree), std::move(spec)};
}

Method parse_method(std::string_view text) {
  if (text == "closed_form") return Method::closed_form;
  if (text == "dp") return Method::dp;
  if (text == "oracle") return Method::oracle;
  throw Error(ErrorKind::ParseError, "unknown method '" + std::string(text) + "'");
}

std::uint64_t to_u64(const BigCount& value) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorKind::InvalidParameter, "value exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

std::uint64_t parse_u64(std::string_view text) { return to_u64(parse_decimal(text)); }

// Minimal RFC 4180 quoting; family strings contain commas.
std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, "unterminated quote in CSV line");
  return fields;
}

std::string pad(std::string_view text, std::size_t width) {
  std::string out(text);
  out.resize(std::max(width, text.size()), ' ');
  return out;
}

// ---------------------------------------------------------------------------
// verify-tables

struct TableOneRow {
  std::uint64_t n;
  std::uint64_t gamma_even, fib_index_even, zeta_even;
  std::uint64_t gamma_odd, fib_index_odd, zeta_odd;
};

// Alternating-comb verification table, n = 2..10: gamma, the printed
// Fibonacci index t of zeta = F_t, and its value.
constexpr TableOneRow kTableOne[] = {
    {2, 1, 2, 1, 1, 2, 1},   {3, 1, 1, 1, 2, 4, 3},  {4, 2, 3, 2, 2, 3, 2},
    {5, 2, 2, 1, 3, 5, 5},   {6, 3, 4, 3, 3, 4, 3},  {7, 3, 3, 2, 4, 6, 8},
    {8, 4, 5, 5, 4, 5, 5},   {9, 4, 4, 3, 5, 7, 13}, {10, 5, 6, 8, 5, 6, 8},
};

struct Computed {
  DominationSummary dp;
  std::optional<DominationSummary> oracle;
};

Computed compute_both(const Tree& tree) {
  Computed c{dp::dp_count(tree), std::nullopt};
  if (tree.vertex_count() <= oracle::kDefaultCap) c.oracle = oracle::oracle_count(tree);
  return c;
}

VerifiedCell make_cell(std::string table, std::string family, std::string quantity, const BigCount& expected,
                       const BigCount& closed, const BigCount& dp_value, const std::optional<BigCount>& oracle_value) {
  VerifiedCell cell;
  cell.table = std::move(table);
  cell.family = std::move(family);
  cell.quantity = std::move(quantity);
  cell.expected = to_decimal(expected);
  cell.closed_form = to_decimal(closed);
  cell.dp = to_decimal(dp_value);
  if (oracle_value) cell.oracle = to_decimal(*oracle_value);
  cell.ok = expected == closed && expected == dp_value && (!oracle_value || *oracle_value == expected);
  return cell;
}

void add_pair(std::vector<VerifiedCell>& cells, const std::string& table, const std::string& family,
              const DominationSummary& expected, const DominationSummary& closed, const Computed& c) {
  cells.push_back(make_cell(table, family, "gamma", expected.gamma, closed.gamma, c.dp.gamma,
                            c.oracle ? std::optional<BigCount>(c.oracle->gamma) : std::nullopt));
  cells.push_back(make_cell(table, family, "zeta", expected.zeta, closed.zeta, c.dp.zeta,
                            c.oracle ? std::optional<BigCount>(c.oracle->zeta) : std::nullopt));
}

void verify_table_one(const TableEvaluators& eval, std::vector<VerifiedCell>& cells) {
  for (const auto& row : kTableOne) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      const bool even = parity == Parity::even;
      const std::string family = std::string(even ? "alt-even" : "alt-odd") + ":n=" + std::to_string(row.n);
      const DominationSummary expected{even ? row.gamma_even : row.gamma_odd,
                                       even ? row.zeta_even : row.zeta_odd};
      const Computed c = compute_both(families::make_alternating(row.n, parity));
      add_pair(cells, "table1", family, expected, eval.alternating(row.n, parity), c);

      VerifiedCell& zeta_cell = cells.back();
      const BigCount fib = eval.fibonacci(even ? row.fib_index_even : row.fib_index_odd);
      zeta_cell.fibonacci = to_decimal(fib);
      zeta_cell.ok = zeta_cell.ok && fib == expected.zeta;
    }
  }
}

void verify_table_two(const TableEvaluators& eval, std::vector<VerifiedCell>& cells) {
  for (std::uint64_t n = 4; n <= 10; ++n) {
    const std::string ns = std::to_string(n);
    add_pair(cells, "table2", "comb:n=" + ns, {n, pow2(n)}, closed_form::comb_summary(n),
             compute_both(families::make_comb(n)));
    add_pair(cells, "table2", "interior:n=" + ns, {n - 2, pow2(n - 4)},
             closed_form::interior_pendant_summary(n), compute_both(families::make_interior_pendant(n)));
    for (Parity parity : {Parity::even, Parity::odd}) {
      // Only the growth class is tabulated; the exact value is the closed form,
      // which must also be a Fibonacci number.
      const DominationSummary closed = eval.alternating(n, parity);
      const std::string family = std::string(parity == Parity::even ? "alt-even" : "alt-odd") + ":n=" + ns;
      add_pair(cells, "table2", family, closed, closed, compute_both(families::make_alternating(n, parity)));
      bool is_fibonacci = false;
      for (std::uint64_t t = 1; t <= 2 * n + 4 && !is_fibonacci; ++t) is_fibonacci = eval.fibonacci(t) == closed.zeta;
      cells.back().ok = cells.back().ok && is_fibonacci;
    }
    for (std::uint64_t r : {2, 3}) {
      add_pair(cells, "table2", "uniform:n=" + ns + ",r=" + std::to_string(r), {n, 1},
               closed_form::uniform_pendant_summary(n, r), compute_both(families::make_uniform_pendant(n, r)));
    }
  }
  for (std::uint64_t h = 1; h <= 6; ++h) {
    const DominationSummary expected{(pow2(h + 2) + 3) / 7, h % 3 == 0 ? 3 : 1};
    add_pair(cells, "table2", "binary:h=" + std::to_string(h), expected, closed_form::binary_summary(h),
             compute_both(families::make_complete_binary(h)));
  }
}

json cell_json(const VerifiedCell& c) {
  return {{"table", c.table}, {"family", c.family}, {"quantity", c.quantity}, {"expected", c.expected},
          {"fibonacci", c.fibonacci}, {"closed_form", c.closed_form}, {"dp", c.dp},
          {"oracle", c.oracle}, {"ok", c.ok}};
}

std::string describe(const VerifiedCell& c) {
  std::string out = c.table + " " + c.family + " " + c.quantity + ": expected=" + c.expected;
  if (!c.fibonacci.empty()) out += " fibonacci=" + c.fibonacci;
  out += " closed_form=" + c.closed_form + " dp=" + c.dp;
  if (!c.oracle.empty()) out += " oracle=" + c.oracle;
  return out;
}

// ---------------------------------------------------------------------------
// subcommand handlers

OutputFormat pick_format(bool json_flag, bool csv_flag) {
  if (json_flag) return OutputFormat::json;
  if (csv_flag) return OutputFormat::csv;
  return OutputFormat::table;
}

int run_perturb(std::uint64_t h, const std::string& deleted, std::optional<std::uint64_t> random_size,
                std::uint64_t seed, bool all_single, std::ostream& out) {
  std::vector<perturbation::LeafDeletionReport> reports;
  if (all_single) {
    reports = perturbation::single_leaf_reports(h);
  } else if (random_size) {
    reports.push_back(perturbation::analyze_deletion(h, perturbation::random_deletion_set(h, *random_size, seed)));
  } else {
    std::vector<std::string> labels;
    std::stringstream ss(deleted);
    for (std::string label; std::getline(ss, label, '+');) {
      if (!label.empty()) labels.push_back(label);
    }
    reports.push_back(perturbation::analyze_deletion(h, labels));
  }
  out << perturbation::csv_header() << '\n';
  for (const auto& report : reports) out << perturbation::to_csv_row(report) << '\n';
  return kSuccess;
}

int run_oracle(const std::string& input, std::size_t cap, bool enumerate, OutputFormat format, std::ostream& out) {
  const LoadedInput loaded = load(input);
  if (enumerate) {
    const auto witnesses = oracle::enumerate_min_sets(loaded.tree, cap);
    for (const auto& set : witnesses.sets()) {
      for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
      out << '\n';
    }
    return kSuccess;
  }
  const DominationSummary summary = oracle::oracle_count(loaded.tree, cap);
  const ReportRow row{loaded.name, loaded.tree.vertex_count(), to_u64(summary.gamma), summary.zeta, Method::oracle};
  out << format_rows(std::span(&row, 1), format);
  return kSuccess;
}

int run_verify(bool as_json, const TableEvaluators& evaluators, std::ostream& out) {
  const VerifyReport report = cmd_verify_tables(evaluators);
  const auto first_failure =
      std::find_if(report.cells.begin(), report.cells.end(), [](const VerifiedCell& c) { return !c.ok; });
  if (as_json) {
    json cells = json::array();
    for (const auto& c : report.cells) cells.push_back(cell_json(c));
    out << json{{"ok", report.all_ok()}, {"table1_cells", report.table1_cells()}, {"cells", cells}}.dump(2)
        << '\n';
  } else {
    for (const auto& c : report.cells) out << (c.ok ? "ok   " : "FAIL ") << describe(c) << '\n';
    if (first_failure != report.cells.end()) {
      out << "first failing cell: " << describe(*first_failure) << '\n';
    } else {
      out << report.table1_cells() << " Table-1 cells verified, " << report.cells.size() - report.table1_cells()
          << " Table-2 cells verified\n";
    }
  }
  return report.all_ok() ? kSuccess : kMismatch;
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::closed_form: return "closed_form";
    case Method::dp: return "dp";
    case Method::oracle: return "oracle";
  }
  return "dp";
}

std::string format_rows(std::span<const ReportRow> rows, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::json: {
      json array = json::array();
      for (const auto& row : rows) {
        array.push_back({{"family", row.family},
                         {"n_vertices", row.n_vertices},
                         {"gamma", row.gamma},
                         {"zeta", to_decimal(row.zeta)},
                         {"method", to_string(row.method)}});
      }
      out << array.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "family,n_vertices,gamma,zeta,method\n";
      for (const auto& row : rows) {
        out << csv_field(row.family) << ',' << row.n_vertices << ',' << row.gamma << ',' << to_decimal(row.zeta)
            << ',' << to_string(row.method) << '\n';
      }
      break;
    case OutputFormat::table: {
      std::vector<std::array<std::string, 5>> cells{{"family", "vertices", "gamma", "zeta", "method"}};
      for (const auto& row : rows) {
        cells.push_back({row.family, std::to_string(row.n_vertices), std::to_string(row.gamma),
                         to_decimal(row.zeta), std::string(to_string(row.method))});
      }
      std::array<std::size_t, 5> width{};
      for (const auto& line : cells) {
        for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], line[i].size());
      }
      for (const auto& line : cells) {
        std::string text;
        for (std::size_t i = 0; i < 5; ++i) text += (i ? "  " : "") + pad(line[i], width[i]);
        text.erase(text.find_last_not_of(' ') + 1);
        out << text << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::vector<ReportRow> parse_rows_csv(std::string_view text) {
  std::vector<ReportRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line != "family,n_vertices,gamma,zeta,method") throw Error(ErrorKind::ParseError, "bad CSV header");
      header = false;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) throw Error(ErrorKind::ParseError, "expected 5 CSV fields");
    rows.push_back({fields[0], parse_u64(fields[1]), parse_u64(fields[2]), parse_decimal(fields[3]),
                    parse_method(fields[4])});
  }
  return rows;
}

std::vector<ReportRow> parse_rows_json(std::string_view text) {
  std::vector<ReportRow> rows;
  try {
    for (const auto& item : json::parse(text)) {
      rows.push_back({item.at("family").get<std::string>(), item.at("n_vertices").get<std::uint64_t>(),
                      item.at("gamma").get<std::uint64_t>(), parse_decimal(item.at("zeta").get<std::string>()),
                      parse_method(item.at("method").get<std::string>())});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return rows;
}

ReportRow cmd_compute(std::string_view input) {
  const LoadedInput loaded = load(input);
  const DominationSummary result = dp::dp_count(loaded.tree);
  if (loaded.spec && closed_form::has_closed_form(*loaded.spec)) {
    const DominationSummary expected = closed_form::summary_for(*loaded.spec);
    if (expected != result) {
      std::ostringstream msg;
      msg << loaded.name << ": closed form " << expected << " but DP " << result;
      throw Error(ErrorKind::MismatchDetected, msg.str());
    }
  }
  return {loaded.name, loaded.tree.vertex_count(), to_u64(result.gamma), result.zeta, Method::dp};
}

std::string generate_edge_list(std::string_view spec) { return to_edge_list(make_tree(parse_family_spec(spec))); }

void cmd_generate(std::string_view spec, const std::string& out_path) {
  const std::string text = generate_edge_list(spec);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidParameter, "cannot write '" + out_path + "'");
  out << text;
}

TableEvaluators default_evaluators() {
  return {&closed_form::fibonacci, &closed_form::alternating_summary};
}

bool VerifyReport::all_ok() const noexcept {
  return !cells.empty() && std::all_of(cells.begin(), cells.end(), [](const VerifiedCell& c) { return c.ok; });
}

std::size_t VerifyReport::table1_cells() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const VerifiedCell& c) { return c.table == "table1"; }));
}

VerifyReport cmd_verify_tables(const TableEvaluators& evaluators) {
  VerifyReport report;
  verify_table_one(evaluators, report.cells);
  verify_table_two(evaluators, report.cells);
  return report;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const TableEvaluators& evaluators) {
  CLI::App app{"Domination number and dominion (number of minimum dominating sets) of trees"};
  app.name("dominion");
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;
  bool as_csv = false;

  auto* compute = app.add_subcommand("compute", "gamma and zeta of an edge-list file or family by tree DP");
  compute->add_option("input", input, "edge-list file or family (e.g. alt-even:n=8)")->required();
  compute->add_flag("--json", as_json, "JSON output");
  compute->add_flag("--csv", as_csv, "CSV output");

  std::size_t cap = oracle::kDefaultCap;
  bool enumerate = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force gamma and zeta, or list every minimum dominating set");
  oracle_cmd->add_option("input", input, "edge-list file or family")->required();
  oracle_cmd->add_option("--cap", cap, "maximum vertex count for exhaustive search");
  oracle_cmd->add_flag("--enumerate", enumerate, "print every minimum dominating set, one per line");
  oracle_cmd->add_flag("--json", as_json, "JSON output");
  oracle_cmd->add_flag("--csv", as_csv, "CSV output");

  std::string spec;
  std::string out_path = "-";
  auto* generate = app.add_subcommand("generate", "write the edge list of a family");
  generate->add_option("spec", spec, "family, e.g. binary:h=3")->required();
  generate->add_option("out", out_path, "output file ('-' for stdout)");

  std::uint64_t h = 0;
  std::string deleted;
  std::uint64_t random_size = 0;
  std::uint64_t seed = 0;
  bool all_single = false;
  auto* perturb = app.add_subcommand("perturb", "leaf-deletion reports for complete binary trees (CSV)");
  perturb->set_help_flag("--help", "Print this help message and exit");
  perturb->add_option("--h", h, "tree height")->required();
  auto* delete_opt = perturb->add_option("--delete", deleted, "leaves to delete, joined by '+' (e.g. b8+b11)");
  auto* size_opt = perturb->add_option("--random-size", random_size, "delete this many random bottom leaves");
  perturb->add_option("--seed", seed, "seed for --random-size");
  auto* single_opt = perturb->add_flag("--all-single-leaves", all_single, "one report per bottom leaf");
  delete_opt->excludes(size_opt);
  single_opt->excludes(delete_opt);
  single_opt->excludes(size_opt);

  auto* verify = app.add_subcommand("verify-tables", "recompute the reference tables by closed form, DP and oracle");
  verify->add_flag("--json", as_json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*compute) {
      const ReportRow row = cmd_compute(input);
      out << format_rows(std::span(&row, 1), pick_format(as_json, as_csv));
      return kSuccess;
    }
    if (*oracle_cmd) return run_oracle(input, cap, enumerate, pick_format(as_json, as_csv), out);
    if (*generate) {
      if (out_path == "-") {
        out << generate_edge_list(spec);
      } else {
        cmd_generate(spec, out_path);
      }
      return kSuccess;
    }
    if (*perturb) {
      return run_perturb(h, deleted, size_opt->count() ? std::optional(random_size) : std::nullopt, seed,
                         all_single, out);
    }
    if (*verify) return run_verify(as_json, evaluators, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::MismatchDetected ? kMismatch : kUsageError;
  }
  return kUsageError;
}

}  // namespace dominion::cli
