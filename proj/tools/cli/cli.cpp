#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "render.hpp"
#include "runpoly/distributions.hpp"
#include "runpoly/errors.hpp"
#include "runpoly/lattice_path.hpp"
#include "runpoly/permutation.hpp"
#include "verify.hpp"

namespace runpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kFormats{"json", "csv", "text"};

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string dump(const Json& record) { return record.dump(2) + "\n"; }

Json envelope(const std::string& command, Json parameters, const std::string& format, Json payload) {
  Json record;
  record["command"] = command;
  record["parameters"] = std::move(parameters);
  record["format"] = format;
  record["payload"] = std::move(payload);
  return record;
}

struct TableArgs {
  std::string statistic;
  int n = 0;
  std::optional<int> j;
};

std::string emit_table(const TableArgs& args, const std::string& format, const TableOptions& options) {
  const auto statistic = parse_statistic(args.statistic);
  if (!statistic) throw InvalidArgument("unknown statistic '" + args.statistic + "'");
  if (*statistic == Statistic::t && !args.j) throw InvalidArgument("table t needs --j");
  if (*statistic != Statistic::t && args.j) throw InvalidArgument("--j only applies to table t");
  const DistributionTable table = build_table(*statistic, args.n, args.j.value_or(0), options);

  if (format == "csv") {
    std::string out = "n,k,count\n";
    for (const auto& [k, c] : table.counts()) {
      out += std::to_string(args.n) + "," + std::to_string(k) + "," + c.str() + "\n";
    }
    return out;
  }
  if (format == "text") {
    std::ostringstream out;
    out << args.statistic << " n=" << args.n;
    if (args.j) out << " j=" << *args.j;
    out << "\nk\tcount\n";
    for (const auto& [k, c] : table.counts()) out << k << '\t' << c.str() << '\n';
    out << "total\t" << table.total().str() << '\n';
    return out.str();
  }
  Json parameters{{"statistic", args.statistic}, {"n", args.n}};
  if (args.j) parameters["j"] = *args.j;
  Json payload;
  payload["type"] = "table";
  payload["statistic"] = args.statistic;
  payload["n"] = args.n;
  if (args.j) payload["j"] = *args.j;
  payload["rows"] = Json::array();
  for (const auto& [k, c] : table.counts()) payload["rows"].push_back({{"k", k}, {"count", c.str()}});
  payload["total"] = table.total().str();
  payload["polynomial"] = table.polynomial().str();
  return dump(envelope("table", std::move(parameters), format, std::move(payload)));
}

std::string status_of(const Check& c) { return c.skipped ? "skip" : c.passed ? "pass" : "fail"; }

std::string emit_verify(const std::string& target, const VerifyParams& params,
                        const std::string& format, const VerifyReport& report) {
  if (format == "csv") {
    std::string out = "target,check,status,detail\n";
    for (const auto& c : report.checks) {
      out += target + "," + csv_field(c.name) + "," + status_of(c) + "," + csv_field(c.detail) + "\n";
    }
    return out;
  }
  if (format == "text") {
    std::ostringstream out;
    out << "verify " << target << " n=" << params.n << '\n';
    for (const auto& c : report.checks) {
      std::string tag = status_of(c);
      std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
      out << tag << "  " << c.name << ": " << c.detail << '\n';
    }
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }
  Json parameters{{"target", target}, {"n", params.n}};
  if (params.k) parameters["k"] = *params.k;
  if (params.j) parameters["j"] = *params.j;
  if (params.i) parameters["i"] = *params.i;
  if (params.restriction) parameters["restriction"] = std::string(to_string(*params.restriction));
  Json payload;
  payload["type"] = "verify";
  payload["target"] = target;
  payload["passed"] = report.passed();
  payload["checks"] = Json::array();
  for (const auto& c : report.checks) {
    payload["checks"].push_back({{"name", c.name}, {"status", status_of(c)}, {"detail", c.detail}});
  }
  for (const auto& [key, value] : report.payload.items()) payload[key] = value;
  return dump(envelope("verify", std::move(parameters), format, std::move(payload)));
}

LabeledPath parse_path_json(const std::string& text) {
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed path JSON: ") + e.what());
  }
  if (!parsed.is_array() || parsed.empty()) throw InvalidArgument("path JSON must be a non-empty array");
  std::vector<Edge> edges;
  for (const auto& item : parsed) {
    if (!item.is_object() || !item.contains("dir") || !item.contains("label") ||
        !item["dir"].is_string() || !item["label"].is_number_integer()) {
      throw InvalidArgument("each edge needs a string \"dir\" and an integer \"label\"");
    }
    const auto dir = item["dir"].get<std::string>();
    if (dir != "H" && dir != "V") throw InvalidArgument("edge dir must be \"H\" or \"V\", got \"" + dir + "\"");
    const auto label = item["label"].get<long long>();
    if (label < 1 || label > 1'000'000) throw InvalidArgument("edge label out of range");
    edges.push_back({dir == "H" ? Direction::horizontal : Direction::vertical, static_cast<int>(label)});
  }
  LabeledPath path(std::move(edges));
  if (auto v = validate(path)) throw InvalidArgument("invalid path: " + describe(*v));
  return path;
}

std::string emit_draw(const std::optional<std::string>& perm_text,
                      const std::optional<std::string>& path_text, const std::string& format) {
  std::optional<Permutation> perm;
  LabeledPath path;
  if (perm_text) {
    perm = Permutation::parse(*perm_text);
    path = perm_to_path(*perm);
  } else {
    path = parse_path_json(*path_text);
    perm = path_to_perm(path);
  }
  const auto rows = render_path(path);

  if (format == "csv") {
    std::string out = "index,dir,label\n";
    for (int i = 1; i <= path.size(); ++i) {
      out += std::to_string(i) + "," + (path.edge(i).dir == Direction::horizontal ? "H" : "V") + "," +
             std::to_string(path.edge(i).label) + "\n";
    }
    return out;
  }
  if (format == "text") {
    std::string out = "permutation: " + perm->str() + "\nedges: " + path.str() + "\n\n";
    for (const auto& row : rows) out += row + "\n";
    return out;
  }
  Json parameters;
  if (perm_text) parameters["perm"] = *perm_text;
  if (path_text) parameters["path"] = *path_text;
  Json payload;
  payload["type"] = "path";
  payload["permutation"] = perm->str();
  payload["edges"] = Json::array();
  for (const auto& e : path.edges()) {
    payload["edges"].push_back({{"dir", e.dir == Direction::horizontal ? "H" : "V"}, {"label", e.label}});
  }
  payload["rows"] = rows;
  return dump(envelope("draw", std::move(parameters), format, std::move(payload)));
}

TableOptions table_options(const std::optional<int>& max_n, const std::optional<std::uint64_t>& max_pairs,
                           int workers) {
  TableOptions options;
  if (max_n) options.limits = Limits::with_max_n(*max_n);
  if (max_pairs) options.limits.max_pairs = *max_pairs;
  options.workers = workers;
  return options;
}

}  // namespace

Result run(const std::vector<std::string>& args, std::optional<std::string> default_format) {
  Result result;
  std::string format = default_format.value_or("text");
  if (std::find(kFormats.begin(), kFormats.end(), format) == kFormats.end()) {
    result.exit_code = kUsage;
    result.err = "error: default format '" + format + "' is not one of json, csv, text\n";
    return result;
  }

  CLI::App app{"Run and descent statistics of permutations, labeled lattice paths and log-concavity checks",
               "runpoly"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "runpoly 0.1.0");

  std::optional<int> max_n;
  std::optional<std::uint64_t> max_pairs;
  int workers = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(kFormats));
    sub->add_option("--max-n", max_n, "Raise the enumeration ceilings to this n")->check(CLI::Range(1, 20));
    sub->add_option("--workers", workers, "Worker threads for tables (0 = all cores)")->check(CLI::NonNegativeNumber);
  };

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print a distribution table");
  table->add_option("statistic", table_args.statistic, "runs | descents | half-ascending | t | odd-t")
      ->required()
      ->check(CLI::IsMember({"runs", "descents", "half-ascending", "t", "odd-t"}));
  table->add_option("--n", table_args.n, "Permutation length")->required();
  table->add_option("--j", table_args.j, "Half-ascending index for the t statistic");
  add_common(table);

  std::string target;
  VerifyParams params;
  std::optional<std::string> restriction;
  bool no_timing = false;
  std::vector<std::string> targets = verify_targets();
  targets.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("target", target, "Verification target or 'all'")->required()->check(CLI::IsMember(targets));
  verify->add_option("--n", params.n, "Permutation or path length")->required();
  verify->add_option("--k", params.k, "Vertical count / descent count");
  verify->add_option("--j", params.j, "Half-ascending index");
  verify->add_option("--i", params.i, "Position of the swapped pair");
  verify->add_option("--restriction", restriction, "all | V | Vprime")
      ->check(CLI::IsMember({"all", "V", "Vprime"}));
  verify->add_option("--max-pairs", max_pairs, "Raise the per-cell pair ceiling of phi audits");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed times so output is byte-stable");
  add_common(verify);

  std::optional<std::string> perm_text;
  std::optional<std::string> path_text;
  auto* draw = app.add_subcommand("draw", "Draw the labeled path of a permutation or edge list");
  auto* input = draw->add_option_group("input", "Exactly one of --perm and --path");
  input->add_option("--perm", perm_text, "Permutation, e.g. 243165 or '10 2 3 ...'");
  input->add_option("--path", path_text, "JSON edge list, e.g. [{\"dir\":\"H\",\"label\":1}]");
  input->require_option(1);
  draw->add_option("--format", format, "Output format")->check(CLI::IsMember(kFormats));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kPass : kUsage;
    return result;
  }

  try {
    if (*table) {
      result.out = emit_table(table_args, format, table_options(max_n, max_pairs, workers));
    } else if (*verify) {
      params.table = table_options(max_n, max_pairs, workers);
      params.timing = !no_timing;
      if (restriction) params.restriction = parse_restriction(*restriction);
      const VerifyReport report = run_verify(target, params);
      result.out = emit_verify(target, params, format, report);
      result.exit_code = report.passed() ? kPass : kViolation;
    } else if (*draw) {
      result.out = emit_draw(perm_text, path_text, format);
    }
  } catch (const InvalidArgument& e) {
    result = Result{kUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const GuardViolation& e) {
    result = Result{kGuard, "", std::string("refused: ") + e.what() + "\n"};
  } catch (const NoIntersection& e) {
    result = Result{kViolation, "", std::string("violation: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace runpoly::cli
