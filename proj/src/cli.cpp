#include "qdyson/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdyson/json_io.hpp"

namespace qdyson::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string output = "text";
  std::string cache_path;
  int parallelism = 0;

  // eval
  std::string v_text;
  std::string lambda_text;
  std::string a_text;
  int m = 0;
  std::string mode = "cached";

  // verify / scan
  std::string suite;
  int n = 1;
  int max_a = 2;
  int min_a = 0;
  int max_weight = 4;
  int max_r = 4;
  std::string out_path;
};

class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageFailure("cannot write " + path);
    f << text;
    if (!f.flush()) throw UsageFailure("cannot write " + path);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw UsageFailure("cannot write " + path);
  }
}

void check_writable(const std::string& path) {
  const std::string tmp = path + ".tmp";
  std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageFailure("output path is not writable: " + path);
  f.close();
  std::error_code ec;
  fs::remove(tmp, ec);
}

std::optional<Json> read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  try {
    return Json::parse(f);
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

CTQuery query_from_flags(const Options& o) {
  CTQuery q;
  q.v = parse_int_list(o.v_text, "--v");
  q.lambda = parse_int_list(o.lambda_text, "--lambda");
  q.a = parse_int_list(o.a_text, "--a");
  q.m = o.m;
  if (q.v.empty()) throw UsageError("--v: at least one entry is required");
  if (q.a.size() != q.v.size()) throw UsageError("--a: expected " + std::to_string(q.v.size()) + " entries to match --v");
  for (int x : q.a) {
    if (x < 0) throw UsageError("--a: entries must be non-negative");
  }
  for (std::size_t i = 0; i < q.lambda.size(); ++i) {
    if (q.lambda[i] < 0) throw UsageError("--lambda: parts must be non-negative");
    if (i > 0 && q.lambda[i] > q.lambda[i - 1]) throw UsageError("--lambda: parts must be weakly decreasing");
  }
  q.n = static_cast<int>(q.v.size()) - 1;
  if (q.m < 0 || q.m > q.n + 1) throw UsageError("--m: must lie in 0.." + std::to_string(q.n + 1));
  return q;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const CTQuery q = query_from_flags(o);
  ComputeOptions opts;
  if (o.mode == "full") {
    opts.mode = Expansion::kFull;
  } else if (o.mode == "windowed") {
    opts.mode = Expansion::kWindowed;
  } else {
    opts.mode = Expansion::kCached;
  }
  const QLaurent value = compute_D(q, opts);
  if (o.output == "json") {
    out << dump({{"query", to_json(q)}, {"value", to_json(value)}});
  } else {
    out << value.to_string() << "\n";
  }
  return kExitOk;
}

Json box_json(const Options& o) {
  return {{"n", o.n}, {"max_a", o.max_a}, {"min_a", o.min_a}, {"max_weight", o.max_weight}, {"max_r", o.max_r}};
}

void print_report(const std::string& title, const Report& r, const Options& o, std::ostream& out) {
  if (o.output == "json") {
    out << dump(to_json(r));
    return;
  }
  out << title << ": checked " << r.checked << ", violations " << r.violations.size() << ", elapsed "
      << std::fixed << std::setprecision(3) << r.elapsed_s << " s\n";
  for (const auto& v : r.violations) {
    out << "  " << v.query.to_string() << ": expected " << (v.expected ? v.expected->to_string() : "nonzero")
        << ", got " << v.got.to_string();
    if (!v.note.empty()) out << " (" << v.note << ")";
    out << "\n";
  }
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    err << "verify: unknown suite '" << o.suite << "'; known suites:";
    for (const auto& s : names) err << ' ' << s;
    err << "\n";
    return kExitUsage;
  }
  if (o.n < 0 || o.max_a < 0 || o.min_a < 0 || o.max_weight < 0 || o.max_r < 0) {
    throw UsageError("verify: box bounds must be non-negative");
  }
  const std::string signature =
      content_hash(std::string(kEngineVersion) + "|verify|" + o.suite + "|" + box_json(o).dump());
  if (!o.cache_path.empty()) {
    if (auto cached = read_json_file(o.cache_path);
        cached && cached->is_object() && cached->value("signature", "") == signature) {
      try {
        const Report r = report_from_json(cached->at("report"));
        print_report("verify " + o.suite + " (cached)", r, o, out);
        return r.passed() ? kExitOk : kExitViolation;
      } catch (const UsageError&) {
        // Unreadable cache entries are recomputed.
      }
    }
    check_writable(o.cache_path);
  }
  SuiteBox box;
  box.n = o.n;
  box.max_a = o.max_a;
  box.min_a = o.min_a;
  box.max_weight = o.max_weight;
  box.max_r = o.max_r;
  box.workers = o.parallelism;
  const Report r = *run_suite(o.suite, box);
  if (!o.cache_path.empty()) {
    write_file_atomically(o.cache_path, dump({{"signature", signature}, {"suite", o.suite}, {"box", box_json(o)},
                                              {"engine", kEngineVersion}, {"report", to_json(r)}}));
  }
  print_report("verify " + o.suite, r, o, out);
  return r.passed() ? kExitOk : kExitViolation;
}

Json scan_document(const std::string& signature, const Json& box, const std::vector<CTQuery>& queries,
                   const std::map<CTQuery, QLaurent>& values) {
  Json rows = Json::array();
  std::size_t vanishing = 0;
  for (const auto& q : queries) {
    auto it = values.find(q);
    if (it == values.end()) continue;
    if (it->second.is_zero()) ++vanishing;
    rows.push_back({{"query", to_json(q)}, {"value", to_json(it->second)}});
  }
  const bool complete = rows.size() == queries.size();
  return {{"signature", signature}, {"engine", kEngineVersion}, {"box", box},
          {"complete", complete},   {"rows", std::move(rows)},  {"vanishing", vanishing}};
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.n < 0 || o.max_a < 1 || o.max_weight < 0) {
    throw UsageError("scan: need --n >= 0, --max-a >= 1, --max-weight >= 0");
  }
  const Json box = {{"n", o.n}, {"max_weight", o.max_weight}, {"max_a", o.max_a}};
  const std::string signature = content_hash(std::string(kEngineVersion) + "|scan|converse|" + box.dump());
  const std::string cache = o.cache_path.empty() ? o.out_path : o.cache_path;
  if (!o.out_path.empty()) check_writable(o.out_path);
  if (!cache.empty() && cache != o.out_path) check_writable(cache);

  const auto queries = converse_queries(o.n, o.max_weight, o.max_a);
  std::map<CTQuery, QLaurent> values;
  if (!cache.empty()) {
    if (auto doc = read_json_file(cache); doc && doc->is_object() && doc->value("signature", "") == signature) {
      try {
        for (const auto& row : doc->at("rows")) {
          values.emplace(query_from_json(row.at("query")), qlaurent_from_json(row.at("value")));
        }
      } catch (const std::exception&) {
        values.clear();
      }
    }
  }

  std::vector<CTQuery> todo;
  for (const auto& q : queries) {
    if (!values.count(q)) todo.push_back(q);
  }
  constexpr std::size_t kBatch = 256;
  for (std::size_t start = 0; start < todo.size(); start += kBatch) {
    const std::size_t end = std::min(todo.size(), start + kBatch);
    std::vector<QLaurent> batch(end - start);
    run_jobs(
        batch.size(),
        [&](std::size_t i) {
          batch[i] = compute_D(todo[start + i]);
          return Report{};
        },
        o.parallelism);
    for (std::size_t i = 0; i < batch.size(); ++i) values.emplace(todo[start + i], std::move(batch[i]));
    if (!cache.empty() && end < todo.size()) write_file_atomically(cache, dump(scan_document(signature, box, queries, values)));
  }

  const Json doc = scan_document(signature, box, queries, values);
  const std::string text = dump(doc);
  if (!cache.empty()) write_file_atomically(cache, text);
  if (!o.out_path.empty()) {
    if (o.out_path != cache) write_file_atomically(o.out_path, text);
  } else {
    out << text;
  }
  const std::size_t vanishing = doc.at("vanishing").get<std::size_t>();
  if (!o.out_path.empty() && o.output == "text") {
    out << "scan: " << queries.size() << " queries, " << vanishing << " vanishing, written to " << o.out_path << "\n";
  }
  return vanishing == 0 ? kExitOk : kExitViolation;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError(flag + ": empty entry in \"" + text + "\"");
    item = item.substr(first, last - first + 1);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError(flag + ": not an integer: \"" + item + "\"");
    }
    if (used != item.size()) throw UsageError(flag + ": not an integer: \"" + item + "\"");
    if (value < -1000000 || value > 1000000) throw UsageError(flag + ": entry out of range: " + item);
    out.push_back(static_cast<int>(value));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string content_hash(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact generalized q-Dyson constant terms", "qdyson"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--parallelism", o.parallelism, "Worker threads (QDYSON_THREADS overrides)");
  };

  auto* eval = app.add_subcommand("eval", "Evaluate one constant term D_{v,lambda}(a,m)");
  eval->add_option("--v", o.v_text, "Exponent vector, comma separated")->required();
  eval->add_option("--lambda", o.lambda_text, "Partition, comma separated; empty string for the empty partition");
  eval->add_option("--a", o.a_text, "Composition a, comma separated")->required();
  eval->add_option("--m", o.m, "Shift index m in 0..n+1");
  eval->add_option("--mode", o.mode, "Expansion strategy")->check(CLI::IsMember({"cached", "full", "windowed"}));
  add_common(eval);

  auto* verify = app.add_subcommand("verify", "Run a verification suite over a parameter box");
  verify->add_option("--suite", o.suite, "Suite name")->required();
  verify->add_option("--n", o.n, "Number of variables minus one");
  verify->add_option("--max-a", o.max_a, "Largest a_i");
  verify->add_option("--min-a", o.min_a, "Smallest a_i");
  verify->add_option("--max-weight", o.max_weight, "Largest |v| (sum |v_i| for signed scans)");
  verify->add_option("--max-r", o.max_r, "Largest r for Kadell's formula");
  verify->add_option("--cache", o.cache_path, "Report cache file");
  add_common(verify);

  auto* scan = app.add_subcommand("scan", "Tabulate D_{v,lambda}(a) for v+ >= lambda (converse evidence)");
  scan->add_option("--n", o.n, "Number of variables minus one");
  scan->add_option("--max-weight", o.max_weight, "Largest |v|");
  scan->add_option("--max-a", o.max_a, "Largest a_i (a_i >= 1)");
  scan->add_option("--out", o.out_path, "Result file");
  scan->add_option("--cache", o.cache_path, "Resumable cache file (defaults to --out)");
  add_common(scan);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (scan->parsed()) return cmd_scan(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qdyson::cli
