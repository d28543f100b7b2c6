#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "posat/posat.h"

namespace posat::cli {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// C handle plumbing

struct ApiError : std::runtime_error {
  posat_status status;
  ApiError(posat_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void ok(posat_status s) {
  if (s != POSAT_OK) throw ApiError(s, posat_last_error());
}

struct PosetDel {
  void operator()(posat_poset* p) const { posat_poset_free(p); }
};
struct FamilyDel {
  void operator()(posat_family* f) const { posat_family_free(f); }
};
struct ResultDel {
  void operator()(posat_result* r) const { posat_result_free(r); }
};
struct StringDel {
  void operator()(char* s) const { posat_string_free(s); }
};
struct MasksDel {
  void operator()(uint32_t* m) const { posat_masks_free(m); }
};

using PosetPtr = std::unique_ptr<posat_poset, PosetDel>;
using FamilyPtr = std::unique_ptr<posat_family, FamilyDel>;
using ResultPtr = std::unique_ptr<posat_result, ResultDel>;
using StringPtr = std::unique_ptr<char, StringDel>;

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PosetPtr load_poset(const std::string& spec) {
  posat_poset* p = nullptr;
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec))
    ok(posat_poset_from_json(read_file(spec).c_str(), &p));
  else
    ok(posat_poset_named(spec.c_str(), 0, &p));
  return PosetPtr(p);
}

FamilyPtr load_family(const std::string& path) {
  posat_family* f = nullptr;
  ok(posat_family_from_json(read_file(path).c_str(), &f));
  return FamilyPtr(f);
}

posat_mode mode_of(const Command& c) { return c.induced ? POSAT_INDUCED : POSAT_WEAK; }
const char* mode_name(const Command& c) { return c.induced ? "induced" : "weak"; }

json elements(uint32_t mask) {
  json out = json::array();
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) out.push_back(i + 1);
  return out;
}

std::string set_text(uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask >> i & 1u) {
      out += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

std::string set_text(const json& list) {
  std::string out = "{";
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? "," : "") + std::to_string(list[i].get<int>());
  return out + "}";
}

// Two-column "key   value" block.
class Text {
 public:
  Text& row(const std::string& key, const std::string& value) {
    rows_.emplace_back(key, value);
    return *this;
  }
  Text& row(const std::string& key, long long value) { return row(key, std::to_string(value)); }
  Text& flag(const std::string& key, bool value) { return row(key, value ? "yes" : "no"); }

  std::string str() const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows_) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
    return out.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

// Indented JSON with arrays of scalars kept on one line, so set lists stay readable.
void emit(const json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      emit(it.value(), depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      emit(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else {
    out += j.dump();
  }
}

std::string pretty(const json& j) {
  std::string out;
  emit(j, 0, out);
  return out + "\n";
}

// ---------------------------------------------------------------------------
// Verbs

Report do_poset(const Command& c) {
  PosetPtr p = c.file.empty() ? load_poset(c.name) : [&] {
    posat_poset* raw = nullptr;
    ok(posat_poset_from_json(read_file(c.file).c_str(), &raw));
    return PosetPtr(raw);
  }();
  Report r;
  r.machine = c.dot ? take([&] {
    char* s = nullptr;
    ok(posat_poset_to_dot(p.get(), &s));
    return s;
  }())
                    : pretty(json::parse(take([&] {
                        char* s = nullptr;
                        ok(posat_poset_to_json(p.get(), &s));
                        return s;
                      }())));

  int holds = 0, in_class = 0, violating = -1;
  ok(posat_poset_check_uctp(p.get(), &holds, &in_class, &violating));
  posat_poset* dual = nullptr;
  ok(posat_poset_dual(p.get(), &dual));
  PosetPtr dual_owned(dual);
  int self_dual = 0;
  if (posat_poset_size(p.get()) <= 10) ok(posat_poset_isomorphic(p.get(), dual, &self_dual, nullptr));
  size_t covers = 0;
  ok(posat_poset_covers(p.get(), nullptr, 0, &covers));

  Text t;
  t.row("elements", posat_poset_size(p.get()))
      .row("covers", static_cast<long long>(covers))
      .flag("uctp", holds != 0)
      .flag("in class P", in_class != 0)
      .flag("self-dual", self_dual != 0);
  if (violating >= 0) t.row("violating", violating);
  r.human = t.str();
  return r;
}

Report do_check(const Command& c) {
  FamilyPtr f = load_family(c.family);
  PosetPtr p = load_poset(c.poset);
  const posat_mode mode = mode_of(c);

  Report r;
  json out;
  out["mode"] = mode_name(c);
  out["poset"] = c.poset;

  int is_free = 0;
  ok(posat_is_free(f.get(), p.get(), mode, &is_free));
  out["free"] = is_free != 0;
  Text t;
  t.row("poset", c.poset).row("mode", mode_name(c)).row("family size", static_cast<long long>(posat_family_size(f.get())));
  t.flag("free", is_free != 0);

  bool saturated = false;
  if (is_free) {
    uint32_t* raw = nullptr;
    size_t count = 0;
    ok(posat_unsaturated_witnesses(f.get(), p.get(), mode, &raw, &count));
    std::unique_ptr<uint32_t, MasksDel> w(raw);
    json witnesses = json::array();
    for (size_t i = 0; i < count; ++i) witnesses.push_back(elements(w.get()[i]));
    saturated = count == 0;
    out["embedding"] = nullptr;
    out["witnesses"] = witnesses;
    t.flag("saturated", saturated);
    if (count) t.row("addable set", set_text(w.get()[0])).row("addable total", static_cast<long long>(count));
  } else {
    char* s = nullptr;
    ok(posat_find_copy_json(f.get(), p.get(), mode, &s));
    const json embedding = json::parse(take(s));
    out["embedding"] = embedding;
    out["witnesses"] = json::array();
    t.flag("saturated", false);
    for (const auto& m : embedding["map"]) t.row("  " + m["element"].get<std::string>(), set_text(m["set"]));
  }
  out["saturated"] = saturated;

  if (c.assert_property == "free")
    r.exit_code = is_free ? kSuccess : kPropertyFails;
  else if (c.assert_property == "saturated")
    r.exit_code = saturated ? kSuccess : kPropertyFails;
  if (!c.assert_property.empty()) t.row("asserted", c.assert_property + (r.exit_code == kSuccess ? " (holds)" : " (fails)"));
  r.machine = pretty(out);
  r.human = t.str();
  return r;
}

Report do_search(const Command& c) {
  PosetPtr p = load_poset(c.poset);
  posat_search_options opts;
  posat_search_options_init(&opts);
  opts.max_size = c.max_size;
  opts.symmetry = c.symmetry;
  opts.theorem_pruning = c.theorem_pruning;
  opts.threads = c.threads;
  opts.max_n = c.max_n;
  opts.collect_all_minimum = c.all_minimum;
  opts.time_limit = c.time_limit;
  const uint32_t extremes[2] = {0u, c.n >= 1 && c.n <= 31 ? (1u << c.n) - 1u : 0u};
  if (c.avoid_extremes) {
    opts.excluded = extremes;
    opts.excluded_count = 2;
  }
  posat_result* raw = nullptr;
  ok(posat_search(c.n, p.get(), mode_of(c), &opts, &raw));
  ResultPtr res(raw);

  char* s = nullptr;
  ok(posat_result_to_json(res.get(), &s));
  json out = json::parse(take(s));
  out["n"] = c.n;
  out["poset"] = c.poset;
  out["mode"] = mode_name(c);

  Report r;
  r.machine = pretty(out);
  Text t;
  t.row("poset", c.poset).row("mode", mode_name(c)).row("n", c.n);
  t.row("value", out["value"].is_null() ? std::string("none") : std::to_string(out["value"].get<int>()));
  t.flag("exhaustive", out["exhaustive"].get<bool>());
  t.row("examined", std::to_string(out["families_examined"].get<std::uint64_t>()));
  t.row("searched up to", out["searched_up_to"].get<int>());
  t.row("lower start", out["lower_start"].get<int>());
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(3) << posat_result_wall_time(res.get()) << " s";
  t.row("wall time", secs.str());
  if (!out["certificate"].is_null()) {
    std::string sets;
    for (const auto& set : out["certificate"]["sets"]) sets += (sets.empty() ? "" : " ") + set_text(set);
    t.row("certificate", sets);
  }
  r.human = t.str();
  return r;
}

Report do_construct(const Command& c) {
  posat_family* raw = nullptr;
  char* sidecar = nullptr;
  ok(posat_construct(c.name.c_str(), c.n, c.k.value_or(0), c.ell.value_or(0),
                     c.target.empty() ? nullptr : c.target.c_str(), c.verify, &raw, &sidecar));
  FamilyPtr f(raw);
  const json meta = json::parse(take(sidecar));
  char* s = nullptr;
  ok(posat_family_to_json(f.get(), &s));
  const json family = json::parse(take(s));

  Report r;
  r.machine = pretty({{"family", family}, {"sidecar", meta}});
  const bool verified = meta["verified"].get<bool>();
  if (c.verify && !verified) r.exit_code = kPropertyFails;
  Text t;
  t.row("construction", meta["construction"].get<std::string>())
      .row("n", c.n)
      .row("size", static_cast<long long>(posat_family_size(f.get())))
      .row("expected", meta["expected_size"].get<long long>())
      .row("verified", c.verify ? (verified ? "yes" : "NO") : "skipped");
  for (const auto& target : meta["targets"])
    t.row("target", target["poset"].get<std::string>() + " (" + target["mode"].get<std::string>() + ")");
  r.human = t.str();
  return r;
}

Report do_sepgraph(const Command& c) {
  FamilyPtr f = load_family(c.family);
  Report r;
  char* s = nullptr;
  if (c.dot) {
    ok(posat_separability_graph_dot(f.get(), &s));
    r.machine = take(s);
  } else {
    ok(posat_separability_graph_json(f.get(), &s));
    r.machine = pretty(json::parse(take(s)));
  }
  int all = 0, x = 0, y = 0;
  ok(posat_separates_all_pairs(f.get(), &all, &x, &y));
  Text t;
  t.row("vertices", posat_family_ground(f.get())).flag("complete", all != 0);
  if (!all) t.row("first missing", "{" + std::to_string(x) + "," + std::to_string(y) + "}");
  if (posat_family_ground(f.get()) <= 10) {
    int bound = 0;
    ok(posat_family_size_lower_bound(f.get(), &bound));
    t.row("bc", bound).row("family size", static_cast<long long>(posat_family_size(f.get())));
  }
  r.human = t.str();
  return r;
}

Report do_bc(const Command& c) {
  int value = 0;
  char* s = nullptr;
  ok(posat_bc_exact_json(read_file(c.graph).c_str(), &value, &s));
  const json cover = json::parse(take(s));
  Report r;
  r.machine = pretty(cover);
  Text t;
  t.row("bc", value);
  int i = 0;
  for (const auto& b : cover["bicliques"]) t.row("  #" + std::to_string(++i), set_text(b["left"]) + " x " + set_text(b["right"]));
  r.human = t.str();
  return r;
}

std::string cell(const json& v) { return v.is_null() ? std::string() : v.dump(); }

Report do_table(const Command& c) {
  char* s = nullptr;
  ok(posat_table_json(c.poset.c_str(), mode_of(c), c.n_lo, c.n_hi, c.compute_up_to, c.threads, &s));
  const json rows = json::parse(take(s));
  static const char* cols[] = {"n", "uctp_bound", "paper_bound_low", "paper_bound_high", "computed_or_construction",
                               "source"};
  Report r;
  std::ostringstream out;
  if (c.format == "json") {
    out << pretty(rows);
  } else if (c.format == "csv") {
    for (int i = 0; i < 6; ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& row : rows) {
      for (int i = 0; i < 6; ++i) {
        const json& v = row[cols[i]];
        out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : cell(v));
      }
      out << "\n";
    }
  } else {
    std::vector<std::vector<std::string>> grid(1);
    for (const char* col : cols) grid[0].push_back(col);
    for (const auto& row : rows) {
      grid.emplace_back();
      for (const char* col : cols) {
        const json& v = row[col];
        grid.back().push_back(v.is_string() ? v.get<std::string>() : v.is_null() ? "-" : v.dump());
      }
    }
    std::vector<std::size_t> width(6, 0);
    for (const auto& line : grid)
      for (int i = 0; i < 6; ++i) width[i] = std::max(width[i], line[i].size());
    for (const auto& line : grid) {
      for (int i = 0; i < 5; ++i) out << std::left << std::setw(static_cast<int>(width[i]) + 2) << line[i];
      out << line[5];
      out << "\n";
    }
  }
  r.machine = out.str();
  Text t;
  t.row("poset", c.poset).row("mode", mode_name(c)).row("rows", static_cast<long long>(rows.size()));
  r.human = t.str();
  return r;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--n-range: expected a..b, got '" + text + "'");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used_a), hi = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing");
    if (lo < 1 || hi < lo) throw UsageError("--n-range: need 1 <= a <= b, got '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--n-range: expected a..b, got '" + text + "'");
  }
}

struct ModeFlags {
  CLI::App* owner;
  CLI::Option* induced;
  CLI::Option* weak;
};

void add_mode(CLI::App* sub, Command& c, std::vector<ModeFlags>& modes) {
  auto* induced = sub->add_flag("--induced", c.induced, "Induced containment");
  auto* weak = sub->add_flag("--weak", "Weak containment");
  induced->excludes(weak);
  weak->excludes(induced);
  modes.push_back({sub, induced, weak});
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  Command c;
  CLI::App app{"Saturation numbers of posets in the Boolean lattice", "posat-cli"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every verb");

  std::vector<ModeFlags> modes;

  auto* poset = app.add_subcommand("poset", "Describe a catalog or JSON poset");
  auto* poset_name = poset->add_option("--name", c.name, "Catalog name, e.g. diamond-2");
  auto* poset_file = poset->add_option("--file", c.file, "Poset JSON file");
  poset_name->excludes(poset_file);
  poset_file->excludes(poset_name);
  poset->add_flag("--dot", c.dot, "Emit a DOT rendering");

  auto* check = app.add_subcommand("check", "Check freeness and saturation of a family");
  check->add_option("--family", c.family, "Family JSON file")->required();
  check->add_option("--poset", c.poset, "Catalog name or poset JSON file")->required();
  check->add_option("--assert", c.assert_property, "Property whose failure gives exit 1")
      ->check(CLI::IsMember({"free", "saturated"}));
  add_mode(check, c, modes);

  auto* search = app.add_subcommand("search", "Exact minimum saturated family");
  search->add_option("--n", c.n, "Ground set size")->required();
  search->add_option("--poset", c.poset, "Catalog name or poset JSON file")->required();
  search->add_option("--max-size", c.max_size, "Largest family size to try");
  search->add_flag("--no-symmetry{false}", c.symmetry, "Disable orbit pruning");
  search->add_flag("--no-theorem-pruning{false}", c.theorem_pruning, "Start at size 1 regardless of UCTP");
  search->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 256));
  search->add_option("--max-n", c.max_n, "Refuse larger n (exit 3)");
  search->add_option("--time-limit", c.time_limit, "Seconds before giving up");
  search->add_flag("--all-minimum", c.all_minimum, "Report every minimum orbit representative");
  search->add_flag("--avoid-extremes", c.avoid_extremes, "Forbid the empty set and [n]");
  add_mode(search, c, modes);

  auto* construct = app.add_subcommand("construct", "Build and verify an explicit family");
  construct->add_option("--name", c.name, "Construction name")
      ->required()
      ->check(CLI::IsMember({"chains", "antichain", "N", "butterfly", "diamond-interior", "weaksat", "q-example"},
                            CLI::ignore_case));
  construct->add_option("--n", c.n, "Ground set size")->required();
  construct->add_option("--k", c.k, "Chain count / antichain bound");
  construct->add_option("--ell", c.ell, "Odd base dimension of the antichain construction");
  construct->add_option("--target", c.target, "Target poset for weaksat");
  construct->add_flag("--no-verify{false}", c.verify, "Skip the saturation check");

  auto* sepgraph = app.add_subcommand("sepgraph", "Separability graph of a family");
  sepgraph->add_option("--family", c.family, "Family JSON file")->required();
  sepgraph->add_flag("--dot", c.dot, "Emit a DOT rendering");

  auto* bc = app.add_subcommand("bc", "Exact biclique cover number");
  bc->add_option("--graph", c.graph, "Graph JSON file")->required();

  auto* table = app.add_subcommand("table", "Bounds and values over a range of n");
  std::string range;
  table->add_option("--poset", c.poset, "Catalog key")->required();
  table->add_option("--n-range", range, "a..b")->required();
  table->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  table->add_option("--compute-up-to", c.compute_up_to, "Search rows with n at most this");
  table->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 256));
  add_mode(table, c, modes);

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--out", c.out, "Write the machine section here instead of stdout");
    sub->add_flag("--quiet", c.quiet, "Suppress the human summary");
  }

  static const std::vector<std::string> verbs{"poset", "check", "search", "construct", "sepgraph", "bc", "table"};
  if (!args.empty() && !args.front().starts_with("-") &&
      std::find(verbs.begin(), verbs.end(), args.front()) == verbs.end())
    throw UsageError("unknown verb '" + args.front() + "'");
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    c.verb = "help";
    c.name = app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help();
    return c;
  } catch (const CLI::CallForAllHelp&) {
    c.verb = "help";
    c.name = app.help("", CLI::AppFormatMode::All);
    return c;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  c.verb = chosen->get_name();
  if (chosen == poset && c.name.empty() && c.file.empty()) throw UsageError("poset: one of --name or --file is required");
  for (const auto& m : modes)
    if (m.owner == chosen && m.induced->count() + m.weak->count() != 1)
      throw UsageError(c.verb + ": exactly one of --induced or --weak is required");
  if (chosen == table) std::tie(c.n_lo, c.n_hi) = parse_range(range);
  if (chosen == construct && c.name == "weaksat" && c.target.empty())
    throw UsageError("construct: --target is required for weaksat");
  return c;
}

Report execute(const Command& c) {
  try {
    if (c.verb == "help") return {kSuccess, c.name, ""};
    if (c.verb == "poset") return do_poset(c);
    if (c.verb == "check") return do_check(c);
    if (c.verb == "search") return do_search(c);
    if (c.verb == "construct") return do_construct(c);
    if (c.verb == "sepgraph") return do_sepgraph(c);
    if (c.verb == "bc") return do_bc(c);
    if (c.verb == "table") return do_table(c);
    return {kUsage, "", "unknown verb '" + c.verb + "'\n"};
  } catch (const UsageError& e) {
    return {kUsage, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ApiError& e) {
    const std::string message = std::string("error (") + posat_status_name(e.status) + "): " + e.what() + "\n";
    switch (e.status) {
      case POSAT_ERR_INSTANCE_TOO_LARGE: return {kTooLarge, "", message};
      case POSAT_ERR_INTERNAL:
      case POSAT_ERR_NOT_FREE: return {kPropertyFails, "", message};
      default: return {kUsage, "", message};
    }
  } catch (const json::exception& e) {
    return {kPropertyFails, "", std::string("error: malformed library output: ") + e.what() + "\n"};
  }
}

Report run(const std::vector<std::string>& args) {
  try {
    return execute(parse_command(args));
  } catch (const UsageError& e) {
    return {kUsage, "", std::string("usage error: ") + e.what() + "\nRun with --help for the list of verbs.\n"};
  }
}

}  // namespace posat::cli
