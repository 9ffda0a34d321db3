#include "npbrace/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "npbrace/reference_tables.hpp"

namespace npbrace {

using nlohmann::json;

namespace {

const std::map<Command, std::string>& command_names() {
  static const std::map<Command, std::string> names{{Command::group_info, "group-info"},
                                                    {Command::regular, "regular"},
                                                    {Command::braces, "braces"},
                                                    {Command::hgs, "hgs"},
                                                    {Command::verify_paper, "verify-paper"}};
  return names;
}

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

FiniteGroup parse_atom(const std::string& s, std::size_t begin, std::size_t end) {
  std::size_t digits = begin;
  while (digits < end && std::isalpha(static_cast<unsigned char>(s[digits]))) ++digits;
  const std::string name = s.substr(begin, digits - begin);
  if (name.empty()) throw ParseError("expected a group name", begin);
  if (digits == end) throw ParseError("expected an order after '" + name + "'", digits);
  std::size_t n = 0;
  for (std::size_t i = digits; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("unexpected character", i);
    n = n * 10 + static_cast<std::size_t>(s[i] - '0');
    if (n > 1000000) throw ParseError("order too large", digits);
  }
  if (n == 0) throw ParseError("order must be positive", digits);
  if (name == "C" || name == "Z") return make_cyclic(n);
  if (name == "A" && n == 4) return make_alternating4();
  if (name == "D") {
    if (n % 2 || n < 2) throw ParseError("dihedral order must be even", digits);
    return make_dihedral(n);
  }
  if (name == "Dic") {
    if (n % 4) throw ParseError("dicyclic order must be a multiple of 4", digits);
    return make_dicyclic(n);
  }
  if (name == "Q" && n == 8) return make_dicyclic(8);
  throw ParseError("unknown group '" + s.substr(begin, end - begin) + "'", begin);
}

FiniteGroup parse_group_or_usage(const RunConfig& c) {
  if (c.group_spec.empty()) throw UsageError("--group is required");
  return parse_group_spec(c.group_spec);
}

json census_json(const BraceCensus& c) { return json(c); }

// ---- commands -------------------------------------------------------------

json group_info(const RunConfig& c) {
  const auto g = parse_group_or_usage(c);
  const auto fp = fingerprint(g);
  json j{{"group", group_label(g)},
         {"order", g.order()},
         {"abelian", g.is_abelian()},
         {"center_order", fp.center_order},
         {"derived_order", fp.derived_order},
         {"abelianization", fp.abelianization},
         {"class_sizes", fp.class_sizes}};
  json hist = json::object();
  for (std::size_t k = 0; k < fp.order_histogram.size(); ++k)
    if (fp.order_histogram[k]) hist[std::to_string(k)] = fp.order_histogram[k];
  j["element_orders"] = hist;
  j["automorphisms"] = count_automorphisms(g, std::max<std::size_t>(c.bound, kVerifyBound));
  if (g.is_abelian()) {
    j["invariants"] = abelian_invariants(g);
    j["holomorph_order"] = g.order() * j["automorphisms"].get<std::size_t>();
  }
  return j;
}

json regular(const RunConfig& c) {
  const auto g = parse_group_or_usage(c);
  if (!g.is_abelian()) throw UsageError("regular: --group must be abelian");
  const auto h = holomorph(g, c.bound);
  const auto cls = classify_regular_full(h, {c.threads, {}});
  std::vector<std::string> types = g.order() == 12 ? order12_types() : std::vector<std::string>{};
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_type;  // subgroups, classes
  json classes = json::array();
  for (const auto& k : cls.classes) {
    if (std::find(types.begin(), types.end(), k.iso_label) == types.end()) types.push_back(k.iso_label);
    by_type[k.iso_label].first += k.orbit_length;
    by_type[k.iso_label].second += 1;
    classes.push_back({{"multiplicative", k.iso_label}, {"orbit_length", k.orbit_length}});
  }
  json counts = json::array();
  for (const auto& t : types)
    counts.push_back({{"multiplicative", t}, {"subgroups", by_type[t].first}, {"classes", by_type[t].second}});
  return {{"group", group_label(g)},
          {"holomorph_order", h.order()},
          {"subgroups", cls.subgroups.size()},
          {"class_count", cls.classes.size()},
          {"counts", counts},
          {"classes", classes}};
}

json braces(const RunConfig& c) {
  if (c.n == 0) throw UsageError("braces: --n is required");
  const CountOptions opts{c.threads, c.bound};
  if (c.p == 0) return {{"census", census_json(brace_count_bruteforce(c.n, opts))}, {"classes", json::array()}};
  const auto census = brace_count(c.n, c.p, opts);
  json classes = json::array();
  for (const auto& inv : abelian_types(c.n)) {
    const auto e = make_abelian(inv);
    for (const auto& k : classify_pairs(e, c.p, {c.threads, {}}, c.bound)) {
      json jk = k;
      jk["additive"] = group_label(e);
      classes.push_back(std::move(jk));
    }
  }
  return {{"census", census_json(census)}, {"classes", classes}};
}

json hgs(const RunConfig& c) {
  if (c.p == 0) throw UsageError("hgs: --p is required");
  std::vector<FiniteGroup> es;
  if (!c.group_spec.empty()) {
    es.push_back(parse_group_spec(c.group_spec));
    if (!es.back().is_abelian()) throw UsageError("hgs: --group must be abelian");
  } else {
    for (const auto& inv : abelian_types(c.n ? c.n : 12)) es.push_back(make_abelian(inv));
  }
  json tables = json::array();
  for (const auto& e : es) tables.push_back(hgs_table(c.p, e, true, {c.threads, c.bound}));
  return {{"tables", tables}};
}

// ---- golden checks --------------------------------------------------------

struct Checker {
  json items = json::array();
  bool ok = true;

  void add(std::string name, const json& expected, const json& actual) {
    const bool pass = expected == actual;
    ok = ok && pass;
    items.push_back({{"check", std::move(name)}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
  }
  void rows(const std::string& what, const reference::Table& expected, const BraceCensus& census) {
    for (const auto& [e, row] : expected) add(what + " " + e, row, census.row(e));
  }
};

void check_hgs(Checker& ck, const HgsCensus& t) {
  const auto& expected = reference::hgs_symbolic(t.e_label);
  for (const auto& [f, entries] : expected) {
    json want = json::array(), got = json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& col = reference::hgs_columns()[i];
      const auto* cell = t.cell(f, col);
      // a generic entry only exists when Z_p^* has a quotient of that order
      const bool realizable = entries[i] != "-" && (t.p - 1) % reference::column_quotient_order(col) == 0;
      want.push_back(realizable ? json(reference::instantiate(entries[i], t.p)) : json("-"));
      got.push_back(cell ? json(cell->a) : json("-"));
    }
    ck.add("hgs p=" + std::to_string(t.p) + " N=" + t.n_label + " F=" + f, want, got);
  }
  ck.add("hgs p=" + std::to_string(t.p) + " N=" + t.n_label + " routes agree", true, t.routes_agree());
}

}  // namespace

// ---- parsing --------------------------------------------------------------

std::string to_string(Command c) { return command_names().at(c); }

std::string to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::md: return "md";
  }
  return "md";
}

std::optional<Command> parse_command(const std::string& s) {
  for (const auto& [c, name] : command_names())
    if (name == s) return c;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& s) {
  for (auto f : {Format::json, Format::csv, Format::md})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

FiniteGroup parse_group_spec(const std::string& s) {
  if (s.empty()) throw ParseError("empty group", 0);
  std::optional<FiniteGroup> result;
  std::size_t begin = 0;
  while (true) {
    std::size_t end = s.find('x', begin);
    if (end == std::string::npos) end = s.size();
    if (end == begin) throw ParseError("expected a group name", begin);
    auto atom = parse_atom(s, begin, end);
    result = result ? direct_product(*result, atom) : atom;
    if (result->order() > kDefaultHolomorphBound) throw ParseError("group too large", begin);
    if (end == s.size()) break;
    begin = end + 1;
    if (begin == s.size()) throw ParseError("expected a group name", begin);
  }
  return result->with_label(group_label(*result));
}

// ---- running --------------------------------------------------------------

Report verify_paper(const std::vector<std::uint64_t>& p_set, std::size_t threads, std::size_t bound) {
  if (p_set.empty()) throw UsageError("verify-paper: empty prime set");
  for (auto p : p_set)
    if (!check_hypothesis(12, p)) throw HypothesisError(hypothesis_diagnostic(12, p));

  const CountOptions opts{threads, bound};
  Checker ck;
  ck.rows("braces of size 12", reference::braces_of_size_12(), brace_count_bruteforce(12, opts));
  ck.rows("regular subgroups of Hol(E), |E| = 12", reference::regular_subgroups_12(),
          regular_subgroup_table(12, opts));
  for (const auto& [m, b] : reference::brace_totals())
    ck.add("b(" + std::to_string(m) + ")", b, brace_count_bruteforce(m, opts).total);

  for (auto p : p_set) {
    const auto census = brace_count(12, p, opts);
    const auto ps = std::to_string(p);
    ck.rows("braces of size 12p, p=" + ps + ",", reference::braces_of_size_12p(p), census);
    ck.add("braces of size 12p, p=" + ps + ", total", reference::total_braces_12p(p), census.total);
    for (const auto& inv : abelian_types(12)) check_hgs(ck, hgs_table(p, make_abelian(inv), true, opts));
  }

  // the pair classes against conjugacy classes computed directly in Hol(Z_7 x E)
  for (const auto& inv : abelian_types(12)) {
    const auto e = make_abelian(inv);
    const auto pairs = classify_pairs(e, 7, {threads, {}}, bound);
    const auto direct = classify_regular(holomorph(direct_product(make_cyclic(7), e), bound), {threads, {}});
    std::multiset<std::size_t> a, b;
    for (const auto& k : pairs) a.insert(k.holomorph_orbit_length());
    for (const auto& k : direct) b.insert(k.orbit_length);
    ck.add("dual route p=7 E=" + group_label(e) + " classes", pairs.size(), direct.size());
    ck.add("dual route p=7 E=" + group_label(e) + " orbit lengths", json(a), json(b));
  }

  Report r;
  r.config.command = Command::verify_paper;
  r.config.p_set = p_set;
  r.config.threads = threads;
  r.config.bound = bound;
  std::size_t passed = 0;
  for (const auto& it : ck.items) passed += it["pass"].get<bool>();
  r.payload = {{"items", ck.items}, {"passed", passed}, {"failed", ck.items.size() - passed}};
  if (!ck.ok) {
    r.exit_code = kExitMismatch;
    r.error = std::to_string(ck.items.size() - passed) + " check(s) failed";
  }
  return r;
}

Report run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    switch (config.command) {
      case Command::group_info: r.payload = group_info(config); break;
      case Command::regular: r.payload = regular(config); break;
      case Command::braces: r.payload = braces(config); break;
      case Command::hgs: r.payload = hgs(config); break;
      case Command::verify_paper: r = verify_paper(config.p_set, config.threads, config.bound); break;
    }
  } catch (const HypothesisError& e) {
    r.exit_code = kExitHypothesis;
    r.error = e.what();
  } catch (const ResourceError& e) {
    r.exit_code = kExitResource;
    r.error = e.what();
  } catch (const Error& e) {
    r.exit_code = kExitMismatch;
    r.error = e.what();
  } catch (const std::invalid_argument& e) {
    r.exit_code = kExitUsage;
    r.error = e.what();
  }
  r.config = config;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// ---- rendering ------------------------------------------------------------

json to_json(const Report& r) {
  const auto& c = r.config;
  json config{{"group", c.group_spec}, {"n", c.n},         {"p", c.p},
              {"bound", c.bound},      {"threads", c.threads}, {"p_set", c.p_set}};
  json j{{"schema", kSchemaVersion},
         {"command", to_string(c.command)},
         {"config", config},
         {"exit_code", r.exit_code},
         {"seconds", r.seconds},
         {"payload", r.payload}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

namespace {

std::string cell_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + '"';
}

void md_table(std::ostream& os, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  os << '|';
  for (const auto& h : header) os << ' ' << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "---:|" : "---|");
  os << '\n';
  for (const auto& row : rows) {
    os << '|';
    for (const auto& v : row) os << ' ' << v << " |";
    os << '\n';
  }
}

void census_md(std::ostream& os, const BraceCensus& c) {
  std::vector<std::string> header{"E \\ F"};
  header.insert(header.end(), c.multiplicative_types.begin(), c.multiplicative_types.end());
  header.push_back("total");
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : c.additive_types) {
    std::vector<std::string> row{e};
    std::size_t sum = 0;
    for (auto v : c.row(e)) {
      row.push_back(std::to_string(v));
      sum += v;
    }
    row.push_back(std::to_string(sum));
    rows.push_back(std::move(row));
  }
  md_table(os, header, rows);
  os << "\ntotal: " << c.total << '\n';
}

void hgs_md(std::ostream& os, const HgsCensus& t) {
  os << "## N = " << t.n_label << ", |Aut N| = " << t.aut_n << "\n\n";
  std::vector<std::string> header{"F \\ kernel"};
  header.insert(header.end(), t.columns.begin(), t.columns.end());
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : t.rows) {
    std::vector<std::string> row{f};
    for (const auto& col : t.columns) {
      const auto* cell = t.cell(f, col);
      row.push_back(cell ? std::to_string(cell->a) : "-");
    }
    rows.push_back(std::move(row));
  }
  md_table(os, header, rows);
  os << "\nroutes agree: " << (t.routes_agree() ? "yes" : "no") << "\n\n";
}

std::string render_md(const Report& r) {
  std::ostringstream os;
  const auto& p = r.payload;
  os << "# " << to_string(r.config.command) << "\n\n";
  switch (r.config.command) {
    case Command::group_info: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [k, v] : p.items()) rows.push_back({k, cell_text(v)});
      md_table(os, {"property", "value"}, rows);
      break;
    }
    case Command::regular: {
      os << "Hol(" << cell_text(p["group"]) << "), order " << p["holomorph_order"] << ": " << p["subgroups"]
         << " regular subgroups in " << p["class_count"] << " classes\n\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : p["counts"])
        rows.push_back({cell_text(c["multiplicative"]), c["subgroups"].dump(), c["classes"].dump()});
      md_table(os, {"type", "subgroups", "classes"}, rows);
      break;
    }
    case Command::braces: census_md(os, p["census"].get<BraceCensus>()); break;
    case Command::hgs:
      for (const auto& t : p["tables"]) hgs_md(os, t.get<HgsCensus>());
      break;
    case Command::verify_paper: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& it : p["items"])
        rows.push_back({it["pass"].get<bool>() ? "ok" : "FAIL", cell_text(it["check"]), it["expected"].dump(),
                        it["actual"].dump()});
      md_table(os, {"", "check", "expected", "actual"}, rows);
      os << '\n' << p["passed"] << " passed, " << p["failed"] << " failed\n";
      break;
    }
  }
  return os.str();
}

std::string render_csv(const Report& r) {
  std::ostringstream os;
  const auto& p = r.payload;
  switch (r.config.command) {
    case Command::group_info:
      os << "property,value\n";
      for (const auto& [k, v] : p.items()) os << k << ',' << csv_quote(cell_text(v)) << '\n';
      break;
    case Command::regular:
      os << "additive,multiplicative,kernel,count\n";
      for (const auto& c : p["counts"])
        os << cell_text(p["group"]) << ',' << cell_text(c["multiplicative"]) << ",," << c["subgroups"] << '\n';
      break;
    case Command::braces: {
      os << "additive,multiplicative,kernel,count\n";
      if (p["classes"].empty()) {
        for (const auto& row : p["census"]["rows"])
          os << cell_text(row["additive"]) << ',' << cell_text(row["multiplicative"]) << ",," << row["count"]
             << '\n';
        break;
      }
      std::map<std::tuple<std::string, std::string, std::string>, std::size_t> counts;
      for (const auto& k : p["classes"]) {
        const auto tau = k["tau"].get<TauMorphism>();
        const auto kernel = tau.is_trivial() ? std::string("F") : k["kernel_label"].get<std::string>();
        ++counts[{k["additive"].get<std::string>(), k["f_label"].get<std::string>(), kernel}];
      }
      for (const auto& [key, n] : counts)
        os << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key) << ',' << n << '\n';
      break;
    }
    case Command::hgs:
      os << "additive,multiplicative,kernel,count\n";
      for (const auto& t : p["tables"])
        for (const auto& e : t["entries"])
          os << cell_text(t["n_label"]) << ',' << cell_text(e["multiplicative"]) << ',' << cell_text(e["kernel"])
             << ',' << e["a"] << '\n';
      break;
    case Command::verify_paper:
      os << "check,expected,actual,pass\n";
      for (const auto& it : p["items"])
        os << csv_quote(cell_text(it["check"])) << ',' << csv_quote(it["expected"].dump()) << ','
           << csv_quote(it["actual"].dump()) << ',' << (it["pass"].get<bool>() ? "true" : "false") << '\n';
      break;
  }
  return os.str();
}

}  // namespace

std::string render(const Report& r) {
  if (r.config.format == Format::json) return to_json(r).dump(2) + "\n";
  if (r.exit_code != kExitOk && r.payload.is_null()) return {};
  return r.config.format == Format::csv ? render_csv(r) : render_md(r);
}

// ---- payload serialization ------------------------------------------------

void to_json(json& j, const LeftBrace& b) {
  j = {{"order", b.order()},
       {"add", std::vector<Elem>(b.add().table().begin(), b.add().table().end())},
       {"mul", std::vector<Elem>(b.mul().table().begin(), b.mul().table().end())}};
}

void from_json(const json& j, LeftBrace& b) {
  const auto n = j.at("order").get<std::size_t>();
  b = LeftBrace(FiniteGroup(n, j.at("add").get<std::vector<Elem>>()),
                FiniteGroup(n, j.at("mul").get<std::vector<Elem>>()));
}

void to_json(json& j, const TauMorphism& t) { j = {{"p", t.p}, {"values", t.values}}; }

void from_json(const json& j, TauMorphism& t) {
  t.p = j.at("p").get<std::uint64_t>();
  t.values = j.at("values").get<std::vector<std::uint32_t>>();
}

void to_json(json& j, const TauClass& c) {
  j = {{"f_class", c.f_class},           {"f_label", c.f_label},         {"f_orbit_length", c.f_orbit_length},
       {"tau", c.tau},                   {"orbit_size", c.orbit_size},   {"kernel_order", c.kernel_order},
       {"kernel_label", c.kernel_label}, {"holomorph_orbit_length", c.holomorph_orbit_length()}};
}

void from_json(const json& j, TauClass& c) {
  c.f_class = j.at("f_class");
  c.f_label = j.at("f_label");
  c.f_orbit_length = j.at("f_orbit_length");
  c.tau = j.at("tau");
  c.orbit_size = j.at("orbit_size");
  c.kernel_order = j.at("kernel_order");
  c.kernel_label = j.at("kernel_label");
}

void to_json(json& j, const BraceCensus& c) {
  json rows = json::array();
  for (const auto& [key, count] : c.rows)
    rows.push_back({{"additive", key.first}, {"multiplicative", key.second}, {"count", count}});
  j = {{"n", c.n},
       {"p", c.p},
       {"additive_types", c.additive_types},
       {"multiplicative_types", c.multiplicative_types},
       {"rows", rows},
       {"total", c.total}};
}

void from_json(const json& j, BraceCensus& c) {
  c.n = j.at("n");
  c.p = j.at("p");
  c.additive_types = j.at("additive_types").get<std::vector<std::string>>();
  c.multiplicative_types = j.at("multiplicative_types").get<std::vector<std::string>>();
  c.rows.clear();
  for (const auto& row : j.at("rows")) c.rows[{row.at("additive"), row.at("multiplicative")}] = row.at("count");
  c.total = j.at("total");
}

void to_json(json& j, const HgsCell& c) {
  j = {{"b", c.b},         {"b_direct", c.b_direct}, {"aut_g", c.aut_g},
       {"aut_g_direct", c.aut_g_direct}, {"a", c.a}, {"a_direct", c.a_direct}};
}

void from_json(const json& j, HgsCell& c) {
  c.b = j.at("b");
  c.b_direct = j.at("b_direct");
  c.aut_g = j.at("aut_g");
  c.aut_g_direct = j.at("aut_g_direct");
  c.a = j.at("a");
  c.a_direct = j.at("a_direct");
}

void to_json(json& j, const HgsCensus& c) {
  json entries = json::array();
  for (const auto& [key, cell] : c.entries) {
    json e = cell;
    e["multiplicative"] = key.first;
    e["kernel"] = key.second;
    entries.push_back(std::move(e));
  }
  j = {{"p", c.p},
       {"e_label", c.e_label},
       {"n_label", c.n_label},
       {"aut_n", c.aut_n},
       {"rows", c.rows},
       {"columns", c.columns},
       {"entries", entries}};
}

void from_json(const json& j, HgsCensus& c) {
  c.p = j.at("p");
  c.e_label = j.at("e_label");
  c.n_label = j.at("n_label");
  c.aut_n = j.at("aut_n");
  c.rows = j.at("rows").get<std::vector<std::string>>();
  c.columns = j.at("columns").get<std::vector<std::string>>();
  c.entries.clear();
  for (const auto& e : j.at("entries")) c.entries[{e.at("multiplicative"), e.at("kernel")}] = e.get<HgsCell>();
}

bool operator==(const TauClass& a, const TauClass& b) {
  return a.f_class == b.f_class && a.f_label == b.f_label && a.f_orbit_length == b.f_orbit_length &&
         a.tau == b.tau && a.orbit_size == b.orbit_size && a.kernel_order == b.kernel_order &&
         a.kernel_label == b.kernel_label;
}

bool operator==(const BraceCensus& a, const BraceCensus& b) {
  return a.n == b.n && a.p == b.p && a.additive_types == b.additive_types &&
         a.multiplicative_types == b.multiplicative_types && a.rows == b.rows && a.total == b.total;
}

bool operator==(const HgsCell& a, const HgsCell& b) {
  return a.b == b.b && a.b_direct == b.b_direct && a.aut_g == b.aut_g && a.aut_g_direct == b.aut_g_direct &&
         a.a == b.a && a.a_direct == b.a_direct;
}

bool operator==(const HgsCensus& a, const HgsCensus& b) {
  return a.p == b.p && a.e_label == b.e_label && a.n_label == b.n_label && a.aut_n == b.aut_n &&
         a.rows == b.rows && a.columns == b.columns && a.entries == b.entries;
}

}  // namespace npbrace
