#include "cli.hpp"

#include "hvlab/borel.hpp"
#include "hvlab/engine.hpp"
#include "hvlab/hseq.hpp"
#include "hvlab/liaison.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hvlab::cli {

namespace {

using Json = nlohmann::ordered_json;

Json num(const Integer& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json nums(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

std::string error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotLinkable: return "not-linkable";
    case ErrorKind::ImproperInclusion: return "improper-inclusion";
    case ErrorKind::NotBorel: return "not-borel";
    case ErrorKind::NotHilbertPolynomial: return "not-hilbert-polynomial";
    case ErrorKind::BoundExceeded: return "bound-exceeded";
    case ErrorKind::DegreeMismatch: return "degree-mismatch";
    case ErrorKind::NotCovered: return "not-covered";
  }
  return "unknown";
}

// Rows for csv output and the aligned listing in pretty output.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json result = Json::object();
  std::optional<Table> table;
  std::optional<Json> verification;  // {"passed": bool, "mismatches": [...]}
};

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + scalar_text(j[i]);
    return s;
  }
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  bool nested = j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
  if (nested) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out.emplace_back(prefix, scalar_text(j));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\n";
}

void emit(std::ostream& out, const std::string& format, const std::string& command, const Outcome& o) {
  bool passed = !o.verification || (*o.verification)["passed"].get<bool>();
  if (format == "json") {
    Json env;
    env["command"] = command;
    env["status"] = passed ? "ok" : "mismatch";
    env["result"] = o.result;
    if (o.verification) env["verification"] = *o.verification;
    out << env.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (o.table) {
      write_csv_line(out, o.table->columns);
      for (const auto& r : o.table->rows) write_csv_line(out, r);
    } else {
      std::vector<std::pair<std::string, std::string>> flat;
      flatten(o.result, "", flat);
      std::vector<std::string> head, row;
      for (auto& [k, v] : flat) {
        head.push_back(k);
        row.push_back(v);
      }
      write_csv_line(out, head);
      write_csv_line(out, row);
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> flat;
  Json summary = o.result;
  if (o.table && summary.is_object()) {
    // the listing below replaces the bulky array it was built from
    for (auto it = summary.begin(); it != summary.end();) {
      if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object())
        it = summary.erase(it);
      else
        ++it;
    }
  }
  flatten(summary, "", flat);
  std::size_t width = 0;
  for (auto& [k, v] : flat) width = std::max(width, k.size());
  for (auto& [k, v] : flat) out << k << std::string(width - k.size() + 1, ' ') << ": " << v << "\n";
  if (o.table) {
    std::vector<std::size_t> w(o.table->columns.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = o.table->columns[i].size();
    for (const auto& r : o.table->rows)
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
      out << " ";
      for (std::size_t i = 0; i < r.size(); ++i) out << " " << r[i] << std::string(w[i] - r[i].size(), ' ');
      out << "\n";
    };
    line(o.table->columns);
    for (const auto& r : o.table->rows) line(r);
  }
  if (o.verification) {
    out << "verification: " << (passed ? "PASS" : "FAIL") << "\n";
    for (const auto& m : (*o.verification)["mismatches"])
      out << "  " << m["row"].get<std::string>() << " " << m["column"].get<std::string>() << ": expected "
          << m["expected"].get<std::string>() << ", got " << m["actual"].get<std::string>() << "\n";
  }
}

std::pair<long, long> parse_pair(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::InvalidArgument, "expected a,b but got " + text);
  try {
    std::size_t p1 = 0, p2 = 0;
    long a = std::stol(text.substr(0, comma), &p1);
    long b = std::stol(text.substr(comma + 1), &p2);
    if (p1 != comma || p2 != text.size() - comma - 1) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "expected a,b but got " + text);
  }
}

Json verdict_json(const OSeqVerdict& v) {
  Json j;
  j["positive"] = v.positive;
  j["admissible"] = v.admissible;
  if (v.first_violation) {
    j["violation"] = {{"t", v.first_violation->index},
                      {"value", num(v.first_violation->value)},
                      {"bound", num(v.first_violation->bound)}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json record_json(const ChainRecord& r) {
  auto v = check_osequence(r.h);
  return {{"step", r.kind},         {"parameters", r.parameters},   {"h", r.h.to_string()},
          {"degree", num(r.degree)}, {"genus", num(r.genus)},        {"positive", v.positive},
          {"admissible", v.admissible}};
}

Table records_table(const Json& records) {
  Table t{{"step", "parameters", "h", "degree", "genus", "positive", "admissible"}, {}};
  for (const auto& r : records) {
    std::vector<std::string> row;
    for (const auto& c : t.columns) {
      const Json& v = r[c];
      if (c == "parameters") {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
        row.push_back(s);
      } else {
        row.push_back(scalar_text(v));
      }
    }
    t.rows.push_back(row);
  }
  return t;
}

Json candidate_json(const CandidateReport& r) {
  Json j;
  j["h_x"] = r.h_x.to_string();
  j["h_z"] = r.h_z.to_string();
  j["h_zprime"] = r.h_zprime.to_string();
  j["positive"] = r.positive;
  j["admissible"] = r.admissible;
  j["equals_section"] = r.equals_section;
  j["t_k"] = r.t_k ? Json(*r.t_k) : Json(nullptr);
  if (r.genus)
    j["genus"] = {{"d_t", num(r.genus->d_t)}, {"t", r.genus->t}, {"g_linked", num(r.genus->g_linked)}};
  else
    j["genus"] = nullptr;
  j["route"] = to_string(r.route);
  j["classification"] = to_string(r.classification);
  j["rule"] = r.rule;
  return j;
}

Table candidates_table(const std::vector<CandidateReport>& cands) {
  Table t{{"h_zprime", "h_z", "h_x", "positive", "admissible", "equals_section", "d_t", "g_linked", "classification"},
          {}};
  for (const auto& r : cands)
    t.rows.push_back({r.h_zprime.to_string(), r.h_z.to_string(), r.h_x.to_string(), r.positive ? "true" : "false",
                      r.admissible ? "true" : "false", r.equals_section ? "true" : "false",
                      r.genus ? r.genus->d_t.str() : "", r.genus ? r.genus->g_linked.str() : "",
                      to_string(r.classification)});
  return t;
}

Json plan_json(const SurfaceChainPlan& p) {
  Json links = Json::array();
  for (const auto& ci : p.liaisons) links.push_back(ci.to_string());
  return {{"defect", p.defect},
          {"start_from", p.start_from ? Json(*p.start_from) : Json(nullptr)},
          {"liaisons", links},
          {"further", p.further.to_string()}};
}

Json table_json(const ReferenceTable& t) {
  auto rows = [](const std::vector<TableRow>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) {
      Json cells = Json::array();
      for (const auto& c : r.cells)
        cells.push_back({{"column", c.column}, {"expected", c.expected}, {"actual", c.actual}, {"match", c.match}});
      a.push_back({{"label", r.label}, {"cells", cells}});
    }
    return a;
  };
  return {{"name", t.name}, {"columns", t.columns}, {"rows", rows(t.rows)},
          {"extra", rows(t.extra)}, {"notes", t.notes}, {"all_match", t.all_match()}};
}

Table reference_rows(const ReferenceTable& t) {
  Table out{{"row", "column", "expected", "actual", "match"}, {}};
  auto add = [&](const std::vector<TableRow>& rs) {
    for (const auto& r : rs)
      for (const auto& c : r.cells) out.rows.push_back({r.label, c.column, c.expected, c.actual, c.match ? "yes" : "no"});
  };
  add(t.rows);
  add(t.extra);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ScenarioFlags {
  long k = 1, c = 2, defect = 1;
  std::string ci, zprime, profile;

  void attach(CLI::App* sub) {
    sub->add_option("--dim", k, "dimension of X")->required();
    sub->add_option("--codim", c, "codimension")->required();
    sub->add_option("--ci", ci, "complete intersection type, e.g. 3,4")->required();
    sub->add_option("--defect", defect, "deg(Y) - deg(X)")->required();
    sub->add_option("--zprime", zprime, "fix the h-vector of the linked section");
    sub->add_option("--profile", profile, "constraint profile")->check(CLI::IsMember({"curve", "general"}));
  }

  ScenarioConfig config() const {
    ScenarioConfig cfg;
    cfg.k = k;
    cfg.c = c;
    cfg.ci = CIType::parse(ci);
    cfg.defect = defect;
    if (!zprime.empty()) cfg.h_zprime = HSeq::parse(zprime);
    if (profile == "curve") cfg.profile = ConstraintProfile::Curve;
    if (profile == "general") cfg.profile = ConstraintProfile::General;
    validate(cfg);
    return cfg;
  }

  Json json(const ScenarioConfig& cfg) const {
    return {{"dim", cfg.k},
            {"codim", cfg.c},
            {"ci", cfg.ci.to_string()},
            {"defect", cfg.defect},
            {"zprime", cfg.h_zprime ? Json(cfg.h_zprime->to_string()) : Json(nullptr)},
            {"profile", effective_profile(cfg) == ConstraintProfile::Curve ? "curve" : "general"}};
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hilbert function, liaison and Borel ideal computations"};
  app.name("hvlab");
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "pretty";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"pretty", "json", "csv"}));

  std::map<std::string, std::function<Outcome()>> handlers;
  auto command = [&](const std::string& name, const std::string& help) { return app.add_subcommand(name, help); };

  // Sequences and Hilbert functions
  std::string h_text;
  auto* admissible = command("admissible", "check positivity and Macaulay's growth bound");
  admissible->add_option("hvector", h_text, "h-vector, e.g. 1,2,3,1")->required();
  handlers["admissible"] = [&] {
    HSeq h = HSeq::parse(h_text);
    Outcome o;
    o.result["h"] = h.to_string();
    o.result["degree"] = num(h.sum());
    o.result.update(verdict_json(check_osequence(h)));
    return o;
  };

  std::string mac_a;
  long mac_d = 1;
  auto* macaulay = command("macaulay", "Macaulay representation and growth bound a^<d>");
  macaulay->add_option("a", mac_a)->required();
  macaulay->add_option("d", mac_d)->required();
  handlers["macaulay"] = [&] {
    Integer a(mac_a);
    auto e = macaulay_expansion(a, mac_d);
    Outcome o;
    o.result = {{"a", num(a)}, {"d", mac_d}, {"bound", num(e.bound)}, {"tops", e.tops}, {"lowest_degree", e.lowest_degree}};
    return o;
  };

  long dim = 0, count = 10;
  auto* hf = command("hf", "Hilbert function from an h-vector");
  hf->add_option("--h", h_text)->required();
  hf->add_option("--dim", dim, "Krull dimension minus one")->required();
  hf->add_option("--count", count, "number of values to print")->check(CLI::NonNegativeNumber);
  handlers["hf"] = [&] {
    HSeq h = HSeq::parse(h_text);
    auto d = hilbert_from_h(h, dim);
    std::vector<Integer> values;
    for (long t = 0; t < count; ++t) values.push_back(d(t));
    Outcome o;
    o.result = {{"h", h.to_string()}, {"dim", dim}, {"values", nums(values)},
                {"polynomial", d.tail.to_string()}, {"agrees_from", d.rho}};
    return o;
  };

  auto* genus = command("genus", "arithmetic genus of a curve with the given h-vector");
  genus->add_option("--h", h_text)->required();
  handlers["genus"] = [&] {
    HSeq h = HSeq::parse(h_text);
    Outcome o;
    o.result = {{"h", h.to_string()}, {"degree", num(h.sum())}, {"genus", num(genus_from_h(h))}};
    return o;
  };

  std::string ci_text;
  auto* ci = command("ci", "h-vector of a complete intersection");
  ci->add_option("--type", ci_text)->required();
  handlers["ci"] = [&] {
    CIType t = CIType::parse(ci_text);
    Outcome o;
    o.result = {{"type", t.to_string()},   {"codim", t.codim()},          {"h", ci_hvector(t).to_string()},
                {"degree", num(t.degree())}, {"regularity", t.regularity()}};
    return o;
  };

  auto* link = command("link", "h-vector of the section linked by a complete intersection");
  link->add_option("--ci", ci_text)->required();
  link->add_option("--h", h_text)->required();
  handlers["link"] = [&] {
    CIType t = CIType::parse(ci_text);
    HSeq h = HSeq::parse(h_text);
    auto r = dgo_link(h, t);
    Outcome o;
    o.result = {{"ci", t.to_string()},
                {"h", h.to_string()},
                {"h_linked", r.h_linked.to_string()},
                {"degree_linked", num(r.deg_linked)},
                {"reg_y", r.reg_y},
                {"alpha_bar", r.alpha_bar},
                {"alpha_bar_prime", r.alpha_bar_prime}};
    return o;
  };

  std::string pair_text;
  auto* bdl = command("bdl", "basic double link h(t - a) + h_CI(a,b)(t)");
  bdl->add_option("--type", pair_text, "a,b")->required();
  bdl->add_option("--h", h_text)->required();
  handlers["bdl"] = [&] {
    auto [a, b] = parse_pair(pair_text);
    HSeq h = HSeq::parse(h_text);
    HSeq r = basic_double_link(h, a, b);
    Outcome o;
    o.result = {{"h", h.to_string()}, {"a", a}, {"b", b}, {"h_result", r.to_string()}};
    o.result.update(verdict_json(check_osequence(r)));
    return o;
  };

  std::string script_path, genus_text = "0";
  auto* chain = command("chain", "run a script of links and basic double links");
  chain->add_option("--script", script_path, "one step per line: link b1,b2 or bdl a,b")->required();
  chain->add_option("--h", h_text, "starting h-vector")->required();
  chain->add_option("--genus", genus_text, "starting genus");
  handlers["chain"] = [&] {
    auto steps = parse_chain_script(read_file(script_path));
    auto trace = run_chain(HSeq::parse(h_text), Integer(genus_text), steps);
    Json records = Json::array();
    for (const auto& r : trace.records) records.push_back(record_json(r));
    Outcome o;
    o.result = {{"steps", records}};
    o.table = records_table(records);
    return o;
  };

  std::string hz_text;
  auto* tk = command("tk", "first degree where the section drops below the complete intersection");
  tk->add_option("--hz", hz_text)->required();
  tk->add_option("--ci", ci_text)->required();
  handlers["tk"] = [&] {
    HSeq hz = HSeq::parse(hz_text);
    CIType t = CIType::parse(ci_text);
    auto v = compute_tk(hz, ci_hvector(t));
    Outcome o;
    o.result = {{"hz", hz.to_string()}, {"ci", t.to_string()}, {"t_k", v ? Json(*v) : Json(nullptr)}};
    return o;
  };

  long deg = 1, ambient = 2;
  auto* points = command("points", "h-vectors of zero-dimensional schemes of given degree");
  points->add_option("--deg", deg)->required();
  points->add_option("--ambient", ambient)->required();
  handlers["points"] = [&] {
    auto list = point_hvectors(deg, ambient);
    Outcome o;
    Json hs = Json::array();
    Table t{{"h"}, {}};
    for (const auto& h : list) {
      hs.push_back(h.to_string());
      t.rows.push_back({h.to_string()});
    }
    o.result = {{"degree", deg}, {"ambient", ambient}, {"count", list.size()}, {"hvectors", hs}};
    o.table = t;
    return o;
  };

  ScenarioFlags scen;
  auto* candidates = command("candidates", "enumerate candidate h-vectors of X");
  scen.attach(candidates);
  handlers["candidates"] = [&] {
    auto cfg = scen.config();
    auto list = enumerate_candidates(cfg);
    Json arr = Json::array();
    for (const auto& r : list) arr.push_back(candidate_json(r));
    Outcome o;
    o.result = {{"config", scen.json(cfg)}, {"count", list.size()}, {"candidates", arr}};
    o.table = candidates_table(list);
    return o;
  };

  auto* classify_cmd = command("classify", "decide whether positivity forces aCM");
  scen.attach(classify_cmd);
  handlers["classify"] = [&] {
    auto cfg = scen.config();
    auto s = classify(cfg);
    Json arr = Json::array();
    std::map<std::string, long> counts;
    for (const auto& r : s.candidates) {
      arr.push_back(candidate_json(r));
      ++counts[to_string(r.classification)];
    }
    Json skipped = Json::array();
    for (const auto& sk : s.skipped) skipped.push_back({{"h_zprime", sk.h_zprime.to_string()}, {"reason", sk.reason}});
    Json tally = Json::object();
    for (auto& [k, v] : counts) tally[k] = v;
    Outcome o;
    o.result = {{"config", scen.json(cfg)},
                {"verdict", s.verdict},
                {"within_hypotheses", s.within_hypotheses},
                {"routes", s.routes},
                {"counts", tally},
                {"skipped", skipped},
                {"candidates", arr}};
    o.table = candidates_table(s.candidates);
    return o;
  };

  int nvars = 4;
  std::string ideal_text;
  auto ideal_command = [&](const std::string& name, const std::string& help) {
    auto* sub = command(name, help);
    sub->add_option("--vars", nvars, "number of variables")->required()->check(CLI::Range(1, 64));
    sub->add_option("--ideal", ideal_text, "generators, e.g. x0,x1^2*x2")->required();
    return sub;
  };
  ideal_command("borel-check", "test whether a monomial ideal is Borel-fixed");
  handlers["borel-check"] = [&] {
    auto ideal = MonIdeal::parse(nvars, ideal_text);
    auto c = is_borel(ideal);
    Outcome o;
    o.result = {{"ideal", ideal.to_string()}, {"vars", nvars}, {"borel", c.is_borel}};
    if (c.witness)
      o.result["witness"] = {{"generator", monomial_to_string(c.witness->generator)},
                             {"from_var", c.witness->from_var},
                             {"to_var", c.witness->to_var}};
    else
      o.result["witness"] = nullptr;
    return o;
  };

  auto* borel_hf = ideal_command("borel-hf", "Hilbert function of the quotient by a monomial ideal");
  borel_hf->add_option("--count", count)->check(CLI::NonNegativeNumber);
  handlers["borel-hf"] = [&] {
    auto ideal = MonIdeal::parse(nvars, ideal_text);
    auto d = quotient_hilbert(ideal);
    auto rs = reduced_hilbert_series(ideal);
    std::vector<Integer> values;
    for (long t = 0; t < count; ++t) values.push_back(d(t));
    Outcome o;
    o.result = {{"ideal", ideal.to_string()}, {"vars", nvars},  {"values", nums(values)},
                {"polynomial", d.tail.to_string()}, {"h", rs.h.to_string()}, {"dim", rs.dim}};
    return o;
  };

  ideal_command("borel-sat", "saturation of a Borel-fixed ideal");
  handlers["borel-sat"] = [&] {
    auto ideal = MonIdeal::parse(nvars, ideal_text);
    Outcome o;
    o.result = {{"ideal", ideal.to_string()}, {"vars", nvars}, {"saturation", saturate(ideal).to_string()}};
    return o;
  };

  ideal_command("borel-section", "general hyperplane section of a Borel-fixed ideal");
  handlers["borel-section"] = [&] {
    auto ideal = MonIdeal::parse(nvars, ideal_text);
    auto sec = restrict_section(ideal);
    Outcome o;
    o.result = {{"ideal", ideal.to_string()},
                {"vars", nvars},
                {"section", sec.to_string()},
                {"section_vars", sec.nvars()},
                {"section_h", reduced_hilbert_series(sec).h.to_string()}};
    return o;
  };

  std::string hp_text;
  long max_gotzmann = 8;
  auto* borel_enum = command("borel-enum", "saturated Borel-fixed ideals with a given Hilbert polynomial");
  borel_enum->add_option("--vars", nvars)->required()->check(CLI::Range(1, 64));
  borel_enum->add_option("--hp", hp_text, "A*t+B or bin:c0,c1,...")->required();
  borel_enum->add_option("--max-gotzmann", max_gotzmann);
  handlers["borel-enum"] = [&] {
    IntPoly p = IntPoly::parse(hp_text);
    auto list = enumerate_borel(nvars, p, {max_gotzmann});
    Json arr = Json::array();
    Table t{{"ideal"}, {}};
    for (const auto& i : list) {
      arr.push_back(i.to_string());
      t.rows.push_back({i.to_string()});
    }
    Outcome o;
    o.result = {{"vars", nvars}, {"polynomial", p.to_string()}, {"gotzmann_number", gotzmann_number(p)},
                {"count", list.size()}, {"ideals", arr}};
    o.table = t;
    return o;
  };

  long defect = 6;
  auto* davis = command("davis", "catalog section of a non-aCM curve with CM postulation");
  davis->add_option("--defect", defect)->required();
  handlers["davis"] = [&] {
    auto p = davis_params(defect);
    Outcome o;
    o.result = {{"defect", p.defect},  {"e", p.e},
                {"f", p.f},            {"type", p.type.to_string()},
                {"section", p.section.to_string()}, {"section_degree", num(p.section.sum())},
                {"consistent", p.consistent}};
    return o;
  };

  std::string listed_text;
  auto* surface = command("surface-chain", "liaison chain for a surface with CM postulation");
  surface->add_option("--defect", defect)->required();
  surface->add_option("--listed", listed_text, "tabulated h-vector of X to check");
  handlers["surface-chain"] = [&] {
    auto r = surface_chain(defect);
    Json records = Json::array();
    for (const auto& rec : r.trace.records) records.push_back(record_json(rec));
    Outcome o;
    o.result = {{"plan", plan_json(r.plan)},
                {"section_before_further", r.section_before_further.to_string()},
                {"genus_before_further", num(r.genus_before_further)},
                {"final_degree", num(r.final_degree)},
                {"final_section", r.final_section.to_string()},
                {"final_genus", num(r.final_genus)},
                {"steps", records}};
    o.table = records_table(records);
    if (!listed_text.empty()) {
      auto c = check_listed_vector(r, HSeq::parse(listed_text));
      o.result["listed"] = {{"h", c.listed.to_string()},
                            {"admissible", c.admissible},
                            {"degree_matches", c.degree_matches},
                            {"genus", num(c.listed_genus)},
                            {"expected_genus", num(c.expected_genus)},
                            {"genus_matches", c.genus_matches}};
      Json mism = Json::array();
      auto add = [&](bool ok, const std::string& col, const std::string& exp, const std::string& act) {
        if (!ok) mism.push_back({{"row", c.listed.to_string()}, {"column", col}, {"expected", exp}, {"actual", act}});
      };
      add(c.admissible, "admissible", "true", "false");
      add(c.degree_matches, "degree", r.final_degree.str(), c.listed.sum().str());
      add(c.genus_matches, "genus", c.expected_genus.str(), c.listed_genus.str());
      o.verification = Json{{"passed", c.ok()}, {"mismatches", mism}};
    }
    return o;
  };

  std::string table_name;
  bool verify = false;
  auto* table = command("table", "regenerate a reference table and compare it with the stored copy");
  table->add_option("--name", table_name)->required();
  table->add_flag("--verify", verify, "exit 3 when any cell differs");
  handlers["table"] = [&] {
    auto t = reference_table(table_name);
    Outcome o;
    o.result = table_json(t);
    o.table = reference_rows(t);
    if (verify) {
      Json mism = Json::array();
      for (const auto& r : t.rows)
        for (const auto& c : r.cells)
          if (!c.match) mism.push_back({{"row", r.label}, {"column", c.column}, {"expected", c.expected}, {"actual", c.actual}});
      for (const auto& r : t.extra)
        for (const auto& c : r.cells)
          mism.push_back({{"row", r.label}, {"column", c.column}, {"expected", c.expected}, {"actual", c.actual}});
      o.verification = Json{{"passed", t.all_match()}, {"mismatches", mism}};
    }
    return o;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Ok;
    }
    err << "hvlab: " << e.what() << "\n";
    return Usage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Outcome o = handlers.at(name)();
    emit(out, format, name, o);
    if (o.verification && !(*o.verification)["passed"].get<bool>()) return Mismatch;
    return Ok;
  } catch (const Error& e) {
    err << "hvlab: " << e.what() << "\n";
    if (format == "json") {
      Json env;
      env["command"] = name;
      env["status"] = "error";
      env["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
      out << env.dump(2) << "\n";
    }
    return Domain;
  } catch (const std::invalid_argument& e) {
    // malformed integer literals from Integer(std::string)
    err << "hvlab: invalid number: " << e.what() << "\n";
    return Usage;
  }
}

}  // namespace hvlab::cli
