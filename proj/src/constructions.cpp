#include "hvlab/engine.hpp"

#include <map>

namespace hvlab {

namespace {

long choose2(long t) { return t * (t - 1) / 2; }

// Largest t with C(t,2) <= n.
long e_of(long n) {
  long t = 2;
  while (choose2(t + 1) <= n) ++t;
  return t;
}

}  // namespace

std::string DavisType::to_string() const {
  std::string body = std::to_string(a) + "," + std::to_string(r);
  return kind == Single ? "[" + body + "]" : "[[" + body + "]]";
}

HSeq davis_section(const DavisType& t) {
  if (t.kind == DavisType::Single && !(t.a > t.r && t.r > 0))
    throw Error(ErrorKind::InvalidArgument, "type " + t.to_string() + " needs a > r > 0");
  if (t.kind == DavisType::Double && !(t.a > t.r && t.r > 1))
    throw Error(ErrorKind::InvalidArgument, "type " + t.to_string() + " needs a > r > 1");
  std::vector<Integer> h;
  for (long i = 1; i <= t.a; ++i) h.emplace_back(i);
  if (t.kind == DavisType::Single) {
    h.emplace_back(t.a);
    h.emplace_back(t.r);
  } else {
    h.emplace_back(t.r);
    h.emplace_back(1);
  }
  return HSeq(std::move(h));
}

DavisParams davis_params(long defect) {
  if (defect < 6 || defect == 7 || defect == 8 || defect == 12)
    throw Error(ErrorKind::InvalidArgument, "catalog covers defects >= 6 other than 7, 8 and 12, got " + std::to_string(defect));
  DavisParams p;
  p.defect = defect;
  p.e = e_of(defect);
  p.f = defect - choose2(p.e);
  long gap = p.e - p.f;
  if (gap == 1)
    p.type = {DavisType::Double, p.e - 1, p.f - 1};
  else if (gap == 2)
    p.type = {DavisType::Double, p.e - 1, 2};
  else if (gap == 3)
    p.type = {DavisType::Double, p.e - 1, p.f};
  else
    p.type = {DavisType::Single, p.e - 2, p.f + 1};
  p.section = davis_section(p.type);
  p.consistent = p.section.sum() == defect;
  return p;
}

bool surface_chain_covered(long defect) {
  static const long explicit_rows[] = {10, 14, 15, 19, 20, 21, 22};
  for (long d : explicit_rows)
    if (d == defect) return true;
  for (long t = 8; choose2(t) - 3 <= defect; ++t)
    if (defect >= choose2(t) - 3 && defect <= choose2(t) + 1) return true;
  return false;
}

SurfaceChainPlan plan_surface_chain(long defect) {
  if (!surface_chain_covered(defect))
    throw Error(ErrorKind::NotCovered, "no surface chain is known for defect " + std::to_string(defect));
  long t = 5;
  while (!(defect >= choose2(t) - 3 && defect <= choose2(t) + 1)) ++t;
  long offset = defect - choose2(t);
  SurfaceChainPlan p;
  p.defect = defect;
  if (offset < 0) {
    // two liaisons on the surface of defect C(t-1,2) + offset + 1
    p.start_from = choose2(t - 1) + offset + 1;
    p.liaisons = {CIType{t - 2, t}, CIType{t - 2, t + 1}};
    p.further = CIType{t, t};
  } else if (offset == 0) {
    for (long j = 3; j <= t - 3; ++j) {
      p.liaisons.push_back(CIType{j, j});
      p.liaisons.push_back(CIType{j, j + 1});
    }
    p.liaisons.push_back(CIType{t - 2, t - 1});
    p.liaisons.push_back(CIType{t - 2, t + 1});
    p.further = CIType{t + 1, t + 1};
  } else {
    for (long j = 3; j <= t - 5; ++j) {
      p.liaisons.push_back(CIType{j, j});
      p.liaisons.push_back(CIType{j, j + 1});
    }
    for (long j = t - 4; j <= t - 3; ++j) p.liaisons.push_back(CIType{j, j + 1});
    p.liaisons.push_back(CIType{t - 2, t - 1});
    p.liaisons.push_back(CIType{t - 2, t + 1});
    p.further = CIType{t + 1, t + 1};
  }
  return p;
}

namespace {

// Section state (h, genus) of the surface X'_d before the further liaison.
ChainTrace intermediate_trace(long defect, std::map<long, ChainTrace>& memo) {
  if (auto it = memo.find(defect); it != memo.end()) return it->second;
  SurfaceChainPlan p = plan_surface_chain(defect);
  std::vector<ChainStep> steps;
  for (const auto& ci : p.liaisons) steps.push_back(LinkStep{ci});
  ChainTrace trace;
  if (p.start_from)
    trace = extend_chain(intermediate_trace(*p.start_from, memo), steps);
  else
    trace = run_chain(HSeq{1, 2, 1}, 0, steps);
  if (trace.last().degree != defect)
    throw Error(ErrorKind::DegreeMismatch, "chain for defect " + std::to_string(defect) + " ends in degree " +
                                               trace.last().degree.str());
  memo.emplace(defect, trace);
  return trace;
}

}  // namespace

SurfaceChainResult surface_chain(long defect) {
  std::map<long, ChainTrace> memo;
  SurfaceChainResult r;
  r.plan = plan_surface_chain(defect);
  ChainTrace before = intermediate_trace(defect, memo);
  r.section_before_further = before.last().h;
  r.genus_before_further = before.last().genus;
  r.trace = extend_chain(before, {LinkStep{r.plan.further}});
  r.final_degree = r.trace.last().degree;
  r.final_section = r.trace.last().h;
  r.final_genus = r.trace.last().genus;
  if (r.final_degree != r.plan.further.degree() - defect)
    throw Error(ErrorKind::DegreeMismatch, "further liaison does not complement the defect");
  return r;
}

ListedVectorCheck check_listed_vector(const SurfaceChainResult& r, const HSeq& listed) {
  ListedVectorCheck c;
  c.listed = listed;
  auto v = check_osequence(listed);
  c.admissible = v.admissible && v.positive;
  c.degree_matches = listed.sum() == r.final_degree;
  c.listed_genus = genus_from_h(listed);
  c.expected_genus = r.genus_before_further + genus_diff(r.plan.further, 3, r.final_degree, r.plan.defect);
  c.genus_matches = c.listed_genus == c.expected_genus;
  return c;
}

}  // namespace hvlab
