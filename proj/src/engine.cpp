#include "hvlab/engine.hpp"

#include <algorithm>
#include <cstdlib>

namespace hvlab {

namespace {

using I64 = std::int64_t;

std::vector<I64> as_int64(const std::vector<Integer>& v) {
  std::vector<I64> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_int64(x));
  return out;
}

bool all_ones(const HSeq& h) {
  for (const auto& x : h.entries())
    if (x != 1) return false;
  return true;
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::ACMForced: return "aCM-forced";
    case Classification::ExcludedByGenus: return "excluded-by-genus";
    case Classification::ExcludedByPlaneCurveRule: return "excluded-by-plane-curve-rule";
    case Classification::ExcludedExtremal: return "excluded-extremal";
    case Classification::ExcludedByCMPostulation: return "excluded-by-cm-postulation";
    case Classification::CMPostulationNonACM: return "CM-postulation-non-aCM";
    case Classification::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

std::string to_string(Route r) {
  switch (r) {
    case Route::MaximalRank: return "maximal-rank";
    case Route::Degenerate: return "degenerate";
    case Route::CollinearCubic: return "collinear-cubic";
    case Route::Extremal: return "extremal";
    case Route::Other: return "other";
  }
  return "other";
}

ConstraintProfile effective_profile(const ScenarioConfig& cfg) {
  if (cfg.profile) return *cfg.profile;
  return cfg.k == 1 ? ConstraintProfile::Curve : ConstraintProfile::General;
}

void validate(const ScenarioConfig& cfg) {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidArgument, "invalid configuration: " + m); };
  if (cfg.k < 1) fail("dimension must be >= 1");
  if (cfg.c < 2) fail("codimension must be >= 2");
  if (cfg.ci.codim() != cfg.c)
    fail("complete intersection (" + cfg.ci.to_string() + ") has " + std::to_string(cfg.ci.codim()) +
         " degrees, codimension is " + std::to_string(cfg.c));
  if (cfg.defect < 1) fail("defect must be >= 1");
  if (Integer(cfg.defect) >= cfg.ci.degree()) fail("defect must be smaller than the degree of the complete intersection");
  if (effective_profile(cfg) == ConstraintProfile::Curve && cfg.k != 1) fail("the curve profile needs dimension 1");
  if (cfg.h_zprime) {
    const HSeq& z = *cfg.h_zprime;
    if (z.sum() != cfg.defect) fail("linked section (" + z.to_string() + ") does not have degree " + std::to_string(cfg.defect));
    auto v = check_osequence(z);
    if (!v.positive || !v.admissible || z[1] > cfg.c)
      fail("linked section (" + z.to_string() + ") is not a positive admissible h-vector in P^" + std::to_string(cfg.c));
  }
}

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits l;
  if (const char* v = std::getenv("HVLAB_MAX_CANDIDATES")) {
    char* end = nullptr;
    long long n = std::strtoll(v, &end, 10);
    if (end && *end == '\0' && n > 0) l.max_candidates = n;
  }
  return l;
}

bool has_maximal_rank(const HSeq& h_zprime, long c) {
  // H(t) = min(d', C(t+c, c)) at every t.
  Integer d = h_zprime.sum();
  Integer running = 0;
  for (long t = 0; t <= h_zprime.last_index() + 1; ++t) {
    running += h_zprime[t];
    Integer full = binomial(Integer(t + c), c);
    if (running != std::min(d, full)) return false;
  }
  return true;
}

bool is_extremal_section(const HSeq& h_z) {
  if (h_z.sum() < 5 || h_z.size() < 3) return false;
  if (h_z[0] != 1 || h_z[1] != 2) return false;
  for (long t = 2; t <= h_z.last_index(); ++t)
    if (h_z[t] != 1) return false;
  return true;
}

Route route_for(const HSeq& h_zprime, long c, long /*k*/) {
  if (has_maximal_rank(h_zprime, c)) return Route::MaximalRank;
  Integer d = h_zprime.sum();
  if (c == 2 && all_ones(h_zprime) && d >= 3) return Route::Degenerate;
  if (c >= 3 && h_zprime == HSeq{1, 1, 1}) return Route::CollinearCubic;
  if (c == 2 && is_extremal_section(h_zprime)) return Route::Extremal;
  return Route::Other;
}

ExtremalInvariants extremal_invariants(long d, const Integer& g) {
  if (d < 3) throw Error(ErrorKind::InvalidArgument, "extremal invariants need degree >= 3");
  Integer q = Integer((d - 2) * (d - 3)) / 2;
  return {g + 1 - q, Integer(d * (d - 3)) / 2 - g, q - g};
}

namespace {

struct SectionData {
  HSeq h_zprime;
  HSeq h_z;
  HSeq h_y;
  long t_k = 0;
  long reg = 0;
  Route route = Route::Other;
};

// Depth-first search over positive sequences meeting the constraint system.
class CandidateSearch {
 public:
  CandidateSearch(const SectionData& s, long depth, long max_candidates, long already)
      : s_(s), depth_(depth), cap_(max_candidates), count_(already) {
    hy_ = as_int64(s.h_y.entries());
    hz_ = as_int64(s.h_z.entries());
    I64 prefix = 0;
    for (long t = 0; t < s.t_k; ++t) prefix += at(hy_, t);
    mass_ = to_int64(s.h_z.sum());
    long len = s.t_k + (mass_ - prefix) + 2;
    auto up = partial_sums(s.h_y, depth, len);
    auto low = partial_sums(s.h_z, depth, len);
    up_ = as_int64(up);
    low_ = as_int64(low);
    forced_ = s.route == Route::MaximalRank;
  }

  std::vector<HSeq> run() {
    std::vector<I64> sums(static_cast<std::size_t>(depth_ + 1), 0);
    rec(0, mass_, sums);
    return std::move(out_);
  }

  long count() const { return count_; }

 private:
  static I64 at(const std::vector<I64>& v, long t) { return t < static_cast<long>(v.size()) ? v[t] : 0; }

  void rec(long t, I64 remaining, const std::vector<I64>& prev) {
    if (remaining == 0) {
      if (t < s_.t_k) return;
      emit();
      return;
    }
    if (t >= static_cast<long>(up_.size())) return;
    I64 base = 0;
    for (long j = 1; j <= depth_; ++j) base += prev[j];
    I64 lo = std::max<I64>(1, low_[t] - base);
    I64 hi = std::min<I64>(remaining, up_[t] - base);
    if (t < s_.t_k) {
      I64 v = at(hy_, t);
      lo = std::max(lo, v);
      hi = std::min(hi, v);
    }
    if (forced_ && t >= s_.t_k && t <= s_.reg - 2) lo = std::max(lo, at(hz_, t));
    std::vector<I64> next(prev.size());
    for (I64 v = lo; v <= hi; ++v) {
      next[0] = v;
      for (long j = 1; j <= depth_; ++j) next[j] = prev[j] + next[j - 1];
      cur_.push_back(v);
      rec(t + 1, remaining - v, next);
      cur_.pop_back();
    }
  }

  void emit() {
    HSeq h = HSeq::from_int64(cur_);
    if (!partial_sums_dominate(s_.h_y, h, depth_)) return;
    if (!partial_sums_dominate(h, s_.h_z, depth_)) return;
    if (++count_ > cap_)
      throw Error(ErrorKind::BoundExceeded, "candidate count exceeds the cap of " + std::to_string(cap_) +
                                                " (set HVLAB_MAX_CANDIDATES to raise it)");
    out_.push_back(std::move(h));
  }

  const SectionData& s_;
  long depth_;
  long cap_;
  long count_;
  I64 mass_ = 0;
  bool forced_ = false;
  std::vector<I64> hy_, hz_, up_, low_;
  std::vector<I64> cur_;
  std::vector<HSeq> out_;
};

GenusData genus_data(const ScenarioConfig& cfg, const SectionData& s, const HSeq& h_x) {
  auto hc = hilbert_from_h(h_x, 1);
  long floor_t = cfg.c == 2 ? s.reg - 1 : s.reg - 2;
  long t = std::max(hc.rho, floor_t);
  GenusData g;
  g.t = t;
  g.d_t = polynomial_gap(cfg.ci, hc.tail, t);
  g.g_linked = linked_genus(cfg.ci, cfg.c, cfg.defect, g.d_t, t);
  return g;
}

const char* kRuleEqual = "coincides with the h-vector of the general zero-dimensional section";
const char* kRulePlane =
    "collinear section of degree >= 3: the linked curve is a plane curve in characteristic 0, "
    "hence aCM, and so is X";
const char* kRuleExtremal =
    "section (1,2,1,...,1) of degree >= 5: the linked curve is extremal, so it is aCM or lies on no "
    "lCM surface";
const char* kRuleCMPost =
    "admissible h-vector: the curve has CM postulation, and curves with defect <= 5 and CM "
    "postulation are aCM";

void classify_candidate(const ScenarioConfig& cfg, const SectionData& s, CandidateReport& r) {
  if (r.equals_section) {
    r.classification = Classification::ACMForced;
    r.rule = kRuleEqual;
  }
  if (s.route == Route::Degenerate || s.route == Route::CollinearCubic) r.genus = genus_data(cfg, s, r.h_x);
  if (r.equals_section) return;

  switch (s.route) {
    case Route::MaximalRank:
      // The lower bound on [t_k, reg-2] pins every candidate to the section.
      r.classification = Classification::Indeterminate;
      r.rule = "maximal-rank section but candidate differs from it";
      return;
    case Route::Degenerate:
      r.classification = Classification::ExcludedByPlaneCurveRule;
      r.rule = kRulePlane;
      return;
    case Route::CollinearCubic: {
      const Integer& g = r.genus->g_linked;
      if (g == 1) {
        r.classification = Classification::ExcludedByPlaneCurveRule;
        r.rule = "g' = 1 forces a plane cubic with gin (x0,...,x_{c-1},x_c^3): the linked curve is aCM, so X is aCM";
      } else {
        r.classification = Classification::ExcludedByGenus;
        r.rule = "g' = " + g.str() +
                 " but a collinear degree-3 section allows only g' = 1 (lCM cubics have g <= 1, with "
                 "equality exactly for plane cubics)";
        if (g == 0) r.rule += "; no saturated Borel ideal with Hilbert polynomial 3t+1 survives the section test";
      }
      return;
    }
    case Route::Extremal:
      if (cfg.k >= 2) {
        r.classification = Classification::ExcludedExtremal;
        r.rule = kRuleExtremal;
        return;
      }
      break;
    case Route::Other:
      break;
  }
  if (cfg.k == 1 && cfg.c == 2 && cfg.defect <= 5 && r.admissible) {
    r.classification = Classification::ExcludedByCMPostulation;
    r.rule = kRuleCMPost;
    return;
  }
  r.classification = r.admissible ? Classification::CMPostulationNonACM : Classification::Indeterminate;
  r.rule = r.admissible ? "admissible candidate outside every exclusion rule" : "no exclusion rule applies";
}

std::vector<HSeq> sections_for(const ScenarioConfig& cfg) {
  if (cfg.h_zprime) return {*cfg.h_zprime};
  return point_hvectors(cfg.defect, cfg.c);
}

struct Enumerated {
  std::vector<CandidateReport> reports;
  std::vector<SkippedSection> skipped;
  std::vector<SectionData> sections;
};

Enumerated enumerate_all(const ScenarioConfig& cfg, const EnumerationLimits& limits) {
  validate(cfg);
  if (cfg.ci.regularity() > limits.max_regularity)
    throw Error(ErrorKind::BoundExceeded, "regularity " + std::to_string(cfg.ci.regularity()) + " exceeds the cap of " +
                                              std::to_string(limits.max_regularity));
  Enumerated e;
  long depth = effective_profile(cfg) == ConstraintProfile::Curve ? 1 : cfg.k;
  long count = 0;
  HSeq h_y = ci_hvector(cfg.ci);
  for (const auto& zp : sections_for(cfg)) {
    SectionData s;
    s.h_zprime = zp;
    s.h_y = h_y;
    s.reg = cfg.ci.regularity();
    try {
      s.h_z = dgo_link(zp, cfg.ci).h_linked;
    } catch (const Error& err) {
      e.skipped.push_back({zp, err.what()});
      continue;
    }
    s.t_k = *compute_tk(s.h_z, h_y);
    s.route = route_for(zp, cfg.c, cfg.k);
    CandidateSearch search(s, depth, limits.max_candidates, count);
    auto found = search.run();
    count = search.count();
    for (auto& h : found) {
      CandidateReport r;
      r.h_x = std::move(h);
      r.h_z = s.h_z;
      r.h_zprime = zp;
      auto v = check_osequence(r.h_x);
      r.positive = v.positive;
      r.admissible = v.admissible;
      r.equals_section = r.h_x == s.h_z;
      r.t_k = s.t_k;
      r.route = s.route;
      classify_candidate(cfg, s, r);
      e.reports.push_back(std::move(r));
    }
    e.sections.push_back(std::move(s));
  }
  return e;
}

bool route_in_hypotheses(const ScenarioConfig& cfg, Route route) {
  if (cfg.c == 2 && cfg.defect <= 5) return true;
  if (cfg.c >= 3 && cfg.defect <= 3) return true;
  if (route == Route::MaximalRank) return true;
  if (cfg.c == 2 && route == Route::Degenerate) return true;
  if (cfg.c == 2 && route == Route::Extremal && cfg.k >= 2) return true;
  return false;
}

std::string route_line(const ScenarioConfig& cfg, const SectionData& s) {
  std::string head = "Z' = (" + s.h_zprime.to_string() + "), Z = (" + s.h_z.to_string() + "), t_k = " +
                     std::to_string(s.t_k) + ": ";
  switch (s.route) {
    case Route::MaximalRank:
      return head + "maximal rank; the section bounds force the h-vector of X to equal that of Z";
    case Route::Degenerate: return head + kRulePlane;
    case Route::CollinearCubic:
      return head + "collinear cubic; genus of the linked curve decides (plane cubic or excluded)";
    case Route::Extremal:
      if (cfg.k >= 2 && cfg.defect >= 6) return head + "extremal; no lCM codimension-two X exists with this section";
      return head + (cfg.k >= 2 ? std::string(kRuleExtremal) : std::string(kRuleCMPost));
    case Route::Other:
      return head + (route_in_hypotheses(cfg, s.route) ? std::string(kRuleCMPost) : "outside theorem hypotheses");
  }
  return head;
}

}  // namespace

std::vector<CandidateReport> enumerate_candidates(const ScenarioConfig& cfg, const EnumerationLimits& limits) {
  return enumerate_all(cfg, limits).reports;
}

ClassifySummary classify(const ScenarioConfig& cfg, const EnumerationLimits& limits) {
  auto e = enumerate_all(cfg, limits);
  ClassifySummary out;
  out.candidates = std::move(e.reports);
  out.skipped = std::move(e.skipped);
  bool inside = true;
  bool no_x = false;
  for (const auto& s : e.sections) {
    out.routes.push_back(route_line(cfg, s));
    if (!route_in_hypotheses(cfg, s.route)) inside = false;
    if (s.route == Route::Extremal && cfg.k >= 2 && cfg.defect >= 6) no_x = true;
  }
  bool open = std::any_of(out.candidates.begin(), out.candidates.end(), [](const CandidateReport& r) {
    return r.classification == Classification::Indeterminate ||
           r.classification == Classification::CMPostulationNonACM;
  });
  out.within_hypotheses = inside;
  if (!inside)
    out.verdict = "outside theorem hypotheses";
  else if (open)
    out.verdict = "indeterminate";
  else if (no_x && cfg.h_zprime)
    out.verdict = "no lCM X exists";
  else
    out.verdict = "positivity ⇒ aCM";
  return out;
}

}  // namespace hvlab
