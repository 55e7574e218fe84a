#include "hvlab/liaison.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hvlab {

CIType::CIType(std::initializer_list<long> betas) : CIType(std::vector<long>(betas)) {}

CIType::CIType(std::vector<long> betas) : betas_(std::move(betas)) {
  if (betas_.empty()) throw Error(ErrorKind::InvalidArgument, "complete intersection needs at least one degree");
  for (long b : betas_)
    if (b < 1) throw Error(ErrorKind::InvalidArgument, "complete intersection degrees must be >= 1");
  std::sort(betas_.begin(), betas_.end());
}

long CIType::beta_sum() const { return std::accumulate(betas_.begin(), betas_.end(), 0L); }

Integer CIType::degree() const {
  Integer d = 1;
  for (long b : betas_) d *= b;
  return d;
}

long CIType::regularity() const { return beta_sum() - codim() + 1; }

std::string CIType::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < betas_.size(); ++i) os << (i ? "," : "") << betas_[i];
  return os.str();
}

CIType CIType::parse(const std::string& text) {
  HSeq raw = HSeq::parse(text);
  std::vector<long> b;
  // HSeq strips trailing zeros, so count the items separately to reject "2,0".
  std::size_t items = std::count(text.begin(), text.end(), ',') + 1;
  for (std::size_t i = 0; i < items; ++i) b.push_back(static_cast<long>(to_int64(raw[static_cast<long>(i)])));
  return CIType(std::move(b));
}

HSeq ci_hvector(const CIType& ci) {
  std::vector<Integer> poly{1};
  for (long beta : ci.betas()) {
    std::vector<Integer> next(poly.size() + beta - 1);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (long j = 0; j < beta; ++j) next[i + j] += poly[i];
    poly = std::move(next);
  }
  return HSeq(std::move(poly));
}

Integer ci_curve_genus(const CIType& ci, long n) {
  if (ci.codim() != n - 1)
    throw Error(ErrorKind::InvalidArgument, "complete intersection of type (" + ci.to_string() +
                                                ") does not cut a curve in P^" + std::to_string(n));
  Integer twice = ci.degree() * (ci.beta_sum() - n - 1);
  return twice / 2 + 1;
}

long section_regularity(const HSeq& h) { return h.last_index() + 1; }

LinkResult dgo_link(const HSeq& h_z, const CIType& ci) {
  HSeq h_y = ci_hvector(ci);
  long reg = ci.regularity();
  auto verdict = check_osequence(h_z);
  if (!verdict.admissible || !verdict.positive)
    throw Error(ErrorKind::InvalidArgument, "linked h-vector must be positive and admissible: " + h_z.to_string());
  if (h_z == h_y) throw Error(ErrorKind::ImproperInclusion, "improper inclusion: h-vector equals that of the complete intersection");
  if (h_z.last_index() > reg - 1 || h_z.sum() >= ci.degree())
    throw Error(ErrorKind::NotLinkable, "not linkable: (" + h_z.to_string() + ") does not fit in type (" + ci.to_string() + ")");

  std::vector<Integer> formal(static_cast<std::size_t>(reg));
  for (long s = 0; s < reg; ++s) {
    formal[s] = h_y[reg - 1 - s] - h_z[reg - 1 - s];
    if (formal[s] < 0)
      throw Error(ErrorKind::NotLinkable, "not linkable: (" + h_z.to_string() + ") exceeds type (" + ci.to_string() + ") at degree " + std::to_string(reg - 1 - s));
  }
  LinkResult r;
  r.h_linked = HSeq(std::move(formal));
  if (!check_osequence(r.h_linked).admissible)
    throw Error(ErrorKind::NotLinkable, "not linkable: residual (" + r.h_linked.to_string() + ") is not an O-sequence");
  r.reg_y = reg;
  r.alpha_bar = reg - section_regularity(r.h_linked);
  r.alpha_bar_prime = reg - section_regularity(h_z);
  r.deg_linked = ci.degree() - h_z.sum();
  return r;
}

Integer genus_diff(const CIType& ci, long n, const Integer& d, const Integer& d_linked) {
  if (ci.codim() != n - 1)
    throw Error(ErrorKind::InvalidArgument, "complete intersection does not cut a curve in P^" + std::to_string(n));
  if (d + d_linked != ci.degree())
    throw Error(ErrorKind::DegreeMismatch, "degrees " + d.str() + " + " + d_linked.str() +
                                               " do not add up to " + ci.degree().str());
  Integer twice = (ci.beta_sum() - n - 1) * (d - d_linked);
  return twice / 2;
}

Integer linked_genus(const CIType& ci, long c, const Integer& deg_linked, const Integer& d_t, long t) {
  return d_t + deg_linked * (-t + ci.beta_sum() - (c + 1) - 1) + 1;
}

Integer polynomial_gap(const CIType& ci, const IntPoly& p_c, long t) {
  // The curve section of Y is a complete intersection curve in P^(c+1).
  Integer g_bar = ci_curve_genus(ci, ci.codim() + 1);
  Integer p_y = ci.degree() * t + 1 - g_bar;
  return p_y - p_c(t);
}

Integer linked_genus(const CIType& ci, long c, const Integer& deg_linked, const IntPoly& p_c, long t) {
  return linked_genus(ci, c, deg_linked, polynomial_gap(ci, p_c, t), t);
}

HSeq basic_double_link(const HSeq& h, long a, long b) {
  if (a < 1 || b < 1) throw Error(ErrorKind::InvalidArgument, "basic double link degrees must be >= 1");
  if (a > b) std::swap(a, b);
  return h.shifted(a) + ci_hvector(CIType{a, b});
}

std::optional<long> compute_tk(const HSeq& h_z, const HSeq& h_y) {
  long top = std::max(h_z.last_index(), h_y.last_index());
  for (long t = 0; t <= top; ++t)
    if (h_z[t] < h_y[t]) return t;
  return std::nullopt;
}

ChainTrace extend_chain(ChainTrace trace, const std::vector<ChainStep>& steps) {
  for (const auto& step : steps) {
    const ChainRecord& cur = trace.last();
    ChainRecord next;
    if (const auto* link = std::get_if<LinkStep>(&step)) {
      const CIType& ci = link->ci;
      if (cur.degree >= ci.degree())
        throw Error(ErrorKind::NotLinkable, "not linkable: degree " + cur.degree.str() +
                                                " is not below that of type (" + ci.to_string() + ")");
      LinkResult r = dgo_link(cur.h, ci);
      next.kind = "link";
      next.parameters = ci.betas();
      next.h = r.h_linked;
      next.degree = r.deg_linked;
      next.genus = cur.genus - genus_diff(ci, ci.codim() + 1, cur.degree, r.deg_linked);
    } else {
      auto [a, b] = std::get<DoubleLinkStep>(step);
      if (a > b) std::swap(a, b);
      next.kind = "bdl";
      next.parameters = {a, b};
      next.h = basic_double_link(cur.h, a, b);
      next.degree = cur.degree + Integer(a) * b;
      // P_new(t) = P_C(t - a) + P_CI(a,b)(t) for curves in P^3.
      next.genus = cur.genus + cur.degree * a + Integer(a) * b * (a + b - 4) / 2;
    }
    trace.records.push_back(std::move(next));
  }
  return trace;
}

ChainTrace run_chain(const HSeq& h0, const Integer& g0, const std::vector<ChainStep>& steps) {
  ChainTrace trace;
  trace.records.push_back(ChainRecord{"start", {}, h0, h0.sum(), g0});
  return extend_chain(std::move(trace), steps);
}

std::vector<ChainStep> parse_chain_script(const std::string& text) {
  std::vector<ChainStep> steps;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind, args, extra;
    if (!(ls >> kind)) continue;
    std::getline(ls, args);
    auto where = [&] { return "chain script line " + std::to_string(lineno) + ": "; };
    if (args.find_first_not_of(" \t\r") == std::string::npos)
      throw Error(ErrorKind::InvalidArgument, where() + "missing parameters");
    if (kind == "link") {
      steps.emplace_back(LinkStep{CIType::parse(args)});
    } else if (kind == "bdl") {
      CIType ab = CIType::parse(args);
      if (ab.codim() != 2) throw Error(ErrorKind::InvalidArgument, where() + "bdl takes two degrees");
      steps.emplace_back(DoubleLinkStep{ab.betas()[0], ab.betas()[1]});
    } else {
      throw Error(ErrorKind::InvalidArgument, where() + "unknown step '" + kind + "'");
    }
  }
  return steps;
}

}  // namespace hvlab
