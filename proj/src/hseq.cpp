#include "hvlab/hseq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hvlab {

HSeq::HSeq(std::initializer_list<long> values) {
  for (long v : values) entries_.emplace_back(v);
  normalize();
}

HSeq::HSeq(std::vector<Integer> values) : entries_(std::move(values)) { normalize(); }

HSeq HSeq::from_int64(const std::vector<std::int64_t>& values) {
  std::vector<Integer> v(values.begin(), values.end());
  return HSeq(std::move(v));
}

void HSeq::normalize() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

Integer HSeq::operator[](long t) const {
  if (t < 0 || t >= static_cast<long>(entries_.size())) return 0;
  return entries_[static_cast<std::size_t>(t)];
}

Integer HSeq::sum() const {
  Integer s = 0;
  for (const auto& v : entries_) s += v;
  return s;
}

std::vector<std::int64_t> HSeq::to_int64() const {
  std::vector<std::int64_t> out;
  out.reserve(entries_.size());
  for (const auto& v : entries_) out.push_back(hvlab::to_int64(v));
  return out;
}

std::strong_ordering HSeq::compare(const HSeq& o) const {
  return std::lexicographical_compare_three_way(
      entries_.begin(), entries_.end(), o.entries_.begin(), o.entries_.end(),
      [](const Integer& a, const Integer& b) {
        return a < b ? std::strong_ordering::less
                     : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
      });
}

HSeq HSeq::operator+(const HSeq& o) const {
  std::vector<Integer> v(std::max(size(), o.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
  return HSeq(std::move(v));
}

HSeq HSeq::operator-(const HSeq& o) const {
  std::vector<Integer> v(std::max(size(), o.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
  return HSeq(std::move(v));
}

HSeq HSeq::shifted(long offset) const {
  if (entries_.empty()) return {};
  std::vector<Integer> v;
  long n = static_cast<long>(entries_.size()) + offset;
  for (long t = 0; t < n; ++t) v.push_back((*this)[t - offset]);
  return HSeq(std::move(v));
}

std::string HSeq::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  return os.str();
}

HSeq HSeq::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() >= 2 && ((s.front() == '[' && s.back() == ']') || (s.front() == '(' && s.back() == ')')))
    s = s.substr(1, s.size() - 2);
  std::vector<Integer> v;
  if (s.empty()) return {};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t start = (!item.empty() && (item[0] == '-' || item[0] == '+')) ? 1 : 0;
    bool ok = item.size() > start;
    for (std::size_t i = start; ok && i < item.size(); ++i)
      ok = std::isdigit(static_cast<unsigned char>(item[i])) != 0;
    if (!ok) throw Error(ErrorKind::InvalidArgument, "malformed integer sequence: " + text);
    Integer x(item.substr(start));
    v.push_back(item[0] == '-' ? Integer(-x) : x);
  }
  if (s.back() == ',') throw Error(ErrorKind::InvalidArgument, "malformed integer sequence: " + text);
  return HSeq(std::move(v));
}

MacaulayExpansion macaulay_expansion(const Integer& a, long d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "Macaulay expansion needs d >= 1");
  MacaulayExpansion out;
  out.bound = 0;
  Integer rest = a;
  long deg = d;
  while (rest > 0 && deg >= 1) {
    // largest k with C(k, deg) <= rest, by doubling then bisection
    long lo = deg, hi = deg + 1;
    while (binomial(hi, deg) <= rest) {
      lo = hi;
      if (hi > std::numeric_limits<long>::max() / 2)
        throw Error(ErrorKind::BoundExceeded, "Macaulay representation of " + a.str() + " is too large");
      hi *= 2;
    }
    while (hi - lo > 1) {
      long mid = lo + (hi - lo) / 2;
      (binomial(mid, deg) <= rest ? lo : hi) = mid;
    }
    long k = lo;
    rest -= binomial(k, deg);
    out.bound += binomial(k + 1, deg + 1);
    out.tops.push_back(k);
    out.lowest_degree = deg;
    --deg;
  }
  return out;
}

Integer macaulay_bound(const Integer& a, long d) { return macaulay_expansion(a, d).bound; }

OSeqVerdict check_osequence(const HSeq& h) {
  OSeqVerdict v;
  v.positive = h[0] == 1;
  for (const auto& x : h.entries())
    if (x <= 0) v.positive = false;

  if (h[0] != 1) {
    v.first_violation = Violation{0, h[0], 1};
    return v;
  }
  for (long t = 1; t <= h.last_index(); ++t) {
    if (h[t] < 0) {
      v.first_violation = Violation{t, h[t], 0};
      return v;
    }
    if (t >= 2) {
      Integer bound = macaulay_bound(h[t - 1], t - 1);
      if (h[t] > bound) {
        v.first_violation = Violation{t, h[t], bound};
        return v;
      }
    }
  }
  v.admissible = true;
  return v;
}

Integer partial_sum_at(const HSeq& h, long depth, long t) {
  if (t < 0) return 0;
  if (depth == 0) return h[t];
  Integer s = 0;
  for (long i = 0; i <= std::min(t, h.last_index()); ++i)
    s += h[i] * binomial(t - i + depth - 1, depth - 1);
  return s;
}

std::vector<Integer> partial_sums(const HSeq& h, long depth, long count) {
  std::vector<Integer> row(static_cast<std::size_t>(std::max(count, 0L)));
  for (long t = 0; t < count; ++t) row[t] = h[t];
  for (long d = 0; d < depth; ++d)
    for (long t = 1; t < count; ++t) row[t] += row[t - 1];
  return row;
}

HSeq differences(const HSeq& h, long times) {
  std::vector<Integer> v = h.entries();
  for (long r = 0; r < times; ++r) {
    v.emplace_back(0);
    for (std::size_t t = v.size() - 1; t > 0; --t) v[t] -= v[t - 1];
  }
  return HSeq(std::move(v));
}

bool partial_sums_dominate(const HSeq& upper, const HSeq& lower, long depth) {
  HSeq diff = upper - lower;
  long len = static_cast<long>(diff.size());
  if (depth == 0) {
    for (const auto& x : diff.entries())
      if (x < 0) return false;
    return true;
  }
  for (const auto& x : partial_sums(diff, depth, len))
    if (x < 0) return false;
  // Beyond the support the partial sum is a polynomial of degree < depth.
  IntPoly p;
  for (long i = 0; i < len; ++i)
    p = p + IntPoly::shifted_binomial(depth - 1 - i, depth - 1) * diff[i];
  if (p.is_zero()) return true;
  if (p.eventual_sign() < 0) return false;
  for (long base = std::max(len, 0L);; ++base) {
    std::vector<Integer> fd;
    for (long j = 0; j <= p.degree(); ++j) fd.push_back(p(base + j));
    if (fd[0] < 0) return false;
    bool all_nonneg = true;
    for (long j = 0; j <= p.degree() && all_nonneg; ++j) {
      if (fd[0] < 0) all_nonneg = false;
      for (std::size_t i = 0; i + 1 < fd.size(); ++i) fd[i] = fd[i + 1] - fd[i];
      if (!fd.empty()) fd.pop_back();
    }
    if (all_nonneg) return true;
  }
}

Integer HilbertData::operator()(long t) const {
  if (t < 0) return 0;
  if (t < static_cast<long>(prefix.size())) return prefix[t];
  return tail(t);
}

HilbertData hilbert_from_h(const HSeq& h, long k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 0");
  HilbertData out;
  out.dim = k;
  long s = h.last_index();
  for (long i = 0; i <= s; ++i)
    if (h[i] != 0) out.tail = out.tail + IntPoly::shifted_binomial(k - i, k) * h[i];

  auto value = [&](long t) {
    Integer v = 0;
    for (long i = 0; i <= std::min(t, s); ++i) v += h[i] * binomial(t - i + k, k);
    return v;
  };
  out.rho = 0;
  for (long t = std::max(s - k, 0L) - 1; t >= 0; --t) {
    if (value(t) != out.tail(t)) {
      out.rho = t + 1;
      break;
    }
  }
  long upto = std::max(out.rho, s) + 2;
  for (long t = 0; t <= upto; ++t) out.prefix.push_back(value(t));
  return out;
}

Integer genus_from_h(const HSeq& h) {
  Integer g = 1;
  for (long i = 0; i <= h.last_index(); ++i) g += (i - 1) * h[i];
  return g;
}

namespace {

void extend_points(std::vector<Integer>& seq, const Integer& remaining, long ambient,
                   std::vector<HSeq>& out) {
  if (remaining == 0) {
    out.emplace_back(seq);
    return;
  }
  long t = static_cast<long>(seq.size());
  Integer cap = t == 1 ? Integer(ambient) : macaulay_bound(seq.back(), t - 1);
  cap = std::min(cap, remaining);
  for (Integer v = 1; v <= cap; ++v) {
    seq.push_back(v);
    extend_points(seq, remaining - v, ambient, out);
    seq.pop_back();
  }
}

}  // namespace

std::vector<HSeq> point_hvectors(long degree, long ambient) {
  if (degree <= 0) throw Error(ErrorKind::InvalidArgument, "degree must be positive");
  if (ambient <= 0) throw Error(ErrorKind::InvalidArgument, "ambient dimension must be positive");
  std::vector<HSeq> out;
  std::vector<Integer> seq{1};
  extend_points(seq, degree - 1, ambient, out);
  return out;
}

}  // namespace hvlab
