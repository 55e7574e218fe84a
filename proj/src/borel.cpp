#include "hvlab/borel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hvlab {

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (m[i] > 1) os << "^" << m[i];
  }
  if (first) os << "1";
  return os.str();
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

void require_borel(const MonIdeal& ideal, const char* op) {
  auto cert = is_borel(ideal);
  if (!cert.is_borel)
    throw Error(ErrorKind::NotBorel, std::string(op) + ": ideal (" + ideal.to_string() + ") is not Borel-fixed");
}

}  // namespace

MonIdeal::MonIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
  if (nvars < 1) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != nvars)
      throw Error(ErrorKind::InvalidArgument, "exponent vector has wrong length");
  gens_ = minimalize(std::move(generators));
}

MonIdeal MonIdeal::unit(int nvars) { return MonIdeal(nvars, {Monomial(nvars, 0)}); }

bool MonIdeal::is_unit() const { return gens_.size() == 1 && total_degree(gens_[0]) == 0; }

bool MonIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

MonIdeal MonIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> q;
  for (const auto& g : gens_) {
    Monomial h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = std::max(g[i] - m[i], 0);
    q.push_back(std::move(h));
  }
  return MonIdeal(nvars_, std::move(q));
}

std::string MonIdeal::to_string() const {
  if (gens_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << monomial_to_string(gens_[i]);
  return os.str();
}

MonIdeal MonIdeal::parse(int nvars, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty() || s == "0") return MonIdeal(nvars);
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::InvalidArgument, "malformed monomial ideal '" + text + "': " + why);
  };
  std::vector<Monomial> gens;
  std::stringstream ss(s);
  std::string gen;
  while (std::getline(ss, gen, ',')) {
    if (gen.empty()) throw fail("empty generator");
    Monomial m(nvars, 0);
    if (gen != "1") {
      std::stringstream fs(gen);
      std::string factor;
      while (std::getline(fs, factor, '*')) {
        if (factor.size() < 2 || factor[0] != 'x') throw fail("bad factor '" + factor + "'");
        auto caret = factor.find('^');
        std::string var = factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        std::string exp = caret == std::string::npos ? "1" : factor.substr(caret + 1);
        auto digits = [](const std::string& x) {
          return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        if (!digits(var) || !digits(exp)) throw fail("bad factor '" + factor + "'");
        if (var.size() > 6 || exp.size() > 6) throw fail("factor out of range '" + factor + "'");
        int v = std::stoi(var);
        if (v >= nvars) throw fail("variable x" + var + " not among x0..x" + std::to_string(nvars - 1));
        m[v] += std::stoi(exp);
      }
    }
    gens.push_back(std::move(m));
  }
  if (s.back() == ',') throw fail("trailing comma");
  return MonIdeal(nvars, std::move(gens));
}

BorelCertificate is_borel(const MonIdeal& ideal) {
  BorelCertificate cert;
  for (const auto& g : ideal.generators()) {
    for (int j = 0; j < ideal.nvars(); ++j) {
      if (g[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        Monomial moved = g;
        --moved[j];
        ++moved[i];
        if (!ideal.contains(moved)) {
          cert.witness = BorelWitness{g, j, i};
          return cert;
        }
      }
    }
  }
  cert.is_borel = true;
  return cert;
}

namespace {

using Numerator = std::vector<Integer>;

Numerator mul(const Numerator& a, const Numerator& b) {
  if (a.empty() || b.empty()) return {};
  Numerator r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Numerator sub_shifted(const Numerator& a, const Numerator& b, int shift) {
  Numerator r(std::max(a.size(), b.size() + shift));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= b[i];
  return r;
}

class NumeratorCache {
 public:
  Numerator compute(const MonIdeal& ideal) {
    const auto& gens = ideal.generators();
    if (gens.empty()) return {1};
    if (ideal.is_unit()) return {};
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;

    Numerator result;
    auto pivot = std::find_if(gens.rbegin(), gens.rend(), [](const Monomial& g) {
      return std::count_if(g.begin(), g.end(), [](int e) { return e > 0; }) > 1;
    });
    if (pivot == gens.rend()) {
      // Pure powers of distinct variables form a regular sequence.
      result = {1};
      for (const auto& g : gens) {
        Numerator f(total_degree(g) + 1);
        f[0] = 1;
        f.back() -= 1;
        result = mul(result, f);
      }
    } else {
      // N(I' + (m)) = N(I') - z^deg(m) N(I' : m).
      std::vector<Monomial> rest;
      for (const auto& g : gens)
        if (&g != &*pivot) rest.push_back(g);
      MonIdeal smaller(ideal.nvars(), rest);
      result = sub_shifted(compute(smaller), compute(smaller.colon(*pivot)), total_degree(*pivot));
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  std::map<std::vector<Monomial>, Numerator> memo_;
};

}  // namespace

HSeq hilbert_numerator(const MonIdeal& ideal) {
  NumeratorCache cache;
  return HSeq(cache.compute(ideal));
}

ReducedSeries reduced_hilbert_series(const MonIdeal& ideal) {
  HSeq n = hilbert_numerator(ideal);
  long divisions = 0;
  while (!n.empty() && n.sum() == 0) {
    std::vector<Integer> q(n.size() - 1);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      acc += n[static_cast<long>(i)];
      q[i] = acc;
    }
    n = HSeq(std::move(q));
    ++divisions;
  }
  ReducedSeries r;
  r.h = n;
  r.dim = n.empty() ? -1 : ideal.nvars() - 1 - divisions;
  return r;
}

HilbertData quotient_hilbert(const MonIdeal& ideal) {
  HilbertData hd = hilbert_from_h(hilbert_numerator(ideal), ideal.nvars() - 1);
  hd.dim = hd.tail.degree();
  return hd;
}

MonIdeal saturate(const MonIdeal& ideal) {
  require_borel(ideal, "saturate");
  std::vector<Monomial> gens = ideal.generators();
  for (auto& g : gens) g.back() = 0;
  return MonIdeal(ideal.nvars(), std::move(gens));
}

MonIdeal restrict_section(const MonIdeal& ideal) {
  require_borel(ideal, "restrict_section");
  if (ideal.nvars() < 2) throw Error(ErrorKind::InvalidArgument, "restriction needs at least two variables");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    if (g.back() != 0) continue;
    gens.emplace_back(g.begin(), g.end() - 1);
  }
  return saturate(MonIdeal(ideal.nvars() - 1, std::move(gens)));
}

long borel_regularity(const MonIdeal& ideal) {
  require_borel(ideal, "borel_regularity");
  long reg = 0;
  for (const auto& g : ideal.generators()) reg = std::max<long>(reg, total_degree(g));
  return reg;
}

std::vector<long> gotzmann_decomposition(const IntPoly& p) {
  std::vector<long> exps;
  IntPoly rest = p;
  for (long i = 1; !rest.is_zero(); ++i) {
    if (rest.eventual_sign() < 0 || i > 100000)
      throw Error(ErrorKind::NotHilbertPolynomial, "not a Hilbert polynomial: " + p.to_string());
    long a = rest.degree();
    rest = rest - IntPoly::shifted_binomial(a - i + 1, a);
    exps.push_back(a);
  }
  return exps;
}

long gotzmann_number(const IntPoly& p) { return static_cast<long>(gotzmann_decomposition(p).size()); }

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      m[var] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
    m[var] = 0;
  };
  rec(rec, 0, d);
  return out;
}

namespace {

bool ideal_less(const MonIdeal& a, const MonIdeal& b) {
  return std::lexicographical_compare(a.generators().begin(), a.generators().end(),
                                      b.generators().begin(), b.generators().end(), canonical_less);
}

}  // namespace

std::vector<MonIdeal> enumerate_borel(int nvars, const IntPoly& p, const BorelEnumerationOptions& options) {
  if (nvars < 2) throw Error(ErrorKind::InvalidArgument, "enumeration needs at least two variables");
  long r = gotzmann_number(p);
  if (r > options.max_gotzmann)
    throw Error(ErrorKind::BoundExceeded, "Gotzmann number " + std::to_string(r) + " exceeds the bound " +
                                              std::to_string(options.max_gotzmann));
  if (r == 0) return {MonIdeal::unit(nvars)};

  // Standard monomials in degree r form a set closed under moving an exponent
  // to a smaller variable. Visit monomials smallest-first so that every move
  // target is decided before the monomial itself.
  std::vector<Monomial> mons = monomials_of_degree(nvars, static_cast<int>(r));
  std::reverse(mons.begin(), mons.end());
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;
  std::vector<std::vector<std::size_t>> requires_(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (int v = 0; v + 1 < nvars; ++v) {
      if (mons[i][v] == 0) continue;
      Monomial down = mons[i];
      --down[v];
      ++down[v + 1];
      requires_[i].push_back(index.at(down));
    }

  Integer target_big = p(r);
  if (target_big < 0 || target_big > static_cast<long>(mons.size())) return {};
  std::size_t target = static_cast<std::size_t>(to_int64(target_big));

  std::vector<char> chosen(mons.size(), 0);
  std::set<std::vector<Monomial>> seen;
  std::vector<MonIdeal> out;
  auto emit = [&] {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < mons.size(); ++i)
      if (!chosen[i]) gens.push_back(mons[i]);
    MonIdeal sat = saturate(MonIdeal(nvars, std::move(gens)));
    if (quotient_hilbert(sat).tail != p) return;
    if (seen.insert(sat.generators()).second) out.push_back(std::move(sat));
  };
  auto dfs = [&](auto&& self, std::size_t i, std::size_t count) -> void {
    if (count == target) {
      emit();
      return;
    }
    if (i == mons.size() || count + (mons.size() - i) < target) return;
    bool allowed = std::all_of(requires_[i].begin(), requires_[i].end(), [&](std::size_t j) { return chosen[j] != 0; });
    if (allowed) {
      chosen[i] = 1;
      self(self, i + 1, count + 1);
      chosen[i] = 0;
    }
    self(self, i + 1, count);
  };
  dfs(dfs, 0, 0);
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

}  // namespace hvlab
