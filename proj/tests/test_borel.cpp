#include "hvlab/borel.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hvlab;

namespace {

const char* J1 = "x0,x1,x2^4,x2^3*x3";
const char* J2 = "x0,x1^2,x1*x2,x1*x3,x2^3";
const char* J3 = "x0,x1^2,x1*x2,x2^2";

MonIdeal random_ideal(std::mt19937& rng, int nvars) {
  std::uniform_int_distribution<int> count(1, 5), exp(0, 3);
  std::vector<Monomial> gens;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(nvars);
    for (auto& e : m) e = exp(rng);
    if (total_degree(m) == 0) m[0] = 1;
    gens.push_back(m);
  }
  return MonIdeal(nvars, gens);
}

// Borel closure of random generators: close under every up-move.
MonIdeal random_borel(std::mt19937& rng, int nvars) {
  auto base = random_ideal(rng, nvars);
  std::vector<Monomial> gens = base.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int j = 1; j < nvars; ++j)
      if (gens[i][j] > 0)
        for (int k = 0; k < j; ++k) {
          Monomial m = gens[i];
          --m[j];
          ++m[k];
          if (std::find(gens.begin(), gens.end(), m) == gens.end()) gens.push_back(m);
        }
  return MonIdeal(nvars, gens);
}

}  // namespace

TEST_CASE("MonIdeal parsing and canonical form") {
  auto I = MonIdeal::parse(5, J2);
  CHECK(I.to_string() == "x0,x1^2,x1*x2,x1*x3,x2^3");
  CHECK(MonIdeal::parse(5, I.to_string()) == I);
  auto K = MonIdeal::parse(3, "x1^2, x0, x0*x1");
  CHECK(K.to_string() == "x0,x1^2");
  CHECK(MonIdeal::parse(3, "0").is_zero());
  CHECK(MonIdeal::parse(3, "1").is_unit());
  CHECK_THROWS_AS(MonIdeal::parse(3, "x3"), Error);
  CHECK_THROWS_AS(MonIdeal::parse(3, "x0^"), Error);
  CHECK(I.contains(Monomial{0, 1, 1, 0, 7}));
  CHECK_FALSE(I.contains(Monomial{0, 0, 2, 0, 7}));
  CHECK(I.colon(Monomial{0, 1, 0, 0, 0}).to_string() == "x0,x1,x2,x3");
}

TEST_CASE("is_borel") {
  CHECK(is_borel(MonIdeal::parse(5, J2)).is_borel);
  CHECK(is_borel(MonIdeal::parse(5, J1)).is_borel);
  CHECK(is_borel(MonIdeal::parse(5, J3)).is_borel);
  auto cert = is_borel(MonIdeal::parse(4, "x0,x2"));
  CHECK_FALSE(cert.is_borel);
  REQUIRE(cert.witness);
  CHECK(cert.witness->generator == Monomial{0, 0, 1, 0});
  CHECK(cert.witness->from_var == 2);
  CHECK(cert.witness->to_var == 1);
  CHECK(is_borel(MonIdeal::parse(3, "x0^2")).is_borel);
}

TEST_CASE("is_borel agrees with the definition on random ideals") {
  std::mt19937 rng(23);
  for (int it = 0; it < 300; ++it) {
    auto I = it % 2 ? random_borel(rng, 4) : random_ideal(rng, 4);
    bool by_def = true;
    for (int d = 0; d <= 12 && by_def; ++d)
      for (const auto& m : oracle::all_monomials(4, d)) {
        if (!I.contains(m)) continue;
        for (int j = 1; j < 4 && by_def; ++j)
          for (int i = 0; i < j && by_def; ++i)
            if (m[j] > 0) {
              auto u = m;
              --u[j];
              ++u[i];
              by_def = I.contains(u);
            }
      }
    CHECK(is_borel(I).is_borel == by_def);
    if (it % 2) CHECK(is_borel(I).is_borel);
  }
}

TEST_CASE("quotient_hilbert examples") {
  auto hd = quotient_hilbert(MonIdeal::parse(5, J1));
  CHECK(hd.tail == IntPoly::linear(3, 1));
  for (int t = 0; t <= 12; ++t) CHECK(hd(t) == oracle::count_standard(MonIdeal::parse(5, J1), t));
  hd = quotient_hilbert(MonIdeal::parse(4, "x0,x1,x2^3"));
  CHECK(hd.tail == IntPoly::constant(3));
  CHECK(hd(0) == 1);
  CHECK(hd(1) == 2);
  CHECK(hd(2) == 3);
  CHECK(hd(3) == 3);
  hd = quotient_hilbert(MonIdeal(2));
  CHECK(hd.tail == IntPoly::linear(1, 1));
  auto rs = reduced_hilbert_series(MonIdeal::parse(4, "x0,x1,x2^3"));
  CHECK(rs.h == HSeq{1, 1, 1});
  CHECK(rs.dim == 0);
}

TEST_CASE("quotient_hilbert agrees with standard monomial counting") {
  std::mt19937 rng(29);
  for (int it = 0; it < 150; ++it) {
    int n = 2 + it % 3;
    auto I = random_ideal(rng, n);
    auto hd = quotient_hilbert(I);
    for (int t = 0; t <= 14; ++t) CHECK(hd(t) == oracle::count_standard(I, t));
    // tail agrees from rho on
    for (int t = hd.rho; t <= hd.rho + 4; ++t) CHECK(hd.tail(t) == oracle::count_standard(I, t));
  }
}

TEST_CASE("saturate") {
  CHECK(saturate(MonIdeal::parse(4, J1)) == MonIdeal::parse(4, "x0,x1,x2^3"));
  CHECK(saturate(MonIdeal::parse(5, "x0,x1,x2^3")) == MonIdeal::parse(5, "x0,x1,x2^3"));
  // saturation through x_n -> 1 is refused outside the Borel case
  CHECK_THROWS_AS(saturate(MonIdeal::parse(4, "x3")), Error);
  CHECK_THROWS_AS(saturate(MonIdeal::parse(4, "x0,x2")), Error);
}

TEST_CASE("saturate matches the colon definition on Borel ideals") {
  std::mt19937 rng(31);
  for (int it = 0; it < 150; ++it) {
    int n = 2 + it % 3;
    auto I = random_borel(rng, n);
    auto expected = MonIdeal(n, oracle::saturate_by_definition(I.generators(), n));
    CHECK(saturate(I) == expected);
  }
}

TEST_CASE("restrict_section and regularity") {
  CHECK(restrict_section(MonIdeal::parse(5, J1)) == MonIdeal::parse(4, "x0,x1,x2^3"));
  CHECK(restrict_section(MonIdeal::parse(5, J3)) == MonIdeal::parse(4, J3));
  for (int n = 3; n <= 6; ++n) CHECK(restrict_section(MonIdeal::parse(n, "x0")) == MonIdeal::parse(n - 1, "x0"));
  // a point of P^1 has an empty hyperplane section
  CHECK(restrict_section(MonIdeal::parse(2, "x0")).is_unit());
  CHECK(borel_regularity(MonIdeal::parse(5, J1)) == 4);
  CHECK(borel_regularity(MonIdeal::parse(4, "x0,x1,x2^3")) == 3);
  CHECK(borel_regularity(MonIdeal::parse(3, "x0")) == 1);
}

TEST_CASE("restriction to a general section keeps the h-vector of a curve") {
  for (const char* j : {J1, J2, J3}) {
    auto I = MonIdeal::parse(5, j);
    auto curve = quotient_hilbert(I);
    auto sec = quotient_hilbert(restrict_section(I));
    CHECK(sec.tail == IntPoly::constant(3));
    CHECK(curve.tail.degree() == 1);
  }
  // For the aCM ideal the section function is the first difference of the curve's.
  auto aCM = MonIdeal::parse(5, J3);
  auto curve = quotient_hilbert(aCM);
  auto sec = quotient_hilbert(restrict_section(aCM));
  for (long t = 0; t < 10; ++t) CHECK(sec(t) == curve(t) - curve(t - 1));
  // J1 carries a non-trivial deficiency: the difference disagrees in degree 3.
  auto non = MonIdeal::parse(5, J1);
  curve = quotient_hilbert(non);
  sec = quotient_hilbert(restrict_section(non));
  CHECK(sec(3) != curve(3) - curve(2));
}

TEST_CASE("gotzmann numbers") {
  CHECK(gotzmann_number(IntPoly::linear(3, 1)) == 4);
  CHECK(gotzmann_number(IntPoly::linear(3, 0)) == 3);
  CHECK(gotzmann_number(IntPoly::constant(1)) == 1);
  CHECK(gotzmann_decomposition(IntPoly::linear(3, 1)) == std::vector<long>{1, 1, 1, 0});
  CHECK_THROWS_AS(gotzmann_number(IntPoly::linear(-1, 3)), Error);
  // the decomposition sums back to P
  for (long d = 1; d <= 5; ++d)
    for (long b = -3; b <= 3; ++b) {
      IntPoly p = IntPoly::linear(d, b);
      std::vector<long> a;
      try {
        a = gotzmann_decomposition(p);
      } catch (const Error&) {
        continue;
      }
      IntPoly sum;
      for (std::size_t i = 0; i < a.size(); ++i)
        sum = sum + IntPoly::shifted_binomial(a[i] - static_cast<long>(i + 1) + 1, a[i]);
      CHECK(sum == p);
      for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] <= a[i - 1]);
    }
}

TEST_CASE("enumerate_borel examples") {
  auto list = enumerate_borel(5, IntPoly::linear(3, 1));
  std::vector<MonIdeal> expected{MonIdeal::parse(5, J1), MonIdeal::parse(5, J2), MonIdeal::parse(5, J3)};
  CHECK(list.size() == 3);
  for (const auto& e : expected) CHECK(std::find(list.begin(), list.end(), e) != list.end());

  auto cubics = enumerate_borel(5, IntPoly::linear(3, 0));
  CHECK(std::find(cubics.begin(), cubics.end(), MonIdeal::parse(5, "x0,x1,x2^3")) != cubics.end());
  auto pts = enumerate_borel(3, IntPoly::constant(2));
  CHECK(std::find(pts.begin(), pts.end(), MonIdeal::parse(3, "x0,x1^2")) != pts.end());
  CHECK(enumerate_borel(3, IntPoly::constant(1)) == std::vector<MonIdeal>{MonIdeal::parse(3, "x0,x1")});
  BorelEnumerationOptions tight;
  tight.max_gotzmann = 3;
  CHECK_THROWS_AS(enumerate_borel(5, IntPoly::linear(3, 1), tight), Error);
}

TEST_CASE("enumerate_borel is complete against breadth-first search") {
  struct Case {
    int nvars;
    IntPoly p;
  };
  std::vector<Case> cases{{3, IntPoly::constant(1)}, {3, IntPoly::constant(2)}, {3, IntPoly::constant(3)},
                          {3, IntPoly::constant(4)}, {3, IntPoly::constant(5)}, {4, IntPoly::constant(3)},
                          {4, IntPoly::constant(4)}, {4, IntPoly::linear(1, 1)}, {4, IntPoly::linear(2, 1)},
                          {4, IntPoly::linear(2, 2)}, {4, IntPoly::linear(3, 1)}, {4, IntPoly::linear(3, 0)},
                          {5, IntPoly::linear(2, 1)}, {5, IntPoly::linear(3, 1)}};
  for (const auto& c : cases) {
    CAPTURE(c.nvars);
    CAPTURE(c.p.to_string());
    long r = gotzmann_number(c.p);
    auto oracle_set = oracle::borel_by_bfs(c.nvars, static_cast<int>(r), static_cast<long>(c.p(r)), c.p);
    auto got = enumerate_borel(c.nvars, c.p);
    std::set<std::vector<Monomial>> got_set;
    for (const auto& I : got) {
      got_set.insert(I.generators());
      CHECK(is_borel(I).is_borel);
      CHECK(saturate(I) == I);
      CHECK(quotient_hilbert(I).tail == c.p);
      CHECK(borel_regularity(I) <= r);
    }
    CHECK(got_set.size() == got.size());
    CHECK(got_set == oracle_set);
  }
}
