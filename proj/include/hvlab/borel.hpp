#ifndef HVLAB_BOREL_HPP
#define HVLAB_BOREL_HPP

#include "hvlab/hseq.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hvlab {

/// Exponent vector over x_0 > x_1 > ... > x_n.
using Monomial = std::vector<int>;

int total_degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
std::string monomial_to_string(const Monomial& m);

/// Monomial ideal kept as its minimal generating set, sorted by degree and
/// then descending lexicographic order (x0 first).
class MonIdeal {
 public:
  explicit MonIdeal(int nvars, std::vector<Monomial> generators = {});

  static MonIdeal unit(int nvars);
  /// "x0,x1,x2^4,x2^3*x3"; whitespace ignored; "0" or "" is the zero ideal,
  /// "1" the unit ideal.
  static MonIdeal parse(int nvars, const std::string& text);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  /// I : m.
  MonIdeal colon(const Monomial& m) const;

  bool operator==(const MonIdeal&) const = default;
  std::string to_string() const;

 private:
  int nvars_;
  std::vector<Monomial> gens_;
};

/// Canonical order used for generators: degree, then x0-first lexicographic descending.
bool canonical_less(const Monomial& a, const Monomial& b);

struct BorelWitness {
  Monomial generator;
  int from_var = 0;  // x_j removed
  int to_var = 0;    // x_i added, i < j
};

struct BorelCertificate {
  bool is_borel = false;
  std::optional<BorelWitness> witness;
};

BorelCertificate is_borel(const MonIdeal& ideal);

/// Numerator N(z) of the Hilbert series N(z) / (1 - z)^nvars of the quotient.
HSeq hilbert_numerator(const MonIdeal& ideal);
/// Hilbert function of S / I with its exact Hilbert polynomial.
HilbertData quotient_hilbert(const MonIdeal& ideal);
/// The h-vector and Krull dimension - 1 obtained by cancelling (1 - z) factors.
struct ReducedSeries {
  HSeq h;
  long dim = -1;  // -1 for finite length quotients with zero Hilbert polynomial
};
ReducedSeries reduced_hilbert_series(const MonIdeal& ideal);

/// I : x_n^infinity for Borel-fixed I.
MonIdeal saturate(const MonIdeal& ideal);
/// (I, x_n)^sat / (x_n) in one fewer variable.
MonIdeal restrict_section(const MonIdeal& ideal);
/// Largest degree of a minimal generator of a Borel-fixed ideal.
long borel_regularity(const MonIdeal& ideal);

/// Number of terms r in P(t) = sum_{i=1..r} C(t + a_i - i + 1, a_i), a_1 >= ... >= a_r >= 0.
long gotzmann_number(const IntPoly& p);
/// The exponents a_1 >= ... >= a_r of that decomposition.
std::vector<long> gotzmann_decomposition(const IntPoly& p);

struct BorelEnumerationOptions {
  long max_gotzmann = 8;
};

/// All saturated Borel-fixed ideals in nvars variables whose quotient has
/// Hilbert polynomial p, in canonical order.
std::vector<MonIdeal> enumerate_borel(int nvars, const IntPoly& p,
                                      const BorelEnumerationOptions& options = {});

/// Monomials of degree d in nvars variables, descending lexicographic order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace hvlab

#endif  // HVLAB_BOREL_HPP
