#ifndef HVLAB_INT_POLY_HPP
#define HVLAB_INT_POLY_HPP

#include "hvlab/common.hpp"

#include <string>
#include <vector>

namespace hvlab {

/// Integer-valued polynomial stored in the binomial basis:
/// P(t) = sum_i c_i * C(t, i). Integer values at integer t come for free.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> binomial_coefficients);

  /// a*t + b.
  static IntPoly linear(const Integer& a, const Integer& b);
  static IntPoly constant(const Integer& c) { return linear(0, c); }
  /// C(t + shift, k) as a polynomial in t.
  static IntPoly shifted_binomial(const Integer& shift, long k);
  /// The unique polynomial of degree < values.size() with P(base + i) = values[i].
  static IntPoly interpolate(const std::vector<Integer>& values, long base = 0);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Integer operator()(long t) const;

  /// Sign of P(t) as t -> +infinity (-1, 0 or 1).
  int eventual_sign() const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const Integer& s) const;
  bool operator==(const IntPoly& o) const = default;

  /// "9t-10" style for degree <= 1, otherwise "bin:c0,c1,...".
  std::string to_string() const;
  /// Accepts "A*t+B", "At+B", "B", "t", "-t+3" and "bin:c0,c1,...".
  static IntPoly parse(const std::string& text);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

}  // namespace hvlab

#endif  // HVLAB_INT_POLY_HPP
