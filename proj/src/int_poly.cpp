#include "hvlab/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hvlab {

Integer binomial(const Integer& top, long k) {
  if (k < 0) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) {
    r *= top - i;
    r /= i + 1;
  }
  return r;
}

IntPoly::IntPoly(std::vector<Integer> binomial_coefficients)
    : coeffs_(std::move(binomial_coefficients)) {
  normalize();
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::linear(const Integer& a, const Integer& b) { return IntPoly({b, a}); }

IntPoly IntPoly::shifted_binomial(const Integer& shift, long k) {
  // Vandermonde: C(t + s, k) = sum_j C(t, j) C(s, k - j).
  std::vector<Integer> c(static_cast<std::size_t>(std::max(k + 1, 0L)));
  for (long j = 0; j <= k; ++j) c[j] = binomial(shift, k - j);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::interpolate(const std::vector<Integer>& values, long base) {
  // Newton form around base: P(t) = sum_i (Delta^i P)(base) C(t - base, i).
  std::vector<Integer> diff = values;
  std::vector<Integer> newton;
  for (std::size_t i = 0; i < values.size(); ++i) {
    newton.push_back(diff[0]);
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    if (!diff.empty()) diff.pop_back();
  }
  IntPoly out;
  for (std::size_t i = 0; i < newton.size(); ++i) {
    if (newton[i] == 0) continue;
    out = out + shifted_binomial(-base, static_cast<long>(i)) * newton[i];
  }
  return out;
}

Integer IntPoly::operator()(long t) const {
  Integer v = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) v += coeffs_[i] * binomial(t, static_cast<long>(i));
  return v;
}

int IntPoly::eventual_sign() const {
  if (coeffs_.empty()) return 0;
  return coeffs_.back() > 0 ? 1 : -1;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Integer> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < coeffs_.size()) c[i] += coeffs_[i];
    if (i < o.coeffs_.size()) c[i] += o.coeffs_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + o * Integer(-1); }

IntPoly IntPoly::operator*(const Integer& s) const {
  std::vector<Integer> c = coeffs_;
  for (auto& x : c) x *= s;
  return IntPoly(std::move(c));
}

std::string IntPoly::to_string() const {
  if (degree() <= 1) {
    Integer a = degree() == 1 ? coeffs_[1] : Integer(0);
    Integer b = degree() >= 0 ? coeffs_[0] : Integer(0);
    std::ostringstream os;
    if (a == 0) {
      os << b;
      return os.str();
    }
    if (a == -1)
      os << "-";
    else if (a != 1)
      os << a;
    os << "t";
    if (b > 0) os << "+" << b;
    if (b < 0) os << b;
    return os.str();
  }
  std::ostringstream os;
  os << "bin:";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  return os.str();
}

namespace {

Integer parse_integer(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+" || s == "-")
    throw Error(ErrorKind::InvalidArgument, "malformed polynomial: " + whole);
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw Error(ErrorKind::InvalidArgument, "malformed polynomial: " + whole);
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(ErrorKind::InvalidArgument, "malformed polynomial: " + whole);
  Integer v(s.substr(start));
  return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

IntPoly IntPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.rfind("bin:", 0) == 0) {
    std::vector<Integer> c;
    std::stringstream ss(s.substr(4));
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_integer(item, text));
    return IntPoly(std::move(c));
  }
  auto tpos = s.find('t');
  if (tpos == std::string::npos) return constant(parse_integer(s, text));
  if (s.find('t', tpos + 1) != std::string::npos)
    throw Error(ErrorKind::InvalidArgument, "malformed polynomial: " + text);
  std::string head = s.substr(0, tpos);
  std::string rest = s.substr(tpos + 1);
  if (!head.empty() && head.back() == '*') head.pop_back();
  Integer a;
  if (head.empty() || head == "+")
    a = 1;
  else if (head == "-")
    a = -1;
  else
    a = parse_integer(head, text);
  Integer b = 0;
  if (!rest.empty()) {
    if (rest[0] != '+' && rest[0] != '-')
      throw Error(ErrorKind::InvalidArgument, "malformed polynomial: " + text);
    b = parse_integer(rest, text);
  }
  return linear(a, b);
}

}  // namespace hvlab
