#ifndef HVLAB_COMMON_HPP
#define HVLAB_COMMON_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hvlab {

/// Exact integer used for every h-vector entry, Hilbert value and polynomial
/// coefficient.
using Integer = boost::multiprecision::cpp_int;

enum class ErrorKind {
  InvalidArgument,  // precondition violated by the caller
  NotLinkable,
  ImproperInclusion,
  NotBorel,
  NotHilbertPolynomial,
  BoundExceeded,
  DegreeMismatch,
  NotCovered,
};

/// Domain error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Narrowing conversion that refuses to lose information.
inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorKind::BoundExceeded, "integer exceeds 64-bit range: " + v.str());
  return static_cast<std::int64_t>(v);
}

/// Generalized binomial coefficient C(top, k) for any integer top and k >= 0;
/// zero for k < 0.
Integer binomial(const Integer& top, long k);

}  // namespace hvlab

#endif  // HVLAB_COMMON_HPP
