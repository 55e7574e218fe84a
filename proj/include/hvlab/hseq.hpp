#ifndef HVLAB_HSEQ_HPP
#define HVLAB_HSEQ_HPP

#include "hvlab/common.hpp"
#include "hvlab/int_poly.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hvlab {

/// Finite integer sequence indexed from 0, compared as a zero-extended
/// function. Trailing zeros are stripped on construction.
class HSeq {
 public:
  HSeq() = default;
  HSeq(std::initializer_list<long> values);
  explicit HSeq(std::vector<Integer> values);
  static HSeq from_int64(const std::vector<std::int64_t>& values);

  /// Value at t; zero outside [0, size()).
  Integer operator[](long t) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Integer>& entries() const { return entries_; }
  /// Index of the last nonzero entry, -1 for the zero sequence.
  long last_index() const { return static_cast<long>(entries_.size()) - 1; }

  Integer sum() const;
  std::vector<std::int64_t> to_int64() const;

  bool operator==(const HSeq&) const = default;
  auto operator<=>(const HSeq& o) const { return compare(o); }

  HSeq operator+(const HSeq& o) const;
  HSeq operator-(const HSeq& o) const;
  /// h(t - offset).
  HSeq shifted(long offset) const;

  std::string to_string() const;  // "1,2,3"
  static HSeq parse(const std::string& text);

 private:
  std::strong_ordering compare(const HSeq& o) const;
  void normalize();
  std::vector<Integer> entries_;
};

struct MacaulayExpansion {
  Integer bound;                 // a^<d>
  std::vector<long> tops;        // k(d) > k(d-1) > ... > k(j)
  long lowest_degree = 0;        // j
};

/// Macaulay representation of a in degree d and the growth bound a^<d>.
/// a = 0 yields bound 0 with an empty expansion.
MacaulayExpansion macaulay_expansion(const Integer& a, long d);
Integer macaulay_bound(const Integer& a, long d);

struct Violation {
  long index;
  Integer value;
  Integer bound;  // the permitted maximum; for t = 0 this is the required value 1
};

struct OSeqVerdict {
  bool admissible = false;
  bool positive = false;
  std::optional<Violation> first_violation;
};

OSeqVerdict check_osequence(const HSeq& h);

/// Depth-fold iterated partial sum evaluated at t (depth 0 is h itself).
Integer partial_sum_at(const HSeq& h, long depth, long t);
/// Values of the depth-fold partial sum at t = 0 .. count-1.
std::vector<Integer> partial_sums(const HSeq& h, long depth, long count);
/// Backward difference applied `times` times, with h(-1) = 0.
HSeq differences(const HSeq& h, long times);

/// True when the depth-fold partial sums of `upper` are >= those of `lower`
/// at every t >= 0 (the tail is checked exactly, not sampled).
bool partial_sums_dominate(const HSeq& upper, const HSeq& lower, long depth);

struct HilbertData {
  std::vector<Integer> prefix;  // H(0), ..., H(rho + buffer)
  IntPoly tail;
  long rho = 0;
  long dim = 0;

  Integer operator()(long t) const;
};

/// Hilbert function with Hilbert series h(z) / (1 - z)^(k + 1).
HilbertData hilbert_from_h(const HSeq& h, long k);

/// Arithmetic genus of a curve whose second difference of the Hilbert function is h.
Integer genus_from_h(const HSeq& h);

/// Positive admissible sequences with h_0 = 1, h_1 <= ambient and the given
/// sum, in increasing lexicographic order of the entry lists.
std::vector<HSeq> point_hvectors(long degree, long ambient);

}  // namespace hvlab

#endif  // HVLAB_HSEQ_HPP
