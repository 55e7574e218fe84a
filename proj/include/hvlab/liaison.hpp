#ifndef HVLAB_LIAISON_HPP
#define HVLAB_LIAISON_HPP

#include "hvlab/hseq.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hvlab {

/// Degrees beta_1 <= ... <= beta_c of the forms cutting a complete intersection.
class CIType {
 public:
  CIType() = default;
  CIType(std::initializer_list<long> betas);
  explicit CIType(std::vector<long> betas);

  const std::vector<long>& betas() const { return betas_; }
  long codim() const { return static_cast<long>(betas_.size()); }
  long beta_sum() const;
  Integer degree() const;
  /// sum(beta) - c + 1.
  long regularity() const;

  bool operator==(const CIType&) const = default;
  std::string to_string() const;  // "2,3"
  static CIType parse(const std::string& text);

 private:
  std::vector<long> betas_;
};

/// h-vector of the artinian reduction: coefficients of prod (1 + z + ... + z^(beta-1)).
HSeq ci_hvector(const CIType& ci);

/// Arithmetic genus of the complete-intersection curve of this type in P^n.
Integer ci_curve_genus(const CIType& ci, long n);

/// Regularity of a zero-dimensional scheme from its h-vector (last index + 1).
long section_regularity(const HSeq& h);

struct LinkResult {
  HSeq h_linked;
  long reg_y = 0;
  long alpha_bar = 0;        // initial degree of I(Z)/I(Y)
  long alpha_bar_prime = 0;  // initial degree of I(Z')/I(Y)
  Integer deg_linked;
};

/// Mirror of h inside the complete intersection's h-vector across the window
/// [0, reg(Y) - 1]. Works on zero-dimensional sections.
LinkResult dgo_link(const HSeq& h_z, const CIType& ci);

/// g - g' for curves C, C' linked by a complete intersection in P^n.
Integer genus_diff(const CIType& ci, long n, const Integer& d, const Integer& d_linked);

/// Genus of the linked curve from the Hilbert polynomial gap D_t at t.
Integer linked_genus(const CIType& ci, long c, const Integer& deg_linked, const Integer& d_t, long t);

/// Gap between the Hilbert polynomial of the complete-intersection curve and P_C.
Integer polynomial_gap(const CIType& ci, const IntPoly& p_c, long t);

/// Same, with D_t computed from the Hilbert polynomial of C.
Integer linked_genus(const CIType& ci, long c, const Integer& deg_linked, const IntPoly& p_c, long t);

/// h(t - a) + h_CI(a,b)(t).
HSeq basic_double_link(const HSeq& h, long a, long b);

/// First index where h_z drops below h_y, if any.
std::optional<long> compute_tk(const HSeq& h_z, const HSeq& h_y);

struct LinkStep {
  CIType ci;
};
struct DoubleLinkStep {
  long a = 1;
  long b = 1;
};
using ChainStep = std::variant<LinkStep, DoubleLinkStep>;

struct ChainRecord {
  std::string kind;  // "start", "link", "bdl"
  std::vector<long> parameters;
  HSeq h;
  Integer degree;
  Integer genus;
};

struct ChainTrace {
  std::vector<ChainRecord> records;
  const ChainRecord& last() const { return records.back(); }
};

/// Applies links and basic double links starting from (h0, g0). Degree is
/// sum(h0); genera are tracked at curve level in P^(c+1).
ChainTrace run_chain(const HSeq& h0, const Integer& g0, const std::vector<ChainStep>& steps);
/// Continues an existing trace.
ChainTrace extend_chain(ChainTrace trace, const std::vector<ChainStep>& steps);

/// Chain script: one step per line, "link b1,b2" or "bdl a,b", '#' comments.
std::vector<ChainStep> parse_chain_script(const std::string& text);

}  // namespace hvlab

#endif  // HVLAB_LIAISON_HPP
