#ifndef HVLAB_ENGINE_HPP
#define HVLAB_ENGINE_HPP

#include "hvlab/borel.hpp"
#include "hvlab/liaison.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hvlab {

enum class ConstraintProfile { Curve, General };

struct ScenarioConfig {
  long k = 1;  // dimension of X
  long c = 2;  // codimension
  CIType ci;
  long defect = 1;  // deg(Y) - deg(X)
  std::optional<HSeq> h_zprime;
  std::optional<ConstraintProfile> profile;  // defaults to Curve for k = 1
};

/// Throws InvalidArgument when the configuration breaks its invariants.
void validate(const ScenarioConfig& cfg);
ConstraintProfile effective_profile(const ScenarioConfig& cfg);

enum class Classification {
  ACMForced,
  ExcludedByGenus,
  ExcludedByPlaneCurveRule,
  ExcludedExtremal,
  ExcludedByCMPostulation,
  CMPostulationNonACM,
  Indeterminate,
};
std::string to_string(Classification c);

/// How the linked section Z' is handled.
enum class Route {
  MaximalRank,     // forced equality
  Degenerate,      // collinear Z' in codimension two, degree >= 3
  CollinearCubic,  // Z' = (1,1,1) in codimension >= 3
  Extremal,        // (1,2,1,...,1) of degree >= 5 in codimension two
  Other,
};
std::string to_string(Route r);

struct GenusData {
  Integer d_t;
  long t = 0;
  Integer g_linked;
};

struct CandidateReport {
  HSeq h_x;
  HSeq h_z;
  HSeq h_zprime;
  bool positive = true;
  bool admissible = false;
  bool equals_section = false;
  std::optional<long> t_k;
  std::optional<GenusData> genus;
  Classification classification = Classification::Indeterminate;
  Route route = Route::Other;
  std::string rule;
};

struct EnumerationLimits {
  long max_candidates = 10'000'000;
  long max_regularity = 20;
  /// Reads HVLAB_MAX_CANDIDATES when set.
  static EnumerationLimits from_environment();
};

/// Candidate h-vectors of X for every admissible Z' (or the fixed one), in
/// order of Z' and then lexicographic order of h_X.
std::vector<CandidateReport> enumerate_candidates(const ScenarioConfig& cfg,
                                                  const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Z' values that are skipped because the complete intersection cannot link them.
struct SkippedSection {
  HSeq h_zprime;
  std::string reason;
};

struct ClassifySummary {
  std::string verdict;  // "positivity => aCM", "no lCM X exists", "outside theorem hypotheses", "indeterminate"
  bool within_hypotheses = false;
  std::vector<CandidateReport> candidates;
  std::vector<SkippedSection> skipped;
  std::vector<std::string> routes;  // one justification line per Z'
};

ClassifySummary classify(const ScenarioConfig& cfg,
                         const EnumerationLimits& limits = EnumerationLimits::from_environment());

Route route_for(const HSeq& h_zprime, long c, long k);
bool has_maximal_rank(const HSeq& h_zprime, long c);

struct ExtremalInvariants {
  Integer r_a;
  Integer r_0;
  Integer h1_value;
};
ExtremalInvariants extremal_invariants(long d, const Integer& g);
bool is_extremal_section(const HSeq& h_z);

struct DavisType {
  enum Kind { Single, Double } kind = Single;  // [a,r] and [[a,r]]
  long a = 0;
  long r = 0;
  std::string to_string() const;
  bool operator==(const DavisType&) const = default;
};

struct DavisParams {
  long defect = 0;
  long e = 0;
  long f = 0;
  DavisType type;
  HSeq section;
  bool consistent = false;  // section sum equals the defect
};

DavisParams davis_params(long defect);
HSeq davis_section(const DavisType& t);

/// Liaisons producing a surface X with CM postulation and the given defect,
/// starting from the Veronese surface.
struct SurfaceChainPlan {
  long defect = 0;
  std::optional<long> start_from;  // defect of a stored intermediate surface, none for the Veronese surface
  std::vector<CIType> liaisons;
  CIType further;
};

struct SurfaceChainResult {
  SurfaceChainPlan plan;
  ChainTrace trace;  // full chain from the Veronese section through the further liaison
  HSeq section_before_further;
  Integer genus_before_further;
  Integer final_degree;
  HSeq final_section;
  Integer final_genus;
};

bool surface_chain_covered(long defect);
SurfaceChainPlan plan_surface_chain(long defect);
SurfaceChainResult surface_chain(long defect);

/// Degree, admissibility and genus checks of a tabulated h-vector of X.
struct ListedVectorCheck {
  HSeq listed;
  bool admissible = false;
  bool degree_matches = false;
  Integer listed_genus;
  Integer expected_genus;  // genus before the further liaison plus the genus change
  bool genus_matches = false;
  bool ok() const { return admissible && degree_matches && genus_matches; }
};
ListedVectorCheck check_listed_vector(const SurfaceChainResult& r, const HSeq& listed);

struct TableCell {
  std::string column;
  std::string expected;
  std::string actual;
  bool match = false;
};

struct TableRow {
  std::string label;
  std::vector<TableCell> cells;
};

struct ReferenceTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;      // expected rows with per-cell comparisons
  std::vector<TableRow> extra;     // regenerated rows with no expected counterpart
  std::vector<std::string> notes;  // computed facts backing the table
  bool all_match() const;
};

std::vector<std::string> reference_table_names();
ReferenceTable reference_table(const std::string& name);

}  // namespace hvlab

#endif  // HVLAB_ENGINE_HPP
