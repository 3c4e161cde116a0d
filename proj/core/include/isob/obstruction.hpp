#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isob/config.hpp"
#include "isob/root_system.hpp"
#include "isob/sympair.hpp"
#include "isob/weight.hpp"

namespace isob {

enum class Verdict { NoExtension, Inconclusive };
enum class Method { DimensionGap, CandidateElimination, ComplexDSquared };
enum class EvidenceKind {
  Exact,             // dim V_lambda
  LowerBound,        // a lower bound on dim V for every V in the family
  RestrictedWeights  // number of irreducible sums with the right restricted weights
};

std::string to_string(Verdict v);
std::string to_string(Method m);
std::string to_string(EvidenceKind k);

struct Evidence {
  EvidenceKind kind = EvidenceKind::Exact;
  Integer value;
  Integer dim_p;

  /// Exact: value != dim_p. LowerBound: value > dim_p. RestrictedWeights: value == 0.
  bool eliminates() const;
};

/// lambda(c) = base + c * direction for integers c >= 0, or the single weight
/// `base` when there is no direction. Ambient coordinates of g.
struct CandidateFamily {
  Weight base;
  std::optional<Weight> direction;
  std::vector<std::string> constraints_log;
};

/// Outcome of the symbolic reduction. `complete` is false when the dominant
/// part of the affine subspace was not reduced to points and rays.
struct CandidateDerivation {
  std::vector<CandidateFamily> families;
  std::vector<std::string> log;
  bool complete = true;
};

CandidateDerivation derive_candidates(const SymmetricPair& pair);

/// Families of dominant g weights restricting to the isotropy highest
/// weight. Throws NoWeightModel for pairs other than SL_SO and SL_SP, and
/// ConsistencyFault if the reduction does not close.
std::vector<CandidateFamily> candidate_weights(const SymmetricPair& pair);

/// Independent audit: every dominant lambda = lift + sum a_j u_j with
/// |a_j| <= bound, canonicalized and deduplicated.
std::set<Weight> brute_force_candidates(const SymmetricPair& pair, int bound);

/// True if w is a member of one of the families.
bool covered_by(const RootSystem& rs, const std::vector<CandidateFamily>& families, const Weight& w);

/// Sum of the orbit sizes of the distinct Weyl orbits among {lambda} and the
/// extras. Throws NotDominant for lambda and NotAWeightOf for an extra that is
/// not a weight of V_lambda.
Integer orbit_sum_lower_bound(const RootSystem& rs, const Weight& lambda,
                              const std::vector<Weight>& extras);

struct CandidateRecord {
  Weight weight;
  std::optional<Weight> direction;
  std::string parameter_range;  // "c=0", "c>=1", "point", ...
  std::optional<Evidence> evidence;
  std::string detail;

  bool eliminated() const { return evidence && evidence->eliminates(); }
};

struct ObstructionReport {
  PairId pair;
  Verdict verdict = Verdict::Inconclusive;
  Method method = Method::CandidateElimination;
  Integer dim_p;
  std::vector<CandidateRecord> candidates;
  std::vector<std::string> constraints_log;
  std::vector<std::string> notes;
  int search_bound = 0;  // 0 when no brute-force audit ran
};

/// Decides whether the isotropy representation extends to g. Runs the
/// brute-force audit with limits.kernel_search_bound when `audit` is set.
ObstructionReport check_extension(const SymmetricPair& pair, const Limits& limits = {},
                                  bool audit = false);

/// Complex case g + g: no extension when d^2 > dim g. Throws IllegalType.
ObstructionReport check_complex_case(const SimpleType& type);

/// so_{n+1} -> so_n for the small n where the dimension gap fails: searches
/// sums of irreducibles of so_{n+1} whose restricted weights are those of
/// the vector representation of so_n.
ObstructionReport check_orthogonal_by_weights(const SymmetricPair& pair, const Limits& limits);

}  // namespace isob
