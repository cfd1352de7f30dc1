#pragma once

// Orbit-type labels L = (J; alpha, xi) of an SU(n)-bundle P, their partial
// order, the generating operations (splitting, merging and their inverses)
// and reconstruction of the Hasse diagram from the maximal element.
//
// Order convention: L <= L' iff some D in N(J, J') maps alpha to alpha' and
// xi' is the reduction of xi. Splittings and mergings move up (L <= L°),
// their inverses move down.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gauge/charclass.hpp"
#include "gauge/inclusion.hpp"

namespace gauge {

struct OrbitLabel {
  HoweSignature J;
  std::vector<EvenClass> alpha;
  GroupElement xi;

  ClassTuple tuple() const { return ClassTuple{J, alpha}; }
  auto operator<=>(const OrbitLabel&) const = default;
};

/// Simultaneously sorts (k_i, m_i, alpha_i) ascending; xi is unchanged.
OrbitLabel canonical_label(const OrbitLabel& label);

/// "(k|m){a2;a4}...{a2;a4}[xi]", coordinates comma separated.
std::string to_string(const OrbitLabel& label);
/// Inverse of to_string against the given manifold; "[xi]" may be omitted
/// when H1(M, Z_g) is trivial. Throws ParseError or ValidationError.
OrbitLabel parse_label(std::string_view text, const ManifoldModel& manifold);

struct OrderDecision {
  /// g' divides g and xi' = rho_{g g'}(xi).
  bool condition_a = false;
  /// N(L, L'): every D in N(J, J') with E_D(alpha) = alpha' (empty unless condition_a).
  std::vector<InclusionMatrix> witnesses;
  /// Level of each witness, in the same order.
  std::vector<int> levels;
  bool leq = false;
  bool equivalent = false;
};

struct Decomposition {
  OrbitLabel intermediate;  ///< L°, with L <= L° <= L'
  InclusionMatrix first;    ///< in N(L, L°), level 1
  InclusionMatrix second;   ///< in N(L°, L'), first composed with second gives D
};

struct PredecessorSet {
  std::vector<OrbitLabel> classes;  ///< canonical, sorted
  bool truncated = false;
};

struct InverseMergeResult {
  std::vector<OrbitLabel> labels;
  bool truncated = false;
};

struct HasseEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::vector<InclusionMatrix> witnesses;

  bool operator==(const HasseEdge&) const = default;
};

struct HassePoset {
  BundleSpec bundle;
  Coord bound = 0;
  /// Canonical labels ordered by (BFS depth from the maximal element, label).
  std::vector<OrbitLabel> nodes;
  std::vector<int> depth;
  /// Sorted by (upper, lower).
  std::vector<HasseEdge> edges;
  std::size_t maximal = 0;
  bool truncated = false;

  std::optional<std::size_t> find(const OrbitLabel& canonical) const;
  bool operator==(const HassePoset&) const = default;
};

/// All operations are relative to one bundle, which makes labels of
/// different bundles incomparable by construction.
class OrbitTypeLattice {
 public:
  explicit OrbitTypeLattice(BundleSpec bundle);

  const BundleSpec& bundle() const { return bundle_; }
  const ManifoldModel& manifold() const { return *bundle_.manifold; }

  /// Throws ValidationError unless the label satisfies all membership equations.
  void check(const OrbitLabel& label) const;
  MembershipReport membership(const OrbitLabel& label) const;

  OrbitLabel maximal_label() const;

  bool equivalent(const OrbitLabel& a, const OrbitLabel& b) const;
  OrderDecision compare(const OrbitLabel& lower, const OrbitLabel& upper) const;

  /// Member i0 (0-based) with m_{i0} = parts.first + parts.second becomes
  /// two members at i0, i0 + 1 carrying the given m-parts.
  OrbitLabel split(const OrbitLabel& label, std::size_t i0, std::pair<int, int> parts) const;
  /// Members i1 < i2 with equal m merge into position i1.
  OrbitLabel merge(const OrbitLabel& label, std::size_t i1, std::size_t i2) const;
  /// Members i1 < i2 with equal k and alpha; one label per Bockstein lift.
  std::vector<OrbitLabel> inverse_split(const OrbitLabel& label, std::size_t i1, std::size_t i2) const;
  /// Member i0 with k_{i0} = k_parts.first + k_parts.second becomes two
  /// members at i0, i0 + 1 whose alphas multiply to alpha_{i0}.
  InverseMergeResult inverse_merge(const OrbitLabel& label, std::size_t i0, std::pair<int, int> k_parts,
                                   Coord bound) const;

  std::vector<OrbitLabel> direct_successors(const OrbitLabel& label) const;
  PredecessorSet direct_predecessors(const OrbitLabel& label, Coord bound) const;

  /// One step of factoring a witness D in N(L, L') with level(D) > 0.
  Decomposition decompose_inclusion(const OrbitLabel& lower, const OrbitLabel& upper, const InclusionMatrix& d) const;

  HassePoset build_hasse(Coord bound) const;

  /// Memoized N(J, J').
  const std::vector<InclusionMatrix>& inclusions(const HoweSignature& source, const HoweSignature& target) const;

 private:
  BundleSpec bundle_;
  mutable std::map<std::pair<HoweSignature, HoweSignature>, std::vector<InclusionMatrix>> cache_;
};

// Exports. Node names in DOT are n0, n1, ... in node order; edges point
// from lower to upper.
std::string hasse_to_text(const HassePoset& poset);
std::string hasse_to_dot(const HassePoset& poset);
nlohmann::json hasse_to_json(const HassePoset& poset);
/// Throws ParseError / ValidationError.
HassePoset hasse_from_json(const nlohmann::json& doc);

}  // namespace gauge
