#pragma once

// The map E_D on tuples of even classes and the equations tying a label
// (J; alpha, xi) to an SU(n)-bundle P:
//   sum_i m~_i alpha_i^(2) = beta_g(xi)        (g = gcd m, m~ = m / g)
//   E_m(alpha) = c(P) = 1 + c2(P).
// Everything lives in degrees <= 4.

#include <string>
#include <utility>
#include <vector>

#include "gauge/cohomology.hpp"
#include "gauge/howe.hpp"
#include "gauge/inclusion.hpp"

namespace gauge {

/// alpha = (alpha_1, ..., alpha_r); entry i respects truncation k_i.
struct ClassTuple {
  HoweSignature signature;
  std::vector<EvenClass> entries;

  auto operator<=>(const ClassTuple&) const = default;
};

/// Throws ValidationError if the length or a truncation is wrong, or a
/// coordinate vector does not belong to H2/H4.
void check_class_tuple(const ManifoldModel& manifold, const ClassTuple& alpha);

struct BundleSpec {
  int n = 2;
  ManifoldPtr manifold;
  GroupElement c2;

  /// Throws ValidationError (bad n, c2 outside H4, SU(1) with c2 != 0) or
  /// DomainError (a modulus dividing n missing from the manifold).
  void validate() const;
  bool operator==(const BundleSpec& other) const;
};

BundleSpec make_bundle(int n, ManifoldPtr manifold, GroupElement c2);

/// sum_i coeffs_i alpha_i, formed with cup products and cut off above
/// degree 4. No truncation by k is applied.
EvenClass evaluate_row(const ManifoldModel& manifold, const std::vector<int>& coeffs,
                       const std::vector<EvenClass>& alpha);

/// E_D(alpha), tagged with D's target signature.
ClassTuple apply_E(const ManifoldModel& manifold, const InclusionMatrix& d, const ClassTuple& alpha);

struct MembershipReport {
  bool truncation_ok = false;
  bool bockstein_eq = false;   ///< sum m~ alpha^(2) = beta_g(xi)
  bool chern_deg2 = false;     ///< sum m alpha^(2) = 0
  bool chern_deg4 = false;     ///< E_m(alpha)^(4) = c2(P)
  /// Degree 2 of the Chern equation follows from the Bockstein equation
  /// (g beta_g = 0); false only if the cohomology model is inconsistent.
  bool redundancy_consistent = true;

  bool valid() const { return truncation_ok && bockstein_eq && chern_deg2 && chern_deg4; }
  std::string describe() const;
};

/// Throws DomainError if the manifold lacks the modulus gcd(m), and
/// ValidationError if alpha or xi have the wrong shape.
MembershipReport verify_membership(const BundleSpec& bundle, const ClassTuple& alpha, const GroupElement& xi);

struct LabelSolutions {
  std::vector<std::pair<ClassTuple, GroupElement>> labels;
  /// Set when the search space was cut to a box and may miss solutions.
  bool truncated = false;
};

/// Every (alpha, xi) for J satisfying both equations, with free coordinates
/// of the searched classes bounded by `bound`. Classes that the equations
/// determine (the last entry in degree 2, the last k >= 2 entry in degree 4)
/// are solved for exactly. Sorted.
LabelSolutions solve_labels(const BundleSpec& bundle, const HoweSignature& j, Coord bound);

}  // namespace gauge
