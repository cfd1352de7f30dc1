#pragma once

// Degree <= 4 cohomology of a compact connected orientable manifold,
// supplied as explicit data: finitely generated abelian groups H^2(M,Z),
// H^4(M,Z), H^1(M,Z_g) for a set of moduli g, the cup pairing
// H^2 x H^2 -> H^4, Bockstein maps beta_g : H^1(M,Z_g) -> H^2(M,Z) and
// coefficient reductions rho_{g g'} : H^1(M,Z_g) -> H^1(M,Z_g').

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace gauge {

using Coord = std::int64_t;

/// Coordinates with respect to the generators of some AbGroup.
struct GroupElement {
  std::vector<Coord> coords;

  auto operator<=>(const GroupElement&) const = default;
};

/// Z^free_rank x Z_{t_1} x ... x Z_{t_s}; generators are indexed free part first.
class AbGroup {
 public:
  AbGroup() = default;
  AbGroup(int free_rank, std::vector<Coord> torsion_orders);

  int free_rank() const { return free_rank_; }
  const std::vector<Coord>& torsion_orders() const { return torsion_; }
  std::size_t generator_count() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }
  /// Order of generator i; 0 means infinite order.
  Coord order(std::size_t i) const;
  bool is_finite() const { return free_rank_ == 0; }
  bool is_trivial() const { return generator_count() == 0; }
  /// Number of elements; only meaningful for finite groups.
  std::uint64_t cardinality() const;

  GroupElement zero() const { return GroupElement{std::vector<Coord>(generator_count(), 0)}; }
  /// Reduces torsion coordinates into [0, order). Throws ValidationError on a length mismatch.
  GroupElement element(std::vector<Coord> coords) const;
  bool contains(const GroupElement& x) const;
  bool is_zero(const GroupElement& x) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement subtract(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(Coord factor, const GroupElement& a) const;
  /// Every x with factor * x = y (finitely many for factor != 0).
  std::vector<GroupElement> divide(Coord factor, const GroupElement& y) const;

  /// All elements of a finite group in lexicographic coordinate order.
  std::vector<GroupElement> elements() const;
  /// Elements whose free coordinates lie in [-bound, bound]; torsion
  /// coordinates range fully. Lexicographic order.
  std::vector<GroupElement> box(Coord bound) const;

  auto operator<=>(const AbGroup&) const = default;

 private:
  int free_rank_ = 0;
  std::vector<Coord> torsion_;
};

/// A homomorphism given by the images of the source generators.
using GeneratorImages = std::vector<GroupElement>;

GroupElement apply_hom(const AbGroup& source, const AbGroup& target, const GeneratorImages& images,
                       const GroupElement& x);

struct ManifoldModel {
  std::string name;
  int dim = 4;
  AbGroup h2;
  AbGroup h4;
  /// cup_form[i][j] = e_i cup e_j in H^4 for H^2 generators e_i.
  std::vector<std::vector<GroupElement>> cup_form;
  /// modulus g -> H^1(M, Z_g).
  std::map<int, AbGroup> h1;
  /// modulus g -> beta_g on the generators of h1[g].
  std::map<int, GeneratorImages> bockstein;
  /// (g, g') with g' | g -> rho_{g g'} on the generators of h1[g].
  std::map<std::pair<int, int>, GeneratorImages> reduction;

  bool has_modulus(int g) const { return h1.contains(g); }
  std::vector<int> moduli() const;
  /// Throws ValidationError naming the first violated condition.
  void validate() const;

  bool operator==(const ManifoldModel&) const = default;
};

using ManifoldPtr = std::shared_ptr<const ManifoldModel>;

/// Parses and validates a JSON manifold descriptor.
ManifoldModel load_manifold(std::string_view descriptor);
ManifoldModel load_manifold_file(const std::string& path);
nlohmann::json manifold_to_json(const ManifoldModel& manifold);
ManifoldModel manifold_from_json(const nlohmann::json& doc);

/// Built-in catalog: "S4", "S2xS2", "LensL(N,q)xS1" (N >= 2, gcd(N,q) = 1).
/// Moduli 1..max_modulus are instantiated. Throws DomainError for unknown names.
ManifoldModel builtin_manifold(std::string_view name, int max_modulus = 16);
std::vector<std::string> builtin_manifold_names();

GroupElement cup(const ManifoldModel& manifold, const GroupElement& x, const GroupElement& y);
GroupElement bockstein(const ManifoldModel& manifold, int g, const GroupElement& xi);
GroupElement reduce_coeff(const ManifoldModel& manifold, int g, int g_prime, const GroupElement& xi);

/// Every xi' in H^1(M, Z_{g_new}) with rho_{g_new g_old}(xi') = xi_old and
/// beta_{g_new}(xi') = target, by exhaustive scan.
std::vector<GroupElement> solve_bockstein_lift(const ManifoldModel& manifold, int g_new, int g_old,
                                               const GroupElement& xi_old, const GroupElement& target);

/// alpha = 1 + deg2 + deg4 in H^even_0(M, Z), truncated above degree 4.
struct EvenClass {
  GroupElement deg2;
  GroupElement deg4;

  auto operator<=>(const EvenClass&) const = default;
};

EvenClass unit_class(const ManifoldModel& manifold);
EvenClass cup(const ManifoldModel& manifold, const EvenClass& a, const EvenClass& b);
/// Whether alpha^(2j) = 0 for all j > k.
bool respects_truncation(const ManifoldModel& manifold, const EvenClass& alpha, int k);
EvenClass truncate(const ManifoldModel& manifold, const EvenClass& alpha, int k);

struct EvenClassBox {
  std::vector<EvenClass> classes;
  /// Set when the box is a proper finite subset of an infinite family.
  bool truncated = false;
};

/// All classes respecting truncation k whose free coordinates are bounded by `bound`.
EvenClassBox enumerate_even_classes(const ManifoldModel& manifold, int k, Coord bound);

std::string to_string(const GroupElement& x);

}  // namespace gauge
