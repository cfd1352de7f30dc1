#pragma once

// Inclusion matrices between Howe signatures: nonnegative integer r' x r
// matrices D with D k = k' and m = m' D, their level calculus and their
// Bratteli diagrams.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gauge/howe.hpp"

namespace gauge {

class InclusionMatrix {
 public:
  /// `entries` is row-major with rows indexed by the target members.
  /// Throws ValidationError unless both defining equations hold.
  InclusionMatrix(HoweSignature source, HoweSignature target, std::vector<int> entries);

  static InclusionMatrix identity(const HoweSignature& j);

  const HoweSignature& source() const { return source_; }
  const HoweSignature& target() const { return target_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  int operator()(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
  const std::vector<int>& entries() const { return entries_; }
  int total() const;

  auto operator<=>(const InclusionMatrix&) const = default;

 private:
  HoweSignature source_;
  HoweSignature target_;
  std::vector<int> entries_;
};

/// Checks D k = k' and m = m' D for a raw row-major matrix.
bool satisfies_inclusion_equations(const HoweSignature& source, const HoweSignature& target,
                                   const std::vector<int>& entries);

struct LevelProfile {
  int level = 0;
  std::vector<int> plus;   ///< per source member: column sum - 1
  std::vector<int> minus;  ///< per target member: row sum - 1

  auto operator<=>(const LevelProfile&) const = default;
};

LevelProfile level_profile(const InclusionMatrix& d);
int level(const InclusionMatrix& d);

/// N(J, J'): every solution, sorted by row-major entries. Throws DomainError
/// if J and J' belong to different n.
std::vector<InclusionMatrix> solve_inclusion_matrices(const HoweSignature& source, const HoweSignature& target);

/// outer * inner; requires inner.target() == outer.source().
InclusionMatrix compose(const InclusionMatrix& outer, const InclusionMatrix& inner);

/// "[[a,b],[c,d]]".
std::string to_string(const InclusionMatrix& d);

struct BratteliLabels {
  std::vector<std::string> upper;  ///< one per source member
  std::vector<std::string> lower;  ///< one per target member
};

struct BratteliRendering {
  std::string text;
  std::string dot;
};

/// Upper vertices are the source members, lower vertices the target
/// members, joined by D(i', i) parallel edges sorted by (i', i).
BratteliRendering render_bratteli(const InclusionMatrix& d, const std::optional<BratteliLabels>& labels = std::nullopt);

}  // namespace gauge
