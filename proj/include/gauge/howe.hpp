#pragma once

// Howe signatures J = (k, m) of SU(n): pairs of positive-integer sequences
// with sum k_i * m_i = n, together with the permutation action that
// identifies reorderings of the pairs.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gauge {

/// Largest n accepted by enumerate_signatures.
inline constexpr int kMaxRank = 16;

class Permutation {
 public:
  Permutation() = default;
  /// `images[i]` is the source index moved to position i; must be a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t size);

  std::size_t size() const { return images_.size(); }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;
  Permutation inverse() const;

  /// result[i] = values[images[i]].
  template <typename T>
  std::vector<T> apply(const std::vector<T>& values) const {
    std::vector<T> out;
    out.reserve(values.size());
    for (std::size_t i : images_) out.push_back(values.at(i));
    return out;
  }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

class HoweSignature {
 public:
  /// Throws ValidationError unless both sequences are nonempty, of equal
  /// length and strictly positive.
  HoweSignature(std::vector<int> k, std::vector<int> m);

  const std::vector<int>& k() const { return k_; }
  const std::vector<int>& m() const { return m_; }
  std::size_t rank() const { return k_.size(); }
  int n() const;

  HoweSignature permuted(const Permutation& sigma) const;

  auto operator<=>(const HoweSignature&) const = default;

 private:
  std::vector<int> k_;
  std::vector<int> m_;
};

struct SignatureInvariants {
  int g = 1;
  std::vector<int> m_tilde;

  auto operator<=>(const SignatureInvariants&) const = default;
};

SignatureInvariants signature_invariants(const HoweSignature& j);

/// All signatures of SU(n) in lexicographic order of the pair sequence
/// ((k_1,m_1),...,(k_r,m_r)). With `up_to_permutation` only the canonical
/// representative of each class is kept. Throws BoundsError unless
/// 1 <= n <= kMaxRank.
std::vector<HoweSignature> enumerate_signatures(int n, bool up_to_permutation);

/// Sorts the pairs (k_i, m_i) ascending (stable); returns the sorted
/// signature and the permutation sigma with sorted = J.permuted(sigma).
std::pair<HoweSignature, Permutation> canonical_form(const HoweSignature& j);

/// "(k1,...,kr|m1,...,mr)".
std::string to_string(const HoweSignature& j);

/// Inverse of to_string; whitespace is ignored. Throws ParseError.
HoweSignature parse_signature(std::string_view text);

}  // namespace gauge
