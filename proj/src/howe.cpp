#include "gauge/howe.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i : images_) {
    if (i >= images_.size() || seen[i]) throw ValidationError("permutation is not a bijection");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> images(size);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

HoweSignature::HoweSignature(std::vector<int> k, std::vector<int> m)
    : k_(std::move(k)), m_(std::move(m)) {
  if (k_.empty()) throw ValidationError("signature must have at least one member");
  if (k_.size() != m_.size()) throw ValidationError("signature sequences k and m differ in length");
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] < 1 || m_[i] < 1) throw ValidationError("signature entries must be strictly positive");
}

int HoweSignature::n() const {
  int total = 0;
  for (std::size_t i = 0; i < k_.size(); ++i) total += k_[i] * m_[i];
  return total;
}

HoweSignature HoweSignature::permuted(const Permutation& sigma) const {
  if (sigma.size() != rank()) throw ValidationError("permutation size does not match signature rank");
  return HoweSignature(sigma.apply(k_), sigma.apply(m_));
}

SignatureInvariants signature_invariants(const HoweSignature& j) {
  SignatureInvariants out;
  out.g = 0;
  for (int mi : j.m()) out.g = std::gcd(out.g, mi);
  out.m_tilde.reserve(j.rank());
  for (int mi : j.m()) out.m_tilde.push_back(mi / out.g);
  return out;
}

namespace {

void compose(int remaining, std::vector<int>& k, std::vector<int>& m,
             std::vector<HoweSignature>& out) {
  if (remaining == 0) {
    out.emplace_back(k, m);
    return;
  }
  // Parts are visited in ascending (k, m) order so the output is lexicographic.
  for (int ki = 1; ki <= remaining; ++ki) {
    for (int mi = 1; ki * mi <= remaining; ++mi) {
      k.push_back(ki);
      m.push_back(mi);
      compose(remaining - ki * mi, k, m, out);
      k.pop_back();
      m.pop_back();
    }
  }
}

bool is_sorted_pairs(const HoweSignature& j) {
  for (std::size_t i = 1; i < j.rank(); ++i) {
    if (std::pair(j.k()[i - 1], j.m()[i - 1]) > std::pair(j.k()[i], j.m()[i])) return false;
  }
  return true;
}

}  // namespace

std::vector<HoweSignature> enumerate_signatures(int n, bool up_to_permutation) {
  if (n < 1 || n > kMaxRank)
    throw BoundsError("n = " + std::to_string(n) + " outside supported range 1.." +
                      std::to_string(kMaxRank));
  std::vector<HoweSignature> out;
  std::vector<int> k, m;
  compose(n, k, m, out);
  if (up_to_permutation) std::erase_if(out, [](const HoweSignature& j) { return !is_sorted_pairs(j); });
  return out;
}

std::pair<HoweSignature, Permutation> canonical_form(const HoweSignature& j) {
  std::vector<std::size_t> order(j.rank());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(j.k()[a], j.m()[a]) < std::pair(j.k()[b], j.m()[b]);
  });
  Permutation sigma(std::move(order));
  return {j.permuted(sigma), sigma};
}

std::string to_string(const HoweSignature& j) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < j.rank(); ++i) os << (i ? "," : "") << j.k()[i];
  os << '|';
  for (std::size_t i = 0; i < j.rank(); ++i) os << (i ? "," : "") << j.m()[i];
  os << ')';
  return os.str();
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view whole) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("malformed signature '" + std::string(whole) + "'");
    values.push_back(std::stoi(std::string(item)));
    pos = comma + 1;
  }
  return values;
}

}  // namespace

HoweSignature parse_signature(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  std::string_view s(compact);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw ParseError("malformed signature '" + std::string(text) + "', expected (k1,...|m1,...)");
  s = s.substr(1, s.size() - 2);
  std::size_t bar = s.find('|');
  if (bar == std::string_view::npos || s.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("malformed signature '" + std::string(text) + "', expected one '|'");
  auto k = parse_int_list(s.substr(0, bar), text);
  auto m = parse_int_list(s.substr(bar + 1), text);
  try {
    return HoweSignature(std::move(k), std::move(m));
  } catch (const ValidationError& e) {
    throw ParseError("invalid signature '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace gauge
