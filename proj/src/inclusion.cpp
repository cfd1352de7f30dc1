#include "gauge/inclusion.hpp"

#include <algorithm>
#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

bool satisfies_inclusion_equations(const HoweSignature& source, const HoweSignature& target,
                                   const std::vector<int>& entries) {
  const std::size_t r = source.rank();
  const std::size_t rp = target.rank();
  if (entries.size() != r * rp) return false;
  for (int v : entries)
    if (v < 0) return false;
  for (std::size_t row = 0; row < rp; ++row) {
    int sum = 0;
    for (std::size_t col = 0; col < r; ++col) sum += entries[row * r + col] * source.k()[col];
    if (sum != target.k()[row]) return false;
  }
  for (std::size_t col = 0; col < r; ++col) {
    int sum = 0;
    for (std::size_t row = 0; row < rp; ++row) sum += target.m()[row] * entries[row * r + col];
    if (sum != source.m()[col]) return false;
  }
  return true;
}

InclusionMatrix::InclusionMatrix(HoweSignature source, HoweSignature target, std::vector<int> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (!satisfies_inclusion_equations(source_, target_, entries_))
    throw ValidationError("matrix " + to_string(*this) + " is not an inclusion " + gauge::to_string(source_) +
                          " -> " + gauge::to_string(target_));
}

InclusionMatrix InclusionMatrix::identity(const HoweSignature& j) {
  std::vector<int> e(j.rank() * j.rank(), 0);
  for (std::size_t i = 0; i < j.rank(); ++i) e[i * j.rank() + i] = 1;
  return InclusionMatrix(j, j, std::move(e));
}

int InclusionMatrix::total() const {
  int sum = 0;
  for (int v : entries_) sum += v;
  return sum;
}

LevelProfile level_profile(const InclusionMatrix& d) {
  LevelProfile p;
  p.plus.assign(d.cols(), -1);
  p.minus.assign(d.rows(), -1);
  for (std::size_t row = 0; row < d.rows(); ++row)
    for (std::size_t col = 0; col < d.cols(); ++col) {
      p.plus[col] += d(row, col);
      p.minus[row] += d(row, col);
    }
  p.level = 2 * d.total() - static_cast<int>(d.rows() + d.cols());
  return p;
}

int level(const InclusionMatrix& d) { return 2 * d.total() - static_cast<int>(d.rows() + d.cols()); }

namespace {

struct Search {
  const HoweSignature& source;
  const HoweSignature& target;
  std::vector<int> entries;
  std::vector<int> k_left;  // per target row: k'_{i'} - sum_i D k_i so far
  std::vector<std::vector<int>> found;

  void column(std::size_t col) {
    if (col == source.rank()) {
      if (std::all_of(k_left.begin(), k_left.end(), [](int v) { return v == 0; })) found.push_back(entries);
      return;
    }
    cell(col, 0, source.m()[col]);
  }

  void cell(std::size_t col, std::size_t row, int m_left) {
    const std::size_t r = source.rank();
    if (row == target.rank()) {
      if (m_left == 0) column(col + 1);
      return;
    }
    const int kc = source.k()[col];
    const int mr = target.m()[row];
    const int cap = std::min(k_left[row] / kc, m_left / mr);
    for (int v = 0; v <= cap; ++v) {
      entries[row * r + col] = v;
      k_left[row] -= v * kc;
      cell(col, row + 1, m_left - v * mr);
      k_left[row] += v * kc;
    }
    entries[row * r + col] = 0;
  }
};

}  // namespace

std::vector<InclusionMatrix> solve_inclusion_matrices(const HoweSignature& source, const HoweSignature& target) {
  if (source.n() != target.n())
    throw DomainError("signatures " + to_string(source) + " and " + to_string(target) + " belong to different n");
  Search search{source, target, std::vector<int>(source.rank() * target.rank(), 0), target.k(), {}};
  search.column(0);
  std::sort(search.found.begin(), search.found.end());
  std::vector<InclusionMatrix> out;
  out.reserve(search.found.size());
  for (auto& e : search.found) out.emplace_back(source, target, std::move(e));
  return out;
}

InclusionMatrix compose(const InclusionMatrix& outer, const InclusionMatrix& inner) {
  if (inner.target() != outer.source())
    throw DomainError("cannot compose: " + to_string(inner.target()) + " != " + to_string(outer.source()));
  const std::size_t rows = outer.rows();
  const std::size_t mid = outer.cols();
  const std::size_t cols = inner.cols();
  std::vector<int> e(rows * cols, 0);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < mid; ++b) {
      int x = outer(a, b);
      if (x == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) e[a * cols + c] += x * inner(b, c);
    }
  return InclusionMatrix(inner.source(), outer.target(), std::move(e));
}

std::string to_string(const InclusionMatrix& d) {
  std::ostringstream os;
  os << '[';
  for (std::size_t row = 0; row < d.rows(); ++row) {
    os << (row ? ",[" : "[");
    for (std::size_t col = 0; col < d.cols(); ++col) os << (col ? "," : "") << d.entries()[row * d.cols() + col];
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

BratteliRendering render_bratteli(const InclusionMatrix& d, const std::optional<BratteliLabels>& labels) {
  if (labels && (labels->upper.size() != d.cols() || labels->lower.size() != d.rows()))
    throw ValidationError("Bratteli labels must match the matrix shape");
  auto upper = [&](std::size_t i) {
    std::string s = std::to_string(i + 1);
    return labels ? s + " " + labels->upper[i] : s;
  };
  auto lower = [&](std::size_t i) {
    std::string s = std::to_string(i + 1);
    return labels ? s + " " + labels->lower[i] : s;
  };

  std::ostringstream text;
  text << "upper:";
  for (std::size_t i = 0; i < d.cols(); ++i) text << "  [" << upper(i) << "]";
  text << "\nlower:";
  for (std::size_t i = 0; i < d.rows(); ++i) text << "  [" << lower(i) << "]";
  text << '\n';
  for (std::size_t row = 0; row < d.rows(); ++row)
    for (std::size_t col = 0; col < d.cols(); ++col) {
      int mult = d(row, col);
      if (mult == 0) continue;
      text << "  " << col + 1 << " " << std::string(static_cast<std::size_t>(mult), '|') << " " << row + 1;
      if (mult > 1) text << "  (x" << mult << ")";
      text << '\n';
    }

  std::ostringstream dot;
  dot << "graph bratteli {\n";
  dot << "  node [shape=circle];\n";
  dot << "  { rank=same;";
  for (std::size_t i = 0; i < d.cols(); ++i) dot << " u" << i + 1 << " [label=\"" << escape_dot(upper(i)) << "\"];";
  dot << " }\n";
  dot << "  { rank=same;";
  for (std::size_t i = 0; i < d.rows(); ++i) dot << " l" << i + 1 << " [label=\"" << escape_dot(lower(i)) << "\"];";
  dot << " }\n";
  for (std::size_t row = 0; row < d.rows(); ++row)
    for (std::size_t col = 0; col < d.cols(); ++col)
      for (int e = 0; e < d(row, col); ++e) dot << "  u" << col + 1 << " -- l" << row + 1 << ";\n";
  dot << "}\n";
  return {text.str(), dot.str()};
}

}  // namespace gauge
