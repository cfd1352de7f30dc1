#include "gauge/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "gauge/errors.hpp"

namespace gauge {

OrbitLabel canonical_label(const OrbitLabel& label) {
  const std::size_t r = label.J.rank();
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  const auto& k = label.J.k();
  const auto& m = label.J.m();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (k[a] != k[b]) return k[a] < k[b];
    if (m[a] != m[b]) return m[a] < m[b];
    return label.alpha[a] < label.alpha[b];
  });
  Permutation sigma(order);
  return OrbitLabel{label.J.permuted(sigma), sigma.apply(label.alpha), label.xi};
}

std::optional<std::size_t> HassePoset::find(const OrbitLabel& canonical) const {
  auto it = std::find(nodes.begin(), nodes.end(), canonical);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

OrbitTypeLattice::OrbitTypeLattice(BundleSpec bundle) : bundle_(std::move(bundle)) { bundle_.validate(); }

MembershipReport OrbitTypeLattice::membership(const OrbitLabel& label) const {
  return verify_membership(bundle_, label.tuple(), label.xi);
}

void OrbitTypeLattice::check(const OrbitLabel& label) const {
  MembershipReport report = membership(label);
  if (!report.valid())
    throw ValidationError("label " + to_string(label) + " is not an orbit type of this bundle:\n" + report.describe());
}

OrbitLabel OrbitTypeLattice::maximal_label() const {
  const ManifoldModel& M = manifold();
  return OrbitLabel{HoweSignature({bundle_.n}, {1}), {EvenClass{M.h2.zero(), bundle_.c2}}, M.h1.at(1).zero()};
}

const std::vector<InclusionMatrix>& OrbitTypeLattice::inclusions(const HoweSignature& source,
                                                                 const HoweSignature& target) const {
  auto key = std::make_pair(source, target);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, solve_inclusion_matrices(source, target)).first;
  return it->second;
}

bool OrbitTypeLattice::equivalent(const OrbitLabel& a, const OrbitLabel& b) const {
  return canonical_label(a) == canonical_label(b);
}

OrderDecision OrbitTypeLattice::compare(const OrbitLabel& lower, const OrbitLabel& upper) const {
  if (lower.J.n() != bundle_.n || upper.J.n() != bundle_.n)
    throw DomainError("labels do not belong to SU(" + std::to_string(bundle_.n) + ")");
  const ManifoldModel& M = manifold();
  OrderDecision out;
  const int g = signature_invariants(lower.J).g;
  const int gp = signature_invariants(upper.J).g;
  out.condition_a = g % gp == 0 && reduce_coeff(M, g, gp, lower.xi) == upper.xi;
  out.equivalent = equivalent(lower, upper);
  if (out.condition_a) {
    const ClassTuple alpha = lower.tuple();
    for (const InclusionMatrix& d : inclusions(lower.J, upper.J)) {
      if (apply_E(M, d, alpha).entries != upper.alpha) continue;
      out.witnesses.push_back(d);
      out.levels.push_back(level(d));
    }
  }
  out.leq = !out.witnesses.empty();
  return out;
}

namespace {

int gcd_of(const std::vector<int>& values) {
  int g = 0;
  for (int v : values) g = std::gcd(g, v);
  return g;
}

template <typename T>
void insert_after(std::vector<T>& v, std::size_t i, T value) {
  v.insert(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(value));
}

template <typename T>
void erase_at(std::vector<T>& v, std::size_t i) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
}

// Inclusion of L into its splitting at i0: rows are the r + 1 new members.
std::vector<int> split_matrix(std::size_t r, std::size_t i0) {
  std::vector<int> e((r + 1) * r, 0);
  for (std::size_t row = 0; row <= r; ++row) e[row * r + (row <= i0 ? row : row - 1)] = 1;
  return e;
}

// Inclusion of L into its merging of i1 < i2: rows are the r - 1 new members.
std::vector<int> merge_matrix(std::size_t r, std::size_t i1, std::size_t i2) {
  std::vector<int> e((r - 1) * r, 0);
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t row = col == i2 ? i1 : (col < i2 ? col : col - 1);
    e[row * r + col] = 1;
  }
  return e;
}

}  // namespace

OrbitLabel OrbitTypeLattice::split(const OrbitLabel& label, std::size_t i0, std::pair<int, int> parts) const {
  const std::size_t r = label.J.rank();
  if (i0 >= r) throw DomainError("split index " + std::to_string(i0 + 1) + " out of range");
  const int mi = label.J.m()[i0];
  if (parts.first < 1 || parts.second < 1 || parts.first + parts.second != mi)
    throw DomainError("cannot split m = " + std::to_string(mi) + " into (" + std::to_string(parts.first) + "," +
                      std::to_string(parts.second) + ")");
  std::vector<int> k = label.J.k();
  std::vector<int> m = label.J.m();
  std::vector<EvenClass> alpha = label.alpha;
  insert_after(k, i0, k[i0]);
  m[i0] = parts.first;
  insert_after(m, i0, parts.second);
  insert_after(alpha, i0, alpha[i0]);
  const int g = gcd_of(label.J.m());
  const int g_new = gcd_of(m);
  GroupElement xi = reduce_coeff(manifold(), g, g_new, label.xi);
  return OrbitLabel{HoweSignature(std::move(k), std::move(m)), std::move(alpha), std::move(xi)};
}

OrbitLabel OrbitTypeLattice::merge(const OrbitLabel& label, std::size_t i1, std::size_t i2) const {
  const std::size_t r = label.J.rank();
  if (!(i1 < i2 && i2 < r)) throw DomainError("merge needs member indices i1 < i2 <= r");
  if (label.J.m()[i1] != label.J.m()[i2]) throw DomainError("merge needs equal m entries");
  std::vector<int> k = label.J.k();
  std::vector<int> m = label.J.m();
  std::vector<EvenClass> alpha = label.alpha;
  k[i1] += k[i2];
  alpha[i1] = truncate(manifold(), cup(manifold(), alpha[i1], alpha[i2]), k[i1]);
  erase_at(k, i2);
  erase_at(m, i2);
  erase_at(alpha, i2);
  return OrbitLabel{HoweSignature(std::move(k), std::move(m)), std::move(alpha), label.xi};
}

std::vector<OrbitLabel> OrbitTypeLattice::inverse_split(const OrbitLabel& label, std::size_t i1,
                                                        std::size_t i2) const {
  const std::size_t r = label.J.rank();
  if (!(i1 < i2 && i2 < r)) throw DomainError("inverse splitting needs member indices i1 < i2 <= r");
  if (label.J.k()[i1] != label.J.k()[i2]) throw DomainError("inverse splitting needs equal k entries");
  if (label.alpha[i1] != label.alpha[i2]) throw DomainError("inverse splitting needs equal alpha entries");
  const ManifoldModel& M = manifold();
  std::vector<int> k = label.J.k();
  std::vector<int> m = label.J.m();
  std::vector<EvenClass> alpha = label.alpha;
  m[i1] += m[i2];
  erase_at(k, i2);
  erase_at(m, i2);
  erase_at(alpha, i2);
  HoweSignature j(std::move(k), std::move(m));
  const SignatureInvariants inv = signature_invariants(j);
  const int g_old = gcd_of(label.J.m());
  const GroupElement target = evaluate_row(M, inv.m_tilde, alpha).deg2;
  std::vector<OrbitLabel> out;
  for (GroupElement& xi : solve_bockstein_lift(M, inv.g, g_old, label.xi, target))
    out.push_back(OrbitLabel{j, alpha, std::move(xi)});
  return out;
}

InverseMergeResult OrbitTypeLattice::inverse_merge(const OrbitLabel& label, std::size_t i0,
                                                   std::pair<int, int> k_parts, Coord bound) const {
  const std::size_t r = label.J.rank();
  if (i0 >= r) throw DomainError("inverse merging index " + std::to_string(i0 + 1) + " out of range");
  const int ki = label.J.k()[i0];
  const auto [k1, k2] = k_parts;
  if (ki < 2) throw DomainError("inverse merging needs k >= 2");
  if (k1 < 1 || k2 < 1 || k1 + k2 != ki)
    throw DomainError("cannot split k = " + std::to_string(ki) + " into (" + std::to_string(k1) + "," +
                      std::to_string(k2) + ")");
  if (bound < 0) throw BoundsError("search bound must be nonnegative");
  const ManifoldModel& M = manifold();
  const AbGroup& h2 = M.h2;
  const AbGroup& h4 = M.h4;
  const EvenClass& target = label.alpha[i0];

  InverseMergeResult out;
  out.truncated = h2.free_rank() > 0 || (k1 >= 2 && k2 >= 2 && h4.free_rank() > 0);

  std::vector<int> k = label.J.k();
  std::vector<int> m = label.J.m();
  k[i0] = k1;
  insert_after(k, i0, k2);
  insert_after(m, i0, m[i0]);
  const HoweSignature j(std::move(k), std::move(m));

  auto emit = [&](const EvenClass& a, const EvenClass& b) {
    if (!respects_truncation(M, a, k1) || !respects_truncation(M, b, k2)) return;
    std::vector<EvenClass> alpha = label.alpha;
    alpha[i0] = a;
    insert_after(alpha, i0, b);
    out.labels.push_back(OrbitLabel{j, std::move(alpha), label.xi});
  };

  const std::vector<GroupElement> free_deg4 =
      k1 >= 2 && k2 >= 2 ? h4.box(bound) : std::vector<GroupElement>{h4.zero()};
  for (const GroupElement& a2 : h2.box(bound)) {
    const GroupElement b2 = h2.subtract(target.deg2, a2);
    // a4 + b4 = alpha4 - a2 b2
    const GroupElement rest = h4.subtract(target.deg4, cup(M, a2, b2));
    if (k2 == 1) {
      emit({a2, rest}, {b2, h4.zero()});
    } else if (k1 == 1) {
      emit({a2, h4.zero()}, {b2, rest});
    } else {
      for (const GroupElement& a4 : free_deg4) emit({a2, a4}, {b2, h4.subtract(rest, a4)});
    }
  }
  return out;
}

std::vector<OrbitLabel> OrbitTypeLattice::direct_successors(const OrbitLabel& label) const {
  std::vector<OrbitLabel> out;
  const std::size_t r = label.J.rank();
  const auto& m = label.J.m();
  for (std::size_t i0 = 0; i0 < r; ++i0)
    for (int p = 1; p < m[i0]; ++p) out.push_back(canonical_label(split(label, i0, {p, m[i0] - p})));
  for (std::size_t i1 = 0; i1 < r; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < r; ++i2)
      if (m[i1] == m[i2]) out.push_back(canonical_label(merge(label, i1, i2)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PredecessorSet OrbitTypeLattice::direct_predecessors(const OrbitLabel& label, Coord bound) const {
  PredecessorSet out;
  const std::size_t r = label.J.rank();
  const auto& k = label.J.k();
  for (std::size_t i1 = 0; i1 < r; ++i1)
    for (std::size_t i2 = i1 + 1; i2 < r; ++i2)
      if (k[i1] == k[i2] && label.alpha[i1] == label.alpha[i2])
        for (const OrbitLabel& l : inverse_split(label, i1, i2)) out.classes.push_back(canonical_label(l));
  for (std::size_t i0 = 0; i0 < r; ++i0)
    for (int k1 = 1; 2 * k1 <= k[i0]; ++k1) {
      InverseMergeResult res = inverse_merge(label, i0, {k1, k[i0] - k1}, bound);
      out.truncated = out.truncated || res.truncated;
      for (const OrbitLabel& l : res.labels) out.classes.push_back(canonical_label(l));
    }
  std::sort(out.classes.begin(), out.classes.end());
  out.classes.erase(std::unique(out.classes.begin(), out.classes.end()), out.classes.end());
  return out;
}

Decomposition OrbitTypeLattice::decompose_inclusion(const OrbitLabel& lower, const OrbitLabel& upper,
                                                    const InclusionMatrix& d) const {
  if (d.source() != lower.J || d.target() != upper.J)
    throw DomainError("inclusion matrix does not connect the given labels");
  if (apply_E(manifold(), d, lower.tuple()).entries != upper.alpha)
    throw DomainError("inclusion matrix does not map alpha to alpha'");
  const LevelProfile profile = level_profile(d);
  if (profile.level == 0) throw DomainError("an inclusion of level 0 has no decomposition");

  const std::size_t r = d.cols();
  const std::size_t rp = d.rows();
  auto i0_it = std::find_if(profile.plus.begin(), profile.plus.end(), [](int v) { return v > 0; });
  if (i0_it != profile.plus.end()) {
    // Splitting: member i0 feeds several target members; peel off one
    // copy of target member i0p.
    const std::size_t i0 = static_cast<std::size_t>(i0_it - profile.plus.begin());
    std::size_t i0p = 0;
    while (d(i0p, i0) == 0) ++i0p;
    const int mp = upper.J.m()[i0p];
    OrbitLabel mid = split(lower, i0, {lower.J.m()[i0] - mp, mp});
    InclusionMatrix first(lower.J, mid.J, split_matrix(r, i0));
    std::vector<int> e(rp * (r + 1), 0);
    for (std::size_t row = 0; row < rp; ++row)
      for (std::size_t col = 0; col <= r; ++col) {
        if (col == i0 + 1)
          e[row * (r + 1) + col] = row == i0p ? 1 : 0;
        else {
          const std::size_t src = col <= i0 ? col : col - 1;
          e[row * (r + 1) + col] = d(row, src) - (col == i0 && row == i0p ? 1 : 0);
        }
      }
    InclusionMatrix second(mid.J, upper.J, std::move(e));
    return Decomposition{std::move(mid), std::move(first), std::move(second)};
  }

  // Merging: every column holds a single 1; pick a row hit twice.
  auto row_it = std::find_if(profile.minus.begin(), profile.minus.end(), [](int v) { return v > 0; });
  const std::size_t i0p = static_cast<std::size_t>(row_it - profile.minus.begin());
  std::vector<std::size_t> hits;
  for (std::size_t col = 0; col < r && hits.size() < 2; ++col)
    if (d(i0p, col) != 0) hits.push_back(col);
  const std::size_t i1 = hits[0];
  const std::size_t i2 = hits[1];
  OrbitLabel mid = merge(lower, i1, i2);
  InclusionMatrix first(lower.J, mid.J, merge_matrix(r, i1, i2));
  std::vector<int> e;
  e.reserve(rp * (r - 1));
  for (std::size_t row = 0; row < rp; ++row)
    for (std::size_t col = 0; col < r; ++col)
      if (col != i2) e.push_back(d(row, col));
  InclusionMatrix second(mid.J, upper.J, std::move(e));
  return Decomposition{std::move(mid), std::move(first), std::move(second)};
}

HassePoset OrbitTypeLattice::build_hasse(Coord bound) const {
  if (bound < 0) throw BoundsError("search bound must be nonnegative");
  HassePoset poset;
  poset.bundle = bundle_;
  poset.bound = bound;

  std::map<OrbitLabel, int> depth;
  std::vector<OrbitLabel> queue{maximal_label()};
  depth[queue.front()] = 0;
  std::vector<std::pair<OrbitLabel, OrbitLabel>> covers;  // (lower, upper)
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const OrbitLabel node = queue[head];
    PredecessorSet preds = direct_predecessors(node, bound);
    poset.truncated = poset.truncated || preds.truncated;
    for (OrbitLabel& p : preds.classes) {
      if (!depth.contains(p)) {
        depth[p] = depth[node] + 1;
        queue.push_back(p);
      }
      covers.emplace_back(std::move(p), node);
    }
  }

  std::vector<std::pair<int, OrbitLabel>> ordered;
  for (const auto& [label, d] : depth) ordered.emplace_back(d, label);
  std::sort(ordered.begin(), ordered.end());
  std::map<OrbitLabel, std::size_t> index;
  for (auto& [d, label] : ordered) {
    index[label] = poset.nodes.size();
    poset.nodes.push_back(label);
    poset.depth.push_back(d);
  }
  poset.maximal = index.at(maximal_label());

  for (const auto& [lo, up] : covers)
    poset.edges.push_back(HasseEdge{index.at(lo), index.at(up), compare(lo, up).witnesses});
  std::sort(poset.edges.begin(), poset.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
    return std::tie(a.upper, a.lower) < std::tie(b.upper, b.lower);
  });
  poset.edges.erase(std::unique(poset.edges.begin(), poset.edges.end()), poset.edges.end());
  return poset;
}

}  // namespace gauge
