#include "gauge/charclass.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

void check_class_tuple(const ManifoldModel& manifold, const ClassTuple& alpha) {
  if (alpha.entries.size() != alpha.signature.rank())
    throw ValidationError("class tuple has " + std::to_string(alpha.entries.size()) + " entries, signature " +
                          to_string(alpha.signature) + " needs " + std::to_string(alpha.signature.rank()));
  for (std::size_t i = 0; i < alpha.entries.size(); ++i) {
    const EvenClass& a = alpha.entries[i];
    if (!manifold.h2.contains(a.deg2) || !manifold.h4.contains(a.deg4))
      throw ValidationError("entry " + std::to_string(i + 1) + " is not a class of " + manifold.name);
    if (!respects_truncation(manifold, a, alpha.signature.k()[i]))
      throw ValidationError("entry " + std::to_string(i + 1) + " violates truncation k = " +
                            std::to_string(alpha.signature.k()[i]));
  }
}

void BundleSpec::validate() const {
  if (n < 1 || n > kMaxRank) throw BoundsError("n must lie in 1.." + std::to_string(kMaxRank));
  if (!manifold) throw ValidationError("bundle has no manifold");
  if (!manifold->h4.contains(c2)) throw ValidationError("c2 is not an element of H4(" + manifold->name + ")");
  if (n == 1 && !manifold->h4.is_zero(c2)) throw ValidationError("SU(1)-bundles have c2 = 0");
  for (int g = 1; g <= n; ++g)
    if (n % g == 0 && !manifold->has_modulus(g))
      throw DomainError("manifold " + manifold->name + " lacks H1 with Z_" + std::to_string(g) +
                        " coefficients, needed for SU(" + std::to_string(n) + ")");
}

bool BundleSpec::operator==(const BundleSpec& other) const {
  if (n != other.n || c2 != other.c2) return false;
  if (manifold == other.manifold) return true;
  return manifold && other.manifold && *manifold == *other.manifold;
}

BundleSpec make_bundle(int n, ManifoldPtr manifold, GroupElement c2) {
  BundleSpec b{n, std::move(manifold), std::move(c2)};
  b.validate();
  return b;
}

EvenClass evaluate_row(const ManifoldModel& manifold, const std::vector<int>& coeffs,
                       const std::vector<EvenClass>& alpha) {
  const AbGroup& h2 = manifold.h2;
  const AbGroup& h4 = manifold.h4;
  EvenClass out = unit_class(manifold);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const Coord c = coeffs[i];
    if (c == 0) continue;
    out.deg2 = h2.add(out.deg2, h2.scale(c, alpha[i].deg2));
    out.deg4 = h4.add(out.deg4, h4.scale(c, alpha[i].deg4));
    out.deg4 = h4.add(out.deg4, h4.scale(c * (c - 1) / 2, cup(manifold, alpha[i].deg2, alpha[i].deg2)));
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      if (coeffs[j] == 0) continue;
      out.deg4 = h4.add(out.deg4, h4.scale(c * coeffs[j], cup(manifold, alpha[i].deg2, alpha[j].deg2)));
    }
  }
  return out;
}

ClassTuple apply_E(const ManifoldModel& manifold, const InclusionMatrix& d, const ClassTuple& alpha) {
  if (alpha.signature != d.source())
    throw DomainError("class tuple over " + to_string(alpha.signature) + " does not match inclusion source " +
                      to_string(d.source()));
  ClassTuple out{d.target(), {}};
  out.entries.reserve(d.rows());
  std::vector<int> row(d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) row[c] = d(r, c);
    out.entries.push_back(truncate(manifold, evaluate_row(manifold, row, alpha.entries), d.target().k()[r]));
  }
  return out;
}

std::string MembershipReport::describe() const {
  std::ostringstream os;
  auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
  os << "truncation: " << mark(truncation_ok) << '\n'
     << "sum m~ alpha^(2) = beta_g(xi): " << mark(bockstein_eq) << '\n'
     << "E_m(alpha)^(2) = 0: " << mark(chern_deg2) << '\n'
     << "E_m(alpha)^(4) = c2(P): " << mark(chern_deg4) << '\n'
     << "degree-2 redundancy: " << mark(redundancy_consistent) << '\n';
  return os.str();
}

MembershipReport verify_membership(const BundleSpec& bundle, const ClassTuple& alpha, const GroupElement& xi) {
  const ManifoldModel& M = *bundle.manifold;
  const HoweSignature& j = alpha.signature;
  if (j.n() != bundle.n)
    throw DomainError("signature " + to_string(j) + " does not belong to SU(" + std::to_string(bundle.n) + ")");
  const SignatureInvariants inv = signature_invariants(j);
  if (!M.has_modulus(inv.g)) throw DomainError("manifold " + M.name + " has no modulus " + std::to_string(inv.g));
  if (!M.h1.at(inv.g).contains(xi)) throw ValidationError("xi is not an element of H1(M, Z_" + std::to_string(inv.g) + ")");
  if (alpha.entries.size() != j.rank()) throw ValidationError("class tuple length does not match " + to_string(j));

  MembershipReport report;
  report.truncation_ok = true;
  for (std::size_t i = 0; i < j.rank(); ++i)
    if (!respects_truncation(M, alpha.entries[i], j.k()[i])) report.truncation_ok = false;

  const GroupElement beta = bockstein(M, inv.g, xi);
  report.bockstein_eq = evaluate_row(M, inv.m_tilde, alpha.entries).deg2 == beta;

  const EvenClass total = evaluate_row(M, j.m(), alpha.entries);
  report.chern_deg2 = M.h2.is_zero(total.deg2);
  report.chern_deg4 = total.deg4 == bundle.c2;
  if (report.bockstein_eq)
    report.redundancy_consistent = M.h2.is_zero(M.h2.scale(inv.g, beta)) && report.chern_deg2;
  return report;
}

namespace {

// Calls visit(tuple) for every tuple in choices[0] x ... x choices[s-1].
template <typename Visit>
void for_each_product(const std::vector<const std::vector<GroupElement>*>& choices, Visit&& visit) {
  std::vector<GroupElement> cur(choices.size());
  auto rec = [&](auto& self, std::size_t depth) -> void {
    if (depth == choices.size()) {
      visit(cur);
      return;
    }
    for (const GroupElement& x : *choices[depth]) {
      cur[depth] = x;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

LabelSolutions solve_labels(const BundleSpec& bundle, const HoweSignature& j, Coord bound) {
  if (bound < 0) throw BoundsError("search bound must be nonnegative");
  bundle.validate();
  if (j.n() != bundle.n)
    throw DomainError("signature " + to_string(j) + " does not belong to SU(" + std::to_string(bundle.n) + ")");
  const ManifoldModel& M = *bundle.manifold;
  const SignatureInvariants inv = signature_invariants(j);
  if (!M.has_modulus(inv.g)) throw DomainError("manifold " + M.name + " has no modulus " + std::to_string(inv.g));
  const std::size_t r = j.rank();

  LabelSolutions out;
  const auto h2_box = M.h2.box(bound);
  const auto h4_box = M.h4.box(bound);
  std::vector<std::size_t> free4;  // entries with a degree-4 part
  for (std::size_t i = 0; i < r; ++i)
    if (j.k()[i] >= 2) free4.push_back(i);
  out.truncated = (M.h2.free_rank() > 0 && r >= 2) || (M.h4.free_rank() > 0 && free4.size() >= 2);

  std::vector<const std::vector<GroupElement>*> deg2_choices(r - 1, &h2_box);
  std::vector<const std::vector<GroupElement>*> deg4_choices;
  if (!free4.empty()) deg4_choices.assign(free4.size() - 1, &h4_box);

  const auto xis = M.h1.at(inv.g).elements();
  std::vector<EvenClass> alpha(r, unit_class(M));

  for_each_product(deg2_choices, [&](const std::vector<GroupElement>& head) {
    GroupElement partial = M.h2.zero();
    for (std::size_t i = 0; i + 1 < r; ++i) {
      alpha[i].deg2 = head[i];
      partial = M.h2.add(partial, M.h2.scale(inv.m_tilde[i], head[i]));
    }
    for (const GroupElement& xi : xis) {
      GroupElement rhs = M.h2.subtract(bockstein(M, inv.g, xi), partial);
      for (const GroupElement& last : M.h2.divide(inv.m_tilde[r - 1], rhs)) {
        alpha[r - 1].deg2 = last;
        for (auto& a : alpha) a.deg4 = M.h4.zero();
        const GroupElement quadratic = evaluate_row(M, j.m(), alpha).deg4;
        auto emit = [&] {
          ClassTuple t{j, alpha};
          if (verify_membership(bundle, t, xi).valid()) out.labels.emplace_back(std::move(t), xi);
        };
        if (free4.empty()) {
          emit();
          continue;
        }
        for_each_product(deg4_choices, [&](const std::vector<GroupElement>& tail) {
          GroupElement rest = M.h4.subtract(bundle.c2, quadratic);
          for (std::size_t t = 0; t < tail.size(); ++t) {
            alpha[free4[t]].deg4 = tail[t];
            rest = M.h4.subtract(rest, M.h4.scale(j.m()[free4[t]], tail[t]));
          }
          const std::size_t lastf = free4.back();
          for (const GroupElement& x : M.h4.divide(j.m()[lastf], rest)) {
            alpha[lastf].deg4 = x;
            emit();
          }
        });
      }
    }
  });
  std::sort(out.labels.begin(), out.labels.end());
  out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
  return out;
}

}  // namespace gauge
