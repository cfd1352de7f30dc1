#include "gauge/cohomology.hpp"

#include <sstream>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

Coord mod(Coord value, Coord order) {
  Coord r = value % order;
  return r < 0 ? r + order : r;
}

}  // namespace

AbGroup::AbGroup(int free_rank, std::vector<Coord> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
  if (free_rank_ < 0) throw ValidationError("free rank must be nonnegative");
  for (Coord t : torsion_)
    if (t < 2) throw ValidationError("torsion orders must be at least 2");
}

Coord AbGroup::order(std::size_t i) const {
  if (i < static_cast<std::size_t>(free_rank_)) return 0;
  return torsion_.at(i - static_cast<std::size_t>(free_rank_));
}

std::uint64_t AbGroup::cardinality() const {
  if (!is_finite()) throw DomainError("cardinality of an infinite group");
  std::uint64_t total = 1;
  for (Coord t : torsion_) total *= static_cast<std::uint64_t>(t);
  return total;
}

GroupElement AbGroup::element(std::vector<Coord> coords) const {
  if (coords.size() != generator_count())
    throw ValidationError("element has " + std::to_string(coords.size()) + " coordinates, group has " +
                          std::to_string(generator_count()) + " generators");
  for (std::size_t i = free_rank_; i < coords.size(); ++i) coords[i] = mod(coords[i], order(i));
  return GroupElement{std::move(coords)};
}

bool AbGroup::contains(const GroupElement& x) const {
  if (x.coords.size() != generator_count()) return false;
  for (std::size_t i = free_rank_; i < x.coords.size(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= order(i)) return false;
  return true;
}

bool AbGroup::is_zero(const GroupElement& x) const {
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    Coord o = order(i);
    if (o == 0 ? x.coords[i] != 0 : mod(x.coords[i], o) != 0) return false;
  }
  return true;
}

GroupElement AbGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (a.coords.size() != generator_count() || b.coords.size() != generator_count())
    throw ValidationError("group mismatch in addition");
  std::vector<Coord> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return element(std::move(c));
}

GroupElement AbGroup::subtract(const GroupElement& a, const GroupElement& b) const {
  return add(a, negate(b));
}

GroupElement AbGroup::negate(const GroupElement& a) const { return scale(-1, a); }

GroupElement AbGroup::scale(Coord factor, const GroupElement& a) const {
  if (a.coords.size() != generator_count()) throw ValidationError("group mismatch in scaling");
  std::vector<Coord> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = factor * a.coords[i];
  return element(std::move(c));
}

std::vector<GroupElement> AbGroup::divide(Coord factor, const GroupElement& y) const {
  if (factor == 0) throw DomainError("cannot divide by zero");
  if (!contains(y)) throw ValidationError("element does not belong to the group");
  // Per-coordinate solution sets; the answer is their product.
  std::vector<std::vector<Coord>> options(generator_count());
  for (std::size_t i = 0; i < generator_count(); ++i) {
    Coord o = order(i);
    if (o == 0) {
      if (y.coords[i] % factor == 0) options[i].push_back(y.coords[i] / factor);
    } else {
      for (Coord x = 0; x < o; ++x)
        if (mod(factor * x - y.coords[i], o) == 0) options[i].push_back(x);
    }
    if (options[i].empty()) return {};
  }
  std::vector<GroupElement> out{GroupElement{}};
  for (const auto& opts : options) {
    std::vector<GroupElement> next;
    for (const auto& partial : out)
      for (Coord x : opts) {
        GroupElement e = partial;
        e.coords.push_back(x);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<GroupElement> AbGroup::elements() const {
  if (!is_finite()) throw DomainError("cannot list the elements of an infinite group");
  return box(0);
}

std::vector<GroupElement> AbGroup::box(Coord bound) const {
  if (bound < 0) throw BoundsError("enumeration bound must be nonnegative");
  std::vector<Coord> lo(generator_count()), hi(generator_count());
  for (std::size_t i = 0; i < generator_count(); ++i) {
    Coord o = order(i);
    lo[i] = o == 0 ? -bound : 0;
    hi[i] = o == 0 ? bound : o - 1;
  }
  std::vector<GroupElement> out;
  std::vector<Coord> cur = lo;
  // Odometer with the last coordinate varying fastest.
  while (true) {
    out.push_back(GroupElement{cur});
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

GroupElement apply_hom(const AbGroup& source, const AbGroup& target, const GeneratorImages& images,
                       const GroupElement& x) {
  if (!source.contains(x)) throw ValidationError("element is not in the source group");
  if (images.size() != source.generator_count()) throw ValidationError("homomorphism arity mismatch");
  std::vector<Coord> acc(target.generator_count(), 0);
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (x.coords[j] == 0) continue;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x.coords[j] * images[j].coords[i];
  }
  return target.element(std::move(acc));
}

std::vector<int> ManifoldModel::moduli() const {
  std::vector<int> out;
  for (const auto& [g, group] : h1) out.push_back(g);
  return out;
}

void ManifoldModel::validate() const {
  if (dim < 0 || dim > 4) throw ValidationError(name + ": dimension must be at most 4");
  const std::size_t n2 = h2.generator_count();
  if (cup_form.size() != n2) throw ValidationError(name + ": cup form must have one row per H2 generator");
  for (std::size_t i = 0; i < n2; ++i) {
    if (cup_form[i].size() != n2) throw ValidationError(name + ": cup form must be square");
    for (std::size_t j = 0; j < n2; ++j) {
      if (!h4.contains(cup_form[i][j]))
        throw ValidationError(name + ": cup[" + std::to_string(i) + "][" + std::to_string(j) +
                              "] is not a reduced H4 element");
    }
  }
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (cup_form[i][j] != cup_form[j][i])
        throw ValidationError(name + ": cup form is not symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
  // A torsion generator e of order t needs t*(e cup f) = 0.
  for (std::size_t i = 0; i < n2; ++i) {
    Coord o = h2.order(i);
    if (o == 0) continue;
    for (std::size_t j = 0; j < n2; ++j)
      if (!h4.is_zero(h4.scale(o, cup_form[i][j])))
        throw ValidationError(name + ": cup product of a torsion generator is not torsion-compatible");
  }

  for (const auto& [g, group] : h1) {
    if (g < 1) throw ValidationError(name + ": moduli must be positive");
    if (!group.is_finite()) throw ValidationError(name + ": H1[" + std::to_string(g) + "] must be finite");
    for (Coord t : group.torsion_orders())
      if (g % t != 0)
        throw ValidationError(name + ": H1[" + std::to_string(g) + "] has an order not dividing the modulus");
    auto it = bockstein.find(g);
    if (it == bockstein.end()) {
      if (!group.is_trivial()) throw ValidationError(name + ": missing bockstein[" + std::to_string(g) + "]");
      continue;
    }
    const auto& images = it->second;
    if (images.size() != group.generator_count())
      throw ValidationError(name + ": bockstein[" + std::to_string(g) + "] needs one image per H1 generator");
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (!h2.contains(images[j]))
        throw ValidationError(name + ": bockstein[" + std::to_string(g) + "] image is not a reduced H2 element");
      if (!h2.is_zero(h2.scale(group.order(j), images[j])))
        throw ValidationError(name + ": bockstein[" + std::to_string(g) + "] is not well defined on a generator");
      if (!h2.is_zero(h2.scale(g, images[j])))
        throw ValidationError(name + ": bockstein[" + std::to_string(g) + "] image is not g-torsion");
    }
  }
  for (const auto& [g, images] : bockstein)
    if (!h1.contains(g)) throw ValidationError(name + ": bockstein for undeclared modulus " + std::to_string(g));

  for (const auto& [key, images] : reduction) {
    auto [g, gp] = key;
    if (!h1.contains(g) || !h1.contains(gp))
      throw ValidationError(name + ": reduction between undeclared moduli");
    if (g % gp != 0) throw ValidationError(name + ": reduction[" + std::to_string(g) + "][" + std::to_string(gp) + "] with non-divisor modulus");
    const AbGroup& src = h1.at(g);
    const AbGroup& dst = h1.at(gp);
    if (images.size() != src.generator_count())
      throw ValidationError(name + ": reduction needs one image per H1 generator");
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (!dst.contains(images[j])) throw ValidationError(name + ": reduction image is not reduced");
      if (!dst.is_zero(dst.scale(src.order(j), images[j])))
        throw ValidationError(name + ": reduction is not well defined on a generator");
    }
    if (g == gp) {
      for (std::size_t j = 0; j < images.size(); ++j) {
        GroupElement e = src.zero();
        e.coords[j] = 1;
        if (images[j] != src.element(e.coords))
          throw ValidationError(name + ": reduction[" + std::to_string(g) + "][" + std::to_string(g) + "] is not the identity");
      }
    }
  }

  // Every divisor pair of nontrivial groups must carry a reduction, and
  // l * beta_g = beta_{g'} o rho_{g g'} must hold on generators.
  auto reduce = [&](int g, int gp, const GroupElement& e) {
    const AbGroup& src = h1.at(g);
    const AbGroup& dst = h1.at(gp);
    if (g == gp) return e;
    if (src.is_trivial() || dst.is_trivial()) return dst.zero();
    auto it = reduction.find({g, gp});
    if (it == reduction.end())
      throw ValidationError(name + ": missing reduction[" + std::to_string(g) + "][" + std::to_string(gp) + "]");
    return apply_hom(src, dst, it->second, e);
  };
  auto generator = [](const AbGroup& group, std::size_t j) {
    GroupElement e = group.zero();
    e.coords[j] = 1;
    return group.element(e.coords);
  };
  for (const auto& [g, src] : h1) {
    for (const auto& [gp, dst] : h1) {
      if (gp == g || g % gp != 0) continue;
      const int l = g / gp;
      for (std::size_t j = 0; j < src.generator_count(); ++j) {
        GroupElement e = generator(src, j);
        GroupElement lhs = h2.scale(l, apply_hom(src, h2, bockstein.at(g), e));
        GroupElement reduced = reduce(g, gp, e);
        GroupElement rhs = dst.is_trivial() ? h2.zero() : apply_hom(dst, h2, bockstein.at(gp), reduced);
        if (lhs != rhs)
          throw ValidationError(name + ": l*beta_" + std::to_string(g) + " != beta_" + std::to_string(gp) +
                                " o rho_" + std::to_string(g) + "," + std::to_string(gp) + " on generator " +
                                std::to_string(j));
      }
    }
  }
  // rho_{g' g''} o rho_{g g'} = rho_{g g''}.
  for (const auto& [g, src] : h1) {
    for (const auto& [gp, mid] : h1) {
      if (gp == g || g % gp != 0) continue;
      for (const auto& [gpp, dst] : h1) {
        if (gpp == gp || gpp == g || gp % gpp != 0) continue;
        for (std::size_t j = 0; j < src.generator_count(); ++j) {
          GroupElement e = generator(src, j);
          if (reduce(gp, gpp, reduce(g, gp, e)) != reduce(g, gpp, e))
            throw ValidationError(name + ": reductions " + std::to_string(g) + "->" + std::to_string(gp) +
                                  "->" + std::to_string(gpp) + " do not compose");
        }
      }
    }
  }
}

GroupElement cup(const ManifoldModel& manifold, const GroupElement& x, const GroupElement& y) {
  const AbGroup& h2 = manifold.h2;
  if (!h2.contains(x) || !h2.contains(y)) throw ValidationError("cup product arguments must lie in H2");
  std::vector<Coord> acc(manifold.h4.generator_count(), 0);
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < y.coords.size(); ++j) {
      if (y.coords[j] == 0) continue;
      const auto& c = manifold.cup_form[i][j].coords;
      for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += x.coords[i] * y.coords[j] * c[t];
    }
  }
  return manifold.h4.element(std::move(acc));
}

GroupElement bockstein(const ManifoldModel& manifold, int g, const GroupElement& xi) {
  auto group = manifold.h1.find(g);
  if (group == manifold.h1.end()) throw DomainError("manifold " + manifold.name + " has no modulus " + std::to_string(g));
  if (group->second.is_trivial()) {
    if (!xi.coords.empty()) throw ValidationError("element is not in H1");
    return manifold.h2.zero();
  }
  return apply_hom(group->second, manifold.h2, manifold.bockstein.at(g), xi);
}

GroupElement reduce_coeff(const ManifoldModel& manifold, int g, int g_prime, const GroupElement& xi) {
  if (g_prime < 1 || g % g_prime != 0)
    throw DomainError("reduction " + std::to_string(g) + " -> " + std::to_string(g_prime) + " needs a divisor");
  auto src = manifold.h1.find(g);
  auto dst = manifold.h1.find(g_prime);
  if (src == manifold.h1.end() || dst == manifold.h1.end())
    throw DomainError("manifold " + manifold.name + " lacks modulus " + std::to_string(src == manifold.h1.end() ? g : g_prime));
  if (!src->second.contains(xi)) throw ValidationError("element is not in H1[" + std::to_string(g) + "]");
  if (g == g_prime) return xi;
  if (src->second.is_trivial() || dst->second.is_trivial()) return dst->second.zero();
  auto map = manifold.reduction.find({g, g_prime});
  if (map == manifold.reduction.end())
    throw DomainError("manifold " + manifold.name + " lacks reduction " + std::to_string(g) + " -> " + std::to_string(g_prime));
  return apply_hom(src->second, dst->second, map->second, xi);
}

std::vector<GroupElement> solve_bockstein_lift(const ManifoldModel& manifold, int g_new, int g_old,
                                               const GroupElement& xi_old, const GroupElement& target) {
  if (!manifold.has_modulus(g_new)) throw DomainError("manifold " + manifold.name + " has no modulus " + std::to_string(g_new));
  std::vector<GroupElement> out;
  for (const GroupElement& candidate : manifold.h1.at(g_new).elements()) {
    if (reduce_coeff(manifold, g_new, g_old, candidate) != xi_old) continue;
    if (bockstein(manifold, g_new, candidate) != target) continue;
    out.push_back(candidate);
  }
  return out;
}

EvenClass unit_class(const ManifoldModel& manifold) { return {manifold.h2.zero(), manifold.h4.zero()}; }

EvenClass cup(const ManifoldModel& manifold, const EvenClass& a, const EvenClass& b) {
  EvenClass out;
  out.deg2 = manifold.h2.add(a.deg2, b.deg2);
  out.deg4 = manifold.h4.add(manifold.h4.add(a.deg4, b.deg4), cup(manifold, a.deg2, b.deg2));
  return out;
}

bool respects_truncation(const ManifoldModel& manifold, const EvenClass& alpha, int k) {
  if (k >= 2) return true;
  return manifold.h4.is_zero(alpha.deg4) && (k >= 1 || manifold.h2.is_zero(alpha.deg2));
}

EvenClass truncate(const ManifoldModel& manifold, const EvenClass& alpha, int k) {
  EvenClass out = alpha;
  if (k < 2) out.deg4 = manifold.h4.zero();
  if (k < 1) out.deg2 = manifold.h2.zero();
  return out;
}

EvenClassBox enumerate_even_classes(const ManifoldModel& manifold, int k, Coord bound) {
  if (bound < 0) throw BoundsError("enumeration bound must be nonnegative");
  EvenClassBox out;
  auto deg2 = manifold.h2.box(bound);
  auto deg4 = k >= 2 ? manifold.h4.box(bound) : std::vector<GroupElement>{manifold.h4.zero()};
  out.truncated = manifold.h2.free_rank() > 0 || (k >= 2 && manifold.h4.free_rank() > 0);
  out.classes.reserve(deg2.size() * deg4.size());
  for (const auto& a : deg2)
    for (const auto& b : deg4) out.classes.push_back({a, b});
  return out;
}

std::string to_string(const GroupElement& x) {
  std::ostringstream os;
  for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
  return os.str();
}

}  // namespace gauge
