#include <numeric>
#include <regex>

#include "gauge/cohomology.hpp"
#include "gauge/errors.hpp"

namespace gauge {

namespace {

/// Trivial H^1 for every modulus (simply connected 4-manifolds).
void add_trivial_h1(ManifoldModel& m, int max_modulus) {
  for (int g = 1; g <= max_modulus; ++g) m.h1[g] = AbGroup(0, {});
}

ManifoldModel make_s4(int max_modulus) {
  ManifoldModel m;
  m.name = "S4";
  m.h2 = AbGroup(0, {});
  m.h4 = AbGroup(1, {});
  add_trivial_h1(m, max_modulus);
  return m;
}

// H2 generated by gamma x 1 and 1 x gamma; H4 by gamma x gamma.
ManifoldModel make_s2xs2(int max_modulus) {
  ManifoldModel m;
  m.name = "S2xS2";
  m.h2 = AbGroup(2, {});
  m.h4 = AbGroup(1, {});
  m.cup_form = {{GroupElement{{0}}, GroupElement{{1}}}, {GroupElement{{1}}, GroupElement{{0}}}};
  add_trivial_h1(m, max_modulus);
  return m;
}

// L(N,q) x S^1. H2 = Z_N generated by gamma_L x 1, H4 = Z, cup form zero.
// H1(M, Z_g) = Z_d (d = gcd(N,g), generator t_L of order d, omitted if d = 1)
//            x Z_g (generator t_S = 1 x gamma_S1, omitted if g = 1).
// beta_g(t_L) = (N/d) gamma, beta_g(t_S) = 0; t_L reduces to
// ((g/d)/(g'/d')) t_L' under Z_g -> Z_g', t_S to t_S'.
ManifoldModel make_lens(int N, int q, int max_modulus) {
  ManifoldModel m;
  m.name = "LensL(" + std::to_string(N) + "," + std::to_string(q) + ")xS1";
  m.h2 = AbGroup(0, {N});
  m.h4 = AbGroup(1, {});
  m.cup_form = {{GroupElement{{0}}}};

  struct Layout {
    int d;
    bool has_lens;
    bool has_circle;
  };
  std::map<int, Layout> layout;
  for (int g = 1; g <= max_modulus; ++g) {
    Layout l{std::gcd(N, g), std::gcd(N, g) > 1, g > 1};
    layout[g] = l;
    std::vector<Coord> orders;
    GeneratorImages beta;
    if (l.has_lens) {
      orders.push_back(l.d);
      beta.push_back(GroupElement{{N / l.d}});
    }
    if (l.has_circle) {
      orders.push_back(g);
      beta.push_back(GroupElement{{0}});
    }
    m.h1[g] = AbGroup(0, orders);
    if (!orders.empty()) m.bockstein[g] = beta;
  }
  for (int g = 1; g <= max_modulus; ++g) {
    for (int gp = 1; gp <= g; ++gp) {
      if (g % gp != 0) continue;
      const Layout& src = layout[g];
      const Layout& dst = layout[gp];
      if (m.h1[g].is_trivial() || m.h1[gp].is_trivial()) continue;
      GeneratorImages images;
      auto image = [&](Coord lens_coeff, Coord circle_coeff) {
        std::vector<Coord> c;
        if (dst.has_lens) c.push_back(lens_coeff);
        if (dst.has_circle) c.push_back(circle_coeff);
        return m.h1[gp].element(std::move(c));
      };
      if (src.has_lens) images.push_back(image((g / src.d) / (gp / dst.d), 0));
      if (src.has_circle) images.push_back(image(0, 1));
      m.reduction[{g, gp}] = images;
    }
  }
  return m;
}

}  // namespace

ManifoldModel builtin_manifold(std::string_view name, int max_modulus) {
  if (max_modulus < 1) throw BoundsError("max modulus must be positive");
  ManifoldModel out;
  std::smatch match;
  std::string s(name);
  static const std::regex lens(R"(LensL\((\d+),(\d+)\)xS1)");
  if (s == "S4") {
    out = make_s4(max_modulus);
  } else if (s == "S2xS2") {
    out = make_s2xs2(max_modulus);
  } else if (std::regex_match(s, match, lens)) {
    int N = std::stoi(match[1]);
    int q = std::stoi(match[2]);
    if (N < 2 || std::gcd(N, q) != 1)
      throw DomainError("lens space L(" + std::to_string(N) + "," + std::to_string(q) + ") needs N >= 2 and gcd(N,q) = 1");
    out = make_lens(N, q, max_modulus);
  } else {
    throw DomainError("unknown manifold '" + s + "'; built-ins are S4, S2xS2, LensL(N,q)xS1");
  }
  out.validate();
  return out;
}

std::vector<std::string> builtin_manifold_names() { return {"S4", "S2xS2", "LensL(N,q)xS1"}; }

}  // namespace gauge
