#pragma once

// Shared fixtures and independent oracles for the unit tests and the
// acceptance runner.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gauge/charclass.hpp"
#include "gauge/lattice.hpp"

namespace gauge::testing {

ManifoldPtr catalog(const std::string& name);
BundleSpec bundle(int n, const std::string& manifold, std::vector<Coord> c2 = {});

/// Every canonical label of every signature of SU(n), found by solve_labels.
struct Universe {
  std::vector<OrbitLabel> labels;
  bool truncated = false;
};
Universe label_universe(const OrbitTypeLattice& lattice, Coord bound);

/// Full scan over all r' x r matrices with entries 0..k'_{i'}.
std::vector<std::vector<int>> naive_inclusions(const HoweSignature& source, const HoweSignature& target);

/// E_D computed as literal products of cup powers.
std::vector<EvenClass> literal_E(const ManifoldModel& manifold, const InclusionMatrix& d,
                                 const std::vector<EvenClass>& alpha);

/// Covering pairs (lower, upper) of the brute-force order on `labels`.
std::set<std::pair<std::size_t, std::size_t>> brute_force_covers(const OrbitTypeLattice& lattice,
                                                                 const std::vector<OrbitLabel>& labels);

/// All signatures of SU(n), every ordering.
std::vector<HoweSignature> all_signatures(int max_n);

/// A random class respecting truncation k with free coordinates in [-bound, bound].
EvenClass random_class(std::mt19937& rng, const ManifoldModel& manifold, int k, Coord bound);

struct PropertyResult {
  std::string name;
  long instances = 0;
  long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::function<std::string()>& describe);
};

PropertyResult check_level_superadditivity();
PropertyResult check_level_constancy();
PropertyResult check_equivalence_level_zero();
PropertyResult check_direct_successor_level_one();
PropertyResult check_successor_predecessor_duality();
PropertyResult check_functoriality();
PropertyResult check_decomposition();

std::vector<PropertyResult> run_property_suite();

}  // namespace gauge::testing
