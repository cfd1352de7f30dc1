#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>

#include "gauge/charclass.hpp"
#include "gauge/errors.hpp"
#include "gauge/howe.hpp"
#include "gauge/inclusion.hpp"
#include "gauge/lattice.hpp"

namespace gauge::cli {

namespace {

// Unparseable user input is a usage error, not a domain error.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct BundleOptions {
  int n = 2;
  std::string manifold = "S4";
  std::string c2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "rank of SU(n)")->check(CLI::Range(1, kMaxRank));
    cmd->add_option("--manifold", manifold, "built-in name (S4, S2xS2, LensL(N,q)xS1) or descriptor file")
        ->capture_default_str();
    cmd->add_option("--c2", c2, "c2(P) as comma-separated H4 coordinates (default 0)");
  }
};

ManifoldPtr resolve_manifold(const std::string& spec) {
  if (std::filesystem::exists(spec)) return std::make_shared<const ManifoldModel>(load_manifold_file(spec));
  return std::make_shared<const ManifoldModel>(builtin_manifold(spec));
}

std::vector<Coord> parse_coord_list(const std::string& text) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::logic_error&) {
      throw UsageError("bad coordinate '" + piece + "'");
    }
  }
  return out;
}

BundleSpec resolve_bundle(const BundleOptions& opts) {
  ManifoldPtr m = resolve_manifold(opts.manifold);
  GroupElement c2 = m->h4.zero();
  if (!opts.c2.empty()) {
    auto coords = parse_coord_list(opts.c2);
    if (coords.size() != m->h4.generator_count())
      throw UsageError("--c2 needs " + std::to_string(m->h4.generator_count()) + " coordinate(s) for " + m->name);
    c2 = m->h4.element(std::move(coords));
  }
  return make_bundle(opts.n, std::move(m), std::move(c2));
}

HoweSignature signature_arg(const std::string& text) {
  try {
    return parse_signature(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

OrbitLabel label_arg(const std::string& text, const ManifoldModel& m) {
  try {
    return parse_label(text, m);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

void cmd_howe(std::ostream& out, int n, bool all) {
  auto sigs = enumerate_signatures(n, !all);
  out << sigs.size() << (all ? " signatures" : " classes of signatures") << " of SU(" << n << ")\n";
  for (const auto& j : sigs) {
    auto inv = signature_invariants(j);
    out << to_string(j) << "  g=" << inv.g << '\n';
  }
}

void cmd_inclusions(std::ostream& out, const std::string& a, const std::string& b, bool dot) {
  HoweSignature j = signature_arg(a);
  HoweSignature jp = signature_arg(b);
  auto sols = solve_inclusion_matrices(j, jp);
  out << sols.size() << " inclusion matri" << (sols.size() == 1 ? "x " : "ces ") << to_string(j) << " -> "
      << to_string(jp) << '\n';
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const LevelProfile p = level_profile(sols[i]);
    out << "D" << i + 1 << " = " << to_string(sols[i]) << "  level " << p.level << '\n';
    auto art = render_bratteli(sols[i]);
    out << (dot ? art.dot : art.text);
  }
}

void cmd_compare(std::ostream& out, const BundleOptions& opts, const std::string& a, const std::string& b) {
  OrbitTypeLattice lattice(resolve_bundle(opts));
  OrbitLabel lo = label_arg(a, lattice.manifold());
  OrbitLabel up = label_arg(b, lattice.manifold());
  lattice.check(lo);
  lattice.check(up);
  OrderDecision d = lattice.compare(lo, up);
  out << to_string(lo) << (d.leq ? " <= " : " not <= ") << to_string(up) << '\n';
  out << "divisibility and reduction of xi: " << (d.condition_a ? "yes" : "no") << '\n';
  out << "equivalent: " << (d.equivalent ? "yes" : "no") << '\n';
  out << "witnesses: " << d.witnesses.size() << '\n';
  for (std::size_t i = 0; i < d.witnesses.size(); ++i)
    out << "  " << to_string(d.witnesses[i]) << "  level " << d.levels[i] << '\n';
}

void cmd_hasse(std::ostream& out, const BundleOptions& opts, Coord bound, const std::string& format,
               const std::string& output) {
  OrbitTypeLattice lattice(resolve_bundle(opts));
  HassePoset poset = lattice.build_hasse(bound);
  std::string text;
  if (format == "text")
    text = hasse_to_text(poset);
  else if (format == "dot")
    text = hasse_to_dot(poset);
  else
    text = hasse_to_json(poset).dump(2) + "\n";
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output);
  if (!file) throw DomainError("cannot write '" + output + "'");
  file << text;
  out << "wrote " << poset.nodes.size() << " classes to " << output << '\n';
  if (poset.truncated) out << "WARNING: truncated search at bound " << bound << '\n';
}

void cmd_labels(std::ostream& out, const BundleOptions& opts, const std::string& jtext, Coord bound) {
  BundleSpec bundle = resolve_bundle(opts);
  HoweSignature j = signature_arg(jtext);
  LabelSolutions sols = solve_labels(bundle, j, bound);
  if (sols.truncated) out << "WARNING: truncated search; solutions beyond bound " << bound << " are missing\n";
  out << sols.labels.size() << " label(s) for " << to_string(j) << '\n';
  for (const auto& [alpha, xi] : sols.labels)
    out << to_string(OrbitLabel{alpha.signature, alpha.entries, xi}) << '\n';
}

void cmd_validate(std::ostream& out, const std::string& path) {
  ManifoldModel m = load_manifold_file(path);
  out << "ok: " << m.name << " (H2 generators " << m.h2.generator_count() << ", moduli " << m.moduli().size()
      << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit types of SU(n) gauge theories on 4-manifolds", "orbit-types"};
  app.require_subcommand(1);

  int howe_n = 1;
  bool howe_all = false;
  auto* howe = app.add_subcommand("howe", "list Howe signatures of SU(n)");
  howe->add_option("n", howe_n, "rank")->required();
  howe->add_flag("--all", howe_all, "list every ordering, not one per class");

  std::string inc_a, inc_b;
  bool inc_dot = false;
  auto* inclusions = app.add_subcommand("inclusions", "inclusion matrices N(J,J') with Bratteli diagrams");
  inclusions->add_option("J", inc_a, "source signature (k1,..|m1,..)")->required();
  inclusions->add_option("Jprime", inc_b, "target signature")->required();
  inclusions->add_flag("--dot", inc_dot, "emit Bratteli diagrams as DOT");

  BundleOptions cmp_opts;
  std::string cmp_a, cmp_b;
  auto* compare = app.add_subcommand("compare", "decide L <= L' and list witnesses");
  cmp_opts.attach(compare);
  compare->add_option("L", cmp_a, "lower label")->required();
  compare->add_option("Lprime", cmp_b, "upper label")->required();

  BundleOptions hasse_opts;
  Coord hasse_bound = 3;
  std::string hasse_format = "text";
  std::string hasse_output;
  auto* hasse = app.add_subcommand("hasse", "build the Hasse diagram of orbit types");
  hasse_opts.attach(hasse);
  hasse->add_option("--bound", hasse_bound, "bound on free coordinates in searches")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  hasse->add_option("--format", hasse_format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}))
      ->capture_default_str();
  hasse->add_option("--output", hasse_output, "write to a file instead of stdout");

  BundleOptions lab_opts;
  std::string lab_j;
  Coord lab_bound = 3;
  auto* labels = app.add_subcommand("labels", "solve for all labels (alpha, xi) of a signature");
  lab_opts.attach(labels);
  labels->add_option("--j", lab_j, "signature (k1,..|m1,..)")->required();
  labels->add_option("--bound", lab_bound, "bound on free coordinates")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::string val_path;
  auto* validate = app.add_subcommand("validate-manifold", "check a JSON manifold descriptor");
  validate->add_option("file", val_path, "descriptor path")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("orbit-types");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*howe)
      cmd_howe(out, howe_n, howe_all);
    else if (*inclusions)
      cmd_inclusions(out, inc_a, inc_b, inc_dot);
    else if (*compare)
      cmd_compare(out, cmp_opts, cmp_a, cmp_b);
    else if (*hasse)
      cmd_hasse(out, hasse_opts, hasse_bound, hasse_format, hasse_output);
    else if (*labels)
      cmd_labels(out, lab_opts, lab_j, lab_bound);
    else if (*validate)
      cmd_validate(out, val_path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace gauge::cli
