#include <algorithm>
#include <cctype>
#include <sstream>

#include "gauge/errors.hpp"
#include "gauge/lattice.hpp"

namespace gauge {

using nlohmann::json;

std::string to_string(const OrbitLabel& label) {
  std::string out = to_string(label.J);
  for (const EvenClass& a : label.alpha) out += "{" + to_string(a.deg2) + ";" + to_string(a.deg4) + "}";
  out += "[" + to_string(label.xi) + "]";
  return out;
}

namespace {

std::vector<Coord> parse_coords(std::string_view text, std::string_view whole) {
  std::vector<Coord> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    try {
      std::size_t used = 0;
      Coord v = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad coordinate '" + piece + "' in label '" + std::string(whole) + "'");
    }
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

OrbitLabel parse_label(std::string_view raw, const ManifoldModel& manifold) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  const std::size_t close = text.find(')');
  if (close == std::string::npos) throw ParseError("label '" + text + "' lacks a signature");
  HoweSignature j = parse_signature(std::string_view(text).substr(0, close + 1));

  std::vector<EvenClass> alpha;
  std::size_t pos = close + 1;
  while (pos < text.size() && text[pos] == '{') {
    const std::size_t end = text.find('}', pos);
    const std::size_t semi = text.find(';', pos);
    if (end == std::string::npos || semi == std::string::npos || semi > end)
      throw ParseError("malformed class '{deg2;deg4}' in label '" + text + "'");
    auto d2 = parse_coords(std::string_view(text).substr(pos + 1, semi - pos - 1), text);
    auto d4 = parse_coords(std::string_view(text).substr(semi + 1, end - semi - 1), text);
    try {
      alpha.push_back(EvenClass{manifold.h2.element(std::move(d2)), manifold.h4.element(std::move(d4))});
    } catch (const ValidationError& e) {
      throw ParseError("label '" + text + "': " + e.what());
    }
    pos = end + 1;
  }
  if (alpha.size() != j.rank())
    throw ParseError("label '" + text + "' needs " + std::to_string(j.rank()) + " classes, found " +
                     std::to_string(alpha.size()));

  const int g = signature_invariants(j).g;
  if (!manifold.has_modulus(g)) throw DomainError("manifold " + manifold.name + " has no modulus " + std::to_string(g));
  const AbGroup& h1 = manifold.h1.at(g);
  GroupElement xi = h1.zero();
  if (pos < text.size()) {
    if (text[pos] != '[' || text.back() != ']' || text.find(']', pos) != text.size() - 1)
      throw ParseError("trailing characters in label '" + text + "'");
    try {
      xi = h1.element(parse_coords(std::string_view(text).substr(pos + 1, text.size() - pos - 2), text));
    } catch (const ValidationError& e) {
      throw ParseError("label '" + text + "': xi " + e.what());
    }
  } else if (!h1.is_trivial()) {
    throw ParseError("label '" + text + "' needs xi in H1(M, Z_" + std::to_string(g) + ")");
  }
  return OrbitLabel{std::move(j), std::move(alpha), std::move(xi)};
}

namespace {

std::string witness_list(const std::vector<InclusionMatrix>& witnesses) {
  std::string out;
  for (const auto& w : witnesses) out += (out.empty() ? "" : " ") + to_string(w);
  return out;
}

std::string header(const HassePoset& poset) {
  return "SU(" + std::to_string(poset.bundle.n) + ") over " + poset.bundle.manifold->name + ", c2 = (" +
         to_string(poset.bundle.c2) + "), bound " + std::to_string(poset.bound);
}

std::string warning(const HassePoset& poset) {
  return "WARNING: truncated search; classes with coordinates beyond bound " + std::to_string(poset.bound) +
         " are missing";
}

}  // namespace

std::string hasse_to_text(const HassePoset& poset) {
  std::ostringstream os;
  os << "orbit types: " << header(poset) << '\n';
  if (poset.truncated) os << warning(poset) << '\n';
  os << poset.nodes.size() << " classes, " << poset.edges.size() << " covering relations\n";
  os << "classes (index depth label):\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
    os << "  " << i << "  " << poset.depth[i] << "  " << to_string(poset.nodes[i]);
    if (i == poset.maximal) os << "  (maximal)";
    os << '\n';
  }
  os << "covers (lower <= upper, level-1 witnesses):\n";
  for (const HasseEdge& e : poset.edges)
    os << "  " << e.lower << " <= " << e.upper << "  " << witness_list(e.witnesses) << '\n';
  return os.str();
}

std::string hasse_to_dot(const HassePoset& poset) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=LR;\n";
  std::string title = header(poset);
  if (poset.truncated) title += "\\n" + warning(poset);
  os << "  label=\"" << title << "\";\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << to_string(poset.nodes[i]) << "\"];\n";
  for (const HasseEdge& e : poset.edges) os << "  n" << e.lower << " -> n" << e.upper << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

json matrix_to_json(const InclusionMatrix& d) {
  json rows = json::array();
  for (std::size_t r = 0; r < d.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(d(r, c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json hasse_to_json(const HassePoset& poset) {
  json doc;
  doc["n"] = poset.bundle.n;
  doc["manifold"] = manifold_to_json(*poset.bundle.manifold);
  doc["c2"] = poset.bundle.c2.coords;
  doc["bound"] = poset.bound;
  doc["truncated"] = poset.truncated;
  doc["maximal"] = poset.maximal;
  json nodes = json::array();
  for (std::size_t i = 0; i < poset.nodes.size(); ++i)
    nodes.push_back(json{{"id", i}, {"label", to_string(poset.nodes[i])}, {"depth", poset.depth[i]}});
  doc["nodes"] = nodes;
  json edges = json::array();
  for (const HasseEdge& e : poset.edges) {
    json ws = json::array();
    json levels = json::array();
    for (const auto& w : e.witnesses) {
      ws.push_back(matrix_to_json(w));
      levels.push_back(level(w));
    }
    edges.push_back(json{{"lower", e.lower}, {"upper", e.upper}, {"witnesses", ws}, {"levels", levels}});
  }
  doc["edges"] = edges;
  return doc;
}

HassePoset hasse_from_json(const json& doc) {
  HassePoset poset;
  try {
    auto manifold = std::make_shared<const ManifoldModel>(manifold_from_json(doc.at("manifold")));
    poset.bundle = make_bundle(doc.at("n").get<int>(), manifold,
                               manifold->h4.element(doc.at("c2").get<std::vector<Coord>>()));
    poset.bound = doc.at("bound").get<Coord>();
    poset.truncated = doc.at("truncated").get<bool>();
    poset.maximal = doc.at("maximal").get<std::size_t>();
    for (const json& node : doc.at("nodes")) {
      if (node.at("id").get<std::size_t>() != poset.nodes.size()) throw ParseError("node ids must be 0, 1, 2, ...");
      poset.nodes.push_back(parse_label(node.at("label").get<std::string>(), *manifold));
      poset.depth.push_back(node.at("depth").get<int>());
    }
    if (poset.maximal >= poset.nodes.size()) throw ParseError("maximal node id out of range");
    for (const json& edge : doc.at("edges")) {
      HasseEdge e;
      e.lower = edge.at("lower").get<std::size_t>();
      e.upper = edge.at("upper").get<std::size_t>();
      if (e.lower >= poset.nodes.size() || e.upper >= poset.nodes.size()) throw ParseError("edge endpoint out of range");
      for (const json& w : edge.at("witnesses")) {
        std::vector<int> entries;
        for (const json& row : w)
          for (const json& x : row) entries.push_back(x.get<int>());
        e.witnesses.emplace_back(poset.nodes[e.lower].J, poset.nodes[e.upper].J, std::move(entries));
      }
      poset.edges.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("Hasse export: ") + e.what());
  }
  return poset;
}

}  // namespace gauge
