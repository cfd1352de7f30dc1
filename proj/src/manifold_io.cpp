#include <fstream>
#include <sstream>

#include "gauge/cohomology.hpp"
#include "gauge/errors.hpp"

namespace gauge {

using nlohmann::json;

namespace {

AbGroup group_from_json(const json& node, const std::string& what) {
  if (!node.is_object()) throw ParseError(what + " must be a table");
  int free_rank = node.value("free_rank", 0);
  std::vector<Coord> torsion = node.value("torsion", std::vector<Coord>{});
  try {
    return AbGroup(free_rank, std::move(torsion));
  } catch (const ValidationError& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

json group_to_json(const AbGroup& group) {
  return json{{"free_rank", group.free_rank()}, {"torsion", group.torsion_orders()}};
}

GeneratorImages images_from_json(const json& node, const AbGroup& target, const std::string& what) {
  if (!node.is_array()) throw ParseError(what + " must be a matrix (list of rows)");
  GeneratorImages out;
  for (const json& row : node) {
    try {
      out.push_back(target.element(row.get<std::vector<Coord>>()));
    } catch (const ValidationError& e) {
      throw ValidationError(what + ": " + e.what());
    }
  }
  return out;
}

json images_to_json(const GeneratorImages& images) {
  json rows = json::array();
  for (const auto& x : images) rows.push_back(x.coords);
  return rows;
}

int modulus_key(const std::string& key, const std::string& what) {
  try {
    std::size_t used = 0;
    int g = std::stoi(key, &used);
    if (used != key.size() || g < 1) throw std::invalid_argument(key);
    return g;
  } catch (const std::logic_error&) {
    throw ParseError(what + ": modulus key '" + key + "' is not a positive integer");
  }
}

}  // namespace

ManifoldModel manifold_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("manifold descriptor must be a table");
  ManifoldModel m;
  try {
    m.name = doc.at("name").get<std::string>();
    m.dim = doc.value("dim", 4);
    m.h2 = group_from_json(doc.at("H2"), "H2");
    m.h4 = group_from_json(doc.at("H4"), "H4");

    const std::size_t n2 = m.h2.generator_count();
    m.cup_form.assign(n2, std::vector<GroupElement>(n2, m.h4.zero()));
    if (doc.contains("cup")) {
      const json& cup = doc.at("cup");
      if (!cup.is_array() || cup.size() != n2) throw ValidationError("cup must have one row per H2 generator");
      for (std::size_t i = 0; i < n2; ++i) {
        if (!cup[i].is_array() || cup[i].size() != n2) throw ValidationError("cup must be square");
        for (std::size_t j = 0; j < n2; ++j)
          m.cup_form[i][j] = m.h4.element(cup[i][j].get<std::vector<Coord>>());
      }
    }

    if (doc.contains("H1")) {
      for (const auto& [key, node] : doc.at("H1").items()) {
        int g = modulus_key(key, "H1");
        m.h1[g] = AbGroup(0, node.value("orders", std::vector<Coord>{}));
      }
    }
    if (doc.contains("bockstein")) {
      for (const auto& [key, node] : doc.at("bockstein").items()) {
        int g = modulus_key(key, "bockstein");
        m.bockstein[g] = images_from_json(node, m.h2, "bockstein[" + key + "]");
      }
    }
    if (doc.contains("reduction")) {
      for (const auto& [key, inner] : doc.at("reduction").items()) {
        int g = modulus_key(key, "reduction");
        for (const auto& [key2, node] : inner.items()) {
          int gp = modulus_key(key2, "reduction");
          auto target = m.h1.find(gp);
          if (target == m.h1.end())
            throw ValidationError("reduction[" + key + "][" + key2 + "] targets an undeclared modulus");
          m.reduction[{g, gp}] = images_from_json(node, target->second, "reduction[" + key + "][" + key2 + "]");
        }
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("manifold descriptor: ") + e.what());
  }
  m.validate();
  return m;
}

ManifoldModel load_manifold(std::string_view descriptor) {
  json doc;
  try {
    doc = json::parse(descriptor);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("manifold descriptor: ") + e.what());
  }
  return manifold_from_json(doc);
}

ManifoldModel load_manifold_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifold descriptor '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_manifold(buffer.str());
}

json manifold_to_json(const ManifoldModel& m) {
  json doc;
  doc["name"] = m.name;
  doc["dim"] = m.dim;
  doc["H2"] = group_to_json(m.h2);
  doc["H4"] = group_to_json(m.h4);
  json cup = json::array();
  for (const auto& row : m.cup_form) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.coords);
    cup.push_back(r);
  }
  doc["cup"] = cup;
  json h1 = json::object();
  for (const auto& [g, group] : m.h1) h1[std::to_string(g)] = json{{"orders", group.torsion_orders()}};
  doc["H1"] = h1;
  json beta = json::object();
  for (const auto& [g, images] : m.bockstein) beta[std::to_string(g)] = images_to_json(images);
  doc["bockstein"] = beta;
  json red = json::object();
  for (const auto& [key, images] : m.reduction)
    red[std::to_string(key.first)][std::to_string(key.second)] = images_to_json(images);
  doc["reduction"] = red;
  return doc;
}

}  // namespace gauge
