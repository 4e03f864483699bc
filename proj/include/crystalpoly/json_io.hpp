#pragma once

// JSON and DOT encodings:
//   Cartan file      {"rank": n, "matrix": [[...]], "labels": [...]}
//   ZVector          {"coords": {"k": x_k}, "mode": "binf" | {"lambda": [...]}}
//   tensor node      [[i, x], ..., ["r", [lambda...]]]
//   graph            {"nodes": [...], "edges": [[src, i, dst], ...], "root": r}
//   inequalities     [{"const": "p/q", "coeffs": {"k": "p/q"}}, ...]
//   braid descriptor {"i": 1, "j": 2, "window": [4, 5, 6]}

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crystalpoly/cartan.hpp"
#include "crystalpoly/crystal_graph.hpp"
#include "crystalpoly/polyhedral.hpp"
#include "crystalpoly/tensor.hpp"
#include "crystalpoly/zcrystal.hpp"

namespace crystalpoly::io {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

// ---- Cartan data ----------------------------------------------------------

inline CartanData cartan_from_json(const json& j) {
  try {
    auto matrix = j.at("matrix").get<std::vector<std::vector<Int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("rank") &&
        j.at("rank").get<std::size_t>() != matrix.size())
      throw std::invalid_argument("cartan file: rank does not match matrix");
    return CartanData(std::move(matrix), std::move(labels));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("cartan file: ") + e.what());
  }
}

inline json cartan_to_json(const CartanData& c) {
  json j{{"rank", c.rank()}, {"matrix", c.matrix()}};
  if (!c.labels().empty()) j["labels"] = c.labels();
  return j;
}

// ---- ZVector --------------------------------------------------------------

inline json mode_to_json(const std::optional<Weight>& lambda) {
  if (!lambda) return "binf";
  return json{{"lambda", lambda->coeffs}};
}

inline std::optional<Weight> mode_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "binf")
      throw std::invalid_argument("zvector: unknown mode");
    return std::nullopt;
  }
  return Weight{j.at("lambda").get<std::vector<Int>>()};
}

inline json zvector_to_json(const ZVector& x,
                            const std::optional<Weight>& lambda) {
  json coords = json::object();
  for (const auto& [k, v] : x.coords()) coords[std::to_string(k)] = v;
  return json{{"coords", coords}, {"mode", mode_to_json(lambda)}};
}

inline std::pair<ZVector, std::optional<Weight>> zvector_from_json(
    const json& j) {
  ZVector x;
  try {
    for (const auto& [key, value] : j.at("coords").items())
      x.set(std::stoi(key), value.get<Int>());
    std::optional<Weight> mode;
    if (j.contains("mode")) mode = mode_from_json(j.at("mode"));
    return {x, mode};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("zvector: ") + e.what());
  }
}

// ---- tensor elements ------------------------------------------------------

inline json tensor_to_json(const TensorElem& t) {
  json out = json::array();
  for (const auto& l : t.letters) out.push_back(json::array({l.index, l.value}));
  if (t.unit) out.push_back(json::array({"r", t.unit->coeffs}));
  return out;
}

inline TensorElem tensor_from_json(const json& j) {
  TensorElem t;
  for (const auto& item : j) {
    if (item.size() != 2) throw std::invalid_argument("tensor: bad letter");
    if (item[0].is_string()) {
      if (item[0].get<std::string>() != "r")
        throw std::invalid_argument("tensor: bad unit tag");
      t.unit = Weight{item[1].get<std::vector<Int>>()};
    } else {
      if (t.unit) throw std::invalid_argument("tensor: r_lambda must be last");
      t.letters.push_back({item[0].get<int>(), item[1].get<Int>()});
    }
  }
  return t;
}

// ---- graphs ---------------------------------------------------------------

template <class Node, class Encode>
json graph_to_json(const CrystalGraph<Node>& g, Encode encode) {
  json nodes = json::array();
  for (const auto& n : g.nodes) nodes.push_back(encode(n));
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(json::array({e.src, e.label, e.dst}));
  return json{{"nodes", nodes}, {"edges", edges}, {"root", g.root}};
}

template <class Node, class Label>
std::string graph_to_dot(const CrystalGraph<Node>& g, Label label,
                         const std::string& name = "crystal") {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    std::string text = label(g.nodes[n]);
    std::string escaped;
    for (char ch : text) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    out << "  n" << n << " [label=\"" << escaped << "\"];\n";
  }
  for (const auto& e : g.edges)
    out << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label
        << "\"];\n";
  out << "}\n";
  return out.str();
}

// ---- inequality systems ---------------------------------------------------

inline json form_to_json(const LinearForm& f) {
  json coeffs = json::object();
  for (const auto& [k, v] : f.coeffs()) coeffs[std::to_string(k)] = rational_str(v);
  return json{{"const", rational_str(f.constant())}, {"coeffs", coeffs}};
}

inline LinearForm form_from_json(const json& j) {
  LinearForm f(parse_rational(j.at("const").get<std::string>()));
  for (const auto& [key, value] : j.at("coeffs").items())
    f.set(std::stoi(key), parse_rational(value.get<std::string>()));
  return f;
}

/// Entries sorted by their serialized text.
inline json formset_to_json(const FormSet& fs) {
  std::vector<std::pair<std::string, json>> entries;
  for (const auto& [f, d] : fs.forms) {
    json j = form_to_json(f);
    entries.emplace_back(j.dump(), std::move(j));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json out = json::array();
  for (auto& e : entries) out.push_back(std::move(e.second));
  return out;
}

inline FormSet formset_from_json(const json& j, int support_bound) {
  FormSet fs;
  fs.support_bound = support_bound;
  fs.saturated = true;
  for (const auto& item : j) fs.add(form_from_json(item));
  return fs;
}

// ---- braid descriptor -----------------------------------------------------

struct BraidDescriptor {
  int i = 1;
  int j = 2;
  std::vector<int> window;
};

inline BraidDescriptor braid_descriptor_from_json(const json& j) {
  BraidDescriptor d;
  d.i = j.at("i").get<int>();
  d.j = j.at("j").get<int>();
  d.window = j.at("window").get<std::vector<int>>();
  return d;
}

inline json braid_descriptor_to_json(const BraidDescriptor& d) {
  return json{{"i", d.i}, {"j", d.j}, {"window", d.window}};
}

}  // namespace crystalpoly::io
