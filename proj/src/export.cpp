#include "mposet/export.hpp"

#include <sstream>

#include "json.hpp"

#include "mposet/error.hpp"
#include "mposet/poset.hpp"

namespace mposet {

namespace {

using Json = nlohmann::ordered_json;

std::string vec_text(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(v[k]);
  }
  return out + ")";
}

}  // namespace

ExportDocument make_export(const MPoset& m) {
  ExportDocument doc;
  doc.omega.assign(m.omega().word().begin(), m.omega().word().end());
  doc.elements = m.elements();
  doc.covers = hasse_edges(m.order());
  if (const auto b2 = find_B2(m.order())) {
    doc.b2_free = false;
    ExportWitness w{to_string(b2->kind), {}};
    for (auto e : b2->elements) w.labels.push_back(m.elements()[e].label);
    doc.witness = std::move(w);
  }
  return doc;
}

std::string to_json(const ExportDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["omega"] = doc.omega;
  j["elements"] = Json::array();
  for (const auto& e : doc.elements) {
    j["elements"].push_back({{"i", e.label.i}, {"x", e.label.x}, {"vec", e.vec}});
  }
  j["covers"] = Json::array();
  for (auto [lo, hi] : doc.covers) j["covers"].push_back({lo, hi});
  j["flags"] = {{"b2_free", doc.b2_free}};
  if (doc.witness) {
    Json labels = Json::array();
    for (const auto& l : doc.witness->labels) labels.push_back({{"i", l.i}, {"x", l.x}});
    j["witness"] = {{"kind", doc.witness->kind}, {"labels", labels}};
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

ExportDocument export_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ExportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.omega = j.at("omega").get<std::vector<int>>();
    for (const auto& e : j.at("elements")) {
      doc.elements.push_back(
          {{e.at("i").get<int>(), e.at("x").get<int>()}, e.at("vec").get<std::vector<int>>()});
    }
    for (const auto& c : j.at("covers")) {
      doc.covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    }
    doc.b2_free = j.at("flags").at("b2_free").get<bool>();
    if (const auto& w = j.at("witness"); !w.is_null()) {
      ExportWitness witness{w.at("kind").get<std::string>(), {}};
      for (const auto& l : w.at("labels")) {
        witness.labels.push_back({l.at("i").get<int>(), l.at("x").get<int>()});
      }
      doc.witness = std::move(witness);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed export document: ") + e.what());
  }
}

std::string to_dot(const MPoset& m) {
  std::ostringstream os;
  os << "digraph M {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& e = m.elements()[k];
    os << "  n" << k << " [label=\"m[" << e.label.i << ',' << e.label.x
       << "]=" << vec_text(e.vec) << "\"];\n";
  }
  for (auto [lo, hi] : hasse_edges(m.order())) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mposet
