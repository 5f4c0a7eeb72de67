#include "cordial/labeling_io.hpp"

#include <sstream>

#include "json.hpp"

namespace cordial {

namespace {

using nlohmann::json;

json counts_json(const CountProfile& p, bool valid, Residue k) {
  return json{{"k", k}, {"valid", valid}, {"v_counts", p.v_counts}, {"e_counts", p.e_counts}};
}

}  // namespace

std::string labeling_json(const Tree& t, const Labeling& f) {
  const CordialityReport r = check_k_cordial(t, f);
  json doc = counts_json(r.profile, r.cordial, f.k);
  doc["labels"] = f.labels;
  return doc.dump() + "\n";
}

std::string labeling_json(const RootedPiece& piece, std::span<const Residue> root_labels,
                          const Labeling& f, Residue heavy) {
  const CountProfile p = count_profile(piece, root_labels, f);
  json doc = counts_json(p, satisfies_rooted_condition(p, heavy), f.k);
  doc["labels"] = f.labels;
  json roots = json::array();
  for (std::size_t j = 0; j < root_labels.size(); ++j)
    roots.push_back({{"vertex", j}, {"label", root_labels[j]}});
  doc["roots"] = roots;
  return doc.dump() + "\n";
}

LabelingDocument parse_labeling_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("labeling document: ") + e.what());
  }
  auto fail = [](const std::string& what) -> void {
    throw Error(ErrorCode::parse, "labeling document: " + what);
  };
  if (!doc.is_object()) fail("expected a JSON object");
  if (!doc.contains("k") || !doc["k"].is_number_unsigned()) fail("\"k\" must be a positive integer");
  if (!doc.contains("labels") || !doc["labels"].is_array()) fail("\"labels\" must be an array");
  const auto k = doc["k"].get<std::uint64_t>();
  if (k == 0 || k > UINT32_MAX) fail("\"k\" out of range");
  std::vector<Residue> labels;
  for (const auto& x : doc["labels"]) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= k) fail("labels must be residues mod k");
    labels.push_back(static_cast<Residue>(x.get<std::uint64_t>()));
  }
  LabelingDocument out{Labeling{static_cast<Residue>(k), std::move(labels)}, {}};
  if (doc.contains("roots")) {
    if (!doc["roots"].is_array()) fail("\"roots\" must be an array");
    for (const auto& r : doc["roots"]) {
      if (!r.is_object() || !r.contains("vertex") || !r.contains("label") ||
          !r["vertex"].is_number_unsigned() || !r["label"].is_number_unsigned() ||
          r["label"].get<std::uint64_t>() >= k)
        fail("each root needs a vertex and a label below k");
      out.roots.push_back({static_cast<Vertex>(r["vertex"].get<std::uint64_t>()),
                           static_cast<Residue>(r["label"].get<std::uint64_t>())});
    }
  }
  return out;
}

std::string to_dot(const Tree& t, const Labeling& f) {
  const auto weights = edge_weights(t, f);
  std::ostringstream out;
  out << "graph T {\n";
  for (Vertex v = 0; v < t.size(); ++v)
    out << "  " << v << " [label=\"v" << v << ':' << f.labels[v] << "\"];\n";
  for (std::size_t i = 0; i < t.edge_count(); ++i)
    out << "  " << t.edges()[i].u << " -- " << t.edges()[i].v << " [label=\"" << weights[i] << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cordial
