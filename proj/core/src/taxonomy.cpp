#include "semgraph/taxonomy.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

namespace semgraph {

char kind_suffix(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Object: return 'o';
    case ConceptKind::Material: return 'm';
    case ConceptKind::Shape: return 's';
    case ConceptKind::Color: return 'c';
  }
  throw InvalidOperationError("unreachable concept kind");
}

ConceptKind kind_from_suffix(char suffix) {
  switch (suffix) {
    case 'o': return ConceptKind::Object;
    case 'm': return ConceptKind::Material;
    case 's': return ConceptKind::Shape;
    case 'c': return ConceptKind::Color;
  }
  throw ParseError(std::string("unknown concept suffix '") + suffix + "'");
}

std::string kind_name(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Object: return "object";
    case ConceptKind::Material: return "material";
    case ConceptKind::Shape: return "shape";
    case ConceptKind::Color: return "color";
  }
  throw InvalidOperationError("unreachable concept kind");
}

ConceptKind kind_from_name(std::string_view name) {
  if (name == "object") return ConceptKind::Object;
  if (name == "material") return ConceptKind::Material;
  if (name == "shape") return ConceptKind::Shape;
  if (name == "color") return ConceptKind::Color;
  throw ParseError("unknown attribute kind '" + std::string(name) + "'");
}

std::string normalize_label(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool in_space = true;  // swallows leading whitespace
  for (char ch : raw) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back('_');
    in_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  return out;
}

std::string Concept::canonical() const {
  return name + "." + kind_suffix(kind);
}

Concept Concept::parse(const std::string& text) {
  const auto dot = text.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 2 != text.size())
    throw ParseError("concept must look like 'name.e': '" + text + "'");
  return Concept{text.substr(0, dot), kind_from_suffix(text[dot + 1])};
}

Taxonomy Taxonomy::load_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataMissingError("cannot open taxonomy file: " + file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("taxonomy file " + file.string() + ": " + e.what());
  }
  return load(doc);
}

Taxonomy Taxonomy::load(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.empty()) throw SchemaError("taxonomy document is empty");

  Taxonomy t;
  // Iterative pre-order walk; (json node, parent index) pairs.
  struct Item {
    const nlohmann::json* node;
    int parent;
    int depth;
  };
  std::vector<Item> stack{{&doc, -1, 0}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    const nlohmann::json& n = *item.node;
    if (!n.is_object() || !n.contains("name") || !n.at("name").is_string())
      throw SchemaError("taxonomy node without a string 'name'");
    const std::string display = n.at("name").get<std::string>();
    const std::string id = normalize_label(display);
    if (id.empty()) throw SchemaError("taxonomy node with a blank name");
    if (t.index_.count(id)) throw SchemaError("duplicate taxonomy id '" + id + "'");

    const int idx = static_cast<int>(t.nodes_.size());
    t.index_[id] = idx;
    Node node;
    node.id = id;
    node.display_name = display;
    node.parent = item.parent;
    node.depth = item.depth;
    t.nodes_.push_back(std::move(node));
    if (item.parent >= 0) t.nodes_[item.parent].children.push_back(idx);

    if (n.contains("children")) {
      if (!n.at("children").is_array()) throw SchemaError("taxonomy 'children' must be an array");
      const auto& kids = n.at("children");
      // Push in reverse so pre-order matches document order.
      for (auto it = kids.rbegin(); it != kids.rend(); ++it)
        stack.push_back({&*it, idx, item.depth + 1});
    }
  }

  if (t.nodes_.empty()) throw SchemaError("taxonomy document is empty");
  if (t.nodes_[0].id != "entity")
    throw SchemaError("taxonomy root must be named Entity, got '" + t.nodes_[0].display_name + "'");
  return t;
}

int Taxonomy::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw LookupError("unknown taxonomy id '" + id + "'");
  return it->second;
}

Taxonomy Taxonomy::prune(const std::vector<std::string>& subtree_roots) const {
  std::vector<bool> removed(nodes_.size(), false);
  for (const auto& id : subtree_roots) {
    const int idx = index_of(id);
    if (idx == 0) throw InvalidOperationError("cannot prune the taxonomy root");
    removed[idx] = true;
  }
  // Pre-order guarantees parents precede children.
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (removed[nodes_[i].parent]) removed[i] = true;

  Taxonomy out;
  std::vector<int> remap(nodes_.size(), -1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (removed[i]) continue;
    const Node& src = nodes_[i];
    Node node;
    node.id = src.id;
    node.display_name = src.display_name;
    node.parent = src.parent >= 0 ? remap[src.parent] : -1;
    node.depth = src.depth;
    const int idx = static_cast<int>(out.nodes_.size());
    const int parent_idx = node.parent;
    remap[i] = idx;
    out.index_[node.id] = idx;
    out.nodes_.push_back(std::move(node));
    if (parent_idx >= 0) out.nodes_[parent_idx].children.push_back(idx);
  }
  return out;
}

std::optional<std::string> Taxonomy::resolve_label(std::string_view raw) const {
  const std::string id = normalize_label(raw);
  if (index_.count(id)) return id;
  return std::nullopt;
}

std::vector<std::string> Taxonomy::ancestors(const std::string& id) const {
  int idx = index_of(id);
  std::vector<std::string> out;
  for (idx = nodes_[idx].parent; idx >= 0; idx = nodes_[idx].parent) out.push_back(nodes_[idx].id);
  return out;
}

std::optional<std::string> Taxonomy::parent(const std::string& id) const {
  const int idx = index_of(id);
  if (nodes_[idx].parent < 0) return std::nullopt;
  return nodes_[nodes_[idx].parent].id;
}

std::string Taxonomy::lowest_common_ancestor(const std::string& a, const std::string& b) const {
  int ia = index_of(a);
  int ib = index_of(b);
  while (nodes_[ia].depth > nodes_[ib].depth) ia = nodes_[ia].parent;
  while (nodes_[ib].depth > nodes_[ia].depth) ib = nodes_[ib].parent;
  while (ia != ib) {
    ia = nodes_[ia].parent;
    ib = nodes_[ib].parent;
  }
  return nodes_[ia].id;
}

const std::string& Taxonomy::display_name(const std::string& id) const {
  return nodes_[index_of(id)].display_name;
}

int Taxonomy::depth(const std::string& id) const { return nodes_[index_of(id)].depth; }

std::size_t Taxonomy::leaf_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_)
    if (node.children.empty()) ++n;
  return n;
}

int Taxonomy::max_depth() const {
  int d = 0;
  for (const auto& node : nodes_) d = std::max(d, node.depth);
  return d;
}

std::vector<std::string> Taxonomy::node_ids() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto& node : nodes_) out.push_back(node.id);
  return out;
}

AttributeDefaults AttributeDefaults::load(const nlohmann::json& doc, const Taxonomy& taxonomy) {
  if (!doc.is_array()) throw SchemaError("attribute defaults must be an array of records");
  AttributeDefaults out;
  for (const auto& rec : doc) {
    if (!rec.contains("node") || !rec.contains("kind") || !rec.contains("value"))
      throw SchemaError("attribute default record needs node/kind/value");
    const std::string node = rec.at("node").get<std::string>();
    if (!taxonomy.contains(node))
      throw SchemaError("attribute default references unknown node '" + node + "'");
    const ConceptKind kind = kind_from_name(rec.at("kind").get<std::string>());
    if (kind == ConceptKind::Object)
      throw SchemaError("attribute defaults must be material/shape/color, node '" + node + "'");
    out.add(node, kind, rec.at("value").get<std::string>());
  }
  return out;
}

AttributeDefaults AttributeDefaults::load_file(const std::filesystem::path& file,
                                               const Taxonomy& taxonomy) {
  std::ifstream in(file);
  if (!in) throw DataMissingError("cannot open attribute defaults file: " + file.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("attribute defaults file " + file.string() + ": " + e.what());
  }
  return load(doc, taxonomy);
}

void AttributeDefaults::add(const std::string& node_id, ConceptKind kind, const std::string& value) {
  by_node_[node_id].emplace_back(kind, value);
}

const std::vector<std::pair<ConceptKind, std::string>>* AttributeDefaults::for_node(
    const std::string& id) const {
  auto it = by_node_.find(id);
  return it == by_node_.end() ? nullptr : &it->second;
}

std::vector<std::pair<ConceptKind, std::string>> inherit_attributes(const Taxonomy& taxonomy,
                                                                    const AttributeDefaults& defaults,
                                                                    const std::string& id) {
  std::vector<std::string> chain{id};
  for (auto& a : taxonomy.ancestors(id)) chain.push_back(a);

  std::vector<std::pair<ConceptKind, std::string>> out;
  auto has_kind = [&out](ConceptKind k) {
    return std::any_of(out.begin(), out.end(), [k](const auto& e) { return e.first == k; });
  };
  for (const auto& node : chain) {
    const auto* entries = defaults.for_node(node);
    if (!entries) continue;
    for (const auto& [kind, value] : *entries)
      if (!has_kind(kind)) out.emplace_back(kind, value);
  }
  // Deterministic order: material, shape, color.
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return static_cast<int>(a.first) < static_cast<int>(b.first); });
  return out;
}

}  // namespace semgraph
