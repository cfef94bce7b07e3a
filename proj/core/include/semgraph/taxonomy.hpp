#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "semgraph/errors.hpp"

namespace semgraph {

/// Semantic group of a concept; rendered as the canonical suffix.
enum class ConceptKind { Object, Material, Shape, Color };

char kind_suffix(ConceptKind kind);           // 'o' / 'm' / 's' / 'c'
ConceptKind kind_from_suffix(char suffix);    // throws ParseError on anything else
std::string kind_name(ConceptKind kind);      // "object" / "material" / "shape" / "color"
ConceptKind kind_from_name(std::string_view name);

/// Lowercases, trims, and joins internal whitespace runs with underscores.
std::string normalize_label(std::string_view raw);

/// A suffix-typed semantic token, canonically "name.o" / "name.m" / ".s" / ".c".
struct Concept {
  std::string name;
  ConceptKind kind = ConceptKind::Object;

  std::string canonical() const;
  static Concept parse(const std::string& text);

  auto operator<=>(const Concept&) const = default;
};

/// Immutable Entity-rooted class tree. Node ids are normalized labels and
/// unique across the tree.
class Taxonomy {
 public:
  static Taxonomy load(const nlohmann::json& doc);
  static Taxonomy load_file(const std::filesystem::path& file);

  /// Copy with each listed subtree removed. Unknown ids are an error; so is
  /// pruning the root.
  Taxonomy prune(const std::vector<std::string>& subtree_roots) const;

  bool contains(const std::string& id) const { return index_.count(id) > 0; }
  std::optional<std::string> resolve_label(std::string_view raw) const;

  /// Path from the parent up to "entity"; empty for the root itself.
  std::vector<std::string> ancestors(const std::string& id) const;
  std::optional<std::string> parent(const std::string& id) const;
  std::string lowest_common_ancestor(const std::string& a, const std::string& b) const;

  const std::string& display_name(const std::string& id) const;
  int depth(const std::string& id) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const;
  int max_depth() const;
  /// Ids in document (pre-order) order.
  std::vector<std::string> node_ids() const;

 private:
  struct Node {
    std::string id;
    std::string display_name;
    int parent = -1;
    std::vector<int> children;
    int depth = 0;
  };

  int index_of(const std::string& id) const;

  std::vector<Node> nodes_;  // pre-order; nodes_[0] is the root
  std::unordered_map<std::string, int> index_;
};

/// Per-node attribute defaults (material/shape/color), inherited downward.
class AttributeDefaults {
 public:
  AttributeDefaults() = default;

  /// Loads records {"node": id, "kind": ..., "value": ...}; every node id
  /// must exist in the taxonomy.
  static AttributeDefaults load(const nlohmann::json& doc, const Taxonomy& taxonomy);
  static AttributeDefaults load_file(const std::filesystem::path& file, const Taxonomy& taxonomy);

  void add(const std::string& node_id, ConceptKind kind, const std::string& value);
  const std::vector<std::pair<ConceptKind, std::string>>* for_node(const std::string& id) const;
  bool empty() const { return by_node_.empty(); }

 private:
  std::unordered_map<std::string, std::vector<std::pair<ConceptKind, std::string>>> by_node_;
};

/// Walks from the node toward the root and takes, per attribute kind, the
/// entry of the nearest node that defines that kind (the node itself first).
std::vector<std::pair<ConceptKind, std::string>> inherit_attributes(const Taxonomy& taxonomy,
                                                                    const AttributeDefaults& defaults,
                                                                    const std::string& id);

}  // namespace semgraph
