#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sphereint {

// Darts and pants are referred to by dense indices. Index order equals the
// order of the opaque string identifiers, so every tie-break downstream is a
// tie-break on identifiers.
using DartIndex = int;
using PantsIndex = int;
using EdgeIndex = int;

struct DartSpec {
  std::string id;
  std::string vertex;
};

enum class StandardStyle { theta_chain, dumbbell_chain };

std::optional<StandardStyle> parse_style(std::string_view name);
std::string_view to_string(StandardStyle style);

/// The pair (M, Sigma) of a maximal sphere system, as its dual trivalent
/// graph: one vertex per complementary pants, one edge (dart pair) per
/// system sphere.
///
/// Immutable after construction. Loops and multi-edges are allowed.
class ModelGraph {
 public:
  /// Validates and builds a graph. `pairing` maps every dart id to its
  /// opposite dart id.
  ///
  /// Throws Error with NonTrivalent, FixedDart, Disconnected, RankTooSmall,
  /// or ParseError (unknown or duplicate identifiers).
  static ModelGraph build(std::vector<std::string> pants,
                          std::vector<DartSpec> darts,
                          const std::map<std::string, std::string>& pairing);

  /// Deterministic family member of the given rank (>= 2).
  static ModelGraph standard(int rank, StandardStyle style);

  int rank() const noexcept { return pants_count() / 2 + 1; }
  int pants_count() const noexcept { return static_cast<int>(pants_.size()); }
  int dart_count() const noexcept { return static_cast<int>(darts_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }

  const std::string& pants_name(PantsIndex p) const { return pants_.at(p); }
  const std::string& dart_name(DartIndex d) const { return darts_.at(d); }
  std::optional<DartIndex> find_dart(std::string_view id) const;
  std::optional<PantsIndex> find_pants(std::string_view id) const;

  PantsIndex vertex_of(DartIndex d) const { return vertex_of_[d]; }
  DartIndex opposite(DartIndex d) const { return opposite_[d]; }
  /// Darts at a pants vertex, ascending.
  const std::array<DartIndex, 3>& darts_at(PantsIndex p) const { return at_[p]; }

  /// Edges are numbered by their smaller dart.
  EdgeIndex edge_of(DartIndex d) const { return edge_of_[d]; }
  std::array<DartIndex, 2> edge_darts(EdgeIndex e) const { return edges_[e]; }
  /// Edge named by either of its dart ids.
  std::optional<EdgeIndex> find_edge(std::string_view dart_id) const;
  std::string edge_name(EdgeIndex e) const;

  /// The pants vertex with the least identifier; root of all walks.
  PantsIndex base() const noexcept { return 0; }

  /// Reduced walk from the base to `p` along a fixed BFS spanning tree.
  /// Together these walks pick one lift of every pants (a fundamental domain).
  const std::vector<DartIndex>& lift_walk(PantsIndex p) const { return lifts_[p]; }

  bool operator==(const ModelGraph& other) const;

 private:
  ModelGraph() = default;

  std::vector<std::string> pants_;
  std::vector<std::string> darts_;
  std::vector<PantsIndex> vertex_of_;
  std::vector<DartIndex> opposite_;
  std::vector<std::array<DartIndex, 3>> at_;
  std::vector<EdgeIndex> edge_of_;
  std::vector<std::array<DartIndex, 2>> edges_;
  std::vector<std::vector<DartIndex>> lifts_;
};

nlohmann::json to_json(const ModelGraph& g);
std::string serialize(const ModelGraph& g);

/// Parses a graph document: {"pants": [..], "darts": [{id, vertex}],
/// "edges": [[dart, dart]]}. Structural problems raise ParseError with the
/// offending location; validity problems re-surface the build errors.
ModelGraph parse_graph(const nlohmann::json& doc);
ModelGraph parse_graph(std::string_view text);
inline ModelGraph parse_graph(const std::string& text) { return parse_graph(std::string_view(text)); }
inline ModelGraph parse_graph(const char* text) { return parse_graph(std::string_view(text)); }

}  // namespace sphereint
