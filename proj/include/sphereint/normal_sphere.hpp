#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sphereint/deck_cover.hpp"
#include "sphereint/model_graph.hpp"

namespace sphereint {

enum class PieceKind { disk, cylinder, pants };

std::string_view to_string(PieceKind kind);

/// The piece of a sphere inside one pants vertex, read off from the subtree
/// degree. Each piece splits its pants into two regions, numbered 0 and 1:
///
///   disk via a, free b < c   region 0 touches all of b, region 1 all of c
///   cylinder via a < b, free c   region 0 is the ball side, region 1 holds c
///   pair of pants            regions 0 and 1 are a gauge choice
///
/// Both regions touch one half of every circle-bearing boundary sphere.
struct Piece {
  PieceKind kind = PieceKind::disk;
  std::vector<DartIndex> circle_darts;  // ascending
  std::vector<DartIndex> free_darts;    // ascending

  /// Region touching the whole circle-free boundary sphere behind `dart`.
  int region_at_free(DartIndex dart) const;
};

/// An essential sphere of the universal cover in normal form: a finite
/// subtree of T (pants vertices carrying pieces, sphere vertices carrying
/// circles) plus one gluing bit per circle. A set bit ("aligned") glues
/// region k on one side of the circle to region k on the other.
///
/// The degenerate variant is a lift of a system sphere: a single sphere
/// vertex and no circles.
class NormalSphere {
 public:
  /// Validates raw data. `bits` pairs indices into `circles` with values.
  ///
  /// Throws EmptySphere, SphereLeaf, NotAlternating, DuplicateVertex,
  /// NotConnected, CircleDegreeNotTwo, MissingBit, ExtraBit, ForeignVertex.
  static NormalSphere from_data(const ModelGraph& g, std::vector<TreeVertex> pants,
                                std::vector<TreeVertex> circles,
                                const std::vector<std::pair<std::size_t, bool>>& bits);

  static NormalSphere system(const ModelGraph& g, const TreeVertex& sphere);

  bool is_system() const noexcept { return system_.has_value(); }
  const TreeVertex& system_vertex() const { return *system_; }

  /// Pants vertices, ascending.
  const std::vector<Walk>& pants() const noexcept { return pants_; }
  /// Circle (sphere) vertices, ascending.
  const std::vector<TreeVertex>& circles() const noexcept { return circles_; }
  const std::vector<bool>& aligned() const noexcept { return aligned_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

  std::optional<std::size_t> pants_index(const Walk& w) const;
  std::optional<std::size_t> circle_index(const TreeVertex& v) const;

  /// All vertices of the subtree: pants vertices then circles; for a
  /// system sphere, its sphere vertex.
  std::vector<TreeVertex> subtree() const;
  std::size_t subtree_size() const noexcept;

  int disk_count() const;
  int cylinder_count() const;
  int pants_piece_count() const;

  /// Pants-piece labels fixed by a rule rooted at the least disk: every
  /// pair-of-pants piece has its bit toward that root aligned.
  NormalSphere gauge_fixed(const ModelGraph& g) const;

  std::strong_ordering operator<=>(const NormalSphere& other) const;
  bool operator==(const NormalSphere& other) const;

 private:
  NormalSphere() = default;
  static NormalSphere assemble(const ModelGraph& g, std::vector<Walk> pants,
                               std::vector<TreeVertex> circles, std::vector<bool> aligned);

  std::optional<TreeVertex> system_;
  std::vector<Walk> pants_;
  std::vector<TreeVertex> circles_;
  std::vector<bool> aligned_;
  std::vector<Piece> pieces_;  // parallel to pants_
};

NormalSphere translate(const ModelGraph& g, const NormalSphere& s, const DeckElement& h);

int circle_count_over(const ModelGraph& g, const NormalSphere& s, EdgeIndex edge);

/// Least gauge-fixed translate among those carrying a fundamental-domain
/// pants vertex (or, for a system sphere, a fundamental-domain lift of its
/// edge).
NormalSphere canonical_rep(const ModelGraph& g, const NormalSphere& s);

/// Sphere class in M: a canonical representative.
class SphereClass {
 public:
  static SphereClass of(const ModelGraph& g, const NormalSphere& s) {
    return SphereClass(canonical_rep(g, s));
  }
  static SphereClass of_edge(const ModelGraph& g, EdgeIndex edge);

  const NormalSphere& rep() const noexcept { return rep_; }

  auto operator<=>(const SphereClass&) const = default;
  bool operator==(const SphereClass&) const = default;

 private:
  explicit SphereClass(NormalSphere rep) : rep_(std::move(rep)) {}
  NormalSphere rep_;
};

/// Sphere document: {"pants": [walk], "circles": [{"at": walk, "dart": id}],
/// "bits": [{"circle": i, "aligned": b}]} or {"system": {"at": walk, "dart": id}}.
nlohmann::json to_json(const ModelGraph& g, const NormalSphere& s);
std::string serialize(const ModelGraph& g, const NormalSphere& s);
NormalSphere parse_sphere(const ModelGraph& g, const nlohmann::json& doc);
NormalSphere parse_sphere(const ModelGraph& g, std::string_view text);
inline NormalSphere parse_sphere(const ModelGraph& g, const std::string& text) {
  return parse_sphere(g, std::string_view(text));
}
inline NormalSphere parse_sphere(const ModelGraph& g, const char* text) {
  return parse_sphere(g, std::string_view(text));
}

}  // namespace sphereint
