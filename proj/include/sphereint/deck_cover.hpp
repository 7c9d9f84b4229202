#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphereint/model_graph.hpp"

namespace sphereint {

/// Dart sequence starting at the base pants vertex. Tree vertices and deck
/// elements are both encoded as reduced walks.
using Walk = std::vector<DartIndex>;

/// A vertex of the dual tree T of the universal cover.
///
/// A pants vertex is the endpoint of its reduced walk from the base. A sphere
/// vertex is stored as (walk, dart): the edge of T leaving the pants vertex
/// `walk` through `dart`. Of the two encodings (w, d) and (w.d, opposite(d))
/// the canonical one is the lexicographically smaller, i.e. the one whose
/// walk is the parent (closer to the base).
struct TreeVertex {
  enum class Kind { pants, sphere };

  Kind kind = Kind::pants;
  Walk walk;
  DartIndex dart = -1;

  static TreeVertex pants(Walk w) { return {Kind::pants, std::move(w), -1}; }

  bool is_pants() const noexcept { return kind == Kind::pants; }
  bool is_sphere() const noexcept { return kind == Kind::sphere; }

  auto operator<=>(const TreeVertex&) const = default;
  bool operator==(const TreeVertex&) const = default;
};

/// Deck transformation: a reduced closed walk at the base.
struct DeckElement {
  Walk word;

  static DeckElement identity() { return {}; }
  bool is_identity() const noexcept { return word.empty(); }

  auto operator<=>(const DeckElement&) const = default;
  bool operator==(const DeckElement&) const = default;
};

// Walk arithmetic.
PantsIndex end_vertex(const ModelGraph& g, const Walk& w);
Walk reduce(const ModelGraph& g, Walk w);
Walk inverse_path(const ModelGraph& g, const Walk& w);
bool is_reduced_walk(const ModelGraph& g, const Walk& w);

/// Throws ForeignVertex unless `w` is a walk from the base in `g`.
void check_walk(const ModelGraph& g, const Walk& w);

/// Canonical sphere vertex for the edge leaving pants vertex `w` via `dart`.
TreeVertex sphere_vertex(const ModelGraph& g, const Walk& w, DartIndex dart);

/// Throws ForeignVertex unless `v` is a canonical vertex over `g`.
void check_vertex(const ModelGraph& g, const TreeVertex& v);

/// Base cell: the pants index of a pants vertex or the edge index of a
/// sphere vertex. Deck transformations preserve it.
int base_cell(const ModelGraph& g, const TreeVertex& v);

/// The two pants endpoints of a sphere vertex, parent first.
std::pair<Walk, Walk> endpoints(const ModelGraph& g, const TreeVertex& sphere);

/// Pants neighbor of pants vertex `w` across `dart`.
Walk step(const ModelGraph& g, const Walk& w, DartIndex dart);

/// Pants vertex -> its 3 sphere vertices in dart order; sphere vertex -> its
/// 2 pants endpoints.
std::vector<TreeVertex> neighbors(const ModelGraph& g, const TreeVertex& v);

DeckElement make_deck_element(const ModelGraph& g, Walk word);
DeckElement compose(const ModelGraph& g, const DeckElement& a, const DeckElement& b);
DeckElement inverse(const ModelGraph& g, const DeckElement& a);

TreeVertex act(const ModelGraph& g, const DeckElement& h, const TreeVertex& v);
Walk act(const ModelGraph& g, const DeckElement& h, const Walk& pants_walk);

/// The unique deck element taking `w` to `u`, if they lie over the same
/// base cell.
std::optional<DeckElement> transporter(const ModelGraph& g, const TreeVertex& u,
                                       const TreeVertex& w);

std::optional<TreeVertex> parent(const ModelGraph& g, const TreeVertex& v);
int depth(const TreeVertex& v);

/// Unique reduced path in T from `u` to `v`, endpoints included.
std::vector<TreeVertex> tree_path(const ModelGraph& g, const TreeVertex& u,
                                  const TreeVertex& v);

// Dart-id encodings used by the document formats.
nlohmann::json walk_to_json(const ModelGraph& g, const Walk& w);
Walk walk_from_json(const ModelGraph& g, const nlohmann::json& doc, const std::string& where);
std::string word_to_string(const ModelGraph& g, const Walk& w);
/// Comma-separated dart ids; empty string is the identity.
DeckElement parse_deck_word(const ModelGraph& g, const std::string& text);

}  // namespace sphereint
