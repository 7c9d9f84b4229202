#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "sphereint/deck_cover.hpp"
#include "sphereint/normal_sphere.hpp"

namespace sphereint {

/// Departure slot of a finite connected set of pants vertices: a pants
/// vertex of the set together with a dart whose neighbor lies outside it.
/// Every end of T leaves the set through exactly one slot, and the branch
/// beyond a slot is infinite.
struct Slot {
  Walk at;
  DartIndex dart = -1;

  auto operator<=>(const Slot&) const = default;
  bool operator==(const Slot&) const = default;
};

/// Side (+1 / -1) of every slot of a carrier, slots ascending.
struct SlotLabeling {
  std::vector<Slot> slots;
  std::vector<int> sign;

  std::optional<int> sign_of(const Slot& s) const;
  /// Same partition, possibly with the two sides swapped.
  bool equal_up_to_flip(const SlotLabeling& other) const;
};

/// Ascending set of pants walks, connected in T.
using Carrier = std::vector<Walk>;

/// Pants vertices a sphere's labeling must see: its pieces, or both ends of
/// a system sphere.
std::vector<Walk> anchors(const ModelGraph& g, const NormalSphere& s);

/// Least connected pants set containing the anchors of both spheres.
Carrier minimal_carrier(const ModelGraph& g, const NormalSphere& a, const NormalSphere& b);

std::vector<Slot> slots_of(const ModelGraph& g, const Carrier& carrier);

/// End partition of `s` over `carrier`, computed by merging the regions of
/// every pants vertex across sphere vertices (disjoint sets).
///
/// The + side holds the region behind the least free slot of the sphere
/// (for a system sphere, the side of its parent pants vertex), so labels do
/// not depend on the carrier.
///
/// Throws BadCarrier if the carrier is not connected or misses an anchor;
/// InternalSplit if the region graph does not have exactly two components.
SlotLabeling side_labels(const ModelGraph& g, const NormalSphere& s, const Carrier& carrier);

/// Independent route to the same partition: rooted sign propagation across
/// the sphere's own circles, then each outside slot inherits the sign of the
/// sphere slot it lies beyond.
SlotLabeling side_labels_oracle(const ModelGraph& g, const NormalSphere& s,
                                const Carrier& carrier);

struct CrossingReport {
  bool crosses = false;
  /// Witness slot per corner, ordered (+,+), (+,-), (-,+), (-,-) with the
  /// first sign from A and the second from B.
  std::array<std::optional<Slot>, 4> corners;
};

/// Four-corner test on the ends of T.
CrossingReport crossing(const ModelGraph& g, const NormalSphere& a, const NormalSphere& b);
CrossingReport crossing_oracle(const ModelGraph& g, const NormalSphere& a, const NormalSphere& b);

struct IntersectionResult {
  std::size_t count = 0;
  /// Deck elements h with A crossing hB, ascending.
  std::vector<DeckElement> witnesses;
  /// Distinct translates examined; bounded by |t_A| * |t_B|.
  std::size_t candidates = 0;
};

/// Deck elements h for which hB's subtree meets A's subtree, ascending.
/// Translates with disjoint subtrees never cross.
std::vector<DeckElement> overlap_candidates(const ModelGraph& g, const NormalSphere& a,
                                            const NormalSphere& b);

/// Number of translates of B crossing A.
IntersectionResult algebraic_intersection(const ModelGraph& g, const NormalSphere& a,
                                          const NormalSphere& b);
IntersectionResult algebraic_intersection(const ModelGraph& g, const SphereClass& a,
                                          const SphereClass& b);

/// Geometric intersection number, obtained as the translate count.
std::size_t intersection_number(const ModelGraph& g, const SphereClass& a, const SphereClass& b);

struct EdgeCheck {
  EdgeIndex edge = 0;
  int circles = 0;
  std::size_t algebraic = 0;
  bool equal() const noexcept { return static_cast<std::size_t>(circles) == algebraic; }
};

EdgeCheck theorem_row(const ModelGraph& g, const SphereClass& a, EdgeIndex edge);
/// Circle count over `edge` equals the translate count against that edge's
/// system class.
bool theorem_check(const ModelGraph& g, const SphereClass& a, EdgeIndex edge);

/// No translate of `s` crosses `s`, i.e. it projects to an embedded sphere.
/// Uses the propagation route.
bool is_self_disjoint(const ModelGraph& g, const NormalSphere& s);

nlohmann::json to_json(const ModelGraph& g, const Slot& slot);
nlohmann::json to_json(const ModelGraph& g, const CrossingReport& report);
nlohmann::json to_json(const ModelGraph& g, const IntersectionResult& result);

}  // namespace sphereint
