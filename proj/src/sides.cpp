#include "sphereint/sides.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "sphereint/disjoint_set.hpp"
#include "sphereint/errors.hpp"

namespace sphereint {

std::optional<int> SlotLabeling::sign_of(const Slot& s) const {
  auto it = std::lower_bound(slots.begin(), slots.end(), s);
  if (it == slots.end() || *it != s) return std::nullopt;
  return sign[static_cast<std::size_t>(it - slots.begin())];
}

bool SlotLabeling::equal_up_to_flip(const SlotLabeling& other) const {
  if (slots != other.slots) return false;
  if (sign == other.sign) return true;
  for (std::size_t i = 0; i < sign.size(); ++i)
    if (sign[i] != -other.sign[i]) return false;
  return true;
}

std::vector<Walk> anchors(const ModelGraph& g, const NormalSphere& s) {
  if (!s.is_system()) return s.pants();
  auto [a, b] = endpoints(g, s.system_vertex());
  return {std::move(a), std::move(b)};
}

Carrier minimal_carrier(const ModelGraph& g, const NormalSphere& a, const NormalSphere& b) {
  std::vector<Walk> all = anchors(g, a);
  for (auto& w : anchors(g, b)) all.push_back(std::move(w));
  const TreeVertex root = TreeVertex::pants(all.front());
  std::set<Walk> out;
  for (const auto& w : all)
    for (auto& v : tree_path(g, root, TreeVertex::pants(w)))
      if (v.is_pants()) out.insert(std::move(v.walk));
  return {out.begin(), out.end()};
}

namespace {

bool contains(const Carrier& carrier, const Walk& w) {
  return std::binary_search(carrier.begin(), carrier.end(), w);
}

std::size_t index_in(const Carrier& carrier, const Walk& w) {
  return static_cast<std::size_t>(std::lower_bound(carrier.begin(), carrier.end(), w) - carrier.begin());
}

Carrier checked_carrier(const ModelGraph& g, const NormalSphere& s, Carrier carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (carrier.empty()) throw Error(ErrorKind::BadCarrier, "empty carrier");
  for (const auto& w : carrier) check_walk(g, w);
  for (const auto& w : anchors(g, s))
    if (!contains(carrier, w))
      throw Error(ErrorKind::BadCarrier, "carrier misses pants vertex [" + word_to_string(g, w) + "]");
  std::vector<bool> seen(carrier.size(), false);
  std::queue<std::size_t> queue;
  seen[0] = true;
  queue.push(0);
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop();
    for (DartIndex d : g.darts_at(end_vertex(g, carrier[i]))) {
      Walk q = step(g, carrier[i], d);
      if (!contains(carrier, q)) continue;
      const std::size_t j = index_in(carrier, q);
      if (seen[j]) continue;
      seen[j] = true;
      ++reached;
      queue.push(j);
    }
  }
  if (reached != carrier.size()) throw Error(ErrorKind::BadCarrier, "carrier is not connected");
  return carrier;
}

}  // namespace

std::vector<Slot> slots_of(const ModelGraph& g, const Carrier& carrier) {
  std::vector<Slot> out;
  for (const auto& p : carrier)
    for (DartIndex d : g.darts_at(end_vertex(g, p)))
      if (!contains(carrier, step(g, p, d))) out.push_back({p, d});
  std::sort(out.begin(), out.end());
  return out;
}

SlotLabeling side_labels(const ModelGraph& g, const NormalSphere& s, const Carrier& input) {
  const Carrier carrier = checked_carrier(g, s, input);
  std::vector<std::size_t> offset;
  std::vector<std::optional<std::size_t>> piece_of;
  std::size_t nodes = 0;
  for (const auto& p : carrier) {
    offset.push_back(nodes);
    piece_of.push_back(s.is_system() ? std::nullopt : s.pants_index(p));
    nodes += piece_of.back() ? 2 : 1;
  }
  // Region of carrier vertex i touching the whole boundary sphere behind d.
  auto free_region = [&](std::size_t i, DartIndex d) {
    return offset[i] + (piece_of[i] ? s.pieces()[*piece_of[i]].region_at_free(d) : 0);
  };

  DisjointSet regions(nodes);
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    for (DartIndex d : g.darts_at(end_vertex(g, carrier[i]))) {
      const TreeVertex sv = sphere_vertex(g, carrier[i], d);
      if (sv.walk != carrier[i]) continue;  // visit each sphere vertex from its parent
      const Walk q = step(g, carrier[i], d);
      if (!contains(carrier, q)) continue;
      const std::size_t j = index_in(carrier, q);
      if (s.is_system()) {
        if (sv != s.system_vertex()) regions.unite(offset[i], offset[j]);
      } else if (auto c = s.circle_index(sv)) {
        const bool aligned = s.aligned()[*c];
        for (std::size_t k = 0; k < 2; ++k) regions.unite(offset[i] + k, offset[j] + (aligned ? k : 1 - k));
      } else {
        regions.unite(free_region(i, d), free_region(j, g.opposite(d)));
      }
    }
  }
  if (regions.count() != 2)
    throw Error(ErrorKind::InternalSplit,
                "complement has " + std::to_string(regions.count()) + " region components");

  std::size_t reference = 0;
  if (s.is_system()) {
    reference = offset[index_in(carrier, s.system_vertex().walk)];
  } else {
    std::size_t k = 0;
    while (s.pieces()[k].free_darts.empty()) ++k;
    reference = free_region(index_in(carrier, s.pants()[k]), s.pieces()[k].free_darts.front());
  }
  const std::size_t plus = regions.find(reference);

  SlotLabeling out;
  out.slots = slots_of(g, carrier);
  for (const auto& slot : out.slots)
    out.sign.push_back(regions.find(free_region(index_in(carrier, slot.at), slot.dart)) == plus ? 1 : -1);
  return out;
}

SlotLabeling side_labels_oracle(const ModelGraph& g, const NormalSphere& s, const Carrier& input) {
  const Carrier carrier = checked_carrier(g, s, input);
  SlotLabeling out;
  out.slots = slots_of(g, carrier);

  if (s.is_system()) {
    const TreeVertex parent_side = TreeVertex::pants(s.system_vertex().walk);
    for (const auto& slot : out.slots) {
      auto path = tree_path(g, TreeVertex::pants(slot.at), parent_side);
      const bool beyond = std::find(path.begin(), path.end(), s.system_vertex()) != path.end();
      out.sign.push_back(beyond ? -1 : 1);
    }
    return out;
  }

  // Co-orient the regions piece by piece from the least pants vertex.
  std::vector<std::array<int, 2>> sign(s.pants().size(), {0, 0});
  sign[0] = {1, -1};
  std::queue<std::size_t> queue;
  queue.push(0);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop();
    for (DartIndex d : s.pieces()[i].circle_darts) {
      const std::size_t j = *s.pants_index(step(g, s.pants()[i], d));
      if (sign[j][0] != 0) continue;
      const bool aligned = s.aligned()[*s.circle_index(sphere_vertex(g, s.pants()[i], d))];
      sign[j] = aligned ? sign[i] : std::array<int, 2>{sign[i][1], sign[i][0]};
      queue.push(j);
    }
  }

  const TreeVertex root = TreeVertex::pants(s.pants()[0]);
  for (const auto& slot : out.slots) {
    Walk from = slot.at;
    DartIndex toward = slot.dart;
    if (!s.pants_index(from)) {
      // Walk toward the sphere; the first piece met is where this slot's
      // ends leave the sphere's subtree.
      Walk prev;
      for (auto& v : tree_path(g, TreeVertex::pants(slot.at), root)) {
        if (!v.is_pants()) continue;
        if (s.pants_index(v.walk)) {
          for (DartIndex d : g.darts_at(end_vertex(g, v.walk)))
            if (step(g, v.walk, d) == prev) toward = d;
          from = std::move(v.walk);
          break;
        }
        prev = std::move(v.walk);
      }
    }
    const std::size_t i = *s.pants_index(from);
    out.sign.push_back(sign[i][s.pieces()[i].region_at_free(toward)]);
  }
  return out;
}

namespace {

CrossingReport four_corners(const SlotLabeling& a, const SlotLabeling& b) {
  CrossingReport report;
  for (std::size_t i = 0; i < a.slots.size(); ++i) {
    const std::size_t corner = (a.sign[i] > 0 ? 0 : 2) + (b.sign[i] > 0 ? 0 : 1);
    if (!report.corners[corner]) report.corners[corner] = a.slots[i];
  }
  report.crosses = std::all_of(report.corners.begin(), report.corners.end(),
                               [](const auto& c) { return c.has_value(); });
  return report;
}

}  // namespace

CrossingReport crossing(const ModelGraph& g, const NormalSphere& a, const NormalSphere& b) {
  const Carrier carrier = minimal_carrier(g, a, b);
  return four_corners(side_labels(g, a, carrier), side_labels(g, b, carrier));
}

CrossingReport crossing_oracle(const ModelGraph& g, const NormalSphere& a, const NormalSphere& b) {
  const Carrier carrier = minimal_carrier(g, a, b);
  return four_corners(side_labels_oracle(g, a, carrier), side_labels_oracle(g, b, carrier));
}

std::vector<DeckElement> overlap_candidates(const ModelGraph& g, const NormalSphere& a,
                                            const NormalSphere& b) {
  std::set<DeckElement> out;
  const auto ta = a.subtree();
  const auto tb = b.subtree();
  for (const auto& u : ta)
    for (const auto& w : tb)
      if (auto h = transporter(g, u, w)) out.insert(std::move(*h));
  return {out.begin(), out.end()};
}

IntersectionResult algebraic_intersection(const ModelGraph& g, const NormalSphere& a,
                                          const NormalSphere& b) {
  IntersectionResult result;
  const auto candidates = overlap_candidates(g, a, b);
  result.candidates = candidates.size();
  for (const auto& h : candidates)
    if (crossing(g, a, translate(g, b, h)).crosses) result.witnesses.push_back(h);
  result.count = result.witnesses.size();
  return result;
}

IntersectionResult algebraic_intersection(const ModelGraph& g, const SphereClass& a,
                                          const SphereClass& b) {
  return algebraic_intersection(g, a.rep(), b.rep());
}

std::size_t intersection_number(const ModelGraph& g, const SphereClass& a, const SphereClass& b) {
  return algebraic_intersection(g, a, b).count;
}

EdgeCheck theorem_row(const ModelGraph& g, const SphereClass& a, EdgeIndex edge) {
  EdgeCheck row;
  row.edge = edge;
  row.circles = circle_count_over(g, a.rep(), edge);
  row.algebraic = algebraic_intersection(g, a, SphereClass::of_edge(g, edge)).count;
  return row;
}

bool theorem_check(const ModelGraph& g, const SphereClass& a, EdgeIndex edge) {
  return theorem_row(g, a, edge).equal();
}

bool is_self_disjoint(const ModelGraph& g, const NormalSphere& s) {
  for (const auto& h : overlap_candidates(g, s, s))
    if (crossing_oracle(g, s, translate(g, s, h)).crosses) return false;
  return true;
}

nlohmann::json to_json(const ModelGraph& g, const Slot& slot) {
  return {{"at", walk_to_json(g, slot.at)}, {"dart", g.dart_name(slot.dart)}};
}

nlohmann::json to_json(const ModelGraph& g, const CrossingReport& report) {
  static constexpr const char* names[] = {"++", "+-", "-+", "--"};
  nlohmann::json corners = nlohmann::json::object();
  for (std::size_t i = 0; i < 4; ++i)
    corners[names[i]] = report.corners[i] ? to_json(g, *report.corners[i]) : nlohmann::json(nullptr);
  return {{"crosses", report.crosses}, {"corners", corners}};
}

nlohmann::json to_json(const ModelGraph& g, const IntersectionResult& result) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& h : result.witnesses) witnesses.push_back(walk_to_json(g, h.word));
  return {{"count", result.count}, {"candidates", result.candidates}, {"witnesses", witnesses}};
}

}  // namespace sphereint
