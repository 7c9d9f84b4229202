#include "sphereint/normal_sphere.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "sphereint/disjoint_set.hpp"
#include "sphereint/errors.hpp"

namespace sphereint {

std::string_view to_string(PieceKind kind) {
  switch (kind) {
    case PieceKind::disk: return "disk";
    case PieceKind::cylinder: return "cylinder";
    case PieceKind::pants: return "pants";
  }
  return "?";
}

int Piece::region_at_free(DartIndex dart) const {
  switch (kind) {
    case PieceKind::disk: return dart == free_darts[0] ? 0 : 1;
    case PieceKind::cylinder: return 1;
    case PieceKind::pants: break;
  }
  throw Error(ErrorKind::InternalSplit, "pair of pants piece has no free boundary sphere");
}

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace

NormalSphere NormalSphere::from_data(const ModelGraph& g, std::vector<TreeVertex> pants,
                                     std::vector<TreeVertex> circles,
                                     const std::vector<std::pair<std::size_t, bool>>& bits) {
  for (const auto& v : pants)
    if (!v.is_pants()) fail(ErrorKind::NotAlternating, "sphere vertex listed as a piece");
  for (const auto& v : circles)
    if (!v.is_sphere()) fail(ErrorKind::NotAlternating, "pants vertex listed as a circle");
  for (const auto& v : pants) check_vertex(g, v);
  for (const auto& v : circles) check_vertex(g, v);

  std::vector<Walk> walks;
  for (auto& v : pants) walks.push_back(std::move(v.walk));
  std::sort(walks.begin(), walks.end());
  if (std::adjacent_find(walks.begin(), walks.end()) != walks.end())
    fail(ErrorKind::DuplicateVertex, "pants vertex listed twice");
  {
    auto sorted = circles;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::DuplicateVertex, "circle listed twice");
  }
  if (walks.empty() && circles.empty()) fail(ErrorKind::EmptySphere, "no pieces and no circles");
  if (walks.empty()) fail(ErrorKind::SphereLeaf, "circles without pieces");
  if (circles.empty()) fail(ErrorKind::EmptySphere, "a single piece without circles is not a sphere");

  auto find = [&](const Walk& w) -> std::optional<std::size_t> {
    auto it = std::lower_bound(walks.begin(), walks.end(), w);
    if (it == walks.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - walks.begin());
  };
  DisjointSet components(walks.size());
  for (const auto& c : circles) {
    auto [a, b] = endpoints(g, c);
    auto ia = find(a);
    auto ib = find(b);
    if (!ia || !ib)
      fail(ErrorKind::CircleDegreeNotTwo,
           "circle at [" + word_to_string(g, c.walk) + "]/" + g.dart_name(c.dart) +
               " lacks a piece on one side");
    components.unite(*ia, *ib);
  }
  if (components.count() != 1) fail(ErrorKind::NotConnected, "pieces do not form a connected subtree");

  std::vector<std::optional<bool>> given(circles.size());
  for (const auto& [index, value] : bits) {
    if (index >= circles.size() || given[index])
      fail(ErrorKind::ExtraBit, "bit for circle " + std::to_string(index) + " is out of range or repeated");
    given[index] = value;
  }
  std::vector<bool> aligned;
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (!given[i]) fail(ErrorKind::MissingBit, "circle " + std::to_string(i) + " has no gluing bit");
    aligned.push_back(*given[i]);
  }
  return assemble(g, std::move(walks), std::move(circles), std::move(aligned));
}

NormalSphere NormalSphere::assemble(const ModelGraph& g, std::vector<Walk> pants,
                                    std::vector<TreeVertex> circles, std::vector<bool> aligned) {
  NormalSphere s;
  std::sort(pants.begin(), pants.end());
  s.pants_ = std::move(pants);
  std::vector<std::size_t> order(circles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return circles[a] < circles[b]; });
  for (std::size_t i : order) {
    s.circles_.push_back(std::move(circles[i]));
    s.aligned_.push_back(aligned[i]);
  }
  for (const auto& p : s.pants_) {
    Piece piece;
    for (DartIndex d : g.darts_at(end_vertex(g, p))) {
      if (s.pants_index(step(g, p, d)))
        piece.circle_darts.push_back(d);
      else
        piece.free_darts.push_back(d);
    }
    piece.kind = piece.circle_darts.size() == 1   ? PieceKind::disk
                 : piece.circle_darts.size() == 2 ? PieceKind::cylinder
                                                  : PieceKind::pants;
    s.pieces_.push_back(std::move(piece));
  }
  return s;
}

NormalSphere NormalSphere::system(const ModelGraph& g, const TreeVertex& sphere) {
  if (!sphere.is_sphere()) fail(ErrorKind::NotAlternating, "system sphere must sit at a sphere vertex");
  check_vertex(g, sphere);
  NormalSphere s;
  s.system_ = sphere;
  return s;
}

std::strong_ordering NormalSphere::operator<=>(const NormalSphere& other) const {
  return std::tie(system_, pants_, circles_, aligned_) <=>
         std::tie(other.system_, other.pants_, other.circles_, other.aligned_);
}

bool NormalSphere::operator==(const NormalSphere& other) const {
  return system_ == other.system_ && pants_ == other.pants_ && circles_ == other.circles_ &&
         aligned_ == other.aligned_;
}

std::optional<std::size_t> NormalSphere::pants_index(const Walk& w) const {
  auto it = std::lower_bound(pants_.begin(), pants_.end(), w);
  if (it == pants_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - pants_.begin());
}

std::optional<std::size_t> NormalSphere::circle_index(const TreeVertex& v) const {
  auto it = std::lower_bound(circles_.begin(), circles_.end(), v);
  if (it == circles_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - circles_.begin());
}

std::vector<TreeVertex> NormalSphere::subtree() const {
  if (system_) return {*system_};
  std::vector<TreeVertex> out;
  for (const auto& p : pants_) out.push_back(TreeVertex::pants(p));
  out.insert(out.end(), circles_.begin(), circles_.end());
  return out;
}

std::size_t NormalSphere::subtree_size() const noexcept {
  return system_ ? 1 : pants_.size() + circles_.size();
}

namespace {

int count_kind(const std::vector<Piece>& pieces, PieceKind kind) {
  return static_cast<int>(std::count_if(pieces.begin(), pieces.end(),
                                        [&](const Piece& p) { return p.kind == kind; }));
}

}  // namespace

int NormalSphere::disk_count() const { return count_kind(pieces_, PieceKind::disk); }
int NormalSphere::cylinder_count() const { return count_kind(pieces_, PieceKind::cylinder); }
int NormalSphere::pants_piece_count() const { return count_kind(pieces_, PieceKind::pants); }

NormalSphere NormalSphere::gauge_fixed(const ModelGraph& g) const {
  if (system_ || pants_piece_count() == 0) return *this;
  NormalSphere out = *this;
  std::size_t root = 0;
  while (pieces_[root].kind != PieceKind::disk) ++root;
  std::vector<bool> seen(pants_.size(), false);
  std::queue<std::size_t> queue;
  seen[root] = true;
  queue.push(root);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop();
    for (DartIndex d : pieces_[i].circle_darts) {
      const std::size_t j = *pants_index(step(g, pants_[i], d));
      if (seen[j]) continue;
      seen[j] = true;
      queue.push(j);
      const std::size_t c = *circle_index(sphere_vertex(g, pants_[i], d));
      if (pieces_[j].kind != PieceKind::pants || out.aligned_[c]) continue;
      for (DartIndex e : pieces_[j].circle_darts) {
        const std::size_t k = *circle_index(sphere_vertex(g, pants_[j], e));
        out.aligned_[k] = !out.aligned_[k];
      }
    }
  }
  return out;
}

NormalSphere translate(const ModelGraph& g, const NormalSphere& s, const DeckElement& h) {
  if (s.is_system()) return NormalSphere::system(g, act(g, h, s.system_vertex()));
  std::vector<TreeVertex> pants;
  for (const auto& p : s.pants()) pants.push_back(TreeVertex::pants(act(g, h, p)));
  std::vector<TreeVertex> circles;
  std::vector<std::pair<std::size_t, bool>> bits;
  for (std::size_t i = 0; i < s.circles().size(); ++i) {
    circles.push_back(act(g, h, s.circles()[i]));
    bits.emplace_back(i, s.aligned()[i]);
  }
  return NormalSphere::from_data(g, std::move(pants), std::move(circles), bits);
}

int circle_count_over(const ModelGraph& g, const NormalSphere& s, EdgeIndex edge) {
  return static_cast<int>(std::count_if(s.circles().begin(), s.circles().end(),
                                        [&](const TreeVertex& c) { return g.edge_of(c.dart) == edge; }));
}

NormalSphere canonical_rep(const ModelGraph& g, const NormalSphere& s) {
  std::optional<NormalSphere> best;
  auto offer = [&](NormalSphere candidate) {
    if (!best || candidate < *best) best = std::move(candidate);
  };
  if (s.is_system()) {
    const TreeVertex& w = s.system_vertex();
    for (DartIndex x : g.edge_darts(g.edge_of(w.dart))) {
      TreeVertex target = sphere_vertex(g, g.lift_walk(g.vertex_of(x)), x);
      offer(translate(g, s, *transporter(g, target, w)));
    }
    return *best;
  }
  for (const auto& p : s.pants()) {
    const TreeVertex lift = TreeVertex::pants(g.lift_walk(end_vertex(g, p)));
    offer(translate(g, s, *transporter(g, lift, TreeVertex::pants(p))).gauge_fixed(g));
  }
  return *best;
}

SphereClass SphereClass::of_edge(const ModelGraph& g, EdgeIndex edge) {
  const DartIndex x = g.edge_darts(edge)[0];
  return of(g, NormalSphere::system(g, sphere_vertex(g, g.lift_walk(g.vertex_of(x)), x)));
}

nlohmann::json to_json(const ModelGraph& g, const NormalSphere& s) {
  auto vertex_json = [&](const TreeVertex& v) {
    return nlohmann::json{{"at", walk_to_json(g, v.walk)}, {"dart", g.dart_name(v.dart)}};
  };
  if (s.is_system()) return {{"system", vertex_json(s.system_vertex())}};
  nlohmann::json pants = nlohmann::json::array();
  for (const auto& p : s.pants()) pants.push_back(walk_to_json(g, p));
  nlohmann::json circles = nlohmann::json::array();
  nlohmann::json bits = nlohmann::json::array();
  for (std::size_t i = 0; i < s.circles().size(); ++i) {
    circles.push_back(vertex_json(s.circles()[i]));
    bits.push_back({{"circle", i}, {"aligned", static_cast<bool>(s.aligned()[i])}});
  }
  return {{"pants", pants}, {"circles", circles}, {"bits", bits}};
}

std::string serialize(const ModelGraph& g, const NormalSphere& s) {
  return to_json(g, s).dump();
}

namespace {

TreeVertex sphere_vertex_from_json(const ModelGraph& g, const nlohmann::json& doc,
                                   const std::string& where) {
  if (!doc.is_object() || !doc.contains("at") || !doc.contains("dart"))
    fail(ErrorKind::ParseError, where + ": expected {\"at\": walk, \"dart\": id}");
  Walk at = walk_from_json(g, doc["at"], where + "/at");
  check_walk(g, at);
  if (!doc["dart"].is_string()) fail(ErrorKind::ParseError, where + "/dart: expected dart id");
  auto d = g.find_dart(doc["dart"].get<std::string>());
  if (!d) fail(ErrorKind::ForeignVertex, where + "/dart: unknown dart");
  if (g.vertex_of(*d) != end_vertex(g, at))
    fail(ErrorKind::ForeignVertex, where + ": dart does not leave the pants vertex at the walk's end");
  return sphere_vertex(g, at, *d);
}

}  // namespace

NormalSphere parse_sphere(const ModelGraph& g, const nlohmann::json& doc) {
  if (!doc.is_object()) fail(ErrorKind::ParseError, "/: expected object");
  if (doc.contains("system")) {
    for (const char* key : {"pants", "circles", "bits"})
      if (doc.contains(key) && !doc[key].empty())
        fail(ErrorKind::ParseError, std::string("/") + key + ": must be empty for a system sphere");
    return NormalSphere::system(g, sphere_vertex_from_json(g, doc["system"], "/system"));
  }
  for (const char* key : {"pants", "circles", "bits"})
    if (!doc.contains(key) || !doc[key].is_array())
      fail(ErrorKind::ParseError, std::string("/") + key + ": expected array");
  std::vector<TreeVertex> pants;
  for (std::size_t i = 0; i < doc["pants"].size(); ++i) {
    const std::string where = "/pants/" + std::to_string(i);
    Walk w = walk_from_json(g, doc["pants"][i], where);
    check_walk(g, w);
    pants.push_back(TreeVertex::pants(std::move(w)));
  }
  std::vector<TreeVertex> circles;
  for (std::size_t i = 0; i < doc["circles"].size(); ++i)
    circles.push_back(sphere_vertex_from_json(g, doc["circles"][i], "/circles/" + std::to_string(i)));
  std::vector<std::pair<std::size_t, bool>> bits;
  for (std::size_t i = 0; i < doc["bits"].size(); ++i) {
    const std::string where = "/bits/" + std::to_string(i);
    const auto& b = doc["bits"][i];
    if (!b.is_object() || !b.contains("circle") || !b["circle"].is_number_unsigned() ||
        !b.contains("aligned") || !b["aligned"].is_boolean())
      fail(ErrorKind::ParseError, where + ": expected {\"circle\": index, \"aligned\": bool}");
    bits.emplace_back(b["circle"].get<std::size_t>(), b["aligned"].get<bool>());
  }
  return NormalSphere::from_data(g, std::move(pants), std::move(circles), bits);
}

NormalSphere parse_sphere(const ModelGraph& g, std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_sphere(g, doc);
}

}  // namespace sphereint
