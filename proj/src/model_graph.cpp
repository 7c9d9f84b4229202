#include "sphereint/model_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <set>

#include "sphereint/errors.hpp"

namespace sphereint {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

std::string padded(const char* prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%02d", prefix, i);
  return buf;
}

}  // namespace

std::optional<StandardStyle> parse_style(std::string_view name) {
  if (name == "theta-chain") return StandardStyle::theta_chain;
  if (name == "dumbbell-chain") return StandardStyle::dumbbell_chain;
  return std::nullopt;
}

std::string_view to_string(StandardStyle style) {
  return style == StandardStyle::theta_chain ? "theta-chain" : "dumbbell-chain";
}

ModelGraph ModelGraph::build(std::vector<std::string> pants,
                             std::vector<DartSpec> darts,
                             const std::map<std::string, std::string>& pairing) {
  std::sort(pants.begin(), pants.end());
  if (std::adjacent_find(pants.begin(), pants.end()) != pants.end())
    fail(ErrorKind::ParseError, "duplicate pants identifier");
  std::sort(darts.begin(), darts.end(),
            [](const DartSpec& a, const DartSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < darts.size(); ++i)
    if (darts[i - 1].id == darts[i].id)
      fail(ErrorKind::ParseError, "duplicate dart identifier '" + darts[i].id + "'");

  ModelGraph g;
  g.pants_ = std::move(pants);
  const int np = g.pants_count();
  std::vector<std::vector<DartIndex>> at(np);
  for (const auto& d : darts) {
    auto p = std::lower_bound(g.pants_.begin(), g.pants_.end(), d.vertex);
    if (p == g.pants_.end() || *p != d.vertex)
      fail(ErrorKind::ParseError,
           "dart '" + d.id + "' names unknown vertex '" + d.vertex + "'");
    const auto pi = static_cast<PantsIndex>(p - g.pants_.begin());
    at[pi].push_back(static_cast<DartIndex>(g.darts_.size()));
    g.darts_.push_back(d.id);
    g.vertex_of_.push_back(pi);
  }
  for (int p = 0; p < np; ++p)
    if (at[p].size() != 3)
      fail(ErrorKind::NonTrivalent, "vertex '" + g.pants_[p] + "' has " +
                                        std::to_string(at[p].size()) + " darts");

  const int nd = g.dart_count();
  g.opposite_.assign(nd, -1);
  for (DartIndex d = 0; d < nd; ++d) {
    auto it = pairing.find(g.darts_[d]);
    if (it == pairing.end())
      fail(ErrorKind::FixedDart, "dart '" + g.darts_[d] + "' is unpaired");
    auto o = g.find_dart(it->second);
    if (!o) fail(ErrorKind::ParseError, "pairing names unknown dart '" + it->second + "'");
    if (*o == d) fail(ErrorKind::FixedDart, "dart '" + g.darts_[d] + "' is paired with itself");
    g.opposite_[d] = *o;
  }
  for (DartIndex d = 0; d < nd; ++d)
    if (g.opposite_[g.opposite_[d]] != d)
      fail(ErrorKind::FixedDart, "pairing is not an involution at '" + g.darts_[d] + "'");
  for (const auto& [key, value] : pairing)
    if (!g.find_dart(key)) fail(ErrorKind::ParseError, "pairing names unknown dart '" + key + "'");

  for (int p = 0; p < np; ++p) std::copy(at[p].begin(), at[p].end(), g.at_.emplace_back().begin());
  g.edge_of_.assign(nd, -1);
  for (DartIndex d = 0; d < nd; ++d) {
    if (d < g.opposite_[d]) {
      g.edge_of_[d] = g.edge_of_[g.opposite_[d]] = static_cast<EdgeIndex>(g.edges_.size());
      g.edges_.push_back({d, g.opposite_[d]});
    }
  }

  if (np == 0) fail(ErrorKind::RankTooSmall, "empty graph");
  // BFS spanning tree from the base, darts in ascending order.
  g.lifts_.assign(np, {});
  std::vector<bool> seen(np, false);
  std::queue<PantsIndex> queue;
  seen[0] = true;
  queue.push(0);
  while (!queue.empty()) {
    const PantsIndex p = queue.front();
    queue.pop();
    for (DartIndex d : g.at_[p]) {
      const PantsIndex q = g.vertex_of_[g.opposite_[d]];
      if (seen[q]) continue;
      seen[q] = true;
      g.lifts_[q] = g.lifts_[p];
      g.lifts_[q].push_back(d);
      queue.push(q);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    fail(ErrorKind::Disconnected, "graph is not connected");
  if (g.rank() < 2)
    fail(ErrorKind::RankTooSmall, "rank " + std::to_string(g.rank()) + " < 2");
  return g;
}

ModelGraph ModelGraph::standard(int rank, StandardStyle style) {
  if (rank < 2) fail(ErrorKind::RankTooSmall, "rank " + std::to_string(rank) + " < 2");
  const int np = 2 * (rank - 1);
  std::vector<std::string> pants;
  std::vector<DartSpec> darts;
  std::vector<int> used(np, 0);
  std::map<std::string, std::string> pairing;
  for (int p = 0; p < np; ++p) pants.push_back(padded("P", p));
  auto dart = [&](int p) {
    std::string id = pants[p] + "." + std::to_string(used[p]++);
    darts.push_back({id, pants[p]});
    return id;
  };
  auto join = [&](int p, int q) {
    std::string a = dart(p);
    std::string b = dart(q);
    pairing[a] = b;
    pairing[b] = a;
  };
  if (style == StandardStyle::theta_chain) {
    // Necklace of double edges; for rank 2 this closes up to the theta graph.
    for (int i = 0; i + 1 < np; i += 2) {
      join(i, i + 1);
      join(i, i + 1);
    }
    for (int i = 1; i + 1 < np; i += 2) join(i, i + 1);
    join(np - 1, 0);
  } else {
    // Path with a loop at each end; interior vertices doubled up in pairs.
    join(0, 0);
    for (int i = 0; i + 1 < np; ++i) join(i, i + 1);
    for (int i = 1; i + 2 < np; i += 2) join(i, i + 1);
    join(np - 1, np - 1);
  }
  return build(std::move(pants), std::move(darts), pairing);
}

std::optional<DartIndex> ModelGraph::find_dart(std::string_view id) const {
  auto it = std::lower_bound(darts_.begin(), darts_.end(), id);
  if (it == darts_.end() || *it != id) return std::nullopt;
  return static_cast<DartIndex>(it - darts_.begin());
}

std::optional<PantsIndex> ModelGraph::find_pants(std::string_view id) const {
  auto it = std::lower_bound(pants_.begin(), pants_.end(), id);
  if (it == pants_.end() || *it != id) return std::nullopt;
  return static_cast<PantsIndex>(it - pants_.begin());
}

std::optional<EdgeIndex> ModelGraph::find_edge(std::string_view dart_id) const {
  auto d = find_dart(dart_id);
  if (!d) return std::nullopt;
  return edge_of(*d);
}

std::string ModelGraph::edge_name(EdgeIndex e) const { return darts_[edges_[e][0]]; }

bool ModelGraph::operator==(const ModelGraph& other) const {
  return pants_ == other.pants_ && darts_ == other.darts_ &&
         vertex_of_ == other.vertex_of_ && opposite_ == other.opposite_;
}

nlohmann::json to_json(const ModelGraph& g) {
  nlohmann::json pants = nlohmann::json::array();
  for (int p = 0; p < g.pants_count(); ++p) pants.push_back(g.pants_name(p));
  nlohmann::json darts = nlohmann::json::array();
  for (int d = 0; d < g.dart_count(); ++d)
    darts.push_back({{"id", g.dart_name(d)}, {"vertex", g.pants_name(g.vertex_of(d))}});
  nlohmann::json edges = nlohmann::json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_darts(e);
    edges.push_back({g.dart_name(a), g.dart_name(b)});
  }
  return {{"pants", pants}, {"darts", darts}, {"edges", edges}};
}

std::string serialize(const ModelGraph& g) { return to_json(g).dump(2) + "\n"; }

namespace {

const nlohmann::json& field(const nlohmann::json& doc, const char* key,
                            const std::string& where) {
  if (!doc.is_object() || !doc.contains(key))
    fail(ErrorKind::ParseError, where + ": missing field '" + key + "'");
  return doc.at(key);
}

std::string string_at(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) fail(ErrorKind::ParseError, where + ": expected string");
  return v.get<std::string>();
}

}  // namespace

ModelGraph parse_graph(const nlohmann::json& doc) {
  const auto& pants_doc = field(doc, "pants", "/");
  const auto& darts_doc = field(doc, "darts", "/");
  const auto& edges_doc = field(doc, "edges", "/");
  if (!pants_doc.is_array()) fail(ErrorKind::ParseError, "/pants: expected array");
  if (!darts_doc.is_array()) fail(ErrorKind::ParseError, "/darts: expected array");
  if (!edges_doc.is_array()) fail(ErrorKind::ParseError, "/edges: expected array");

  std::vector<std::string> pants;
  for (std::size_t i = 0; i < pants_doc.size(); ++i)
    pants.push_back(string_at(pants_doc[i], "/pants/" + std::to_string(i)));
  std::vector<DartSpec> darts;
  std::set<std::string> dart_ids;
  for (std::size_t i = 0; i < darts_doc.size(); ++i) {
    const std::string where = "/darts/" + std::to_string(i);
    darts.push_back({string_at(field(darts_doc[i], "id", where), where + "/id"),
                     string_at(field(darts_doc[i], "vertex", where), where + "/vertex")});
    dart_ids.insert(darts.back().id);
  }
  std::map<std::string, std::string> pairing;
  for (std::size_t i = 0; i < edges_doc.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    const auto& e = edges_doc[i];
    if (!e.is_array() || e.size() != 2)
      fail(ErrorKind::ParseError, where + ": expected a pair of dart ids");
    const std::string a = string_at(e[0], where + "/0");
    const std::string b = string_at(e[1], where + "/1");
    for (const auto& id : {a, b}) {
      if (!dart_ids.count(id)) fail(ErrorKind::ParseError, where + ": unknown dart '" + id + "'");
      if (pairing.count(id)) fail(ErrorKind::ParseError, where + ": dart '" + id + "' paired twice");
    }
    pairing[a] = b;
    pairing[b] = a;
  }
  for (const auto& id : dart_ids)
    if (!pairing.count(id))
      fail(ErrorKind::ParseError, "/edges: dart '" + id + "' has no pairing");
  return ModelGraph::build(std::move(pants), std::move(darts), pairing);
}

ModelGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, "byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_graph(doc);
}

}  // namespace sphereint
