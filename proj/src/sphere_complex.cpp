#include "sphereint/sphere_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sphereint/errors.hpp"
#include "sphereint/sides.hpp"

namespace sphereint {

namespace {

using PantsSet = std::vector<Walk>;  // ascending

// Connected pants sets of each size up to max_size containing `root`.
std::vector<PantsSet> grow_subtrees(const ModelGraph& g, const Walk& root, std::size_t max_size) {
  std::vector<PantsSet> out;
  std::set<PantsSet> layer{{root}};
  for (std::size_t size = 2; size <= max_size; ++size) {
    std::set<PantsSet> next;
    for (const auto& set : layer) {
      for (const auto& p : set) {
        for (DartIndex d : g.darts_at(end_vertex(g, p))) {
          Walk q = step(g, p, d);
          if (std::binary_search(set.begin(), set.end(), q)) continue;
          PantsSet grown = set;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), q), q);
          next.insert(std::move(grown));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<SphereClass> enumerate(const ModelGraph& g, int max_circles,
                                   const EnumerateOptions& options, EnumerationStats* stats) {
  if (max_circles < 0) throw Error(ErrorKind::BoundTooLarge, "negative circle bound");
  if (max_circles > options.max_circles_limit)
    throw Error(ErrorKind::BoundTooLarge, "circle bound " + std::to_string(max_circles) +
                                              " exceeds limit " + std::to_string(options.max_circles_limit));
  EnumerationStats local;
  std::set<SphereClass> found;
  std::size_t raw = 0;
  for (PantsIndex v = 0; v < g.pants_count(); ++v) {
    for (const auto& set : grow_subtrees(g, g.lift_walk(v), static_cast<std::size_t>(max_circles) + 1)) {
      ++local.subtrees;
      std::vector<TreeVertex> pants;
      std::vector<TreeVertex> circles;
      for (const auto& p : set) {
        pants.push_back(TreeVertex::pants(p));
        for (DartIndex d : g.darts_at(end_vertex(g, p))) {
          TreeVertex sv = sphere_vertex(g, p, d);
          if (sv.walk == p && std::binary_search(set.begin(), set.end(), step(g, p, d)))
            circles.push_back(std::move(sv));
        }
      }
      const std::size_t masks = std::size_t{1} << circles.size();
      raw += masks;
      if (raw > options.max_candidates)
        throw Error(ErrorKind::BoundTooLarge, "more than " + std::to_string(options.max_candidates) +
                                                  " candidate spheres");
      for (std::size_t mask = 0; mask < masks; ++mask) {
        std::vector<std::pair<std::size_t, bool>> bits;
        for (std::size_t c = 0; c < circles.size(); ++c) bits.emplace_back(c, (mask >> c) & 1U);
        found.insert(SphereClass::of(g, NormalSphere::from_data(g, pants, circles, bits)));
      }
    }
  }
  local.raw_classes = found.size();

  std::vector<SphereClass> general;
  for (const auto& c : found) {
    if (is_self_disjoint(g, c.rep()))
      general.push_back(c);
    else
      ++local.immersed_dropped;
  }
  std::stable_sort(general.begin(), general.end(), [](const SphereClass& a, const SphereClass& b) {
    return a.rep().circles().size() < b.rep().circles().size();
  });

  std::vector<SphereClass> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) out.push_back(SphereClass::of_edge(g, e));
  out.insert(out.end(), general.begin(), general.end());
  if (stats) *stats = local;
  return out;
}

bool SphereComplex::has_edge(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

SphereComplex build_complex(const ModelGraph& g, int max_circles, const EnumerateOptions& options) {
  SphereComplex complex;
  complex.max_circles = max_circles;
  complex.vertices = enumerate(g, max_circles, options);
  const std::size_t n = complex.vertices.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (intersection_number(g, complex.vertices[i], complex.vertices[j]) == 0)
        complex.edges.emplace_back(i, j);
  return complex;
}

bool is_simplex(const ModelGraph& g, const std::vector<SphereClass>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (intersection_number(g, classes[i], classes[j]) != 0) return false;
  return true;
}

nlohmann::json to_json(const ModelGraph& g, const SphereComplex& complex) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t i = 0; i < complex.vertices.size(); ++i)
    vertices.push_back({{"index", i}, {"sphere", to_json(g, complex.vertices[i].rep())}});
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [i, j] : complex.edges) edges.push_back({i, j});
  return {{"max_circles", complex.max_circles}, {"vertices", vertices}, {"edges", edges}};
}

std::string to_dot(const ModelGraph& g, const SphereComplex& complex) {
  std::ostringstream out;
  out << "graph sphere_complex {\n";
  for (std::size_t i = 0; i < complex.vertices.size(); ++i) {
    const NormalSphere& s = complex.vertices[i].rep();
    out << "  v" << i << " [label=\"";
    if (s.is_system())
      out << "sigma " << g.edge_name(g.edge_of(s.system_vertex().dart));
    else
      out << s.circles().size() << " circles";
    out << "\"];\n";
  }
  for (const auto& [i, j] : complex.edges) out << "  v" << i << " -- v" << j << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sphereint
