#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sphereint/model_graph.hpp"
#include "sphereint/normal_sphere.hpp"

namespace sphereint {

struct EnumerateOptions {
  /// Resource guard on the circle bound.
  int max_circles_limit = 6;
  /// Resource guard on the number of raw (subtree, bits) candidates.
  std::size_t max_candidates = 2'000'000;
};

struct EnumerationStats {
  std::size_t subtrees = 0;
  std::size_t raw_classes = 0;      // distinct classes before the embedding filter
  std::size_t immersed_dropped = 0; // classes whose translates cross them
};

/// All sphere classes with at most `max_circles` circles: the system classes
/// first (by edge), then the embedded (subtree, bits) classes ordered by
/// circle count and canonical representative.
///
/// Throws BoundTooLarge when a resource guard trips.
std::vector<SphereClass> enumerate(const ModelGraph& g, int max_circles,
                                   const EnumerateOptions& options = {},
                                   EnumerationStats* stats = nullptr);

struct SphereComplex {
  std::vector<SphereClass> vertices;
  /// Index pairs (i < j) with intersection number 0, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  int max_circles = 0;

  bool has_edge(std::size_t i, std::size_t j) const;
};

SphereComplex build_complex(const ModelGraph& g, int max_circles,
                            const EnumerateOptions& options = {});

/// Pairwise vanishing intersection numbers. The sphere complex is flag, so
/// this is exactly simultaneous disjoint realizability.
bool is_simplex(const ModelGraph& g, const std::vector<SphereClass>& classes);

nlohmann::json to_json(const ModelGraph& g, const SphereComplex& complex);
std::string to_dot(const ModelGraph& g, const SphereComplex& complex);

}  // namespace sphereint
