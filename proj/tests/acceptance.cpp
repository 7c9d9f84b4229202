// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sphereint/sides.hpp"
#include "sphereint/sphere_complex.hpp"

using namespace sphereint;

namespace {

// Pinned limits.
constexpr int kMaxCircles = 4;
constexpr double kTheoremSeconds = 120.0;
constexpr double kSelfDisjointSeconds = 60.0;
constexpr double kComplexSeconds = 30.0;
constexpr std::size_t kSymmetryPairs = 240;
constexpr int kLawRadius = 4;
constexpr std::size_t kInvarianceSample = 50;
constexpr int kTranslatesPerSphere = 100;
constexpr int kComplexBound = 2;
constexpr unsigned kSeed = 20240611;

struct Subject {
  std::string name;
  ModelGraph g;
  std::vector<SphereClass> classes;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int index, bool pass, const std::string& what, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

DeckElement random_element(const ModelGraph& g, std::mt19937& rng, std::size_t max_length) {
  Walk w;
  const std::size_t length = 1 + rng() % max_length;
  while (w.size() < length) {
    const DartIndex d = g.darts_at(end_vertex(g, w))[rng() % 3];
    if (!w.empty() && d == g.opposite(w.back())) continue;
    w.push_back(d);
  }
  const Walk tail = inverse_path(g, g.lift_walk(end_vertex(g, w)));
  w.insert(w.end(), tail.begin(), tail.end());
  return make_deck_element(g, reduce(g, w));
}

std::string fmt(const char* pattern, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

}  // namespace

int main() {
  std::vector<Subject> subjects;
  std::size_t bound_violations = 0;
  std::size_t candidate_checks = 0;

  // 1. Circle counts equal translate counts against every system class.
  {
    const auto start = Clock::now();
    std::size_t rows = 0, mismatches = 0;
    subjects.push_back({"theta", ModelGraph::standard(2, StandardStyle::theta_chain), {}});
    subjects.push_back({"dumbbell", ModelGraph::standard(2, StandardStyle::dumbbell_chain), {}});
    subjects.push_back({"theta-chain-3", ModelGraph::standard(3, StandardStyle::theta_chain), {}});
    for (auto& s : subjects) {
      s.classes = enumerate(s.g, kMaxCircles);
      for (const auto& a : s.classes)
        for (EdgeIndex e = 0; e < s.g.edge_count(); ++e) {
          const SphereClass sys = SphereClass::of_edge(s.g, e);
          const IntersectionResult r = algebraic_intersection(s.g, a, sys);
          ++rows;
          ++candidate_checks;
          if (r.candidates > a.rep().subtree_size() * sys.rep().subtree_size()) ++bound_violations;
          if (static_cast<std::size_t>(circle_count_over(s.g, a.rep(), e)) != r.count) ++mismatches;
        }
    }
    const double t = seconds_since(start);
    std::size_t total = 0;
    for (const auto& s : subjects) total += s.classes.size();
    report(1, mismatches == 0 && t < kTheoremSeconds,
           "circle count equals translate count for every class and edge",
           fmt("%.0f classes, %.0f rows, %.0f mismatches", total, rows, mismatches) +
               fmt(", %.2fs < %.0fs", t, kTheoremSeconds));
  }

  // 2. No overlap-candidate translate of an enumerated sphere crosses it.
  {
    const auto start = Clock::now();
    std::size_t checked = 0, crossings = 0;
    for (const auto& s : subjects)
      for (const auto& a : s.classes)
        for (const auto& h : overlap_candidates(s.g, a.rep(), a.rep())) {
          ++checked;
          if (crossing(s.g, a.rep(), translate(s.g, a.rep(), h)).crosses) ++crossings;
        }
    const double t = seconds_since(start);
    report(2, crossings == 0 && t < kSelfDisjointSeconds, "enumerated spheres are self-disjoint",
           fmt("%.0f translates, %.0f crossings", checked, crossings) +
               fmt(", %.2fs < %.0fs", t, kSelfDisjointSeconds));
  }

  // 3. Symmetry of the translate count on sampled pairs.
  {
    std::mt19937 rng(kSeed);
    std::size_t sampled = 0, asymmetric = 0;
    while (sampled < kSymmetryPairs)
      for (const auto& s : subjects) {
        const auto& a = s.classes[rng() % s.classes.size()];
        const auto& b = s.classes[rng() % s.classes.size()];
        const auto ab = algebraic_intersection(s.g, a, b);
        const auto ba = algebraic_intersection(s.g, b, a);
        candidate_checks += 2;
        if (ab.candidates > a.rep().subtree_size() * b.rep().subtree_size()) ++bound_violations;
        if (ba.candidates > a.rep().subtree_size() * b.rep().subtree_size()) ++bound_violations;
        if (ab.count != ba.count) ++asymmetric;
        ++sampled;
      }
    report(3, asymmetric == 0, "translate count is symmetric",
           fmt("%.0f pairs, %.0f asymmetric", sampled, asymmetric));
  }

  // 4. The disjoint-set route and the propagation route agree on every pair of
  // enumerated classes, over all overlapping translates.
  {
    std::size_t checked = 0, disagree = 0, label_mismatch = 0;
    for (const auto& s : subjects)
      for (const auto& a : s.classes)
        for (const auto& other : s.classes) {
          for (const auto& h : overlap_candidates(s.g, a.rep(), other.rep())) {
            const NormalSphere b = translate(s.g, other.rep(), h);
            ++checked;
            if (crossing(s.g, a.rep(), b).crosses != crossing_oracle(s.g, a.rep(), b).crosses)
              ++disagree;
            const Carrier c = minimal_carrier(s.g, a.rep(), b);
            for (const auto* x : {&a.rep(), &b})
              if (!side_labels(s.g, *x, c).equal_up_to_flip(side_labels_oracle(s.g, *x, c)))
                ++label_mismatch;
          }
        }
    report(4, disagree == 0 && label_mismatch == 0, "crossing agrees with the propagation oracle",
           fmt("%.0f pairs, %.0f disagreements, %.0f label mismatches", checked, disagree,
               label_mismatch));
  }

  // 5. A sphere crosses a system sphere exactly at its circles.
  {
    std::size_t checked = 0, violations = 0;
    for (const auto& s : subjects)
      for (const auto& a : s.classes) {
        const std::set<TreeVertex> circles(a.rep().circles().begin(), a.rep().circles().end());
        for (const auto& w : oracle::sphere_vertices_near(s.g, a.rep(), kLawRadius)) {
          ++checked;
          const bool crosses = crossing(s.g, a.rep(), NormalSphere::system(s.g, w)).crosses;
          if (crosses != (circles.count(w) > 0)) ++violations;
        }
      }
    report(5, violations == 0, "crossing with system spheres happens exactly at circles",
           fmt("%.0f sphere vertices within radius %.0f, %.0f violations", checked, kLawRadius,
               violations));
  }

  // 6. Candidate bound, instrumented on the runs above.
  report(6, bound_violations == 0, "candidate translates never exceed |t_A|*|t_B|",
         fmt("%.0f runs, %.0f violations", candidate_checks, bound_violations));

  // 7. Structural invariants.
  {
    std::mt19937 rng(kSeed + 7);
    std::size_t piece_violations = 0, orbit_violations = 0, roundtrip_violations = 0, docs = 0;
    std::vector<std::pair<const Subject*, const SphereClass*>> all;
    for (const auto& s : subjects) {
      if (parse_graph(serialize(s.g)) != s.g) ++roundtrip_violations;
      ++docs;
      for (const auto& a : s.classes) {
        all.emplace_back(&s, &a);
        const NormalSphere& r = a.rep();
        if (!r.is_system() && r.disk_count() != r.pants_piece_count() + 2) ++piece_violations;
        if (parse_sphere(s.g, serialize(s.g, r)) != r) ++roundtrip_violations;
        ++docs;
      }
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(all.size(), kInvarianceSample));
    for (const auto& [s, a] : all)
      for (int i = 0; i < kTranslatesPerSphere; ++i) {
        const NormalSphere moved = translate(s->g, a->rep(), random_element(s->g, rng, 10));
        if (canonical_rep(s->g, moved) != a->rep()) ++orbit_violations;
        if (parse_sphere(s->g, serialize(s->g, moved)) != moved) ++roundtrip_violations;
        ++docs;
      }
    report(7, piece_violations + orbit_violations + roundtrip_violations == 0,
           "D = P + 2, orbit-invariant canonical form, document round trips",
           fmt("%.0f piece, %.0f orbit, %.0f round-trip violations", piece_violations,
               orbit_violations, roundtrip_violations) +
               fmt(" over %.0f documents and %.0f sampled spheres", docs, all.size()));
  }

  // 8. Sphere complex of the theta graph.
  {
    const auto start = Clock::now();
    const ModelGraph& g = subjects[0].g;
    const SphereComplex c = build_complex(g, kComplexBound);
    bool ok = c.vertices.size() >= 3;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      ok = ok && c.vertices[i] == SphereClass::of_edge(g, static_cast<EdgeIndex>(i));
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) ok = ok && c.has_edge(i, j);
    }
    const std::size_t n = c.vertices.size();
    std::size_t asymmetric = 0, simplex_mismatch = 0, subsets = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c.has_edge(i, j) != c.has_edge(j, i) || (i == j && c.has_edge(i, j))) ++asymmetric;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        ++subsets;
        if (is_simplex(g, {c.vertices[i], c.vertices[j]}) != c.has_edge(i, j)) ++simplex_mismatch;
        for (std::size_t k = j + 1; k < n; ++k) {
          ++subsets;
          const bool clique = c.has_edge(i, j) && c.has_edge(i, k) && c.has_edge(j, k);
          if (is_simplex(g, {c.vertices[i], c.vertices[j], c.vertices[k]}) != clique)
            ++simplex_mismatch;
        }
      }
    const double t = seconds_since(start);
    report(8, ok && asymmetric == 0 && simplex_mismatch == 0 && t < kComplexSeconds,
           "theta sphere complex: system clique, flag simplices, symmetric edges",
           fmt("%.0f vertices, %.0f edges, ", n, c.edges.size()) +
               fmt("%.0f subsets checked, %.0f mismatches", subsets, simplex_mismatch) +
               fmt(", %.2fs < %.0fs", t, kComplexSeconds));
  }

  std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
