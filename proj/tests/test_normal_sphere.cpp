#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sphereint/errors.hpp"
#include "sphereint/normal_sphere.hpp"

using namespace sphereint;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(SPHEREINT_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Theta {
  ModelGraph g = parse_graph(slurp("theta.json"));
  DartIndex x1 = *g.find_dart("x1"), x2 = *g.find_dart("x2"), x3 = *g.find_dart("x3");
  DartIndex y1 = *g.find_dart("y1"), y2 = *g.find_dart("y2"), y3 = *g.find_dart("y3");

  NormalSphere a0(bool aligned = true) const {
    return NormalSphere::from_data(g, {TreeVertex::pants({}), TreeVertex::pants({x1})},
                                   {sphere_vertex(g, {}, x1)}, {{0, aligned}});
  }
};

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

DeckElement random_element(const ModelGraph& g, std::mt19937& rng) {
  Walk w;
  const std::size_t length = 1 + rng() % 6;
  while (w.size() < length) {
    const DartIndex d = g.darts_at(end_vertex(g, w))[rng() % 3];
    if (!w.empty() && d == g.opposite(w.back())) continue;
    w.push_back(d);
  }
  const Walk tail = inverse_path(g, g.lift_walk(end_vertex(g, w)));
  w.insert(w.end(), tail.begin(), tail.end());
  return make_deck_element(g, reduce(g, w));
}

}  // namespace

TEST_CASE("smallest sphere: two disks through one circle") {
  const Theta t;
  const NormalSphere s = t.a0();
  CHECK(s.disk_count() == 2);
  CHECK(s.pants_piece_count() == 0);
  CHECK(s.circles().size() == 1);
  CHECK(circle_count_over(t.g, s, t.g.edge_of(t.x1)) == 1);
  CHECK(circle_count_over(t.g, s, t.g.edge_of(t.x2)) == 0);
  CHECK(circle_count_over(t.g, s, t.g.edge_of(t.x3)) == 0);
  CHECK(parse_sphere(t.g, slurp("a0.json")) == s);
}

TEST_CASE("pair of pants with three disk leaves") {
  const Theta t;
  const NormalSphere s = NormalSphere::from_data(
      t.g,
      {TreeVertex::pants({}), TreeVertex::pants({t.x1}), TreeVertex::pants({t.x2}),
       TreeVertex::pants({t.x3})},
      {sphere_vertex(t.g, {}, t.x1), sphere_vertex(t.g, {}, t.x2), sphere_vertex(t.g, {}, t.x3)},
      {{0, true}, {1, false}, {2, true}});
  CHECK(s.disk_count() == 3);
  CHECK(s.pants_piece_count() == 1);
  CHECK(s.circles().size() == 3);
  CHECK(s.pieces()[0].kind == PieceKind::pants);
}

TEST_CASE("validation errors") {
  const Theta t;
  const auto& g = t.g;
  const auto base = TreeVertex::pants({});
  const auto c1 = sphere_vertex(g, {}, t.x1);
  CHECK(error_of([&] { NormalSphere::from_data(g, {base}, {c1}, {{0, true}}); }) ==
        ErrorKind::CircleDegreeNotTwo);
  CHECK(error_of([&] { NormalSphere::from_data(g, {base}, {}, {}); }) == ErrorKind::EmptySphere);
  CHECK(error_of([&] { NormalSphere::from_data(g, {}, {}, {}); }) == ErrorKind::EmptySphere);
  CHECK(error_of([&] { NormalSphere::from_data(g, {}, {c1}, {{0, true}}); }) == ErrorKind::SphereLeaf);
  CHECK(error_of([&] { NormalSphere::from_data(g, {c1}, {c1}, {}); }) == ErrorKind::NotAlternating);
  CHECK(error_of([&] {
          NormalSphere::from_data(g, {base, TreeVertex::pants({t.x1})}, {c1}, {});
        }) == ErrorKind::MissingBit);
  CHECK(error_of([&] {
          NormalSphere::from_data(g, {base, TreeVertex::pants({t.x1})}, {c1}, {{0, true}, {1, true}});
        }) == ErrorKind::ExtraBit);
  CHECK(error_of([&] {
          NormalSphere::from_data(g, {base, TreeVertex::pants({t.x1}), TreeVertex::pants({t.x1})},
                                  {c1}, {{0, true}});
        }) == ErrorKind::DuplicateVertex);
  // [] and [x2] are adjacent in T but the circle between them is missing.
  CHECK(error_of([&] {
          NormalSphere::from_data(
              g,
              {base, TreeVertex::pants({t.x1}), TreeVertex::pants({t.x2}),
               TreeVertex::pants({t.x2, t.y3})},
              {c1, sphere_vertex(g, {t.x2}, t.y3)}, {{0, true}, {1, true}});
        }) == ErrorKind::NotConnected);
  CHECK(error_of([&] {
          NormalSphere::from_data(g, {base, TreeVertex::pants({t.x1, t.y1})}, {c1}, {{0, true}});
        }) == ErrorKind::ForeignVertex);
}

TEST_CASE("system spheres") {
  const Theta t;
  const auto w = sphere_vertex(t.g, {}, t.x1);
  const NormalSphere s = NormalSphere::system(t.g, w);
  CHECK(s.is_system());
  for (EdgeIndex e = 0; e < t.g.edge_count(); ++e) CHECK(circle_count_over(t.g, s, e) == 0);
  const DeckElement h = make_deck_element(t.g, {t.x2, t.y3});
  CHECK(translate(t.g, s, h) == NormalSphere::system(t.g, act(t.g, h, w)));
  CHECK(parse_sphere(t.g, slurp("sigma_mid.json")) == s);
  // Both encodings of a sphere vertex parse to the same system sphere.
  CHECK(parse_sphere(t.g, std::string_view(R"({"system": {"at": ["x1"], "dart": "y1"}})")) == s);
  CHECK(SphereClass::of_edge(t.g, t.g.edge_of(t.x1)) == SphereClass::of(t.g, translate(t.g, s, h)));
}

TEST_CASE("translation") {
  const Theta t;
  const NormalSphere s = t.a0(false);
  CHECK(translate(t.g, s, DeckElement::identity()) == s);
  const DeckElement a = make_deck_element(t.g, {t.x2, t.y1});
  const DeckElement b = make_deck_element(t.g, {t.x1, t.y3});
  CHECK(translate(t.g, translate(t.g, s, b), a) == translate(t.g, s, compose(t.g, a, b)));
  const NormalSphere moved = translate(t.g, s, a);
  for (EdgeIndex e = 0; e < t.g.edge_count(); ++e)
    CHECK(circle_count_over(t.g, moved, e) == circle_count_over(t.g, s, e));
  CHECK(moved.aligned() == s.aligned());
}

TEST_CASE("canonical representatives") {
  const Theta t;
  const NormalSphere aligned = canonical_rep(t.g, t.a0(true));
  const NormalSphere crossed = canonical_rep(t.g, t.a0(false));
  CHECK(aligned != crossed);
  CHECK(serialize(t.g, aligned) != serialize(t.g, crossed));
  CHECK(canonical_rep(t.g, aligned) == aligned);
  const DeckElement h = make_deck_element(t.g, {t.x3, t.y2, t.x1, t.y3});
  CHECK(canonical_rep(t.g, translate(t.g, t.a0(true), h)) == aligned);
}

TEST_CASE("gauge: flipping every bit around a pants piece is invisible") {
  const Theta t;
  const std::vector<TreeVertex> pants{TreeVertex::pants({}), TreeVertex::pants({t.x1}),
                                      TreeVertex::pants({t.x2}), TreeVertex::pants({t.x3})};
  const std::vector<TreeVertex> circles{sphere_vertex(t.g, {}, t.x1), sphere_vertex(t.g, {}, t.x2),
                                        sphere_vertex(t.g, {}, t.x3)};
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<std::pair<std::size_t, bool>> bits, flipped;
    for (std::size_t i = 0; i < 3; ++i) {
      bits.emplace_back(i, (mask >> i) & 1U);
      flipped.emplace_back(i, !((mask >> i) & 1U));
    }
    const auto a = NormalSphere::from_data(t.g, pants, circles, bits);
    const auto b = NormalSphere::from_data(t.g, pants, circles, flipped);
    CHECK(a.gauge_fixed(t.g) == b.gauge_fixed(t.g));
    CHECK(canonical_rep(t.g, a) == canonical_rep(t.g, b));
  }
}

TEST_CASE("piece counts obey D = P + 2 on every subtree with at most four circles") {
  // Degrees are recounted by the oracle, independently of Piece.
  for (const auto& g : {ModelGraph::standard(2, StandardStyle::theta_chain),
                        ModelGraph::standard(2, StandardStyle::dumbbell_chain),
                        ModelGraph::standard(3, StandardStyle::theta_chain)}) {
    const auto sets = oracle::subtrees_at_base(g, 4);
    CHECK(sets.size() > 10);
    for (const auto& set : sets) {
      const auto expected = oracle::degree_counts(g, set);
      const NormalSphere s = oracle::sphere_on(g, set, 0);
      CHECK(expected.disks == expected.pants + 2);
      CHECK(s.disk_count() == expected.disks);
      CHECK(s.cylinder_count() == expected.cylinders);
      CHECK(s.pants_piece_count() == expected.pants);
      CHECK(static_cast<int>(s.circles().size()) == expected.circles);
      CHECK(expected.circles == expected.cylinders + 2 * expected.pants + 1);
    }
  }
}

TEST_CASE("canonical_rep is orbit invariant and idempotent on random spheres") {
  std::mt19937 rng(2024);
  for (const auto& g : {ModelGraph::standard(2, StandardStyle::theta_chain),
                        ModelGraph::standard(3, StandardStyle::dumbbell_chain)}) {
    const auto sets = oracle::subtrees_at_base(g, 3);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& set = sets[rng() % sets.size()];
      const NormalSphere s = oracle::sphere_on(g, set, static_cast<unsigned>(rng()));
      const NormalSphere c = canonical_rep(g, s);
      CHECK(canonical_rep(g, c) == c);
      const DeckElement h = random_element(g, rng);
      CHECK(canonical_rep(g, translate(g, s, h)) == c);
    }
  }
}

TEST_CASE("documents round trip and report the first violated rule") {
  const Theta t;
  const NormalSphere s = t.a0(false);
  CHECK(parse_sphere(t.g, serialize(t.g, s)) == s);
  CHECK(error_of([&] { parse_sphere(t.g, std::string_view(R"({"pants": [[]], "circles": []})")); }) ==
        ErrorKind::ParseError);
  CHECK(error_of([&] {
          parse_sphere(t.g, std::string_view(R"({"pants": [[], ["x1"]], "circles": [{"at": [], "dart": "x1"}],
                                                  "bits": []})"));
        }) == ErrorKind::MissingBit);
  CHECK(error_of([&] {
          parse_sphere(t.g, std::string_view(R"({"pants": [[], ["q"]], "circles": [], "bits": []})"));
        }) == ErrorKind::ForeignVertex);
  CHECK(error_of([&] {
          parse_sphere(t.g, std::string_view(R"({"pants": [[], ["x1"]],
            "circles": [{"at": [], "dart": "x1"}, {"at": ["x1"], "dart": "y1"}],
            "bits": [{"circle": 0, "aligned": true}, {"circle": 1, "aligned": true}]})"));
        }) == ErrorKind::DuplicateVertex);
  CHECK(error_of([&] { parse_sphere(t.g, std::string_view(R"({"system": {"at": [], "dart": "y1"}})")); }) ==
        ErrorKind::ForeignVertex);
}
