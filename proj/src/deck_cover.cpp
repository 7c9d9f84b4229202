#include "sphereint/deck_cover.hpp"

#include <algorithm>

#include "sphereint/errors.hpp"

namespace sphereint {

PantsIndex end_vertex(const ModelGraph& g, const Walk& w) {
  return w.empty() ? g.base() : g.vertex_of(g.opposite(w.back()));
}

Walk reduce(const ModelGraph& g, Walk w) {
  std::size_t top = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (top > 0 && w[top - 1] == g.opposite(w[i]))
      --top;
    else
      w[top++] = w[i];
  }
  w.resize(top);
  return w;
}

Walk inverse_path(const ModelGraph& g, const Walk& w) {
  Walk out(w.rbegin(), w.rend());
  for (auto& d : out) d = g.opposite(d);
  return out;
}

namespace {

bool is_walk(const ModelGraph& g, const Walk& w) {
  PantsIndex at = g.base();
  for (DartIndex d : w) {
    if (d < 0 || d >= g.dart_count() || g.vertex_of(d) != at) return false;
    at = g.vertex_of(g.opposite(d));
  }
  return true;
}

Walk concat(const ModelGraph& g, const Walk& a, const Walk& b) {
  Walk w = a;
  w.insert(w.end(), b.begin(), b.end());
  return reduce(g, std::move(w));
}

}  // namespace

bool is_reduced_walk(const ModelGraph& g, const Walk& w) {
  if (!is_walk(g, w)) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == g.opposite(w[i - 1])) return false;
  return true;
}

void check_walk(const ModelGraph& g, const Walk& w) {
  if (!is_reduced_walk(g, w))
    throw Error(ErrorKind::ForeignVertex, "not a reduced walk from the base: [" +
                                              word_to_string(g, w) + "]");
}

TreeVertex sphere_vertex(const ModelGraph& g, const Walk& w, DartIndex dart) {
  if (!w.empty() && w.back() == g.opposite(dart)) {
    Walk up(w.begin(), w.end() - 1);
    return {TreeVertex::Kind::sphere, std::move(up), g.opposite(dart)};
  }
  return {TreeVertex::Kind::sphere, w, dart};
}

void check_vertex(const ModelGraph& g, const TreeVertex& v) {
  if (!is_reduced_walk(g, v.walk))
    throw Error(ErrorKind::ForeignVertex, "vertex walk is not a reduced walk from the base");
  if (v.is_pants()) return;
  if (v.dart < 0 || v.dart >= g.dart_count() || g.vertex_of(v.dart) != end_vertex(g, v.walk))
    throw Error(ErrorKind::ForeignVertex, "sphere vertex dart does not leave its pants vertex");
  if (!v.walk.empty() && v.walk.back() == g.opposite(v.dart))
    throw Error(ErrorKind::ForeignVertex, "sphere vertex is not in canonical form");
}

int base_cell(const ModelGraph& g, const TreeVertex& v) {
  return v.is_pants() ? end_vertex(g, v.walk) : g.edge_of(v.dart);
}

std::pair<Walk, Walk> endpoints(const ModelGraph& g, const TreeVertex& sphere) {
  Walk child = sphere.walk;
  child.push_back(sphere.dart);
  (void)g;
  return {sphere.walk, std::move(child)};
}

Walk step(const ModelGraph& g, const Walk& w, DartIndex dart) {
  if (!w.empty() && w.back() == g.opposite(dart)) return Walk(w.begin(), w.end() - 1);
  Walk out = w;
  out.push_back(dart);
  return out;
}

std::vector<TreeVertex> neighbors(const ModelGraph& g, const TreeVertex& v) {
  check_vertex(g, v);
  std::vector<TreeVertex> out;
  if (v.is_pants()) {
    for (DartIndex d : g.darts_at(end_vertex(g, v.walk))) out.push_back(sphere_vertex(g, v.walk, d));
  } else {
    auto [a, b] = endpoints(g, v);
    out.push_back(TreeVertex::pants(std::move(a)));
    out.push_back(TreeVertex::pants(std::move(b)));
  }
  return out;
}

DeckElement make_deck_element(const ModelGraph& g, Walk word) {
  if (!is_walk(g, word))
    throw Error(ErrorKind::BadWord, "deck word is not a walk from the base: [" +
                                        word_to_string(g, word) + "]");
  if (!is_reduced_walk(g, word))
    throw Error(ErrorKind::BadWord, "deck word is not reduced: [" + word_to_string(g, word) + "]");
  if (end_vertex(g, word) != g.base())
    throw Error(ErrorKind::BadWord, "deck word is not closed: [" + word_to_string(g, word) + "]");
  return {std::move(word)};
}

DeckElement compose(const ModelGraph& g, const DeckElement& a, const DeckElement& b) {
  return {concat(g, a.word, b.word)};
}

DeckElement inverse(const ModelGraph& g, const DeckElement& a) {
  return {inverse_path(g, a.word)};
}

Walk act(const ModelGraph& g, const DeckElement& h, const Walk& pants_walk) {
  return concat(g, h.word, pants_walk);
}

TreeVertex act(const ModelGraph& g, const DeckElement& h, const TreeVertex& v) {
  if (v.is_pants()) return TreeVertex::pants(act(g, h, v.walk));
  return sphere_vertex(g, act(g, h, v.walk), v.dart);
}

std::optional<DeckElement> transporter(const ModelGraph& g, const TreeVertex& u,
                                       const TreeVertex& w) {
  check_vertex(g, u);
  check_vertex(g, w);
  if (u.kind != w.kind || base_cell(g, u) != base_cell(g, w)) return std::nullopt;
  if (u.is_pants() || u.dart == w.dart)
    return DeckElement{concat(g, u.walk, inverse_path(g, w.walk))};
  // Same edge, opposite darts: re-encode w from its other endpoint.
  Walk other = w.walk;
  other.push_back(w.dart);
  return DeckElement{concat(g, u.walk, inverse_path(g, other))};
}

std::optional<TreeVertex> parent(const ModelGraph& g, const TreeVertex& v) {
  if (v.is_sphere()) return TreeVertex::pants(v.walk);
  if (v.walk.empty()) return std::nullopt;
  Walk up(v.walk.begin(), v.walk.end() - 1);
  return sphere_vertex(g, up, v.walk.back());
}

int depth(const TreeVertex& v) {
  return 2 * static_cast<int>(v.walk.size()) + (v.is_sphere() ? 1 : 0);
}

std::vector<TreeVertex> tree_path(const ModelGraph& g, const TreeVertex& u,
                                  const TreeVertex& v) {
  check_vertex(g, u);
  check_vertex(g, v);
  std::vector<TreeVertex> front{u};
  std::vector<TreeVertex> back{v};
  while (depth(front.back()) > depth(back.back())) front.push_back(*parent(g, front.back()));
  while (depth(back.back()) > depth(front.back())) back.push_back(*parent(g, back.back()));
  while (front.back() != back.back()) {
    front.push_back(*parent(g, front.back()));
    back.push_back(*parent(g, back.back()));
  }
  back.pop_back();
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

nlohmann::json walk_to_json(const ModelGraph& g, const Walk& w) {
  nlohmann::json out = nlohmann::json::array();
  for (DartIndex d : w) out.push_back(g.dart_name(d));
  return out;
}

Walk walk_from_json(const ModelGraph& g, const nlohmann::json& doc, const std::string& where) {
  if (!doc.is_array()) throw Error(ErrorKind::ParseError, where + ": expected array of dart ids");
  Walk w;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_string())
      throw Error(ErrorKind::ParseError, where + "/" + std::to_string(i) + ": expected dart id");
    auto d = g.find_dart(doc[i].get<std::string>());
    if (!d)
      throw Error(ErrorKind::ForeignVertex,
                  where + "/" + std::to_string(i) + ": unknown dart '" + doc[i].get<std::string>() + "'");
    w.push_back(*d);
  }
  return w;
}

std::string word_to_string(const ModelGraph& g, const Walk& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += (w[i] >= 0 && w[i] < g.dart_count()) ? g.dart_name(w[i]) : "?";
  }
  return out;
}

DeckElement parse_deck_word(const ModelGraph& g, const std::string& text) {
  Walk w;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string id = text.substr(start, comma - start);
    auto d = g.find_dart(id);
    if (!d) throw Error(ErrorKind::BadWord, "unknown dart '" + id + "' in deck word");
    w.push_back(*d);
    start = comma + 1;
  }
  return make_deck_element(g, std::move(w));
}

}  // namespace sphereint
