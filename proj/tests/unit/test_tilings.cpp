#include "doctest.h"

#include <set>

#include "orbitkit/corpus.hpp"
#include "orbitkit/io.hpp"
#include "orbitkit/tiling.hpp"

using namespace orbitkit;

TEST_CASE("tiles become transitions") {
  TileSet ts;
  ts.name = "demo";
  ts.colors = {"1", "q", "0", "id"};
  ts.tiles = {Tile{0, 1, 2, 3}}; // N=1 W=q S=0 E=id
  Automaton a = tileset_to_automaton(ts);
  auto s = a.step(a.state("q"), a.letter("0"));
  REQUIRE(s);
  CHECK(a.letter_name(s->out) == "1");
  CHECK(a.state_name(s->next) == "id");
}

TEST_CASE("SW conflicts are rejected with a witness") {
  TileSet ts;
  ts.name = "bad";
  ts.colors = {"a", "b"};
  ts.tiles = {Tile{0, 0, 1, 0}, Tile{1, 0, 1, 1}}; // same (S=b, W=a)
  REQUIRE(ts.sw_conflict());
  CHECK(ts.sw_conflict()->first == 0);
  CHECK(ts.sw_conflict()->second == 1);
  CHECK_THROWS_AS(tileset_to_automaton(ts), ParseError);
}

TEST_CASE("round trip through tiles preserves every corpus automaton") {
  for (const auto& name : corpus_names()) {
    Automaton a = corpus_get(name).automaton;
    TileSet ts = automaton_to_tileset(a);
    CHECK(ts.tiles.size() == a.transitions().size());
    Automaton back = tileset_to_automaton(ts);
    // states and letters embed by name; every transition survives
    for (const Transition& t : a.transitions()) {
      auto s = back.step(back.state(a.state_name(t.from)), back.letter(a.letter_name(t.in)));
      REQUIRE(s);
      CHECK(back.letter_name(s->out) == a.letter_name(t.out));
      CHECK(back.state_name(s->next) == a.state_name(t.to));
    }
    CHECK(back.transitions().size() == a.transitions().size());
  }
}

TEST_CASE("tile file format round-trips") {
  TileSet ts = automaton_to_tileset(corpus_get("adding-machine").automaton);
  std::string text = serialize_tileset(ts);
  TileSet back = parse_tileset_text(text);
  CHECK(back.colors == ts.colors);
  CHECK(back.tiles == ts.tiles);
  CHECK(serialize_tileset(back) == text);
}

TEST_CASE("non-y-recurrent rectangles from the adding machine") {
  TileSet ts = automaton_to_tileset(corpus_get("adding-machine").automaton);
  auto r = find_non_y_recurrent(ts, 2, 6);
  REQUIRE(std::holds_alternative<RectTiling>(r));
  const auto& t = std::get<RectTiling>(r);
  CHECK(t.width == 2);
  CHECK(t.height == 3);
  REQUIRE(t.rows.size() == 4);
  auto row_word = [&](std::size_t y) {
    std::string s;
    for (auto c : t.rows[y]) s += ts.colors[c];
    return s;
  };
  CHECK(row_word(0) == "00");
  CHECK(row_word(1) == "10");
  CHECK(row_word(2) == "01");
  CHECK(row_word(3) == "11");
  CHECK_FALSE(validate_rect_tiling(ts, t));
  CHECK_FALSE(render_tiling(ts, t).empty());
}

TEST_CASE("height zero needs only one tile row") {
  TileSet ts = automaton_to_tileset(corpus_get("adding-machine").automaton);
  auto r = find_non_y_recurrent(ts, 0, 4);
  REQUIRE(std::holds_alternative<RectTiling>(r));
  CHECK(std::get<RectTiling>(r).height == 1);
  CHECK(std::get<RectTiling>(r).width == 1);
}

TEST_CASE("bounded orbits bound the rectangle heights") {
  TileSet ts = automaton_to_tileset(corpus_get("t1").automaton);
  auto r = find_non_y_recurrent(ts, 10, 6);
  CHECK(std::holds_alternative<NotFoundWithinBudget>(r));
}

TEST_CASE("monotone in the height on successes") {
  TileSet ts = automaton_to_tileset(corpus_get("adding-machine").automaton);
  for (std::size_t y = 4; y-- > 0;) {
    auto r = find_non_y_recurrent(ts, y, 6);
    REQUIRE(std::holds_alternative<RectTiling>(r));
    CHECK_FALSE(validate_rect_tiling(ts, std::get<RectTiling>(r)));
  }
}

TEST_CASE("validation catches broken tilings") {
  TileSet ts = automaton_to_tileset(corpus_get("adding-machine").automaton);
  auto r = find_non_y_recurrent(ts, 2, 6);
  RectTiling t = std::get<RectTiling>(r);
  RectTiling bad = t;
  bad.rows[0][0] ^= 1;
  CHECK(validate_rect_tiling(ts, bad));
  RectTiling dup = t;
  dup.rows[3] = dup.rows[0];
  CHECK(validate_rect_tiling(ts, dup));
}
