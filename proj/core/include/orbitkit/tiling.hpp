#pragma once

#include <array>
#include <iosfwd>
#include <variant>

#include "orbitkit/automaton.hpp"
#include "orbitkit/orbit.hpp"

namespace orbitkit {

struct Tile {
  std::int32_t n, w, s, e; // color indices
  bool operator==(const Tile&) const = default;
};

struct TileSet {
  std::string name;
  std::vector<std::string> colors;
  std::vector<Tile> tiles;

  /// Indices of two tiles sharing (south, west), or nullopt when the set is
  /// SW-deterministic.
  std::optional<std::pair<std::size_t, std::size_t>> sw_conflict() const;
};

/// States and alphabet are the colors; each tile (N, W, S, E) becomes the
/// transition W -S/N-> E.  SW-determinism makes the result deterministic;
/// violations throw ParseError carrying the witness tile pair.
Automaton tileset_to_automaton(const TileSet& ts);

/// Inverse direction: one tile per transition, colors = states and letters
/// (names primed on collision).
TileSet automaton_to_tileset(const Automaton& a);

/// A tiled rectangle of width X+1 and height Y+1 with its horizontal color
/// sequences h_0 .. h_{Y+1}; non-y-recurrent when those are pairwise
/// distinct.
struct RectTiling {
  std::size_t width = 0;  // X+1
  std::size_t height = 0; // Y+1
  std::vector<std::vector<std::int32_t>> grid; // [row y][x] -> tile index
  std::vector<std::vector<std::int32_t>> rows; // h_0 .. h_{Y+1}, color indices
};

/// Searches bottom-row words of growing length (then lexicographic) and
/// asks for a simple path of Y+1 edges in the orbital graph of the
/// associated automaton; rows of such a path are exactly the horizontal
/// color sequences of a non-y-recurrent rectangle.
std::variant<RectTiling, NotFoundWithinBudget> find_non_y_recurrent(
    const TileSet& ts, std::size_t y, std::size_t width_budget,
    std::size_t node_budget = kDefaultNodeBudget);

/// Independent adjacency + distinct-rows validation; returns an error
/// description or nullopt when the tiling is good.
std::optional<std::string> validate_rect_tiling(const TileSet& ts, const RectTiling& t);

/// One "N/W·S/E" token per cell, top row first, then the h-sequences.
std::string render_tiling(const TileSet& ts, const RectTiling& t);

/// Tile file format: `tileset <name>`, `colors <tok> ...`,
/// `tile <N> <W> <S> <E>` per tile; '#' comments.
TileSet parse_tileset(std::istream& in);
TileSet parse_tileset_text(const std::string& text);
TileSet load_tileset(const std::string& path);
std::string serialize_tileset(const TileSet& ts);

} // namespace orbitkit
