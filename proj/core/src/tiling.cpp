#include "orbitkit/tiling.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace orbitkit {

std::optional<std::pair<std::size_t, std::size_t>> TileSet::sw_conflict() const {
  std::map<std::pair<std::int32_t, std::int32_t>, std::size_t> seen;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    auto [it, fresh] = seen.emplace(std::make_pair(tiles[i].s, tiles[i].w), i);
    if (!fresh) return std::make_pair(it->second, i);
  }
  return std::nullopt;
}

Automaton tileset_to_automaton(const TileSet& ts) {
  if (auto conflict = ts.sw_conflict()) {
    std::ostringstream msg;
    msg << "tile set '" << ts.name << "' is not SW-deterministic: tiles " << conflict->first
        << " and " << conflict->second << " share south color '"
        << ts.colors[ts.tiles[conflict->first].s] << "' and west color '"
        << ts.colors[ts.tiles[conflict->first].w] << "'";
    throw ParseError(msg.str());
  }
  Automaton a(ts.name, ts.colors, ts.colors);
  for (const Tile& t : ts.tiles) a.add_transition(t.w, t.s, t.n, t.e);
  return a;
}

TileSet automaton_to_tileset(const Automaton& a) {
  if (!a.is_finite()) throw UnsupportedError("automaton_to_tileset: needs a finite backend");
  TileSet ts;
  ts.name = a.name();
  std::vector<std::int32_t> state_color(a.state_count());
  std::vector<std::int32_t> letter_color(a.alphabet_size());
  std::set<std::string> used;
  for (StateId q = 0; q < a.state_count(); ++q) {
    state_color[q] = static_cast<std::int32_t>(ts.colors.size());
    ts.colors.push_back(a.state_name(q));
    used.insert(ts.colors.back());
  }
  for (LetterId l = 0; l < a.alphabet_size(); ++l) {
    std::string nm = a.letter_name(l);
    while (used.count(nm)) nm += "'";
    used.insert(nm);
    letter_color[l] = static_cast<std::int32_t>(ts.colors.size());
    ts.colors.push_back(std::move(nm));
  }
  for (const Transition& t : a.transitions())
    ts.tiles.push_back(
        Tile{letter_color[t.out], state_color[t.from], letter_color[t.in], state_color[t.to]});
  return ts;
}

std::variant<RectTiling, NotFoundWithinBudget> find_non_y_recurrent(const TileSet& ts,
                                                                    std::size_t y,
                                                                    std::size_t width_budget,
                                                                    std::size_t node_budget) {
  const Automaton a = tileset_to_automaton(ts);
  std::map<std::pair<std::int32_t, std::int32_t>, std::size_t> tile_of; // (west, south) -> tile
  for (std::size_t i = 0; i < ts.tiles.size(); ++i)
    tile_of.emplace(std::make_pair(ts.tiles[i].w, ts.tiles[i].s), i);

  const GenLang full = GenLang::full_star();
  // FullStar blocks are the single states in index order, so a path label
  // is directly the west color of its row.
  const int n_colors = static_cast<int>(ts.colors.size());
  for (std::size_t width = 1; width <= width_budget; ++width) {
    // bottom rows in lexicographic color order
    Word u(width, 0);
    for (;;) {
      auto found = orbit_path_search(a, full, u, y + 1, node_budget);
      if (auto* path = std::get_if<OrbitPath>(&found)) {
        RectTiling t;
        t.width = width;
        t.height = y + 1;
        for (const Word& row : path->nodes) {
          std::vector<std::int32_t> colors(row.begin(), row.end());
          t.rows.push_back(std::move(colors));
        }
        t.grid.assign(t.height, std::vector<std::int32_t>(width, -1));
        for (std::size_t row = 0; row < t.height; ++row) {
          StateId west = static_cast<StateId>(path->labels[row]);
          for (std::size_t xpos = 0; xpos < width; ++xpos) {
            LetterId south = path->nodes[row][xpos];
            auto step = a.step(west, south);
            if (!step) throw InternalError("find_non_y_recurrent: path edge lost its transition");
            auto it = tile_of.find(std::make_pair(static_cast<std::int32_t>(west),
                                                  static_cast<std::int32_t>(south)));
            if (it == tile_of.end())
              throw InternalError("find_non_y_recurrent: transition without a tile");
            t.grid[row][xpos] = static_cast<std::int32_t>(it->second);
            west = step->next;
          }
        }
        if (auto err = validate_rect_tiling(ts, t))
          throw InternalError("find_non_y_recurrent: reconstructed tiling invalid: " + *err);
        return t;
      }
      // next word of this width
      std::size_t pos = width;
      while (pos > 0 && u[pos - 1] == n_colors - 1) u[--pos] = 0;
      if (pos == 0) break;
      ++u[pos - 1];
    }
  }
  return NotFoundWithinBudget{};
}

std::optional<std::string> validate_rect_tiling(const TileSet& ts, const RectTiling& t) {
  if (t.grid.size() != t.height) return "grid height mismatch";
  if (t.rows.size() != t.height + 1) return "expected height+1 horizontal color sequences";
  for (const auto& row : t.grid)
    if (row.size() != t.width) return "grid width mismatch";
  for (const auto& row : t.rows)
    if (row.size() != t.width) return "color sequence width mismatch";

  for (std::size_t y = 0; y < t.height; ++y) {
    for (std::size_t x = 0; x < t.width; ++x) {
      const Tile& tile = ts.tiles.at(t.grid[y][x]);
      if (tile.s != t.rows[y][x]) return "south color disagrees with h-sequence";
      if (tile.n != t.rows[y + 1][x]) return "north color disagrees with h-sequence";
      if (x + 1 < t.width) {
        const Tile& right = ts.tiles.at(t.grid[y][x + 1]);
        if (tile.e != right.w) return "east/west mismatch";
      }
      if (y + 1 < t.height) {
        const Tile& above = ts.tiles.at(t.grid[y + 1][x]);
        if (tile.n != above.s) return "north/south mismatch";
      }
    }
  }
  std::set<std::vector<std::int32_t>> distinct(t.rows.begin(), t.rows.end());
  if (distinct.size() != t.rows.size()) return "horizontal color sequences are not pairwise distinct";
  return std::nullopt;
}

std::string render_tiling(const TileSet& ts, const RectTiling& t) {
  std::ostringstream out;
  for (std::size_t y = t.height; y-- > 0;) {
    for (std::size_t x = 0; x < t.width; ++x) {
      const Tile& tile = ts.tiles.at(t.grid[y][x]);
      if (x) out << "  ";
      out << ts.colors[tile.n] << "/" << ts.colors[tile.w] << "·" << ts.colors[tile.s] << "/"
          << ts.colors[tile.e];
    }
    out << "\n";
  }
  out << "h:";
  for (const auto& row : t.rows) {
    out << " ";
    for (std::size_t x = 0; x < row.size(); ++x) out << ts.colors[row[x]];
  }
  out << "\n";
  return out.str();
}

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

} // namespace

TileSet parse_tileset(std::istream& in) {
  TileSet ts;
  std::map<std::string, std::int32_t> color_index;
  bool have_colors = false, have_name = false;
  std::string line;
  int lineno = 0;
  auto color = [&](const std::string& tok) {
    auto it = color_index.find(tok);
    if (it == color_index.end())
      throw ParseError("line " + std::to_string(lineno) + ": unknown color '" + tok + "'");
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    if (toks[0] == "tileset") {
      if (toks.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": tileset <name>");
      ts.name = toks[1];
      have_name = true;
    } else if (toks[0] == "colors") {
      if (toks.size() < 2) throw ParseError("line " + std::to_string(lineno) + ": empty colors");
      if (have_colors) throw ParseError("line " + std::to_string(lineno) + ": duplicate colors");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (!color_index.emplace(toks[i], static_cast<std::int32_t>(ts.colors.size())).second)
          throw ParseError("line " + std::to_string(lineno) + ": duplicate color '" + toks[i] + "'");
        ts.colors.push_back(toks[i]);
      }
      have_colors = true;
    } else if (toks[0] == "tile") {
      if (toks.size() != 5)
        throw ParseError("line " + std::to_string(lineno) + ": tile <N> <W> <S> <E>");
      ts.tiles.push_back(Tile{color(toks[1]), color(toks[2]), color(toks[3]), color(toks[4])});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + toks[0] + "'");
    }
  }
  if (!have_name) ts.name = "tiles";
  if (!have_colors) throw ParseError("tile set: missing colors");
  return ts;
}

TileSet parse_tileset_text(const std::string& text) {
  std::istringstream in(text);
  return parse_tileset(in);
}

TileSet load_tileset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_tileset(in);
}

std::string serialize_tileset(const TileSet& ts) {
  std::ostringstream out;
  out << "tileset " << ts.name << "\ncolors";
  for (const std::string& c : ts.colors) out << " " << c;
  out << "\n";
  for (const Tile& t : ts.tiles)
    out << "tile " << ts.colors[t.n] << " " << ts.colors[t.w] << " " << ts.colors[t.s] << " "
        << ts.colors[t.e] << "\n";
  return out.str();
}

} // namespace orbitkit
