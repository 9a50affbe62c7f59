#include "orbitkit/dot.hpp"

#include <sstream>

#include "orbitkit/io.hpp"

namespace orbitkit {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string orbit_to_dot(const Automaton& a, const OrbitalTransducer& t) {
  std::ostringstream out;
  out << "digraph orbital {\n";
  out << "  // root: " << escape(render_word(a, t.root))
      << "; state sequences rendered in paper order (last-acting leftmost)\n";
  out << "  rankdir=LR;\n";
  for (std::size_t n = 0; n < t.nodes.size(); ++n)
    out << "  n" << n << " [label=\"" << escape(render_word(a, t.nodes[n]))
        << (n == 0 ? "\", shape=doublecircle];\n" : "\"];\n");
  for (std::size_t n = 0; n < t.nodes.size(); ++n) {
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
      const auto& e = t.edges[n][b];
      if (!e) continue;
      out << "  n" << n << " -> n" << e->target << " [label=\""
          << escape(render_seq_paper(a, t.blocks[b])) << " / "
          << escape(render_seq_paper(a, e->output)) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string cayley_to_dot(const Automaton& a, const CayleyGraph& g) {
  std::ostringstream out;
  out << "digraph cayley {\n";
  out << "  // left Cayley graph: x -g-> g·x; labels in paper order\n";
  for (std::size_t n = 0; n < g.elements.size(); ++n)
    out << "  n" << n << " [label=\"" << escape(render_seq_paper(a, g.reprs[n])) << "\"];\n";
  for (std::size_t n = 0; n < g.succ.size(); ++n) {
    for (std::size_t gi = 0; gi < g.succ[n].size(); ++gi) {
      if (g.succ[n][gi] < 0) continue;
      out << "  n" << n << " -> n" << g.succ[n][gi] << " [label=\""
          << escape(render_seq_paper(a, g.gens[gi])) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

} // namespace orbitkit
