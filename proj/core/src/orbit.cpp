#include "orbitkit/orbit.hpp"

#include <deque>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace orbitkit {

GenLang GenLang::f_star(std::vector<StateSeq> blocks) {
  if (blocks.empty()) throw PreconditionError("GenLang: F must be non-empty");
  GenLang g(Kind::FStar);
  g.blocks_ = std::move(blocks);
  return g;
}

GenLang GenLang::principal_left_ideal(StateSeq p) {
  if (p.empty()) throw PreconditionError("GenLang: ideal block must be non-empty");
  GenLang g(Kind::PrincipalLeftIdeal);
  g.ideal_ = std::move(p);
  return g;
}

std::vector<StateSeq> GenLang::blocks_for(const Automaton& a) const {
  switch (kind_) {
    case Kind::FStar:
      return blocks_;
    case Kind::FullStar: {
      if (!a.is_finite())
        throw UnsupportedError(
            "FullStar orbit on an oracle-backed automaton: pass explicit generators instead");
      std::vector<StateSeq> bs;
      for (StateId q = 0; q < a.state_count(); ++q) bs.push_back({q});
      return bs;
    }
    case Kind::PrincipalLeftIdeal: {
      if (!a.is_finite())
        throw UnsupportedError(
            "principal-left-ideal orbit on an oracle-backed automaton is not supported");
      std::vector<StateSeq> bs{ideal_};
      for (StateId q = 0; q < a.state_count(); ++q) bs.push_back({q});
      return bs;
    }
  }
  throw InternalError("GenLang: bad kind");
}

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (LetterId l : w) {
      h ^= static_cast<std::uint64_t>(l) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace

OrbitalTransducer orbit_word(const Automaton& a, const GenLang& lang, const Word& u,
                             std::size_t node_budget) {
  OrbitalTransducer t;
  t.root = u;
  t.blocks = lang.blocks_for(a);
  t.ideal_rooted = lang.is_ideal();

  std::unordered_map<Word, std::int32_t, WordHash> index;
  index.emplace(u, 0);
  t.nodes.push_back(u);
  t.edges.emplace_back(t.blocks.size());

  // A node becomes "interior" once reached along an edge; interior nodes
  // expand through every block, the root of an ideal only through block 0.
  std::vector<bool> interior{!lang.is_ideal()};
  std::deque<std::int32_t> queue{0};
  std::vector<bool> expanded_full{false}, expanded_root{false};

  auto touch = [&](const Word& w) -> std::int32_t {
    auto it = index.find(w);
    if (it != index.end()) return it->second;
    if (t.nodes.size() >= node_budget)
      throw BudgetError("orbit_word: node budget of " + std::to_string(node_budget) +
                        " exceeded");
    auto id = static_cast<std::int32_t>(t.nodes.size());
    index.emplace(w, id);
    t.nodes.push_back(w);
    t.edges.emplace_back(t.blocks.size());
    interior.push_back(false);
    expanded_full.push_back(false);
    expanded_root.push_back(false);
    return id;
  };

  auto expand = [&](std::int32_t id, std::size_t block) {
    if (t.edges[id][block]) return;
    auto r = act_finite(a, t.blocks[block], t.nodes[id]);
    if (std::holds_alternative<ActUndefined>(r)) return;
    auto& res = std::get<ActResult>(r);
    std::int32_t target = touch(res.output);
    t.edges[id][block] = OrbitalEdge{std::move(res.residual), target};
    if (!interior[target]) {
      interior[target] = true;
      queue.push_back(target);
    }
  };

  while (!queue.empty()) {
    std::int32_t id = queue.front();
    queue.pop_front();
    if (interior[id]) {
      if (expanded_full[id]) continue;
      expanded_full[id] = true;
      for (std::size_t b = 0; b < t.blocks.size(); ++b) expand(id, b);
    } else if (!expanded_root[id]) {
      expanded_root[id] = true;
      expand(id, 0);
    }
  }
  // The ideal's root may never have been revisited; its non-p edges stay
  // absent, which is exactly the L-orbital graph.
  if (lang.is_ideal() && interior[0] && !expanded_full[0]) {
    expanded_full[0] = true;
    for (std::size_t b = 0; b < t.blocks.size(); ++b) expand(0, b);
  }
  return t;
}

std::vector<std::int64_t> OrbitalTransducer::canonical_encoding() const {
  std::vector<std::int64_t> enc;
  enc.push_back(static_cast<std::int64_t>(nodes.size()));
  enc.push_back(static_cast<std::int64_t>(blocks.size()));
  enc.push_back(ideal_rooted ? 1 : 0);
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& e = edges[n][b];
      if (!e) {
        enc.push_back(-1);
        continue;
      }
      enc.push_back(e->target);
      enc.push_back(static_cast<std::int64_t>(e->output.size()));
      for (StateId s : e->output) enc.push_back(s);
    }
  }
  return enc;
}

std::variant<IsoMap, NotIso> orbital_transducer_iso(const OrbitalTransducer& lhs,
                                                    const OrbitalTransducer& rhs) {
  if (lhs.blocks != rhs.blocks)
    throw PreconditionError("orbital_transducer_iso: different block sets");

  const std::int32_t unset = -1;
  std::vector<std::int32_t> fwd(lhs.nodes.size(), unset), bwd(rhs.nodes.size(), unset);
  // parent pointers for path reconstruction
  std::vector<std::int32_t> parent(lhs.nodes.size(), unset), via(lhs.nodes.size(), unset);

  auto path_to = [&](std::int32_t node, std::int32_t last_block) {
    std::vector<std::int32_t> path;
    for (std::int32_t cur = node; cur != 0 && cur != unset; cur = parent[cur])
      path.push_back(via[cur]);
    std::reverse(path.begin(), path.end());
    if (last_block >= 0) path.push_back(last_block);
    return path;
  };

  fwd[0] = 0;
  bwd[0] = 0;
  std::queue<std::int32_t> q;
  q.push(0);
  while (!q.empty()) {
    std::int32_t x = q.front();
    q.pop();
    std::int32_t y = fwd[x];
    for (std::size_t b = 0; b < lhs.blocks.size(); ++b) {
      const auto& ex = lhs.edges[x][b];
      const auto& ey = rhs.edges[y][b];
      if (static_cast<bool>(ex) != static_cast<bool>(ey))
        return NotIso{path_to(x, static_cast<std::int32_t>(b))};
      if (!ex) continue;
      if (ex->output != ey->output) return NotIso{path_to(x, static_cast<std::int32_t>(b))};
      std::int32_t tx = ex->target, ty = ey->target;
      if (fwd[tx] == unset && bwd[ty] == unset) {
        fwd[tx] = ty;
        bwd[ty] = tx;
        parent[tx] = x;
        via[tx] = static_cast<std::int32_t>(b);
        q.push(tx);
      } else if (fwd[tx] != ty) {
        return NotIso{path_to(x, static_cast<std::int32_t>(b))};
      }
    }
  }
  if (lhs.nodes.size() != rhs.nodes.size())
    return NotIso{}; // disconnected parts cannot exist; defensive
  return IsoMap{std::move(fwd)};
}

namespace {

struct EncodingHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace

std::variant<Word, NotFoundWithinBudget> extend_orbit(const Automaton& a, const GenLang& lang,
                                                      const Word& u, std::size_t max_ext_len,
                                                      std::size_t node_budget) {
  if (!a.is_finite()) throw UnsupportedError("extend_orbit: needs a finite backend");
  OrbitalTransducer base = orbit_word(a, lang, u, node_budget);
  const std::size_t base_size = base.size();

  std::unordered_set<std::vector<std::int64_t>, EncodingHash> seen;
  seen.insert(base.canonical_encoding());

  std::size_t explored = 0;
  std::deque<Word> frontier{Word{}};
  while (!frontier.empty()) {
    Word x = std::move(frontier.front());
    frontier.pop_front();
    for (LetterId l = 0; l < a.alphabet_size(); ++l) {
      Word ext = x;
      ext.push_back(l);
      Word candidate = u;
      candidate.insert(candidate.end(), ext.begin(), ext.end());
      OrbitalTransducer t = orbit_word(a, lang, candidate, node_budget);
      explored += t.size();
      if (t.size() > base_size) return ext;
      if (explored > node_budget) return NotFoundWithinBudget{};
      if (!seen.insert(t.canonical_encoding()).second) continue; // isomorphic subtree pruned
      if (ext.size() < max_ext_len) frontier.push_back(std::move(ext));
    }
  }
  return NotFoundWithinBudget{};
}

std::variant<GrowthCertificate, Stalled> witness_search(const Automaton& a, const GenLang& lang,
                                                        std::size_t target_size,
                                                        std::size_t max_ext_len,
                                                        std::size_t node_budget) {
  GrowthCertificate cert;
  Word cur;
  std::size_t size = orbit_word(a, lang, cur, node_budget).size();
  cert.chain.push_back(GrowthLink{cur, size});
  while (size < target_size) {
    auto ext = extend_orbit(a, lang, cur, max_ext_len, node_budget);
    if (std::holds_alternative<NotFoundWithinBudget>(ext)) return Stalled{cur, size};
    const Word& x = std::get<Word>(ext);
    cur.insert(cur.end(), x.begin(), x.end());
    size = orbit_word(a, lang, cur, node_budget).size();
    cert.chain.push_back(GrowthLink{cur, size});
  }
  return cert;
}

std::variant<UpOrbit, ExceededBudget> orbit_up(const Automaton& a, const GenLang& lang,
                                               const UPWord& x, std::size_t node_budget,
                                               std::size_t max_letters) {
  const std::vector<StateSeq> blocks = lang.blocks_for(a);

  UpOrbit orbit;
  std::unordered_map<UPWord, std::int32_t, UPWordHash> index;
  orbit.elements.push_back(x);
  index.emplace(x, 0);

  std::vector<bool> interior{!lang.is_ideal()};
  std::deque<std::int32_t> queue{0};
  std::vector<bool> expanded{false};
  bool root_expanded_restricted = false;

  auto expand_via = [&](std::int32_t id, std::size_t b) -> bool {
    auto r = act_up(a, blocks[b], orbit.elements[id]);
    if (std::holds_alternative<UpUndefined>(r)) return true;
    UPWord img = std::get<UPWord>(std::move(r));
    if (img.total_size() > max_letters) return false;
    auto it = index.find(img);
    std::int32_t target;
    if (it != index.end()) {
      target = it->second;
    } else {
      if (orbit.elements.size() >= node_budget) return false;
      target = static_cast<std::int32_t>(orbit.elements.size());
      index.emplace(img, target);
      orbit.elements.push_back(std::move(img));
      interior.push_back(false);
      expanded.push_back(false);
    }
    if (!interior[target]) {
      interior[target] = true;
      queue.push_back(target);
    }
    return true;
  };

  while (!queue.empty()) {
    std::int32_t id = queue.front();
    queue.pop_front();
    if (interior[id]) {
      if (expanded[id]) continue;
      expanded[id] = true;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (!expand_via(id, b)) return ExceededBudget{queue.size() + 1};
    } else if (!root_expanded_restricted) {
      root_expanded_restricted = true;
      if (!expand_via(id, 0)) return ExceededBudget{queue.size() + 1};
    }
  }
  if (lang.is_ideal() && interior[0] && !expanded[0]) {
    expanded[0] = true;
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (!expand_via(0, b)) return ExceededBudget{1};
  }
  return orbit;
}

std::variant<CertifiedGrowth, GrowthUnknown> certify_infinite_up(const Automaton& a,
                                                                 const UPWord& x,
                                                                 std::size_t size_target,
                                                                 std::size_t prefix_budget) {
  if (!classify(a).complete)
    throw PreconditionError(
        "certify_infinite_up: prefix growth certifies ω-orbit growth only on complete automata");
  if (size_target <= 1) return CertifiedGrowth{0, 1};

  const GenLang full = GenLang::full_star();
  for (std::size_t k = 1; k <= prefix_budget; ++k) {
    Word w = up_prefix(x, k);
    // Capped BFS: any size_target distinct images already certify.
    std::unordered_set<Word, WordHash> reached;
    std::deque<Word> queue{w};
    reached.insert(w);
    std::vector<StateSeq> blocks = full.blocks_for(a);
    while (!queue.empty() && reached.size() < size_target) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      for (const StateSeq& b : blocks) {
        auto r = act_finite(a, b, cur);
        if (std::holds_alternative<ActUndefined>(r)) continue;
        Word img = std::get<ActResult>(std::move(r)).output;
        if (reached.insert(img).second) {
          if (reached.size() >= size_target) break;
          queue.push_back(std::move(img));
        }
      }
    }
    if (reached.size() >= size_target) return CertifiedGrowth{k, reached.size()};
  }
  return GrowthUnknown{};
}

namespace {

bool path_dfs(const Automaton& a, const std::vector<StateSeq>& blocks, OrbitPath& path,
              std::set<Word>& on_path, std::size_t remaining, std::size_t& steps,
              std::size_t node_budget) {
  if (remaining == 0) return true;
  if (++steps > node_budget) return false;
  const Word cur = path.nodes.back(); // by value: the recursion grows the vector
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto r = act_finite(a, blocks[b], cur);
    if (std::holds_alternative<ActUndefined>(r)) continue;
    Word img = std::get<ActResult>(std::move(r)).output;
    if (on_path.count(img)) continue;
    path.nodes.push_back(img);
    path.labels.push_back(static_cast<std::int32_t>(b));
    on_path.insert(img);
    if (path_dfs(a, blocks, path, on_path, remaining - 1, steps, node_budget)) return true;
    on_path.erase(img);
    path.nodes.pop_back();
    path.labels.pop_back();
  }
  return false;
}

} // namespace

std::variant<OrbitPath, NotFoundWithinBudget> orbit_path_search(const Automaton& a,
                                                                const GenLang& lang, const Word& u,
                                                                std::size_t length,
                                                                std::size_t node_budget) {
  // Ideal-rooted paths would need the first edge restricted to the p block;
  // the ideal case is not needed by any caller, so reject it rather than
  // guess semantics.
  if (lang.is_ideal())
    throw UnsupportedError("orbit_path_search: principal-left-ideal languages not supported");
  std::vector<StateSeq> blocks = lang.blocks_for(a);
  OrbitPath path;
  path.nodes.push_back(u);
  std::set<Word> on_path{u};
  std::size_t steps = 0;
  if (path_dfs(a, blocks, path, on_path, length, steps, node_budget)) return path;
  return NotFoundWithinBudget{};
}

} // namespace orbitkit
