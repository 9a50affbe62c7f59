#include "orbitkit/upword.hpp"

#include <algorithm>

namespace orbitkit {

UPWord up_canonicalize(Word pre, Word period) {
  if (period.empty()) throw PreconditionError("up_canonicalize: empty period");

  // Shrink the period to its primitive root.
  const std::size_t n = period.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool tiles = true;
    for (std::size_t i = d; i < n && tiles; ++i) tiles = period[i] == period[i - d];
    if (tiles) {
      period.resize(d);
      break;
    }
  }

  // Absorb the preperiod into the period: u'c (v'c)^ω = u' (cv')^ω.
  // Rotating a primitive word keeps it primitive.
  while (!pre.empty() && pre.back() == period.back()) {
    pre.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return UPWord{std::move(pre), std::move(period)};
}

LetterId up_at(const UPWord& x, std::size_t i) {
  if (i < x.pre.size()) return x.pre[i];
  return x.period[(i - x.pre.size()) % x.period.size()];
}

Word up_prefix(const UPWord& x, std::size_t n) {
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(up_at(x, i));
  return w;
}

std::size_t UPWordHash::operator()(const UPWord& x) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(x.pre.size());
  for (LetterId l : x.pre) mix(static_cast<std::uint64_t>(l) + 1);
  mix(0xabcdef);
  for (LetterId l : x.period) mix(static_cast<std::uint64_t>(l) + 1);
  return static_cast<std::size_t>(h);
}

} // namespace orbitkit
