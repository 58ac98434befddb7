#pragma once

// Brute-force ring isomorphism search for small orders, used as an oracle
// (identity component of R[G] vs R, Peirce glue cross-checks). Backtracks
// over a generating sequence, pruning candidate images by cheap per-element
// invariants.

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "grw/finite_ring.hpp"

namespace grw {

namespace detail {

struct ElementProfile {
  int additive_order;
  int mult_period;  // length of the eventual cycle of powers
  bool idempotent, nilpotent;
  bool operator==(const ElementProfile&) const = default;
};

inline ElementProfile profile(const FiniteRing& r, Elem x) {
  ElementProfile p{};
  Elem y = x;
  p.additive_order = 1;
  while (y != r.zero) { y = r.plus(y, x); ++p.additive_order; }
  p.idempotent = r.times(x, x) == x;
  p.nilpotent = r.is_nilpotent(x);
  // power sequence period
  std::vector<Elem> seen;
  y = x;
  int period = 0;
  for (int k = 0; k <= r.order; ++k) {
    auto it = std::find(seen.begin(), seen.end(), y);
    if (it != seen.end()) { period = static_cast<int>(seen.end() - it); break; }
    seen.push_back(y);
    y = r.times(y, x);
  }
  p.mult_period = period;
  return p;
}

// Closure of the currently-mapped subset under +, * and negation; extends the
// partial map or reports inconsistency.
inline bool propagate(const FiniteRing& a, const FiniteRing& b, std::vector<Elem>& img,
                      std::vector<char>& used, std::vector<Elem>& mapped) {
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    Elem x = mapped[i];
    for (std::size_t j = 0; j <= i; ++j) {
      Elem y = mapped[j];
      for (auto [s, t] : {std::pair{a.plus(x, y), b.plus(img[x], img[y])},
                          std::pair{a.times(x, y), b.times(img[x], img[y])},
                          std::pair{a.times(y, x), b.times(img[y], img[x])}}) {
        if (img[s] >= 0) {
          if (img[s] != t) return false;
        } else {
          if (used[t]) return false;
          img[s] = t;
          used[t] = 1;
          mapped.push_back(s);
        }
      }
    }
  }
  return true;
}

inline bool extend(const FiniteRing& a, const FiniteRing& b,
                   const std::vector<ElementProfile>& pa, const std::vector<ElementProfile>& pb,
                   std::vector<Elem> img, std::vector<char> used, std::vector<Elem> mapped) {
  if (!propagate(a, b, img, used, mapped)) return false;
  // next unmapped element
  Elem x = -1;
  for (Elem i = 0; i < a.order; ++i)
    if (img[i] < 0) { x = i; break; }
  if (x < 0) return true;  // total map, and propagate verified all relations
  for (Elem t = 0; t < b.order; ++t) {
    if (used[t] || !(pa[x] == pb[t])) continue;
    auto img2 = img;
    auto used2 = used;
    auto mapped2 = mapped;
    img2[x] = t;
    used2[t] = 1;
    mapped2.push_back(x);
    if (extend(a, b, pa, pb, std::move(img2), std::move(used2), std::move(mapped2))) return true;
  }
  return false;
}

}  // namespace detail

inline bool rings_isomorphic(const FiniteRing& a, const FiniteRing& b) {
  if (a.order != b.order) return false;
  std::vector<detail::ElementProfile> pa(a.order), pb(b.order);
  for (Elem x = 0; x < a.order; ++x) pa[x] = detail::profile(a, x);
  for (Elem x = 0; x < b.order; ++x) pb[x] = detail::profile(b, x);
  // invariant multisets must match
  {
    auto key = [](const detail::ElementProfile& p) {
      return std::tuple{p.additive_order, p.mult_period, p.idempotent, p.nilpotent};
    };
    std::vector<std::tuple<int, int, bool, bool>> ka, kb;
    for (auto& p : pa) ka.push_back(key(p));
    for (auto& p : pb) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return false;
  }
  std::vector<Elem> img(a.order, -1);
  std::vector<char> used(b.order, 0);
  std::vector<Elem> mapped;
  img[a.zero] = b.zero;
  used[b.zero] = 1;
  mapped.push_back(a.zero);
  if (a.one != a.zero) {
    if (used[b.one]) return a.order == 1;
    img[a.one] = b.one;
    used[b.one] = 1;
    mapped.push_back(a.one);
  }
  return detail::extend(a, b, pa, pb, std::move(img), std::move(used), std::move(mapped));
}

}  // namespace grw
