#pragma once

// Brute-force, certificate-producing deciders: unit regular, graded unit
// regular, U-nil clean, graded U-nil clean, graded nil-good, G-clean and
// graded G-clean. Witness search order is canonical (idempotents ascending,
// then units ascending; the nilpotent part is forced), so identical inputs
// produce identical certificates.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grw/finite_ring.hpp"
#include "grw/grading.hpp"

namespace grw {

struct Witness {
  Elem x = 0;
  Elem f = 0;  // idempotent factor
  Elem u = 0;  // unit factor
  Elem n = 0;  // nilpotent part
  std::optional<Elem> degree;  // unset for x = 0 and for ungraded verdicts
};

struct VerdictStats {
  int units = 0, nilpotents = 0, idempotents = 0;
  std::map<Elem, int> gur_by_degree;  // graded verdicts only
};

struct PropertyVerdict {
  std::string property;
  bool holds = false;
  std::vector<Witness> witnesses;        // one per element, when holds
  std::optional<Elem> counterexample;    // when not
  VerdictStats stats;
};

struct NotDecomposable {
  long long searched = 0;  // size of the searched (f, u) space
};

// ur(R) = { e*u : e idempotent, u unit }
inline ElementSet unit_regular_elements(const FiniteRing& r) {
  ElementSet e = idempotents(r), u = units(r);
  std::vector<char> m(r.order, 0);
  for (Elem f : e.members)
    for (Elem v : u.members) m[r.times(f, v)] = 1;
  return ElementSet::from_mask(m);
}

// Per degree g: { f*u : f in Idem(R_e), u in U(R) and u in R_g }. A degree
// whose component carries no unit gets the empty set; 0 still belongs to
// gur(R) through degree e (0 = 0*1), which is why the deciders search the
// union of these sets rather than a single one.
inline std::vector<ElementSet> graded_unit_regular_elements(const GradedRing& r) {
  const FiniteRing& R = r.ring;
  ElementSet u = units(R);
  Elem e = r.group().identity;
  std::vector<Elem> idem_e;
  for (Elem x : r.component(e).members)
    if (R.times(x, x) == x) idem_e.push_back(x);
  std::vector<ElementSet> out(r.group().order);
  for (Elem g = 0; g < r.group().order; ++g) {
    std::vector<char> m(R.order, 0);
    for (Elem v : u.members) {
      if (!r.in_component(v, g)) continue;
      for (Elem f : idem_e) m[R.times(f, v)] = 1;
    }
    out[g] = ElementSet::from_mask(m);
  }
  return out;
}

namespace detail {

struct RingSets {
  ElementSet units_, nilpotents_, idempotents_;
};

inline RingSets classify(const FiniteRing& r) {
  return {units(r), nilpotents(r), idempotents(r)};
}

}  // namespace detail

// U-nil clean: every x = f*u + n with f*u unit regular and n nilpotent.
inline PropertyVerdict is_u_nil_clean(const FiniteRing& r) {
  auto sets = detail::classify(r);
  PropertyVerdict v;
  v.property = "u-nil-clean";
  v.stats = {sets.units_.size(), sets.nilpotents_.size(), sets.idempotents_.size(), {}};
  v.holds = true;
  for (Elem x = 0; x < r.order && v.holds; ++x) {
    bool found = false;
    for (Elem f : sets.idempotents_.members) {
      for (Elem u : sets.units_.members) {
        Elem n = r.sub(x, r.times(f, u));
        if (sets.nilpotents_.contains(n)) {
          v.witnesses.push_back({x, f, u, n, std::nullopt});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      v.holds = false;
      v.counterexample = x;
      v.witnesses.clear();
    }
  }
  return v;
}

// Boolean-only variant: materializes ur(R) once and scans nilpotent offsets,
// avoiding the per-element certificate search when no witnesses are needed.
inline std::pair<bool, std::optional<Elem>> u_nil_clean_quick(const FiniteRing& r) {
  ElementSet ur = unit_regular_elements(r);
  ElementSet nil = nilpotents(r);
  for (Elem x = 0; x < r.order; ++x) {
    bool found = false;
    for (Elem n : nil.members)
      if (ur.contains(r.sub(x, n))) { found = true; break; }
    if (!found) return {false, x};
  }
  return {true, std::nullopt};
}

// G-clean: every x = f*u + u' with u' a unit.
inline PropertyVerdict is_g_clean(const FiniteRing& r) {
  auto sets = detail::classify(r);
  PropertyVerdict v;
  v.property = "g-clean";
  v.stats = {sets.units_.size(), sets.nilpotents_.size(), sets.idempotents_.size(), {}};
  v.holds = true;
  for (Elem x = 0; x < r.order && v.holds; ++x) {
    bool found = false;
    for (Elem f : sets.idempotents_.members) {
      for (Elem u : sets.units_.members) {
        Elem up = r.sub(x, r.times(f, u));
        if (sets.units_.contains(up)) {
          v.witnesses.push_back({x, f, u, up, std::nullopt});
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      v.holds = false;
      v.counterexample = x;
      v.witnesses.clear();
    }
  }
  return v;
}

namespace detail {

struct GradedSearchContext {
  const GradedRing& r;
  ElementSet units_, nilpotents_;
  std::vector<Elem> idem_e;            // Idem(R_e), ascending
  std::vector<Elem> homog_units;       // homogeneous units, ascending
  std::vector<std::vector<Elem>> units_by_degree;  // per group element

  explicit GradedSearchContext(const GradedRing& ring) : r(ring) {
    const FiniteRing& R = r.ring;
    units_ = units(R);
    nilpotents_ = nilpotents(R);
    for (Elem x : r.component(r.group().identity).members)
      if (R.times(x, x) == x) idem_e.push_back(x);
    units_by_degree.resize(r.group().order);
    for (Elem u : units_.members)
      for (Elem g = 0; g < r.group().order; ++g)
        if (r.in_component(u, g)) {
          units_by_degree[g].push_back(u);
          homog_units.push_back(u);
          break;  // a nonzero element lies in at most one component
        }
  }
};

// First (f, u) in canonical order with f*u in R_d and x - f*u nilpotent. The
// unit may carry any degree; only the nonzero product is pinned to R_d, and
// the difference then lies in R_d whenever x does.
inline std::optional<Witness> graded_unc_witness(const GradedSearchContext& c, Elem x, Elem d,
                                                 long long* searched = nullptr) {
  const FiniteRing& R = c.r.ring;
  for (Elem f : c.idem_e)
    for (Elem u : c.homog_units) {
      if (searched) ++*searched;
      Elem fu = R.times(f, u);
      if (!c.r.in_component(fu, d)) continue;
      Elem n = R.sub(x, fu);
      if (c.nilpotents_.contains(n)) return Witness{x, f, u, n, d};
    }
  return std::nullopt;
}

}  // namespace detail

// Checks x = f*u + n against all certificate invariants.
inline bool check_witness(const GradedRing& r, const Witness& w) {
  const FiniteRing& R = r.ring;
  Elem fu = R.times(w.f, w.u);
  if (R.plus(fu, w.n) != w.x) return false;
  if (R.times(w.f, w.f) != w.f || !r.in_component(w.f, r.group().identity)) return false;
  bool invertible = false;
  for (Elem y = 0; y < R.order && !invertible; ++y)
    invertible = R.times(w.u, y) == R.one && R.times(y, w.u) == R.one;
  if (!invertible) return false;
  if (!R.is_nilpotent(w.n)) return false;
  if (w.degree) {
    Elem d = *w.degree;
    if (!r.is_homogeneous(w.u)) return false;
    if (!r.in_component(w.x, d)) return false;
    if (!r.in_component(fu, d) || !r.in_component(w.n, d)) return false;
  }
  return true;
}

// Graded U-nil clean: every homogeneous x decomposes as gur + homogeneous
// nilpotent of the same degree. x = 0 takes the 0 = 0*1 + 0 certificate.
inline PropertyVerdict is_graded_u_nil_clean(const GradedRing& r) {
  detail::GradedSearchContext c(r);
  PropertyVerdict v;
  v.property = "graded-u-nil-clean";
  v.stats.units = c.units_.size();
  v.stats.nilpotents = c.nilpotents_.size();
  v.stats.idempotents = static_cast<int>(c.idem_e.size());
  auto gur = graded_unit_regular_elements(r);
  for (Elem g = 0; g < r.group().order; ++g) v.stats.gur_by_degree[g] = gur[g].size();
  v.holds = true;
  ElementSet hs = homogeneous_elements(r);
  for (Elem x : hs.members) {
    if (x == r.ring.zero) {
      v.witnesses.push_back({x, r.ring.zero, r.ring.one, r.ring.zero, std::nullopt});
      continue;
    }
    Elem d = degree(r, x);
    auto w = detail::graded_unc_witness(c, x, d);
    if (!w) {
      v.holds = false;
      v.counterexample = x;
      v.witnesses.clear();
      break;
    }
    v.witnesses.push_back(*w);
  }
  return v;
}

// Graded nil-good: every homogeneous x is nilpotent or x = u + n with u a
// homogeneous unit and n a homogeneous nilpotent. By default both summands
// must lie in R_deg(x); strict_literal drops the degree pinning and only
// requires each summand homogeneous.
inline PropertyVerdict is_graded_nil_good(const GradedRing& r, bool strict_literal = false) {
  detail::GradedSearchContext c(r);
  PropertyVerdict v;
  v.property = "graded-nil-good";
  v.stats.units = c.units_.size();
  v.stats.nilpotents = c.nilpotents_.size();
  v.stats.idempotents = static_cast<int>(c.idem_e.size());
  v.holds = true;
  ElementSet hs = homogeneous_elements(r);
  for (Elem x : hs.members) {
    if (c.nilpotents_.contains(x)) {
      v.witnesses.push_back({x, r.ring.zero, r.ring.one, x, std::nullopt});
      continue;
    }
    Elem d = degree(r, x);  // x nonzero here: nilpotent branch took 0
    bool found = false;
    const std::vector<Elem>& cands =
        strict_literal ? c.units_.members : c.units_by_degree[d];
    for (Elem u : cands) {
      if (strict_literal && !r.is_homogeneous(u)) continue;
      Elem n = r.ring.sub(x, u);
      if (!c.nilpotents_.contains(n)) continue;
      if (strict_literal ? r.is_homogeneous(n) : r.in_component(n, d)) {
        v.witnesses.push_back({x, r.ring.one, u, n, strict_literal ? std::optional<Elem>{} : std::optional<Elem>{d}});
        found = true;
        break;
      }
    }
    if (!found) {
      v.holds = false;
      v.counterexample = x;
      v.witnesses.clear();
      break;
    }
  }
  return v;
}

// Graded G-clean: every homogeneous x = (f*u) + u' with f*u graded unit
// regular in R_deg(x) and u' a unit of degree deg(x). For x = 0 any degree is
// accepted (searched in group order).
inline PropertyVerdict is_graded_g_clean(const GradedRing& r) {
  detail::GradedSearchContext c(r);
  PropertyVerdict v;
  v.property = "graded-g-clean";
  v.stats.units = c.units_.size();
  v.stats.nilpotents = c.nilpotents_.size();
  v.stats.idempotents = static_cast<int>(c.idem_e.size());
  v.holds = true;
  ElementSet hs = homogeneous_elements(r);
  const FiniteRing& R = r.ring;
  auto search_at = [&](Elem x, Elem d) -> std::optional<Witness> {
    for (Elem f : c.idem_e)
      for (Elem u : c.homog_units) {
        Elem fu = R.times(f, u);
        if (!r.in_component(fu, d)) continue;
        Elem up = R.sub(x, fu);
        if (c.units_.contains(up) && r.in_component(up, d))
          return Witness{x, f, u, up, d};
      }
    return std::nullopt;
  };
  for (Elem x : hs.members) {
    std::optional<Witness> w;
    if (x == R.zero) {
      for (Elem d = 0; d < r.group().order && !w; ++d) w = search_at(x, d);
      if (w) w->degree.reset();
    } else {
      w = search_at(x, degree(r, x));
    }
    if (!w) {
      v.holds = false;
      v.counterexample = x;
      v.witnesses.clear();
      break;
    }
    v.witnesses.push_back(*w);
  }
  return v;
}

// Single-element certificate in canonical order, or the searched space size.
inline std::variant<Witness, NotDecomposable> witness_for(const GradedRing& r, Elem x) {
  if (!r.is_homogeneous(x))
    throw NotHomogeneous("element " + std::to_string(x) + " is not homogeneous");
  if (x == r.ring.zero) return Witness{x, r.ring.zero, r.ring.one, r.ring.zero, std::nullopt};
  detail::GradedSearchContext c(r);
  long long searched = 0;
  auto w = detail::graded_unc_witness(c, x, degree(r, x), &searched);
  if (w) return *w;
  return NotDecomposable{searched};
}

}  // namespace grw
