#pragma once

// G-component decompositions of a finite ring: validation, homogeneous
// elements, support, homogeneous ideals, graded-nil / graded-maximal ideals,
// the graded Jacobson radical, graded quotients and graded-map predicates.

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grw/finite_group.hpp"
#include "grw/finite_ring.hpp"

namespace grw {

struct GradingViolation {
  enum Kind { NotSubgroup, NotDirectSum, ClosureViolation, BadIdentity, IdempotentDegree };
  Kind kind;
  // witnesses; meaning depends on kind
  Elem g = -1, h = -1, a = -1, b = -1;
  std::string describe() const {
    switch (kind) {
      case NotSubgroup: return "component " + std::to_string(g) + " is not an additive subgroup";
      case NotDirectSum: return "components do not form a direct sum (element " + std::to_string(a) + ")";
      case ClosureViolation:
        return "R_" + std::to_string(g) + " * R_" + std::to_string(h) + " leaves R_{gh} at (" +
               std::to_string(a) + "," + std::to_string(b) + ")";
      case BadIdentity: return "1 does not lie in the identity component";
      case IdempotentDegree:
        return "homogeneous idempotent " + std::to_string(a) + " has degree != e";
    }
    return "?";
  }
};

struct Grading {
  FiniteGroup group;
  std::vector<ElementSet> components;          // indexed by group element
  std::vector<std::vector<std::uint16_t>> split;  // split[x][g] = homogeneous part of x in R_g
};

struct GradedRing {
  FiniteRing ring;
  Grading grading;

  const FiniteGroup& group() const { return grading.group; }
  const ElementSet& component(Elem g) const { return grading.components[g]; }
  Elem part(Elem x, Elem g) const { return grading.split[x][g]; }
  bool in_component(Elem x, Elem g) const { return grading.components[g].contains(x); }

  bool is_homogeneous(Elem x) const {
    for (Elem g = 0; g < group().order; ++g)
      if (in_component(x, g)) return true;
    return false;
  }
};

struct NotHomogeneous : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroHasNoDegree : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidateOutcome {
  std::optional<GradedRing> ring;
  std::vector<GradingViolation> violations;
  bool ok() const { return ring.has_value(); }
};

// Checks all grading axioms. Direct-sum validation enumerates the product of
// the component sets: the summation tuple -> element map must be a bijection,
// which also materializes the split map.
inline ValidateOutcome validate_grading(const FiniteRing& ring, const FiniteGroup& group,
                                        std::vector<ElementSet> components) {
  ValidateOutcome out;
  if (static_cast<int>(components.size()) != group.order)
    throw RingError("component count does not match group order");

  for (Elem g = 0; g < group.order; ++g) {
    const ElementSet& c = components[g];
    bool sub = c.contains(ring.zero);
    for (Elem x : c.members) {
      if (!sub) break;
      if (!c.contains(ring.minus(x))) { sub = false; break; }
      for (Elem y : c.members)
        if (!c.contains(ring.plus(x, y))) { sub = false; break; }
    }
    if (!sub) out.violations.push_back({GradingViolation::NotSubgroup, g, -1, -1, -1});
  }
  if (!out.violations.empty()) return out;

  // direct sum: product of sizes must be |R| and the sum map bijective
  long long prod = 1;
  for (const auto& c : components) {
    prod *= c.size();
    if (prod > ring.order) break;
  }
  if (prod != ring.order) {
    out.violations.push_back({GradingViolation::NotDirectSum, -1, -1, -1, -1});
    return out;
  }
  std::vector<std::vector<std::uint16_t>> split(
      ring.order, std::vector<std::uint16_t>(group.order, 0));
  {
    std::vector<char> hit(ring.order, 0);
    std::vector<int> idx(group.order, 0);
    std::vector<Elem> parts(group.order, ring.zero);
    while (true) {
      Elem s = ring.zero;
      for (Elem g = 0; g < group.order; ++g) {
        parts[g] = components[g].members[idx[g]];
        s = ring.plus(s, parts[g]);
      }
      if (hit[s]) {
        out.violations.push_back({GradingViolation::NotDirectSum, -1, -1, s, -1});
        return out;
      }
      hit[s] = 1;
      for (Elem g = 0; g < group.order; ++g)
        split[s][g] = static_cast<std::uint16_t>(parts[g]);
      // odometer over component index tuples
      int pos = 0;
      while (pos < group.order) {
        if (++idx[pos] < components[pos].size()) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == group.order) break;
    }
  }

  // multiplicative closure R_g R_h subset of R_{gh}
  for (Elem g = 0; g < group.order; ++g)
    for (Elem h = 0; h < group.order; ++h) {
      Elem gh = group.op(g, h);
      const ElementSet& target = components[gh];
      for (Elem a : components[g].members)
        for (Elem b : components[h].members)
          if (!target.contains(ring.times(a, b))) {
            out.violations.push_back({GradingViolation::ClosureViolation, g, h, a, b});
            return out;
          }
    }

  if (!components[group.identity].contains(ring.one)) {
    out.violations.push_back({GradingViolation::BadIdentity, -1, -1, -1, -1});
    return out;
  }
  // every homogeneous idempotent has degree e
  for (Elem g = 0; g < group.order; ++g) {
    if (g == group.identity) continue;
    for (Elem x : components[g].members)
      if (x != ring.zero && ring.times(x, x) == x) {
        out.violations.push_back({GradingViolation::IdempotentDegree, g, -1, x, -1});
        return out;
      }
  }

  GradedRing gr;
  gr.ring = ring;
  gr.grading.group = group;
  gr.grading.components = std::move(components);
  gr.grading.split = std::move(split);
  out.ring = std::move(gr);
  return out;
}

inline GradedRing validate_grading_or_throw(const FiniteRing& ring, const FiniteGroup& group,
                                            std::vector<ElementSet> components) {
  auto out = validate_grading(ring, group, std::move(components));
  if (!out.ok())
    throw RingError("invalid grading: " + out.violations.front().describe());
  return *std::move(out.ring);
}

inline ElementSet homogeneous_elements(const GradedRing& r) {
  std::vector<char> m(r.ring.order, 0);
  for (const auto& c : r.grading.components)
    for (Elem x : c.members) m[x] = 1;
  return ElementSet::from_mask(m);
}

inline Elem degree(const GradedRing& r, Elem x) {
  if (x == r.ring.zero) throw ZeroHasNoDegree("0 lies in every component");
  for (Elem g = 0; g < r.group().order; ++g)
    if (r.in_component(x, g)) return g;
  throw NotHomogeneous("element " + std::to_string(x) + " is not homogeneous");
}

inline std::vector<Elem> support(const GradedRing& r) {
  std::vector<Elem> s;
  for (Elem g = 0; g < r.group().order; ++g)
    if (r.component(g).size() > 1 ||
        (r.component(g).size() == 1 && r.component(g).members[0] != r.ring.zero))
      s.push_back(g);
  return s;
}

enum class Side { Left, Right, TwoSided };

struct HomogeneousIdeal {
  ElementSet members;
  Side side = Side::Right;
  std::vector<ElementSet> component_parts;  // indexed by group element
};

struct IdealCheckOutcome {
  std::optional<HomogeneousIdeal> ideal;
  std::string reason;  // empty on success
  bool ok() const { return ideal.has_value(); }
};

inline IdealCheckOutcome is_homogeneous_ideal(const GradedRing& r, const ElementSet& members,
                                              Side side) {
  IdealCheckOutcome out;
  const FiniteRing& R = r.ring;
  if (!members.contains(R.zero)) { out.reason = "does not contain 0"; return out; }
  for (Elem x : members.members) {
    if (!members.contains(R.minus(x))) {
      out.reason = "not closed under negation at " + std::to_string(x);
      return out;
    }
    for (Elem y : members.members)
      if (!members.contains(R.plus(x, y))) {
        out.reason = "not additively closed at " + std::to_string(x) + "+" + std::to_string(y);
        return out;
      }
    for (Elem t = 0; t < R.order; ++t) {
      if ((side == Side::Right || side == Side::TwoSided) && !members.contains(R.times(x, t))) {
        out.reason = "not a right ideal at " + std::to_string(x) + "*" + std::to_string(t);
        return out;
      }
      if ((side == Side::Left || side == Side::TwoSided) && !members.contains(R.times(t, x))) {
        out.reason = "not a left ideal at " + std::to_string(t) + "*" + std::to_string(x);
        return out;
      }
    }
  }
  // homogeneity: every homogeneous part of every member is a member
  for (Elem x : members.members)
    for (Elem g = 0; g < r.group().order; ++g)
      if (!members.contains(r.part(x, g))) {
        out.reason = "not homogeneous: part of " + std::to_string(x) + " in component " +
                     std::to_string(g) + " is outside";
        return out;
      }
  HomogeneousIdeal ideal;
  ideal.members = members;
  ideal.side = side;
  ideal.component_parts.resize(r.group().order);
  for (Elem g = 0; g < r.group().order; ++g) {
    std::vector<Elem> part;
    for (Elem x : members.members)
      if (r.in_component(x, g)) part.push_back(x);
    ideal.component_parts[g] = ElementSet(R.order, std::move(part));
  }
  out.ideal = std::move(ideal);
  return out;
}

inline bool is_graded_nil(const GradedRing& r, const HomogeneousIdeal& ideal) {
  for (const auto& part : ideal.component_parts)
    for (Elem x : part.members)
      if (!r.ring.is_nilpotent(x)) return false;
  return true;
}

// All maximal elements among proper homogeneous right ideals. A right ideal
// generated by homogeneous elements is homogeneous, and every homogeneous
// right ideal is generated by its homogeneous members, so breadth-first
// extension by homogeneous generators is complete.
inline std::vector<HomogeneousIdeal> graded_maximal_right_ideals(const GradedRing& r,
                                                                 const Caps& caps = {}) {
  const FiniteRing& R = r.ring;
  if (R.order > caps.ideal_lattice)
    throw CapExceeded("ring order " + std::to_string(R.order) +
                      " exceeds ideal-lattice cap " + std::to_string(caps.ideal_lattice));
  ElementSet homog = homogeneous_elements(r);
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> queue;
  std::vector<char> zero_ideal(R.order, 0);
  zero_ideal[R.zero] = 1;
  seen.insert(zero_ideal);
  queue.push_back(zero_ideal);
  std::set<std::vector<char>> maximal;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<char> cur = queue[qi];
    if (detail::mask_count(cur) == R.order) continue;  // improper (order-1 ring)
    bool is_max = true;
    for (Elem x : homog.members) {
      if (cur[x]) continue;
      std::vector<char> ext = detail::extend_right_ideal(R, cur, x);
      if (detail::mask_count(ext) == R.order) continue;
      is_max = false;
      if (seen.insert(ext).second) queue.push_back(std::move(ext));
    }
    if (is_max) maximal.insert(cur);
  }
  std::vector<HomogeneousIdeal> out;
  for (const auto& m : maximal) {
    auto chk = is_homogeneous_ideal(r, ElementSet::from_mask(m), Side::Right);
    if (!chk.ok())
      throw RingError("enumerated graded-maximal ideal failed validation: " + chk.reason);
    out.push_back(*std::move(chk.ideal));
  }
  return out;
}

// Intersection of all graded-maximal right ideals; validated as a homogeneous
// two-sided ideal.
inline HomogeneousIdeal graded_jacobson_radical(const GradedRing& r, const Caps& caps = {}) {
  auto maxi = graded_maximal_right_ideals(r, caps);
  std::vector<char> m(r.ring.order, 1);
  for (const auto& ideal : maxi)
    for (Elem x = 0; x < r.ring.order; ++x)
      if (!ideal.members.contains(x)) m[x] = 0;
  auto chk = is_homogeneous_ideal(r, ElementSet::from_mask(m), Side::TwoSided);
  if (!chk.ok())
    throw RingError("graded Jacobson radical is not a homogeneous two-sided ideal: " + chk.reason);
  return *std::move(chk.ideal);
}

inline bool is_graded_local(const GradedRing& r, const Caps& caps = {}) {
  return graded_maximal_right_ideals(r, caps).size() == 1;
}

struct GradedMap {
  std::shared_ptr<const GradedRing> source, target;
  std::vector<std::uint16_t> table;  // source element -> target element

  Elem apply(Elem x) const { return table[x]; }

  bool is_ring_homomorphism() const {
    const FiniteRing& A = source->ring;
    const FiniteRing& B = target->ring;
    if (table[A.one] != static_cast<std::uint16_t>(B.one)) return false;
    for (Elem x = 0; x < A.order; ++x)
      for (Elem y = 0; y < A.order; ++y) {
        if (table[A.plus(x, y)] != B.plus(table[x], table[y])) return false;
        if (table[A.times(x, y)] != B.times(table[x], table[y])) return false;
      }
    return true;
  }

  bool is_surjective() const {
    std::vector<char> hit(target->ring.order, 0);
    for (Elem x = 0; x < source->ring.order; ++x) hit[table[x]] = 1;
    for (char h : hit)
      if (!h) return false;
    return true;
  }

  bool is_bijective() const {
    return source->ring.order == target->ring.order && is_surjective();
  }
};

// f(h(A)) subset of h(B)
inline bool is_graded_homomorphism(const GradedMap& f) {
  ElementSet hs = homogeneous_elements(*f.source);
  for (Elem x : hs.members)
    if (!f.target->is_homogeneous(f.apply(x))) return false;
  return true;
}

// f(A_g) subset of B_g for every g (same grading group assumed)
inline bool is_degree_preserving(const GradedMap& f) {
  if (f.source->group().order != f.target->group().order) return false;
  for (Elem g = 0; g < f.source->group().order; ++g)
    for (Elem x : f.source->component(g).members)
      if (!f.target->in_component(f.apply(x), g)) return false;
  return true;
}

struct KernelOutcome {
  std::optional<HomogeneousIdeal> ideal;
  std::string reason;
  bool ok() const { return ideal.has_value(); }
};

inline KernelOutcome kernel_is_homogeneous(const GradedMap& f) {
  std::vector<Elem> ker;
  for (Elem x = 0; x < f.source->ring.order; ++x)
    if (f.apply(x) == f.target->ring.zero) ker.push_back(x);
  auto chk = is_homogeneous_ideal(*f.source, ElementSet(f.source->ring.order, std::move(ker)),
                                  Side::TwoSided);
  return {std::move(chk.ideal), std::move(chk.reason)};
}

struct QuotientResult {
  GradedRing quotient;
  GradedMap projection;              // canonical, degree-preserving
  std::vector<Elem> coset_of;        // ambient element -> quotient element
  std::vector<Elem> representative;  // quotient element -> least ambient member
};

// R/I for a proper two-sided homogeneous ideal; component g is the image of
// R_g. Coset indices are assigned so the zero coset is 0 and, when proper,
// the coset of 1 is 1 (canonical encoding used across the library).
inline QuotientResult quotient_graded(const GradedRing& r, const HomogeneousIdeal& ideal) {
  const FiniteRing& R = r.ring;
  if (ideal.side != Side::TwoSided) throw RingError("quotient requires a two-sided ideal");
  if (ideal.members.size() == R.order) throw RingError("quotient by improper ideal");
  // cosets
  std::vector<Elem> coset_of(R.order, -1);
  std::vector<Elem> reps;
  auto coset_min = [&](Elem x) {
    Elem mn = x;
    for (Elem i : ideal.members.members) mn = std::min(mn, R.plus(x, i));
    return mn;
  };
  // canonical order: zero coset first, one's coset second, rest by least rep
  std::vector<Elem> mins;
  {
    std::set<Elem> distinct;
    for (Elem x = 0; x < R.order; ++x) distinct.insert(coset_min(x));
    Elem zmin = coset_min(R.zero), omin = coset_min(R.one);
    mins.push_back(zmin);
    if (omin != zmin) mins.push_back(omin);
    for (Elem m : distinct)
      if (m != zmin && m != omin) mins.push_back(m);
  }
  std::map<Elem, Elem> index_of_min;
  for (std::size_t i = 0; i < mins.size(); ++i) index_of_min[mins[i]] = static_cast<Elem>(i);
  for (Elem x = 0; x < R.order; ++x) coset_of[x] = index_of_min[coset_min(x)];
  reps = mins;
  int q = static_cast<int>(reps.size());
  std::vector<std::vector<Elem>> qa(q, std::vector<Elem>(q)), qm(q, std::vector<Elem>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      qa[i][j] = coset_of[R.plus(reps[i], reps[j])];
      qm[i][j] = coset_of[R.times(reps[i], reps[j])];
    }
  FiniteRing Q = FiniteRing::from_tables(qa, qm);
  std::vector<ElementSet> comps(r.group().order);
  for (Elem g = 0; g < r.group().order; ++g) {
    std::vector<Elem> img;
    for (Elem x : r.component(g).members) img.push_back(coset_of[x]);
    comps[g] = ElementSet(q, std::move(img));
  }
  GradedRing qr = validate_grading_or_throw(Q, r.group(), std::move(comps));

  QuotientResult out;
  out.quotient = std::move(qr);
  out.coset_of = coset_of;
  out.representative = reps;
  out.projection.source = std::make_shared<GradedRing>(r);
  out.projection.target = std::make_shared<GradedRing>(out.quotient);
  out.projection.table.resize(R.order);
  for (Elem x = 0; x < R.order; ++x)
    out.projection.table[x] = static_cast<std::uint16_t>(coset_of[x]);
  return out;
}

// The identity-component subring R_e as a standalone ring, with the
// element translation back to the ambient ring.
struct SubringResult {
  FiniteRing ring;
  std::vector<Elem> to_ambient;    // subring element -> ambient element
  std::vector<Elem> from_ambient;  // ambient element -> subring element or -1
};

inline SubringResult subring_from_subset(const FiniteRing& R, const ElementSet& members,
                                         Elem unity) {
  SubringResult out;
  out.to_ambient = members.members;
  // canonical encoding: zero at index 0, unity at index 1 when distinct
  std::vector<Elem>& amb = out.to_ambient;
  auto move_front = [&](Elem value, std::size_t pos) {
    auto it = std::find(amb.begin(), amb.end(), value);
    if (it == amb.end()) throw RingError("subset misses a required element");
    std::rotate(amb.begin() + pos, it, it + 1);
  };
  move_front(R.zero, 0);
  if (unity != R.zero) move_front(unity, 1);
  out.from_ambient.assign(R.order, -1);
  for (std::size_t i = 0; i < amb.size(); ++i) out.from_ambient[amb[i]] = static_cast<Elem>(i);
  int n = static_cast<int>(amb.size());
  std::vector<std::uint16_t> a(static_cast<std::size_t>(n) * n), m(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Elem s = R.plus(amb[i], amb[j]);
      Elem p = R.times(amb[i], amb[j]);
      if (out.from_ambient[s] < 0 || out.from_ambient[p] < 0)
        throw RingError("subset is not closed under ring operations");
      a[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(out.from_ambient[s]);
      m[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(out.from_ambient[p]);
    }
  // the ambient tables already satisfy the ring axioms, and closure was just
  // checked, so the subring tables need no re-validation
  out.ring = FiniteRing::from_flat_trusted(n, std::move(a), std::move(m));
  return out;
}

inline SubringResult identity_component_ring(const GradedRing& r) {
  return subring_from_subset(r.ring, r.component(r.group().identity), r.ring.one);
}

}  // namespace grw
