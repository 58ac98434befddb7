#pragma once

// Corpus generation, the theorem registry (implications and biconditionals
// checked extensionally over every applicable instance), oracle cross-checks,
// counterexample search and replay.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "grw/constructions.hpp"
#include "grw/deciders.hpp"
#include "grw/finite_group.hpp"
#include "grw/finite_ring.hpp"
#include "grw/grading.hpp"
#include "grw/iso.hpp"
#include "grw/ringspec.hpp"

namespace grw {

struct UnknownTheorem : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownPredicate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CorpusSpec {
  int zmod_max = 12;                       // trivially graded Z_n for 2 <= n <= zmod_max
  std::vector<int> cyclic_groups = {2, 3, 4};  // grading groups C_k
  std::vector<int> matrix_bases = {2, 3, 4};   // Z_n bases for M_2 / T_2 / T_3
  long long group_ring_order_cap = 256;    // |Z_n[C_k]| = n^k bound
  int idealization_base_cap = 16;          // A with |A| <= cap gets A~A
  int product_factor_cap = 16;             // factors for binary products
  int ideal_ops_cap = 512;                 // ideal-lattice work (J^g, quotients)
  int corner_source_cap = 256;             // corners taken on rings up to this order
  long long subgroup_ring_cap = 1024;      // |R[H]| bound for p-group instances
  int max_nil_ideals_per_ring = 4;         // nonzero graded-nil ideals kept per ring
  long long seed = 0;                      // recorded; expansion is exhaustive
  Caps caps;
};

struct DerivedMap {
  GradedMap map;            // surjective degree-preserving homomorphism
  std::string kind;         // quotient-projection | corner-projection | factor-projection |
                            // idealization-projection | augmentation
  std::string target_name;
};

struct Instance {
  enum Kind { Base, GroupRing, SubgroupRing, Matrix, Triangular, Product, Quotient,
              Idealization, Corner };

  std::string name;
  Kind kind = Base;
  std::shared_ptr<GradedRing> ring;
  std::vector<int> parents;             // corpus indices of construction inputs

  // per-kind payload
  std::vector<int> factor_indices;                 // Product
  std::optional<HomogeneousIdeal> quotient_ideal;  // Quotient: ideal in the parent
  Elem corner_t = -1;                              // Corner: central idempotent in the parent
  int corner_partner = -1;                         // Corner: corpus index of the 1-t corner
  int matrix_n = 0;                                // Matrix / Triangular
  Sigma sigma;                                     // Matrix / Triangular
  std::vector<Elem> subgroup;                      // SubgroupRing: H
  std::shared_ptr<GradedRing> coarse_view;         // SubgroupRing: R[H] regraded over G/H
  std::shared_ptr<GradedRing> coarse_base;         // SubgroupRing: R regraded over G/H
  std::optional<int> pgroup_p;                     // SubgroupRing: p with G a p-group

  std::vector<DerivedMap> maps;                    // surjections out of this ring
  std::vector<HomogeneousIdeal> graded_nil_ideals; // discovered, zero ideal first

  // analysis cache; filled by at most one thread per instance, then read-only
  struct Analysis {
    std::optional<PropertyVerdict> gunc, ggclean;
    std::optional<bool> re_unc;        // R_e U-nil clean
    std::optional<bool> commutative, idem_central;
    std::optional<bool> graded_local;  // unset when past the ideal cap
    std::optional<HomogeneousIdeal> jg;
    bool jg_capped = false;
  };
  mutable Analysis a;
};

using InstancePtr = std::shared_ptr<Instance>;

struct Corpus {
  CorpusSpec spec;
  std::vector<InstancePtr> items;
  std::vector<std::string> skipped;  // per-item cap skips, logged not fatal
};

namespace detail {

inline std::string group_label(int k) { return "C" + std::to_string(k); }

// integer p as a ring element: 1 + 1 + ... (p times)
inline Elem int_in_ring(const FiniteRing& r, int p) {
  Elem x = r.zero;
  for (int i = 0; i < p; ++i) x = r.plus(x, r.one);
  return x;
}

inline std::string sigma_label(const FiniteGroup& g, const Sigma& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.name(s[i]);
  return out;
}

// All sigma tuples with first entry e; for abelian G the grading of
// M_n(R)(sigma) depends on sigma only up to a common right shift, so this
// normalization enumerates each distinct grading once.
inline std::vector<Sigma> normalized_sigmas(const FiniteGroup& g, int n) {
  std::vector<Sigma> out;
  Sigma cur(n, g.identity);
  while (true) {
    out.push_back(cur);
    int pos = 1;
    while (pos < n) {
      if (++cur[pos] < g.order) break;
      cur[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return out;
}

inline void check_derived_map(const DerivedMap& dm, const std::string& where) {
  if (!dm.map.is_ring_homomorphism() || !dm.map.is_surjective() ||
      !is_degree_preserving(dm.map))
    throw RingError(where + ": derived map is not a surjective degree-preserving homomorphism");
}

}  // namespace detail

// Zero ideal plus two-sided closures of single homogeneous nilpotents that
// turn out graded-nil; deterministic order, deduplicated, capped.
inline std::vector<HomogeneousIdeal> discover_graded_nil_ideals(const GradedRing& r,
                                                                int max_nonzero) {
  std::vector<HomogeneousIdeal> out;
  const FiniteRing& R = r.ring;
  {
    auto chk = is_homogeneous_ideal(r, ElementSet(R.order, {R.zero}), Side::TwoSided);
    if (chk.ok()) out.push_back(*std::move(chk.ideal));
  }
  if (R.order == 1) return out;
  std::set<std::vector<Elem>> seen;
  ElementSet hs = homogeneous_elements(r);
  for (Elem x : hs.members) {
    if (static_cast<int>(out.size()) > max_nonzero) break;
    if (x == R.zero || !R.is_nilpotent(x)) continue;
    ElementSet members = two_sided_ideal_closure(R, {x});
    if (members.size() == R.order) continue;  // improper
    if (members.size() == 1) continue;        // zero ideal already listed
    if (!seen.insert(members.members).second) continue;
    auto chk = is_homogeneous_ideal(r, members, Side::TwoSided);
    if (!chk.ok()) continue;  // closure of a non-homogeneous mix cannot occur, but be safe
    if (!is_graded_nil(r, *chk.ideal)) continue;
    out.push_back(*std::move(chk.ideal));
  }
  return out;
}

namespace detail {

// analysis accessors: fill on first use

inline const PropertyVerdict& gunc_of(const Instance& i) {
  if (!i.a.gunc) i.a.gunc = is_graded_u_nil_clean(*i.ring);
  return *i.a.gunc;
}

inline const PropertyVerdict& ggclean_of(const Instance& i) {
  if (!i.a.ggclean) i.a.ggclean = is_graded_g_clean(*i.ring);
  return *i.a.ggclean;
}

inline bool re_unc_of(const Instance& i) {
  if (!i.a.re_unc) {
    SubringResult sub = identity_component_ring(*i.ring);
    i.a.re_unc = u_nil_clean_quick(sub.ring).first;
  }
  return *i.a.re_unc;
}

inline bool commutative_of(const Instance& i) {
  if (!i.a.commutative) i.a.commutative = i.ring->ring.is_commutative();
  return *i.a.commutative;
}

inline bool idem_central_of(const Instance& i) {
  if (!i.a.idem_central) {
    const GradedRing& r = *i.ring;
    ElementSet z = center(r.ring);
    bool ok = true;
    for (Elem x : r.component(r.group().identity).members)
      if (r.ring.times(x, x) == x && !z.contains(x)) { ok = false; break; }
    i.a.idem_central = ok;
  }
  return *i.a.idem_central;
}

// fills jg / graded_local together; respects the ideal cap
inline void ensure_ideal_data(const Instance& i, const CorpusSpec& spec) {
  if (i.a.jg || i.a.jg_capped) return;
  if (i.ring->ring.order > spec.ideal_ops_cap) {
    i.a.jg_capped = true;
    return;
  }
  auto maxi = graded_maximal_right_ideals(*i.ring, spec.caps);
  i.a.graded_local = maxi.size() == 1;
  std::vector<char> m(i.ring->ring.order, 1);
  for (const auto& ideal : maxi)
    for (Elem x = 0; x < i.ring->ring.order; ++x)
      if (!ideal.members.contains(x)) m[x] = 0;
  auto chk = is_homogeneous_ideal(*i.ring, ElementSet::from_mask(m), Side::TwoSided);
  if (!chk.ok())
    throw RingError(i.name + ": graded Jacobson radical failed validation: " + chk.reason);
  i.a.jg = *std::move(chk.ideal);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// corpus generation

inline Corpus generate_corpus(const CorpusSpec& spec = {}) {
  Corpus c;
  c.spec = spec;
  auto add = [&](InstancePtr p) {
    c.items.push_back(std::move(p));
    return static_cast<int>(c.items.size()) - 1;
  };
  auto skip = [&](const std::string& what, const std::exception& e) {
    c.skipped.push_back(what + ": " + e.what());
  };

  std::map<std::string, FiniteGroup> groups;  // label -> group
  groups["C1"] = FiniteGroup::trivial();
  for (int k : spec.cyclic_groups) groups[detail::group_label(k)] = FiniteGroup::cyclic(k);

  std::map<std::string, int> by_name;  // instance name -> index
  auto add_named = [&](InstancePtr p) {
    int idx = add(p);
    by_name[c.items[idx]->name] = idx;
    return idx;
  };

  auto make_base = [&](int n, const std::string& glabel) {
    auto inst = std::make_shared<Instance>();
    inst->name = "Z" + std::to_string(n) + "/" + glabel;
    inst->kind = Instance::Base;
    inst->ring = std::make_shared<GradedRing>(
        trivial_graded(FiniteRing::zmod(n), groups.at(glabel)));
    return inst;
  };

  // trivially graded Z_n over C_1, then over each grading group
  for (int n = 2; n <= spec.zmod_max; ++n) add_named(make_base(n, "C1"));
  for (int k : spec.cyclic_groups)
    for (int n = 2; n <= spec.zmod_max; ++n) add_named(make_base(n, detail::group_label(k)));

  // group rings Z_n[C_k], order n^k within the cap
  for (int k : spec.cyclic_groups) {
    const std::string gl = detail::group_label(k);
    for (int n = 2; n <= spec.zmod_max; ++n) {
      long long order = 1;
      for (int i = 0; i < k; ++i) order *= n;
      if (order > spec.group_ring_order_cap) continue;
      int base_idx = by_name.at("Z" + std::to_string(n) + "/" + gl);
      auto inst = std::make_shared<Instance>();
      inst->name = "Z" + std::to_string(n) + "[" + gl + "]";
      inst->kind = Instance::GroupRing;
      inst->parents = {base_idx};
      try {
        inst->ring = std::make_shared<GradedRing>(
            group_ring_graded(*c.items[base_idx]->ring, spec.caps));
      } catch (const CapExceeded& e) {
        skip(inst->name, e);
        continue;
      }
      add_named(inst);
    }
  }

  // matrix and triangular rings over Z_2 / Z_3 / Z_4, all normalized sigma
  struct Shape { bool tri; int dim; const char* tag; };
  const Shape shapes[] = {{false, 2, "M2"}, {true, 2, "T2"}, {true, 3, "T3"}};
  std::map<std::string, MatrixCarrier> carriers;  // "n:dim:tri" -> carrier
  for (int k : spec.cyclic_groups) {
    const std::string gl = detail::group_label(k);
    const FiniteGroup& G = groups.at(gl);
    for (int nb : spec.matrix_bases) {
      int base_idx = by_name.at("Z" + std::to_string(nb) + "/" + gl);
      const GradedRing& base = *c.items[base_idx]->ring;
      for (const Shape& sh : shapes) {
        std::string ckey = std::to_string(nb) + ":" + std::to_string(sh.dim) +
                           (sh.tri ? ":t" : ":f");
        auto cit = carriers.find(ckey);
        if (cit == carriers.end()) {
          try {
            cit = carriers.emplace(ckey, matrix_carrier(base.ring, sh.dim, sh.tri, spec.caps))
                      .first;
          } catch (const CapExceeded& e) {
            skip(std::string(sh.tag) + "(Z" + std::to_string(nb) + ")", e);
            continue;
          }
        }
        for (const Sigma& sg : detail::normalized_sigmas(G, sh.dim)) {
          auto inst = std::make_shared<Instance>();
          inst->name = std::string(sh.tag) + "(Z" + std::to_string(nb) + ")(" +
                       detail::sigma_label(G, sg) + ")/" + gl;
          inst->kind = sh.tri ? Instance::Triangular : Instance::Matrix;
          inst->parents = {base_idx};
          inst->matrix_n = sh.dim;
          inst->sigma = sg;
          inst->ring = std::make_shared<GradedRing>(grade_matrix_carrier(cit->second, base, sg));
          add_named(inst);
        }
      }
    }
  }

  // idealizations A~A over every small ring so far
  {
    int upto = static_cast<int>(c.items.size());
    for (int idx = 0; idx < upto; ++idx) {
      const Instance& src = *c.items[idx];
      if (src.ring->ring.order > spec.idealization_base_cap) continue;
      auto inst = std::make_shared<Instance>();
      inst->name = "Ideal(" + src.name + ")";
      inst->kind = Instance::Idealization;
      inst->parents = {idx};
      try {
        GradedBimodule E = regular_bimodule(*src.ring, 1, spec.caps);
        IdealizationResult r = idealization(*src.ring, E, spec.caps);
        inst->ring = std::make_shared<GradedRing>(std::move(r.ring));
        DerivedMap dm;
        dm.map = std::move(r.projection);
        dm.map.source = inst->ring;  // share the corpus copy
        dm.kind = "idealization-projection";
        dm.target_name = src.name;
        detail::check_derived_map(dm, inst->name);
        inst->maps.push_back(std::move(dm));
      } catch (const CapExceeded& e) {
        skip(inst->name, e);
        continue;
      }
      add_named(inst);
    }
  }

  // Binary products: consecutive pairs of small rings over the same group,
  // plus one self product per class. Factors are only paired when the degrees
  // carrying homogeneous units coincide: a degree with units in one factor but
  // none in the other leaves homogeneous product elements that no graded
  // unit-regular part can reach, so such mixes sit outside the product
  // theorem's scope.
  {
    std::map<std::string, std::vector<int>> eligible;  // group+unit-degree key -> indices
    int upto = static_cast<int>(c.items.size());
    for (int idx = 0; idx < upto; ++idx) {
      const Instance& src = *c.items[idx];
      if (src.ring->ring.order > spec.product_factor_cap) continue;
      std::string key;
      for (auto& [gl, g] : groups)
        if (src.ring->group().same_table(g)) { key = gl; break; }
      if (key.empty()) continue;
      ElementSet us = units(src.ring->ring);
      for (Elem g = 0; g < src.ring->group().order; ++g) {
        bool has_unit = false;
        for (Elem u : us.members)
          if (src.ring->in_component(u, g)) { has_unit = true; break; }
        key += has_unit ? "+" : "-";
      }
      eligible[key].push_back(idx);
    }
    for (auto& [gl, list] : eligible) {
      std::vector<std::pair<int, int>> pairs;
      if (!list.empty()) pairs.emplace_back(list[0], list[0]);
      for (std::size_t i = 0; i + 1 < list.size(); ++i) pairs.emplace_back(list[i], list[i + 1]);
      for (auto [ia, ib] : pairs) {
        const Instance& A = *c.items[ia];
        const Instance& B = *c.items[ib];
        auto inst = std::make_shared<Instance>();
        inst->name = "Prod(" + A.name + "; " + B.name + ")";
        inst->kind = Instance::Product;
        inst->parents = {ia, ib};
        inst->factor_indices = {ia, ib};
        try {
          inst->ring = std::make_shared<GradedRing>(direct_product({*A.ring, *B.ring}, spec.caps));
        } catch (const CapExceeded& e) {
          skip(inst->name, e);
          continue;
        }
        // factor projections
        int na = A.ring->ring.order;
        for (int which = 0; which < 2; ++which) {
          const Instance& tgt = which == 0 ? A : B;
          DerivedMap dm;
          dm.map.source = inst->ring;
          dm.map.target = tgt.ring;
          dm.map.table.resize(inst->ring->ring.order);
          for (Elem x = 0; x < inst->ring->ring.order; ++x)
            dm.map.table[x] = static_cast<std::uint16_t>(which == 0 ? x % na : x / na);
          dm.kind = "factor-projection";
          dm.target_name = tgt.name;
          detail::check_derived_map(dm, inst->name);
          inst->maps.push_back(std::move(dm));
        }
        add_named(inst);
      }
    }
  }

  // corner rings at every central idempotent of R_e
  {
    int upto = static_cast<int>(c.items.size());
    for (int idx = 0; idx < upto; ++idx) {
      const Instance& src = *c.items[idx];
      const GradedRing& r = *src.ring;
      if (r.ring.order > spec.corner_source_cap) continue;
      ElementSet z = center(r.ring);
      std::vector<Elem> ts;
      for (Elem x : r.component(r.group().identity).members)
        if (r.ring.times(x, x) == x && z.contains(x)) ts.push_back(x);
      std::map<Elem, int> corner_index;
      for (Elem t : ts) {
        auto inst = std::make_shared<Instance>();
        inst->name = "Corner(" + src.name + "; t=" + std::to_string(t) + ")";
        inst->kind = Instance::Corner;
        inst->parents = {idx};
        inst->corner_t = t;
        try {
          CornerResult cr = corner_ring(r, t);
          inst->ring = std::make_shared<GradedRing>(std::move(cr.ring));
          DerivedMap dm;
          dm.map = std::move(cr.projection);
          dm.map.target = inst->ring;
          dm.kind = "corner-projection";
          dm.target_name = inst->name;
          detail::check_derived_map(dm, inst->name);
          c.items[idx]->maps.push_back(std::move(dm));
        } catch (const CapExceeded& e) {
          skip(inst->name, e);
          continue;
        }
        corner_index[t] = add_named(inst);
      }
      for (auto [t, ci] : corner_index) {
        Elem comp = r.ring.sub(r.ring.one, t);
        auto it = corner_index.find(comp);
        if (it != corner_index.end()) c.items[ci]->corner_partner = it->second;
      }
    }
  }

  // p-group subgroup rings R[H] with G/H views
  {
    struct PG { int p; std::string glabel; FiniteGroup group; std::vector<int> coeffs; };
    std::vector<PG> pgs;
    pgs.push_back({2, "C2", FiniteGroup::cyclic(2), {2, 4, 8}});
    pgs.push_back({2, "C4", FiniteGroup::cyclic(4), {2, 4, 8}});
    pgs.push_back({2, "C2xC2",
                   FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
                   {2, 4, 8}});
    pgs.push_back({3, "C3", FiniteGroup::cyclic(3), {3, 9}});
    pgs.push_back({3, "C9", FiniteGroup::cyclic(9), {3, 9}});
    for (const PG& pg : pgs) {
      groups.emplace(pg.glabel, pg.group);
      for (int m : pg.coeffs) {
        std::string bname = "Z" + std::to_string(m) + "/" + pg.glabel;
        int base_idx;
        auto it = by_name.find(bname);
        if (it != by_name.end()) {
          base_idx = it->second;
        } else {
          auto binst = std::make_shared<Instance>();
          binst->name = bname;
          binst->kind = Instance::Base;
          binst->ring = std::make_shared<GradedRing>(
              trivial_graded(FiniteRing::zmod(m), pg.group));
          base_idx = add_named(binst);
        }
        const GradedRing& base = *c.items[base_idx]->ring;
        for (const auto& H : pg.group.subgroups()) {
          long long order = 1;
          bool fits = true;
          for (std::size_t i = 0; i < H.size(); ++i) {
            order *= m;
            if (order > spec.subgroup_ring_cap) { fits = false; break; }
          }
          if (!fits) {
            c.skipped.push_back(bname + "[H], |H|=" + std::to_string(H.size()) +
                                ": exceeds subgroup-ring cap");
            continue;
          }
          std::string hname;
          for (Elem x : H) hname += (hname.empty() ? "" : ",") + pg.group.name(x);
          auto inst = std::make_shared<Instance>();
          inst->name = bname + "[H{" + hname + "}]";
          inst->kind = Instance::SubgroupRing;
          inst->parents = {base_idx};
          inst->subgroup = H;
          inst->pgroup_p = pg.p;
          try {
            SubgroupRingResult sr = subgroup_ring_graded(base, H, true, spec.caps);
            inst->ring = std::make_shared<GradedRing>(std::move(sr.ring));
            inst->coarse_view = std::make_shared<GradedRing>(*std::move(sr.quotient_graded_view));
            inst->coarse_base = std::make_shared<GradedRing>(coarsen_grading(base, H));
            // augmentation sum of coefficients, a G/H-graded surjection
            DerivedMap dm;
            dm.map.source = inst->coarse_view;
            dm.map.target = inst->coarse_base;
            int nt = static_cast<int>(H.size());
            int bo = base.ring.order;
            dm.map.table.resize(inst->ring->ring.order);
            for (Elem x = 0; x < inst->ring->ring.order; ++x) {
              long long rem = x;
              Elem s = base.ring.zero;
              for (int i = 0; i < nt; ++i) {
                s = base.ring.plus(s, static_cast<Elem>(rem % bo));
                rem /= bo;
              }
              dm.map.table[x] = static_cast<std::uint16_t>(s);
            }
            dm.kind = "augmentation";
            dm.target_name = bname + " over G/H";
            detail::check_derived_map(dm, inst->name);
            inst->maps.push_back(std::move(dm));
          } catch (const CapExceeded& e) {
            skip(inst->name, e);
            continue;
          }
          add_named(inst);
        }
      }
    }
  }

  // graded-nil ideal discovery, then quotients by each nonzero discovered ideal
  {
    int upto = static_cast<int>(c.items.size());
    for (int idx = 0; idx < upto; ++idx) {
      Instance& src = *c.items[idx];
      if (src.ring->ring.order > spec.ideal_ops_cap) continue;
      src.graded_nil_ideals =
          discover_graded_nil_ideals(*src.ring, spec.max_nil_ideals_per_ring);
      int nz = 0;
      for (const auto& ideal : src.graded_nil_ideals) {
        if (ideal.members.size() <= 1) continue;
        ++nz;
        auto inst = std::make_shared<Instance>();
        inst->name = "Quot(" + src.name + "; I" + std::to_string(nz) + ")";
        inst->kind = Instance::Quotient;
        inst->parents = {idx};
        inst->quotient_ideal = ideal;
        QuotientResult q = quotient_graded(*src.ring, ideal);
        inst->ring = std::make_shared<GradedRing>(std::move(q.quotient));
        DerivedMap dm;
        dm.map = std::move(q.projection);
        dm.map.source = src.ring;
        dm.map.target = inst->ring;
        dm.kind = "quotient-projection";
        dm.target_name = inst->name;
        detail::check_derived_map(dm, inst->name);
        src.maps.push_back(std::move(dm));
        add_named(inst);
      }
    }
    // quotient instances also feed the graded-nil ideal checks
    for (int idx = upto; idx < static_cast<int>(c.items.size()); ++idx) {
      Instance& src = *c.items[idx];
      if (src.ring->ring.order > spec.ideal_ops_cap) continue;
      src.graded_nil_ideals =
          discover_graded_nil_ideals(*src.ring, spec.max_nil_ideals_per_ring);
    }
  }

  return c;
}

// ---------------------------------------------------------------------------
// reports

struct Counterexample {
  std::string theorem;
  std::string property;       // decider to re-run on replay
  bool observed_holds = false;
  json instance;              // serialized graded ring the property was run on
  std::optional<Elem> element;
  std::string note;

  json to_json() const {
    json j{{"theorem", theorem}, {"property", property}, {"observed_holds", observed_holds},
           {"instance", instance}, {"note", note}};
    if (element) j["element"] = *element;
    return j;
  }
};

struct TheoremReport {
  std::string id, citation, note;
  int applicable = 0, passed = 0, inapplicable = 0;
  std::vector<Counterexample> counterexamples;
};

struct Report {
  int corpus_size = 0;
  std::vector<TheoremReport> theorems;
  std::vector<std::string> skipped;
  double seconds = 0;

  int total_counterexamples() const {
    int n = 0;
    for (const auto& t : theorems) n += static_cast<int>(t.counterexamples.size());
    return n;
  }

  json to_json(bool with_timing) const {
    json out;
    out["corpus_size"] = corpus_size;
    out["skipped"] = skipped;
    json ts = json::array();
    for (const auto& t : theorems) {
      json tj{{"id", t.id},       {"citation", t.citation},       {"note", t.note},
              {"applicable", t.applicable}, {"passed", t.passed},
              {"inapplicable", t.inapplicable}};
      json cs = json::array();
      for (const auto& cx : t.counterexamples) cs.push_back(cx.to_json());
      tj["counterexamples"] = cs;
      ts.push_back(tj);
    }
    out["theorems"] = ts;
    if (with_timing) out["timing"] = json{{"seconds", seconds}};
    return out;
  }

  std::string to_text() const {
    std::string out = "corpus: " + std::to_string(corpus_size) + " instances\n";
    for (const auto& t : theorems) {
      out += t.id + "  applicable=" + std::to_string(t.applicable) +
             " passed=" + std::to_string(t.passed) +
             " inapplicable=" + std::to_string(t.inapplicable) +
             " counterexamples=" + std::to_string(t.counterexamples.size());
      if (!t.note.empty()) out += "  [" + t.note + "]";
      out += "\n";
      for (const auto& cx : t.counterexamples)
        out += "  COUNTEREXAMPLE " + cx.property + " on " + cx.note + "\n";
    }
    if (!skipped.empty()) {
      out += "skipped items (caps):\n";
      for (const auto& s : skipped) out += "  " + s + "\n";
    }
    return out;
  }
};

// ---------------------------------------------------------------------------
// theorem registry

namespace detail {

struct CheckCtx {
  const Corpus& corpus;
  TheoremReport& rep;

  void pass() {
    ++rep.applicable;
    ++rep.passed;
  }
  void skip() { ++rep.inapplicable; }
  void fail(const GradedRing& offending, const std::string& property, bool observed_holds,
            std::optional<Elem> element, const std::string& note) {
    ++rep.applicable;
    Counterexample cx;
    cx.theorem = rep.id;
    cx.property = property;
    cx.observed_holds = observed_holds;
    cx.instance = serialize_instance(offending);
    cx.element = element;
    cx.note = note;
    rep.counterexamples.push_back(std::move(cx));
  }
  void outcome(bool ok, const GradedRing& offending, const std::string& property,
               bool observed_holds, std::optional<Elem> element, const std::string& note) {
    if (ok)
      pass();
    else
      fail(offending, property, observed_holds, element, note);
  }
};

inline PropertyVerdict gunc_for_ring(const Corpus& c, const std::shared_ptr<GradedRing>& r) {
  for (const auto& item : c.items)
    if (item->ring == r) return gunc_of(*item);
  return is_graded_u_nil_clean(*r);
}

}  // namespace detail

struct TheoremCase {
  std::string id;
  std::string citation;
  std::string note;
  std::function<void(detail::CheckCtx&)> run;
};

inline std::vector<TheoremCase> theorem_registry() {
  using detail::CheckCtx;
  using detail::gunc_of;
  std::vector<TheoremCase> reg;

  reg.push_back({"T_P1a", "graded U-nil clean implies U-nil clean identity component", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (!gunc_of(*i).holds) { ctx.skip(); continue; }
                     if (detail::re_unc_of(*i)) {
                       ctx.pass();
                     } else {
                       SubringResult sub = identity_component_ring(*i->ring);
                       GradedRing t = trivial_graded(sub.ring, FiniteGroup::trivial());
                       auto v = is_u_nil_clean(sub.ring);
                       ctx.fail(t, "u-nil-clean", v.holds, v.counterexample,
                                i->name + " identity component");
                     }
                   }
                 }});

  reg.push_back({"T_P1b", "graded-homomorphic images of graded U-nil clean rings", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items)
                     for (const auto& dm : i->maps) {
                       auto src = is_graded_u_nil_clean(*dm.map.source);
                       if (!src.holds) { ctx.skip(); continue; }
                       auto v = is_graded_u_nil_clean(*dm.map.target);
                       ctx.outcome(v.holds, *dm.map.target, "graded-u-nil-clean", v.holds,
                                   v.counterexample,
                                   i->name + " -> " + dm.target_name + " (" + dm.kind + ")");
                     }
                 }});

  reg.push_back({"T_P4", "finite products of graded U-nil clean rings", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (i->kind != Instance::Product) continue;
                     bool hyp = true;
                     for (int f : i->factor_indices)
                       if (!gunc_of(*ctx.corpus.items[f]).holds) { hyp = false; break; }
                     if (!hyp) { ctx.skip(); continue; }
                     const auto& v = gunc_of(*i);
                     ctx.outcome(v.holds, *i->ring, "graded-u-nil-clean", v.holds,
                                 v.counterexample, i->name);
                   }
                 }});

  reg.push_back({"T_P2", "commutative graded U-nil clean implies graded G-clean", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (!detail::commutative_of(*i) || !gunc_of(*i).holds) { ctx.skip(); continue; }
                     const auto& v = detail::ggclean_of(*i);
                     ctx.outcome(v.holds, *i->ring, "graded-g-clean", v.holds, v.counterexample,
                                 i->name);
                   }
                 }});

  reg.push_back({"T_L2", "graded-nil ideals lie inside the graded Jacobson radical", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     detail::ensure_ideal_data(*i, ctx.corpus.spec);
                     if (i->a.jg_capped) {
                       for (std::size_t k = 0; k < i->graded_nil_ideals.size(); ++k) ctx.skip();
                       continue;
                     }
                     for (const auto& ideal : i->graded_nil_ideals) {
                       bool inside = true;
                       Elem witness = -1;
                       for (Elem x : ideal.members.members)
                         if (!i->a.jg->members.contains(x)) { inside = false; witness = x; break; }
                       ctx.outcome(inside, *i->ring, "graded-u-nil-clean", gunc_of(*i).holds,
                                   witness < 0 ? std::nullopt : std::optional<Elem>(witness),
                                   i->name + " ideal of size " +
                                       std::to_string(ideal.members.size()));
                     }
                   }
                 }});

  reg.push_back({"T_T1", "graded U-nil clean passes to and lifts from R/I, I graded-nil", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (i->kind != Instance::Quotient) continue;
                     const Instance& parent = *ctx.corpus.items[i->parents[0]];
                     bool lhs = gunc_of(parent).holds;
                     const auto& v = gunc_of(*i);
                     bool rhs = v.holds;
                     const GradedRing& offending = lhs ? *i->ring : *parent.ring;
                     ctx.outcome(lhs == rhs, offending, "graded-u-nil-clean", lhs ? rhs : lhs,
                                 std::nullopt,
                                 i->name + " vs " + parent.name + " (biconditional)");
                   }
                 }});

  reg.push_back({"T_P3", "central idempotents force a graded-nil radical", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (!gunc_of(*i).holds || !detail::idem_central_of(*i)) { ctx.skip(); continue; }
                     detail::ensure_ideal_data(*i, ctx.corpus.spec);
                     if (i->a.jg_capped) { ctx.skip(); continue; }
                     bool ok = is_graded_nil(*i->ring, *i->a.jg);
                     ctx.outcome(ok, *i->ring, "graded-u-nil-clean", true, std::nullopt,
                                 i->name + " J^g graded-nil check");
                   }
                 }});

  reg.push_back({"T_C1", "graded U-nil clean iff R/J^g(R) is, under central idempotents", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (!detail::idem_central_of(*i)) { ctx.skip(); continue; }
                     detail::ensure_ideal_data(*i, ctx.corpus.spec);
                     if (i->a.jg_capped) { ctx.skip(); continue; }
                     bool lhs = gunc_of(*i).holds;
                     bool rhs;
                     if (i->a.jg->members.size() == i->ring->ring.order) {
                       rhs = true;  // order-1 ring, quotient degenerate
                     } else {
                       QuotientResult q = quotient_graded(*i->ring, *i->a.jg);
                       rhs = is_graded_u_nil_clean(q.quotient).holds;
                     }
                     ctx.outcome(lhs == rhs, *i->ring, "graded-u-nil-clean", lhs, std::nullopt,
                                 i->name + " vs R/J^g (biconditional)");
                   }
                 }});

  reg.push_back({"T_T2", "graded-local with U-nil clean identity component",
                 "PI: automatic (finite)",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     detail::ensure_ideal_data(*i, ctx.corpus.spec);
                     if (i->a.jg_capped || !*i->a.graded_local || !detail::re_unc_of(*i)) {
                       ctx.skip();
                       continue;
                     }
                     const auto& v = gunc_of(*i);
                     ctx.outcome(v.holds, *i->ring, "graded-u-nil-clean", v.holds,
                                 v.counterexample, i->name);
                   }
                 }});

  reg.push_back({"T_T3", "idealization graded U-nil clean iff the base ring is", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (i->kind != Instance::Idealization) continue;
                     const Instance& base = *ctx.corpus.items[i->parents[0]];
                     bool lhs = gunc_of(base).holds;
                     bool rhs = gunc_of(*i).holds;
                     const GradedRing& offending = lhs ? *i->ring : *base.ring;
                     ctx.outcome(lhs == rhs, offending, "graded-u-nil-clean", lhs ? rhs : lhs,
                                 std::nullopt, i->name + " (biconditional)");
                   }
                 }});

  reg.push_back({"T_L1", "kernels of degree-preserving homomorphisms are homogeneous", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items)
                     for (const auto& dm : i->maps) {
                       auto k = kernel_is_homogeneous(dm.map);
                       ctx.outcome(k.ok(), *dm.map.source, "graded-u-nil-clean",
                                   gunc_of(*i).holds, std::nullopt,
                                   i->name + " -> " + dm.target_name + ": " + k.reason);
                     }
                 }});

  reg.push_back({"T_T4", "R[G] graded U-nil clean implies R U-nil clean", "",
                 [](CheckCtx& ctx) {
                   // subgroup-ring instances are group rings R[H] graded by H,
                   // so the theorem applies to them with the same coefficients
                   for (const auto& i : ctx.corpus.items) {
                     if (i->kind != Instance::GroupRing &&
                         i->kind != Instance::SubgroupRing)
                       continue;
                     if (!gunc_of(*i).holds) { ctx.skip(); continue; }
                     const Instance& base = *ctx.corpus.items[i->parents[0]];
                     auto v = is_u_nil_clean(base.ring->ring);
                     ctx.outcome(v.holds, *base.ring, "u-nil-clean", v.holds, v.counterexample,
                                 i->name + " coefficient ring");
                   }
                 }});

  reg.push_back({"T_GH", "p-group subgroup rings preserve G/H-graded U-nil cleanness", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (i->kind != Instance::SubgroupRing || !i->pgroup_p) continue;
                     const Instance& base = *ctx.corpus.items[i->parents[0]];
                     int p = *i->pgroup_p;
                     bool hyp = base.ring->group().is_p_group(p) &&
                                base.ring->ring.is_nilpotent(
                                    detail::int_in_ring(base.ring->ring, p)) &&
                                is_graded_u_nil_clean(*i->coarse_base).holds;
                     if (!hyp) { ctx.skip(); continue; }
                     auto v = is_graded_u_nil_clean(*i->coarse_view);
                     ctx.outcome(v.holds, *i->coarse_view, "graded-u-nil-clean", v.holds,
                                 v.counterexample, i->name + " over G/H");
                   }
                 }});

  reg.push_back({"T_TN", "T_n(R)(sigma) graded U-nil clean iff R is (abelian G)", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (i->kind != Instance::Triangular) continue;
                     if (!i->ring->group().is_abelian()) { ctx.skip(); continue; }
                     const Instance& base = *ctx.corpus.items[i->parents[0]];
                     bool lhs = gunc_of(base).holds;
                     bool rhs = gunc_of(*i).holds;
                     const GradedRing& offending = lhs ? *i->ring : *base.ring;
                     ctx.outcome(lhs == rhs, offending, "graded-u-nil-clean", lhs ? rhs : lhs,
                                 std::nullopt, i->name + " (biconditional)");
                   }
                 }});

  reg.push_back({"T_L3", "both Peirce corners graded U-nil clean lifts to the ring", "",
                 [](CheckCtx& ctx) {
                   for (std::size_t idx = 0; idx < ctx.corpus.items.size(); ++idx) {
                     const Instance& i = *ctx.corpus.items[idx];
                     if (i.kind != Instance::Corner || i.corner_partner < 0) continue;
                     if (static_cast<int>(idx) > i.corner_partner) continue;  // one per pair
                     const Instance& other = *ctx.corpus.items[i.corner_partner];
                     if (!gunc_of(i).holds || !gunc_of(other).holds) { ctx.skip(); continue; }
                     const Instance& parent = *ctx.corpus.items[i.parents[0]];
                     const auto& v = gunc_of(parent);
                     ctx.outcome(v.holds, *parent.ring, "graded-u-nil-clean", v.holds,
                                 v.counterexample,
                                 parent.name + " from corners at t=" +
                                     std::to_string(i.corner_t));
                   }
                 }});

  reg.push_back({"T_L4", "orthogonal central idempotent decompositions lift gradedness", "",
                 [](CheckCtx& ctx) {
                   const CorpusSpec& spec = ctx.corpus.spec;
                   for (const auto& i : ctx.corpus.items) {
                     const GradedRing& r = *i->ring;
                     if (r.ring.order > spec.corner_source_cap) { ctx.skip(); continue; }
                     // atoms of the central idempotents of R_e
                     ElementSet z = center(r.ring);
                     std::vector<Elem> cents;
                     for (Elem x : r.component(r.group().identity).members)
                       if (x != r.ring.zero && r.ring.times(x, x) == x && z.contains(x))
                         cents.push_back(x);
                     std::vector<Elem> atoms;
                     for (Elem x : cents) {
                       bool atom = true;
                       for (Elem y : cents)
                         if (y != x && r.ring.times(x, y) == y) { atom = false; break; }
                       if (atom) atoms.push_back(x);
                     }
                     // they must be orthogonal and sum to 1
                     Elem s = r.ring.zero;
                     bool orth = true;
                     for (std::size_t a = 0; a < atoms.size(); ++a) {
                       s = r.ring.plus(s, atoms[a]);
                       for (std::size_t b = a + 1; b < atoms.size(); ++b)
                         if (r.ring.times(atoms[a], atoms[b]) != r.ring.zero) orth = false;
                     }
                     if (!orth || s != r.ring.one || atoms.empty()) { ctx.skip(); continue; }
                     bool hyp = true;
                     for (Elem t : atoms) {
                       CornerResult cr = corner_ring(r, t);
                       if (!is_graded_u_nil_clean(cr.ring).holds) { hyp = false; break; }
                     }
                     if (!hyp) { ctx.skip(); continue; }
                     const auto& v = gunc_of(*i);
                     ctx.outcome(v.holds, r, "graded-u-nil-clean", v.holds, v.counterexample,
                                 i->name + " from " + std::to_string(atoms.size()) +
                                     " atomic corners");
                   }
                 }});

  reg.push_back({"T_MAIN", "matrix rings over graded U-nil clean rings, any sigma", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     if (i->kind != Instance::Matrix) continue;
                     const Instance& base = *ctx.corpus.items[i->parents[0]];
                     if (!gunc_of(base).holds) { ctx.skip(); continue; }
                     const auto& v = gunc_of(*i);
                     ctx.outcome(v.holds, *i->ring, "graded-u-nil-clean", v.holds,
                                 v.counterexample, i->name);
                   }
                 }});

  reg.push_back({"T_R1", "every emitted witness is degree-coherent", "",
                 [](CheckCtx& ctx) {
                   for (const auto& i : ctx.corpus.items) {
                     const auto& v = gunc_of(*i);
                     if (!v.holds) { ctx.skip(); continue; }
                     bool ok = true;
                     Elem bad = -1;
                     for (const auto& w : v.witnesses)
                       if (!check_witness(*i->ring, w)) { ok = false; bad = w.x; break; }
                     ctx.outcome(ok, *i->ring, "graded-u-nil-clean", true,
                                 bad < 0 ? std::nullopt : std::optional<Elem>(bad),
                                 i->name + " witness audit");
                   }
                 }});

  return reg;
}

inline std::vector<std::string> theorem_ids() {
  std::vector<std::string> out;
  for (const auto& t : theorem_registry()) out.push_back(t.id);
  return out;
}

// ---------------------------------------------------------------------------
// verification driver

inline int worker_count_from_env() {
  const char* env = std::getenv("GRW_WORKERS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n > 0 ? n : 1;
}

// Prefill the dominant per-instance verdict in parallel; results equal the
// sequential ones since each instance is touched by exactly one worker.
inline void prefill_corpus(const Corpus& c, int workers) {
  if (workers <= 1) return;
  std::vector<std::thread> pool;
  std::size_t total = c.items.size();
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t idx = w; idx < total; idx += workers)
        detail::gunc_of(*c.items[idx]);
    });
  for (auto& t : pool) t.join();
}

inline Report verify(const Corpus& corpus, const std::vector<std::string>& ids,
                     int workers = worker_count_from_env()) {
  auto reg = theorem_registry();
  std::vector<const TheoremCase*> selected;
  for (const auto& id : ids) {
    const TheoremCase* found = nullptr;
    for (const auto& t : reg)
      if (t.id == id) { found = &t; break; }
    if (!found) throw UnknownTheorem("unknown theorem id: " + id);
    selected.push_back(found);
  }
  prefill_corpus(corpus, workers);
  Report rep;
  rep.corpus_size = static_cast<int>(corpus.items.size());
  rep.skipped = corpus.skipped;
  for (const TheoremCase* t : selected) {
    TheoremReport tr;
    tr.id = t->id;
    tr.citation = t->citation;
    tr.note = t->note;
    detail::CheckCtx ctx{corpus, tr};
    t->run(ctx);
    std::sort(tr.counterexamples.begin(), tr.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) {
                return a.instance.dump() < b.instance.dump();
              });
    rep.theorems.push_back(std::move(tr));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// oracle cross-checks

struct OracleReport {
  int checks = 0;
  std::vector<std::string> mismatches;
  std::vector<std::string> skipped;
  bool ok() const { return mismatches.empty(); }
};

inline OracleReport run_oracle_checks(const Corpus& c) {
  OracleReport rep;
  const CorpusSpec& spec = c.spec;
  for (const auto& i : c.items) {
    const GradedRing& r = *i->ring;
    if (r.ring.order <= spec.ideal_ops_cap) {
      // J(R) two ways
      ElementSet j1 = jacobson_radical(r.ring);
      auto maxi = maximal_right_ideals(r.ring, spec.caps);
      std::vector<char> m(r.ring.order, 1);
      for (const auto& ideal : maxi)
        for (Elem x = 0; x < r.ring.order; ++x)
          if (!ideal.mask[x]) m[x] = 0;
      ++rep.checks;
      if (j1.members != ElementSet::from_mask(m).members)
        rep.mismatches.push_back(i->name + ": quasi-regular J differs from max-ideal J");
      // J^g(R) cap R_e vs J(R_e)
      detail::ensure_ideal_data(*i, spec);
      SubringResult sub = identity_component_ring(r);
      ElementSet je = jacobson_radical(sub.ring);
      std::vector<Elem> je_amb;
      for (Elem x : je.members) je_amb.push_back(sub.to_ambient[x]);
      std::sort(je_amb.begin(), je_amb.end());
      std::vector<Elem> jg_e;
      for (Elem x : i->a.jg->members.members)
        if (r.in_component(x, r.group().identity)) jg_e.push_back(x);
      ++rep.checks;
      if (je_amb != jg_e)
        rep.mismatches.push_back(i->name + ": J^g cap R_e differs from J(R_e)");
    } else {
      rep.skipped.push_back(i->name + ": past ideal cap, radical oracles skipped");
    }
    if (i->kind == Instance::GroupRing) {
      const Instance& base = *c.items[i->parents[0]];
      // trivially graded coefficients: twist degenerates to the plain product
      bool trivial = true;
      for (Elem g = 0; g < base.ring->group().order; ++g)
        if (g != base.ring->group().identity && base.ring->component(g).size() != 1)
          trivial = false;
      if (trivial) {
        FiniteRing plain = plain_group_ring(base.ring->ring, base.ring->group(), spec.caps);
        ++rep.checks;
        if (!r.ring.same_tables(plain))
          rep.mismatches.push_back(i->name + ": twisted tables differ from plain group ring");
      }
      if (base.ring->ring.order <= 64) {
        SubringResult idc = identity_component_ring(r);
        ++rep.checks;
        if (!rings_isomorphic(idc.ring, base.ring->ring))
          rep.mismatches.push_back(i->name + ": (R[G])_e not isomorphic to R");
      } else {
        rep.skipped.push_back(i->name + ": base order > 64, isomorphism oracle skipped");
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// counterexample search

struct SearchOutcome {
  bool found = false;
  std::string instance_name;
  json instance;       // serialized, when found
  std::string detail;  // failing predicate information
};

inline bool eval_predicate(const std::string& name, const Instance& i) {
  if (name == "u-nil-clean") return is_u_nil_clean(i.ring->ring).holds;
  if (name == "re-u-nil-clean") return detail::re_unc_of(i);
  if (name == "graded-u-nil-clean") return detail::gunc_of(i).holds;
  if (name == "graded-nil-good") return is_graded_nil_good(*i.ring).holds;
  if (name == "graded-g-clean") return detail::ggclean_of(i).holds;
  if (name == "g-clean") return is_g_clean(i.ring->ring).holds;
  if (name == "commutative") return detail::commutative_of(i);
  throw UnknownPredicate("unknown predicate: " + name);
}

inline SearchOutcome search_counterexample(const Corpus& corpus,
                                           const std::vector<std::string>& hypotheses,
                                           const std::string& conclusion) {
  // validate names up front so typos are reported even on an empty corpus
  for (const auto& h : hypotheses) (void)h;
  SearchOutcome out;
  for (const auto& i : corpus.items) {
    bool hyp = true;
    for (const auto& h : hypotheses)
      if (!eval_predicate(h, *i)) { hyp = false; break; }
    if (!hyp) continue;
    if (eval_predicate(conclusion, *i)) continue;
    out.found = true;
    out.instance_name = i->name;
    out.instance = serialize_instance(*i->ring);
    out.detail = "satisfies every hypothesis but fails \"" + conclusion + "\"";
    return out;
  }
  out.detail = "exhausted";
  return out;
}

// ---------------------------------------------------------------------------
// replay

struct ReplayOutcome {
  bool reproduced = false;
  std::string detail;
};

inline PropertyVerdict run_property(const GradedRing& r, const std::string& property,
                                    bool strict_literal_nilgood = false) {
  if (property == "u-nil-clean") return is_u_nil_clean(r.ring);
  if (property == "g-clean") return is_g_clean(r.ring);
  if (property == "graded-u-nil-clean") return is_graded_u_nil_clean(r);
  if (property == "graded-nil-good") return is_graded_nil_good(r, strict_literal_nilgood);
  if (property == "graded-g-clean") return is_graded_g_clean(r);
  throw UnknownPredicate("unknown property: " + property);
}

inline ReplayOutcome replay_counterexample(const json& doc, const Caps& caps = {}) {
  for (const char* key : {"property", "observed_holds", "instance"})
    if (!doc.is_object() || !doc.contains(key))
      throw SchemaMismatch(std::string("counterexample file: missing \"") + key + "\"");
  BuiltInstance built = build_document(doc.at("instance"), caps);
  PropertyVerdict v = run_property(built.ring, doc.at("property").get<std::string>());
  bool expected = doc.at("observed_holds").get<bool>();
  ReplayOutcome out;
  if (v.holds != expected) {
    out.detail = "verdict changed: recorded holds=" + std::to_string(expected) +
                 ", current holds=" + std::to_string(v.holds) + " (stale counterexample)";
    return out;
  }
  if (doc.contains("element") && v.counterexample &&
      doc.at("element").get<Elem>() != *v.counterexample) {
    out.detail = "failing element moved from " + doc.at("element").dump() + " to " +
                 std::to_string(*v.counterexample);
    return out;
  }
  out.reproduced = true;
  out.detail = "recorded verdict reproduced";
  return out;
}

}  // namespace grw
