#pragma once

// Finite unital rings as addition/multiplication lookup tables, plus the
// element classifiers (units, idempotents, nilpotents, center), the classical
// Jacobson radical and the right-ideal lattice machinery.
//
// All ring axioms are checked exhaustively at construction; orders above a
// threshold run the O(n^3) checks across hardware threads.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <memory>
#include <thread>
#include <vector>

#include "grw/finite_group.hpp"

namespace grw {

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Caps {
  int classifier = 4096;     // max order for element classifiers / deciders
  int ideal_lattice = 512;   // max order for ideal-lattice enumeration
};

class FiniteRing {
 public:
  // tables are shared between copies; a FiniteRing value is cheap to copy
  int order = 1;
  std::shared_ptr<const std::vector<std::uint16_t>> add, mul;  // row-major order x order
  std::vector<std::uint16_t> neg;
  Elem zero = 0, one = 0;

  Elem plus(Elem a, Elem b) const { return (*add)[static_cast<std::size_t>(a) * order + b]; }
  Elem times(Elem a, Elem b) const { return (*mul)[static_cast<std::size_t>(a) * order + b]; }
  Elem minus(Elem a) const { return neg[a]; }
  Elem sub(Elem a, Elem b) const { return plus(a, neg[b]); }

  const std::uint16_t* add_row(Elem a) const { return add->data() + static_cast<std::size_t>(a) * order; }
  const std::uint16_t* mul_row(Elem a) const { return mul->data() + static_cast<std::size_t>(a) * order; }

  Elem power(Elem x, long k) const {
    Elem acc = one, base = x;
    while (k > 0) {
      if (k & 1) acc = times(acc, base);
      base = times(base, base);
      k >>= 1;
    }
    return acc;
  }

  // x nilpotent iff x^(2^ceil(log2 order)) == 0: any nilpotent of a ring of
  // this order has nilpotency index <= order.
  bool is_nilpotent(Elem x) const {
    Elem y = x;
    for (int n = 1; n < order; n <<= 1) y = times(y, y);
    return y == zero;
  }

  bool is_commutative() const {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = a + 1; b < order; ++b)
        if (times(a, b) != times(b, a)) return false;
    return true;
  }

  bool same_tables(const FiniteRing& o) const {
    return order == o.order && *add == *o.add && *mul == *o.mul;
  }

  static FiniteRing zmod(int n) {
    if (n < 1) throw RingError("zmod modulus must be positive");
    std::vector<std::vector<Elem>> a(n, std::vector<Elem>(n)), m(n, std::vector<Elem>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a[i][j] = (i + j) % n;
        m[i][j] = (i * j) % n;
      }
    return from_tables(a, m);
  }

  static FiniteRing from_tables(const std::vector<std::vector<Elem>>& a,
                                const std::vector<std::vector<Elem>>& m) {
    FiniteRing r;
    r.order = static_cast<int>(a.size());
    if (r.order < 1) throw RingError("empty ring table");
    if (static_cast<int>(m.size()) != r.order) throw RingError("table size mismatch");
    std::size_t n = static_cast<std::size_t>(r.order);
    std::vector<std::uint16_t> addv(n * n), mulv(n * n);
    for (int i = 0; i < r.order; ++i) {
      if (static_cast<int>(a[i].size()) != r.order || static_cast<int>(m[i].size()) != r.order)
        throw RingError("ring table is not square");
      for (int j = 0; j < r.order; ++j) {
        if (a[i][j] < 0 || a[i][j] >= r.order || m[i][j] < 0 || m[i][j] >= r.order)
          throw RingError("ring table entry out of range");
        addv[i * n + j] = static_cast<std::uint16_t>(a[i][j]);
        mulv[i * n + j] = static_cast<std::uint16_t>(m[i][j]);
      }
    }
    r.add = std::make_shared<const std::vector<std::uint16_t>>(std::move(addv));
    r.mul = std::make_shared<const std::vector<std::uint16_t>>(std::move(mulv));
    r.validate();
    return r;
  }

  static FiniteRing from_flat(int order, std::vector<std::uint16_t> add,
                              std::vector<std::uint16_t> mul) {
    FiniteRing r;
    r.order = order;
    r.add = std::make_shared<const std::vector<std::uint16_t>>(std::move(add));
    r.mul = std::make_shared<const std::vector<std::uint16_t>>(std::move(mul));
    r.validate();
    return r;
  }

  // For tables assembled by the construction library from rings that already
  // passed validation: identities and negatives are still located (and their
  // absence still throws), but the cubic associativity/distributivity pass is
  // skipped since it holds by construction.
  static FiniteRing from_flat_trusted(int order, std::vector<std::uint16_t> add,
                                      std::vector<std::uint16_t> mul) {
    FiniteRing r;
    r.order = order;
    r.add = std::make_shared<const std::vector<std::uint16_t>>(std::move(add));
    r.mul = std::make_shared<const std::vector<std::uint16_t>>(std::move(mul));
    r.validate(false);
    return r;
  }

 private:
  void validate(bool full_axioms = true) {
    std::size_t n = static_cast<std::size_t>(order);
    // additive identity
    Elem z = -1;
    for (Elem e = 0; e < order; ++e) {
      bool ok = true;
      for (Elem x = 0; x < order && ok; ++x)
        ok = plus0(e, x) == x && plus0(x, e) == x;
      if (ok) { z = e; break; }
    }
    if (z < 0) throw RingError("no additive identity");
    zero = z;
    // commutativity of addition + negatives
    neg.assign(n, 0);
    for (Elem x = 0; x < order; ++x) {
      Elem nx = -1;
      for (Elem y = 0; y < order; ++y) {
        if (plus0(x, y) != plus0(y, x)) throw RingError("addition is not commutative");
        if (plus0(x, y) == zero) nx = y;
      }
      if (nx < 0) throw RingError("missing additive inverse");
      neg[x] = static_cast<std::uint16_t>(nx);
    }
    // multiplicative identity
    Elem o = -1;
    for (Elem e = 0; e < order; ++e) {
      bool ok = true;
      for (Elem x = 0; x < order && ok; ++x)
        ok = times0(e, x) == x && times0(x, e) == x;
      if (ok) { o = e; break; }
    }
    if (o < 0) throw RingError("no multiplicative identity");
    one = o;
    if (!full_axioms) return;

    // O(n^3) axioms: additive associativity, multiplicative associativity,
    // both distributive laws.
    auto check_range = [this](Elem lo, Elem hi, bool* bad) {
      for (Elem a = lo; a < hi && !*bad; ++a)
        for (Elem b = 0; b < order; ++b) {
          Elem apb = plus0(a, b), ab = times0(a, b);
          const std::uint16_t* brow_a = add_row0(b);
          const std::uint16_t* brow_m = mul_row0(b);
          const std::uint16_t* arow_m = mul_row0(a);
          for (Elem c = 0; c < order; ++c) {
            // (a+b)+c = a+(b+c); (ab)c = a(bc); a(b+c) = ab+ac; (a+b)c = ac+bc
            if (plus0(apb, c) != plus0(a, brow_a[c])) { *bad = true; return; }
            if (times0(ab, c) != times0(a, brow_m[c])) { *bad = true; return; }
            if (times0(a, brow_a[c]) != plus0(ab, arow_m[c])) { *bad = true; return; }
            if (times0(apb, c) != plus0(arow_m[c], brow_m[c])) { *bad = true; return; }
          }
        }
    };
    bool bad = false;
    unsigned workers = order >= 512 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (workers <= 1) {
      check_range(0, order, &bad);
    } else {
      std::vector<std::thread> pool;
      std::vector<char> flags(workers, 0);
      int chunk = (order + static_cast<int>(workers) - 1) / static_cast<int>(workers);
      for (unsigned w = 0; w < workers; ++w) {
        Elem lo = static_cast<Elem>(w) * chunk;
        Elem hi = std::min(order, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, w] {
          bool b2 = false;
          check_range(lo, hi, &b2);
          flags[w] = b2;
        });
      }
      for (auto& t : pool) t.join();
      for (char f : flags) bad |= f != 0;
    }
    if (bad) throw RingError("ring axioms violated (associativity/distributivity)");
  }

  Elem plus0(Elem a, Elem b) const { return (*add)[static_cast<std::size_t>(a) * order + b]; }
  Elem times0(Elem a, Elem b) const { return (*mul)[static_cast<std::size_t>(a) * order + b]; }
  const std::uint16_t* add_row0(Elem a) const { return add->data() + static_cast<std::size_t>(a) * order; }
  const std::uint16_t* mul_row0(Elem a) const { return mul->data() + static_cast<std::size_t>(a) * order; }
};

// Ordered element subset of a ring (ascending indices) with O(1) membership.
struct ElementSet {
  std::vector<Elem> members;
  std::vector<char> mask;

  ElementSet() = default;
  ElementSet(int ring_order, std::vector<Elem> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    members = std::move(elems);
    mask.assign(ring_order, 0);
    for (Elem x : members) mask[x] = 1;
  }
  static ElementSet from_mask(const std::vector<char>& m) {
    ElementSet s;
    s.mask = m;
    for (Elem x = 0; x < static_cast<Elem>(m.size()); ++x)
      if (m[x]) s.members.push_back(x);
    return s;
  }
  bool contains(Elem x) const { return mask[x] != 0; }
  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const ElementSet& o) const { return members == o.members; }
};

inline ElementSet units(const FiniteRing& r) {
  std::vector<char> m(r.order, 0);
  for (Elem x = 0; x < r.order; ++x) {
    for (Elem y = 0; y < r.order; ++y)
      if (r.times(x, y) == r.one && r.times(y, x) == r.one) { m[x] = 1; break; }
  }
  return ElementSet::from_mask(m);
}

inline Elem unit_inverse(const FiniteRing& r, Elem u) {
  for (Elem y = 0; y < r.order; ++y)
    if (r.times(u, y) == r.one && r.times(y, u) == r.one) return y;
  throw RingError("element is not a unit");
}

inline ElementSet idempotents(const FiniteRing& r) {
  std::vector<char> m(r.order, 0);
  for (Elem x = 0; x < r.order; ++x)
    if (r.times(x, x) == x) m[x] = 1;
  return ElementSet::from_mask(m);
}

inline ElementSet nilpotents(const FiniteRing& r) {
  std::vector<char> m(r.order, 0);
  for (Elem x = 0; x < r.order; ++x)
    if (r.is_nilpotent(x)) m[x] = 1;
  return ElementSet::from_mask(m);
}

inline ElementSet center(const FiniteRing& r) {
  std::vector<char> m(r.order, 0);
  for (Elem x = 0; x < r.order; ++x) {
    bool c = true;
    for (Elem y = 0; y < r.order && c; ++y)
      c = r.times(x, y) == r.times(y, x);
    if (c) m[x] = 1;
  }
  return ElementSet::from_mask(m);
}

// J(R) via quasi-regularity: x in J(R) iff 1 - x r is a unit for every r.
inline ElementSet jacobson_radical(const FiniteRing& r) {
  ElementSet u = units(r);
  std::vector<char> m(r.order, 0);
  for (Elem x = 0; x < r.order; ++x) {
    bool in = true;
    for (Elem t = 0; t < r.order && in; ++t)
      in = u.contains(r.sub(r.one, r.times(x, t)));
    if (in) m[x] = 1;
  }
  return ElementSet::from_mask(m);
}

// Smallest subset containing S closed under addition, negation and right
// multiplication by every ring element; worklist fixpoint.
inline ElementSet right_ideal_closure(const FiniteRing& r, const std::vector<Elem>& gens) {
  std::vector<char> in(r.order, 0);
  std::vector<Elem> work, members;
  auto push = [&](Elem x) {
    if (!in[x]) { in[x] = 1; work.push_back(x); members.push_back(x); }
  };
  push(r.zero);
  for (Elem g : gens) push(g);
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    push(r.minus(x));
    const std::uint16_t* mrow = r.mul_row(x);
    for (Elem t = 0; t < r.order; ++t) push(mrow[t]);
    // pairwise sums with current members; snapshot to keep iteration valid
    std::size_t upto = members.size();
    const std::uint16_t* arow = r.add_row(x);
    for (std::size_t i = 0; i < upto; ++i) push(arow[members[i]]);
  }
  return ElementSet::from_mask(in);
}

// Two-sided ideal closure: alternate right closure and left multiplication
// until stable.
inline ElementSet two_sided_ideal_closure(const FiniteRing& r, const std::vector<Elem>& gens) {
  std::vector<Elem> expanded;
  for (Elem g : gens) {
    expanded.push_back(g);
    for (Elem t = 0; t < r.order; ++t) expanded.push_back(r.times(t, g));
  }
  ElementSet members = right_ideal_closure(r, expanded);
  while (true) {
    std::vector<Elem> more;
    for (Elem x : members.members)
      for (Elem t = 0; t < r.order; ++t) {
        Elem y = r.times(t, x);
        if (!members.contains(y)) more.push_back(y);
      }
    if (more.empty()) break;
    for (Elem x : members.members) more.push_back(x);
    members = right_ideal_closure(r, more);
  }
  return members;
}

namespace detail {

// Extend an already-closed right ideal by one generator; cheaper than
// recomputing the closure from scratch.
inline std::vector<char> extend_right_ideal(const FiniteRing& r, const std::vector<char>& base,
                                            Elem g) {
  std::vector<char> in = base;
  std::vector<Elem> work;
  auto push = [&](Elem x) {
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  };
  push(g);
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    push(r.minus(x));
    const std::uint16_t* mrow = r.mul_row(x);
    for (Elem t = 0; t < r.order; ++t) push(mrow[t]);
    const std::uint16_t* arow = r.add_row(x);
    for (Elem y = 0; y < r.order; ++y)
      if (in[y]) push(arow[y]);
  }
  return in;
}

inline int mask_count(const std::vector<char>& m) {
  int c = 0;
  for (char x : m) c += x != 0;
  return c;
}

}  // namespace detail

// All maximal elements among proper right ideals, by breadth-first extension.
// A proper right ideal is maximal iff every single-element extension closes
// to the whole ring.
inline std::vector<ElementSet> maximal_right_ideals(const FiniteRing& r,
                                                    const Caps& caps = {}) {
  if (r.order > caps.ideal_lattice)
    throw CapExceeded("ring order " + std::to_string(r.order) +
                      " exceeds ideal-lattice cap " + std::to_string(caps.ideal_lattice));
  std::set<std::vector<char>> seen;
  std::vector<std::vector<char>> queue;
  std::vector<char> zero_ideal(r.order, 0);
  zero_ideal[r.zero] = 1;
  seen.insert(zero_ideal);
  queue.push_back(zero_ideal);
  std::set<std::vector<char>> maximal;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<char> cur = queue[qi];
    if (detail::mask_count(cur) == r.order) continue;  // improper (order-1 ring)
    bool is_max = true;
    for (Elem x = 0; x < r.order; ++x) {
      if (cur[x]) continue;
      std::vector<char> ext = detail::extend_right_ideal(r, cur, x);
      if (detail::mask_count(ext) == r.order) continue;  // improper extension
      is_max = false;
      if (seen.insert(ext).second) queue.push_back(std::move(ext));
    }
    if (is_max) maximal.insert(cur);
  }
  std::vector<ElementSet> out;
  for (const auto& m : maximal) out.push_back(ElementSet::from_mask(m));
  return out;
}

}  // namespace grw
