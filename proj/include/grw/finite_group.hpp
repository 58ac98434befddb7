#pragma once

// Finite groups as explicit Cayley tables. Element 0-based indices; identity
// and inverses are computed and checked at construction time.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace grw {

using Elem = int;

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroupQuotient;

class FiniteGroup {
 public:
  int order = 1;
  std::vector<std::uint16_t> mul;  // row-major order x order
  Elem identity = 0;
  std::vector<std::uint16_t> inv;
  std::vector<std::string> names;

  Elem op(Elem a, Elem b) const { return mul[static_cast<std::size_t>(a) * order + b]; }
  Elem inverse(Elem a) const { return inv[a]; }

  const std::string& name(Elem a) const { return names[a]; }

  Elem by_name(const std::string& s) const {
    for (Elem i = 0; i < order; ++i)
      if (names[i] == s) return i;
    throw GroupError("unknown group element name: " + s);
  }

  bool is_abelian() const {
    for (Elem a = 0; a < order; ++a)
      for (Elem b = a + 1; b < order; ++b)
        if (op(a, b) != op(b, a)) return false;
    return true;
  }

  // Validates the table and fills identity/inv. Names optional.
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table,
                                std::vector<std::string> names = {}) {
    FiniteGroup g;
    g.order = static_cast<int>(table.size());
    if (g.order < 1) throw GroupError("empty group table");
    g.mul.resize(static_cast<std::size_t>(g.order) * g.order);
    for (int i = 0; i < g.order; ++i) {
      if (static_cast<int>(table[i].size()) != g.order)
        throw GroupError("group table is not square");
      for (int j = 0; j < g.order; ++j) {
        Elem v = table[i][j];
        if (v < 0 || v >= g.order) throw GroupError("group table entry out of range");
        g.mul[static_cast<std::size_t>(i) * g.order + j] = static_cast<std::uint16_t>(v);
      }
    }
    // locate two-sided identity
    Elem id = -1;
    for (Elem e = 0; e < g.order; ++e) {
      bool ok = true;
      for (Elem x = 0; x < g.order && ok; ++x)
        ok = g.op(e, x) == x && g.op(x, e) == x;
      if (ok) { id = e; break; }
    }
    if (id < 0) throw GroupError("group table has no identity");
    g.identity = id;
    // inverses
    g.inv.resize(g.order);
    for (Elem x = 0; x < g.order; ++x) {
      Elem xi = -1;
      for (Elem y = 0; y < g.order; ++y)
        if (g.op(x, y) == id && g.op(y, x) == id) { xi = y; break; }
      if (xi < 0) throw GroupError("group element has no two-sided inverse");
      g.inv[x] = static_cast<std::uint16_t>(xi);
    }
    // associativity, exhaustively
    for (Elem a = 0; a < g.order; ++a)
      for (Elem b = 0; b < g.order; ++b) {
        Elem ab = g.op(a, b);
        for (Elem c = 0; c < g.order; ++c)
          if (g.op(ab, c) != g.op(a, g.op(b, c)))
            throw GroupError("group table is not associative");
      }
    if (names.empty()) {
      names.resize(g.order);
      for (Elem x = 0; x < g.order; ++x)
        names[x] = x == id ? "e" : ("a" + std::to_string(x));
    }
    if (static_cast<int>(names.size()) != g.order)
      throw GroupError("name list length mismatch");
    g.names = std::move(names);
    return g;
  }

  static FiniteGroup trivial() { return cyclic(1); }

  static FiniteGroup cyclic(int n) {
    if (n < 1) throw GroupError("cyclic group order must be positive");
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i)
      names[i] = i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i));
    return from_table(t, std::move(names));
  }

  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
    auto pack = [&](Elem x, Elem y) { return x * b.order + y; };
    for (Elem x1 = 0; x1 < a.order; ++x1)
      for (Elem y1 = 0; y1 < b.order; ++y1)
        for (Elem x2 = 0; x2 < a.order; ++x2)
          for (Elem y2 = 0; y2 < b.order; ++y2)
            t[pack(x1, y1)][pack(x2, y2)] = pack(a.op(x1, x2), b.op(y1, y2));
    std::vector<std::string> names(n);
    for (Elem x = 0; x < a.order; ++x)
      for (Elem y = 0; y < b.order; ++y)
        names[pack(x, y)] = a.name(x) + "." + b.name(y);
    return from_table(t, std::move(names));
  }

  bool same_table(const FiniteGroup& o) const {
    return order == o.order && mul == o.mul;
  }

  bool is_subgroup(const std::vector<Elem>& h) const {
    std::vector<char> in(order, 0);
    for (Elem x : h) {
      if (x < 0 || x >= order) return false;
      in[x] = 1;
    }
    if (!in[identity]) return false;
    for (Elem x : h) {
      if (!in[inv[x]]) return false;
      for (Elem y : h)
        if (!in[op(x, y)]) return false;
    }
    return true;
  }

  bool is_normal(const std::vector<Elem>& h) const {
    if (!is_subgroup(h)) return false;
    std::vector<char> in(order, 0);
    for (Elem x : h) in[x] = 1;
    for (Elem g = 0; g < order; ++g)
      for (Elem x : h)
        if (!in[op(op(g, x), inv[g])]) return false;
    return true;
  }

  int element_order(Elem x) const {
    Elem y = x;
    int k = 1;
    while (y != identity) { y = op(y, x); ++k; }
    return k;
  }

  bool is_p_group(int p) const {
    for (Elem x = 0; x < order; ++x) {
      int k = element_order(x);
      while (k % p == 0) k /= p;
      if (k != 1) return false;
    }
    return true;
  }

  // All subgroups, each as an ascending element list; result sorted by
  // (size, lexicographic members) for determinism.
  std::vector<std::vector<Elem>> subgroups() const {
    std::set<std::vector<Elem>> found;
    std::vector<std::vector<Elem>> queue;
    std::vector<Elem> triv{identity};
    found.insert(triv);
    queue.push_back(triv);
    auto close = [&](std::vector<Elem> gens) {
      std::vector<char> in(order, 0);
      in[identity] = 1;
      std::vector<Elem> work{identity}, members{identity};
      for (Elem g : gens)
        if (!in[g]) { in[g] = 1; work.push_back(g); members.push_back(g); }
      while (!work.empty()) {
        Elem x = work.back();
        work.pop_back();
        std::vector<Elem> snapshot = members;
        for (Elem y : snapshot)
          for (Elem z : {op(x, y), op(y, x), static_cast<Elem>(inv[x])})
            if (!in[z]) { in[z] = 1; work.push_back(z); members.push_back(z); }
      }
      std::sort(members.begin(), members.end());
      return members;
    };
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::vector<Elem> h = queue[qi];
      for (Elem x = 0; x < order; ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<Elem> gens = h;
        gens.push_back(x);
        auto k = close(gens);
        if (found.insert(k).second) queue.push_back(k);
      }
    }
    std::vector<std::vector<Elem>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return out;
  }

  GroupQuotient quotient(const std::vector<Elem>& h) const;
};

struct GroupQuotient {
  FiniteGroup group;            // G/H, cosets ordered by least member
  std::vector<Elem> coset_of;   // ambient element -> coset index
  std::vector<std::vector<Elem>> cosets;
};

inline GroupQuotient FiniteGroup::quotient(const std::vector<Elem>& h) const {
    if (!is_normal(h)) throw GroupError("subgroup is not normal");
    std::vector<Elem> coset_of(order, -1);
    std::vector<std::vector<Elem>> cosets;
    for (Elem x = 0; x < order; ++x) {
      if (coset_of[x] >= 0) continue;
      std::vector<Elem> c;
      for (Elem y : h) c.push_back(op(x, y));
      std::sort(c.begin(), c.end());
      int idx = static_cast<int>(cosets.size());
      for (Elem y : c) coset_of[y] = idx;
      cosets.push_back(std::move(c));
    }
    // reorder cosets by least member (identity coset first since e's coset
    // contains h and min over cosets of identity... sort explicitly)
    std::vector<int> perm(cosets.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return cosets[a].front() < cosets[b].front();
    });
    std::vector<int> inv_perm(cosets.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv_perm[perm[i]] = static_cast<int>(i);
    std::vector<std::vector<Elem>> sorted;
    for (int p : perm) sorted.push_back(cosets[p]);
    for (Elem x = 0; x < order; ++x) coset_of[x] = inv_perm[coset_of[x]];
    int q = static_cast<int>(sorted.size());
    std::vector<std::vector<Elem>> t(q, std::vector<Elem>(q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        t[a][b] = coset_of[op(sorted[a].front(), sorted[b].front())];
    std::vector<std::string> qnames(q);
    for (int a = 0; a < q; ++a) qnames[a] = "[" + name(sorted[a].front()) + "]";
  GroupQuotient out{from_table(t, std::move(qnames)), std::move(coset_of), std::move(sorted)};
  return out;
}

}  // namespace grw
