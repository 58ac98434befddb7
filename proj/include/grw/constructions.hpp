#pragma once

// Graded-ring builders: trivial gradings, direct products, sigma-shifted full
// and upper-triangular matrix gradings, graded group rings R[G] and R[H],
// G/H coarsening, idealization A~E and central-idempotent corner rings.
//
// Every builder revalidates its declared grading; multiplicative closure of
// the components is never assumed.

#include <functional>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "grw/finite_group.hpp"
#include "grw/finite_ring.hpp"
#include "grw/grading.hpp"

namespace grw {

struct GroupMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AssociativityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotCentralIdempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Sigma = std::vector<Elem>;  // (g_1, ..., g_n)

namespace detail {

inline void check_order_cap(long long order, const Caps& caps, const char* what) {
  if (order > caps.classifier)
    throw CapExceeded(std::string(what) + ": order " + std::to_string(order) +
                      " exceeds cap " + std::to_string(caps.classifier));
}

// Enumerate all encodings where digit p ranges over allowed[p]; encode with
// the supplied mixed-radix step.
inline std::vector<Elem> enumerate_choices(const std::vector<std::vector<Elem>>& allowed,
                                           const std::function<Elem(const std::vector<Elem>&)>& encode) {
  std::vector<Elem> out;
  std::vector<int> idx(allowed.size(), 0);
  std::vector<Elem> digits(allowed.size());
  for (const auto& a : allowed)
    if (a.empty()) return out;
  while (true) {
    for (std::size_t p = 0; p < allowed.size(); ++p) digits[p] = allowed[p][idx[p]];
    out.push_back(encode(digits));
    std::size_t pos = 0;
    while (pos < allowed.size()) {
      if (++idx[pos] < static_cast<int>(allowed[pos].size())) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == allowed.size()) break;
  }
  return out;
}

template <typename Fn>
inline void parallel_rows(int rows, Fn&& body) {
  unsigned workers = rows >= 1024 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (workers <= 1) {
    for (int i = 0; i < rows; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  int chunk = (rows + static_cast<int>(workers) - 1) / static_cast<int>(workers);
  for (unsigned w = 0; w < workers; ++w) {
    int lo = static_cast<int>(w) * chunk, hi = std::min(rows, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

inline GradedRing trivial_graded(const FiniteRing& ring, const FiniteGroup& group) {
  std::vector<ElementSet> comps(group.order);
  std::vector<Elem> all(ring.order);
  for (Elem x = 0; x < ring.order; ++x) all[x] = x;
  for (Elem g = 0; g < group.order; ++g)
    comps[g] = g == group.identity ? ElementSet(ring.order, all)
                                   : ElementSet(ring.order, {ring.zero});
  return validate_grading_or_throw(ring, group, std::move(comps));
}

// Componentwise product; factor 0 is the least-significant digit of the
// mixed-radix element encoding.
inline GradedRing direct_product(const std::vector<GradedRing>& factors, const Caps& caps = {}) {
  if (factors.empty()) throw RingError("direct product needs at least one factor");
  const FiniteGroup& G = factors[0].group();
  for (const auto& f : factors)
    if (!f.group().same_table(G)) throw GroupMismatch("factors graded over different groups");
  long long order = 1;
  for (const auto& f : factors) {
    order *= f.ring.order;
    detail::check_order_cap(order, caps, "direct_product");
  }
  int n = static_cast<int>(order);
  std::vector<long long> stride(factors.size());
  {
    long long s = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      stride[i] = s;
      s *= factors[i].ring.order;
    }
  }
  auto decode = [&](Elem x, std::vector<Elem>& digits) {
    for (std::size_t i = 0; i < factors.size(); ++i)
      digits[i] = static_cast<Elem>((x / stride[i]) % factors[i].ring.order);
  };
  auto encode = [&](const std::vector<Elem>& digits) {
    long long x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x += digits[i] * stride[i];
    return static_cast<Elem>(x);
  };
  std::vector<std::uint16_t> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
  std::vector<Elem> dx(factors.size()), dy(factors.size()), dz(factors.size());
  for (Elem x = 0; x < n; ++x) {
    decode(x, dx);
    for (Elem y = 0; y < n; ++y) {
      decode(y, dy);
      for (std::size_t i = 0; i < factors.size(); ++i) dz[i] = factors[i].ring.plus(dx[i], dy[i]);
      add[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(encode(dz));
      for (std::size_t i = 0; i < factors.size(); ++i) dz[i] = factors[i].ring.times(dx[i], dy[i]);
      mul[static_cast<std::size_t>(x) * n + y] = static_cast<std::uint16_t>(encode(dz));
    }
  }
  FiniteRing R = FiniteRing::from_flat_trusted(n, std::move(add), std::move(mul));
  std::vector<ElementSet> comps(G.order);
  for (Elem g = 0; g < G.order; ++g) {
    std::vector<std::vector<Elem>> allowed(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
      allowed[i] = factors[i].component(g).members;
    comps[g] = ElementSet(n, detail::enumerate_choices(allowed, encode));
  }
  return validate_grading_or_throw(R, G, std::move(comps));
}

namespace detail {

struct MatrixShape {
  int n;                       // matrix dimension
  int base_order;
  std::vector<std::pair<int, int>> positions;  // encoded digit -> (i, j)
  std::vector<std::vector<int>> pos_index;     // (i, j) -> digit or -1
  std::vector<long long> stride;

  Elem entry(Elem x, int i, int j) const {
    int p = pos_index[i][j];
    if (p < 0) return -1;  // structural zero, caller substitutes ring zero
    return static_cast<Elem>((x / stride[p]) % base_order);
  }
};

inline MatrixShape make_shape(int n, int base_order, bool upper_triangular) {
  MatrixShape s;
  s.n = n;
  s.base_order = base_order;
  s.pos_index.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!upper_triangular || i <= j) {
        s.pos_index[i][j] = static_cast<int>(s.positions.size());
        s.positions.emplace_back(i, j);
      }
  s.stride.resize(s.positions.size());
  long long acc = 1;
  for (std::size_t p = 0; p < s.positions.size(); ++p) {
    s.stride[p] = acc;
    acc *= base_order;
  }
  return s;
}

}  // namespace detail

// The sigma-independent part of M_n(R) / T_n(R): element encoding plus the
// validated add/mul tables. Build once, then grade for each sigma.
struct MatrixCarrier {
  FiniteRing ring;
  detail::MatrixShape shape;
};

inline MatrixCarrier matrix_carrier(const FiniteRing& B, int n, bool upper_triangular,
                                    const Caps& caps = {}) {
  detail::MatrixShape shape = detail::make_shape(n, B.order, upper_triangular);
  long long order = 1;
  for (std::size_t p = 0; p < shape.positions.size(); ++p) {
    order *= B.order;
    detail::check_order_cap(order, caps, upper_triangular ? "triangular_graded" : "matrix_graded");
  }
  int m = static_cast<int>(order);
  int npos = static_cast<int>(shape.positions.size());

  // decoded entries per element (row-major full n x n, zeros filled in)
  std::vector<std::uint16_t> entries(static_cast<std::size_t>(m) * n * n);
  for (Elem x = 0; x < m; ++x)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Elem v = shape.entry(x, i, j);
        entries[(static_cast<std::size_t>(x) * n + i) * n + j] =
            static_cast<std::uint16_t>(v < 0 ? B.zero : v);
      }
  auto ent = [&](Elem x, int i, int j) -> Elem {
    return entries[(static_cast<std::size_t>(x) * n + i) * n + j];
  };
  auto encode_digits = [&](const std::vector<Elem>& digits) {
    long long x = 0;
    for (int p = 0; p < npos; ++p) x += digits[p] * shape.stride[p];
    return static_cast<Elem>(x);
  };

  std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
  detail::parallel_rows(m, [&](int x) {
    std::vector<Elem> digits(npos);
    for (Elem y = 0; y < m; ++y) {
      for (int p = 0; p < npos; ++p) {
        auto [i, j] = shape.positions[p];
        digits[p] = B.plus(ent(x, i, j), ent(y, i, j));
      }
      add[static_cast<std::size_t>(x) * m + y] = static_cast<std::uint16_t>(encode_digits(digits));
      for (int p = 0; p < npos; ++p) {
        auto [i, j] = shape.positions[p];
        Elem acc = B.zero;
        for (int k = 0; k < n; ++k) acc = B.plus(acc, B.times(ent(x, i, k), ent(y, k, j)));
        digits[p] = acc;
      }
      mul[static_cast<std::size_t>(x) * m + y] = static_cast<std::uint16_t>(encode_digits(digits));
    }
  });
  // triangular product stays triangular, so the encode above is total
  return MatrixCarrier{FiniteRing::from_flat_trusted(m, std::move(add), std::move(mul)),
                       std::move(shape)};
}

// Grade a matrix carrier over base: entry (i,j) of the lambda component is
// drawn from B_{g_i lambda g_j^-1}.
inline GradedRing grade_matrix_carrier(const MatrixCarrier& car, const GradedRing& base,
                                       const Sigma& sigma) {
  const FiniteGroup& G = base.group();
  const detail::MatrixShape& shape = car.shape;
  if (static_cast<int>(sigma.size()) != shape.n) throw RingError("sigma length must equal n");
  for (Elem g : sigma)
    if (g < 0 || g >= G.order) throw RingError("sigma entry out of group range");
  if (shape.base_order != base.ring.order)
    throw RingError("carrier was built over a different base ring order");
  int npos = static_cast<int>(shape.positions.size());
  int m = car.ring.order;
  auto encode_digits = [&](const std::vector<Elem>& digits) {
    long long x = 0;
    for (int p = 0; p < npos; ++p) x += digits[p] * shape.stride[p];
    return static_cast<Elem>(x);
  };
  std::vector<ElementSet> comps(G.order);
  for (Elem lam = 0; lam < G.order; ++lam) {
    std::vector<std::vector<Elem>> allowed(npos);
    for (int p = 0; p < npos; ++p) {
      auto [i, j] = shape.positions[p];
      Elem deg = G.op(G.op(sigma[i], lam), G.inverse(sigma[j]));
      allowed[p] = base.component(deg).members;
    }
    comps[lam] = ElementSet(m, detail::enumerate_choices(allowed, encode_digits));
  }
  return validate_grading_or_throw(car.ring, G, std::move(comps));
}

// M_n(R)(sigma): usual matrix ring, graded with entry (i,j) of the lambda
// component drawn from R_{g_i lambda g_j^-1}.
inline GradedRing matrix_graded(const GradedRing& base, int n, const Sigma& sigma,
                                const Caps& caps = {}) {
  return grade_matrix_carrier(matrix_carrier(base.ring, n, false, caps), base, sigma);
}

// T_n(R)(sigma): upper-triangular subring with the induced grading.
inline GradedRing triangular_graded(const GradedRing& base, int n, const Sigma& sigma,
                                    const Caps& caps = {}) {
  return grade_matrix_carrier(matrix_carrier(base.ring, n, true, caps), base, sigma);
}

namespace detail {

// Shared carrier for group-ring style builders: formal sums over a term set
// (a subgroup H of G), coefficients in the base ring, twisted product
// (a_g g')(b_h h') = a_g b_h (h^-1 g' h h') extended biadditively after
// decomposing coefficients into homogeneous parts.
inline GradedRing build_group_ring(const GradedRing& base, const std::vector<Elem>& terms,
                                   const Caps& caps, const char* what) {
  const FiniteRing& B = base.ring;
  const FiniteGroup& G = base.group();
  int nt = static_cast<int>(terms.size());
  long long order = 1;
  for (int i = 0; i < nt; ++i) {
    order *= B.order;
    detail::check_order_cap(order, caps, what);
  }
  int m = static_cast<int>(order);
  std::vector<long long> stride(nt);
  {
    long long s = 1;
    for (int i = 0; i < nt; ++i) {
      stride[i] = s;
      s *= B.order;
    }
  }
  std::vector<int> term_slot(G.order, -1);  // group element -> term index or -1
  for (int i = 0; i < nt; ++i) term_slot[terms[i]] = i;
  auto coeff = [&](Elem x, int slot) {
    return static_cast<Elem>((x / stride[slot]) % B.order);
  };
  auto encode = [&](const std::vector<Elem>& c) {
    long long x = 0;
    for (int i = 0; i < nt; ++i) x += c[i] * stride[i];
    return static_cast<Elem>(x);
  };

  // the twisted target term h^-1 g' h h' must stay inside the term set;
  // checked up front so the table fill below is total
  for (int ti = 0; ti < nt; ++ti)
    for (int tj = 0; tj < nt; ++tj)
      for (Elem h = 0; h < G.order; ++h) {
        Elem t = G.op(G.op(G.op(G.inverse(h), terms[ti]), h), terms[tj]);
        if (term_slot[t] < 0)
          throw NotNormal(std::string(what) + ": twisted product leaves the term set");
      }

  std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
  detail::parallel_rows(m, [&](int x) {
    std::vector<Elem> c(nt);
    for (Elem y = 0; y < m; ++y) {
      for (int i = 0; i < nt; ++i) c[i] = B.plus(coeff(x, i), coeff(y, i));
      add[static_cast<std::size_t>(x) * m + y] = static_cast<std::uint16_t>(encode(c));
      std::fill(c.begin(), c.end(), B.zero);
      for (int ti = 0; ti < nt; ++ti) {
        Elem a = coeff(x, ti);
        if (a == B.zero) continue;
        Elem gp = terms[ti];  // g'
        for (int tj = 0; tj < nt; ++tj) {
          Elem b = coeff(y, tj);
          if (b == B.zero) continue;
          Elem hp = terms[tj];  // h'
          for (Elem g = 0; g < G.order; ++g) {
            Elem ag = base.part(a, g);
            if (ag == B.zero) continue;
            for (Elem h = 0; h < G.order; ++h) {
              Elem bh = base.part(b, h);
              if (bh == B.zero) continue;
              // target term h^-1 g' h h'
              Elem t = G.op(G.op(G.op(G.inverse(h), gp), h), hp);
              int slot = term_slot[t];
              c[slot] = B.plus(c[slot], B.times(ag, bh));
            }
          }
        }
      }
      mul[static_cast<std::size_t>(x) * m + y] = static_cast<std::uint16_t>(encode(c));
    }
  });
  // For abelian G the twist vanishes and associativity is inherited; for
  // nonabelian G it is asserted by citation only, so check it exhaustively.
  FiniteRing R;
  try {
    R = G.is_abelian() ? FiniteRing::from_flat_trusted(m, std::move(add), std::move(mul))
                       : FiniteRing::from_flat(m, std::move(add), std::move(mul));
  } catch (const RingError& e) {
    throw AssociativityViolation(std::string(what) + ": twisted product fails ring axioms: " +
                                 e.what());
  }

  // (R[H])_g = direct sum over h in H of R_{g h^-1} h
  std::vector<ElementSet> comps(G.order);
  for (Elem g = 0; g < G.order; ++g) {
    std::vector<std::vector<Elem>> allowed(nt);
    for (int i = 0; i < nt; ++i)
      allowed[i] = base.component(G.op(g, G.inverse(terms[i]))).members;
    comps[g] = ElementSet(m, detail::enumerate_choices(allowed, encode));
  }
  return validate_grading_or_throw(R, G, std::move(comps));
}

}  // namespace detail

// R[G], G-graded, for R graded over the same G.
inline GradedRing group_ring_graded(const GradedRing& base, const Caps& caps = {}) {
  std::vector<Elem> terms(base.group().order);
  for (Elem g = 0; g < base.group().order; ++g) terms[g] = g;
  return detail::build_group_ring(base, terms, caps, "group_ring_graded");
}

// R[H] for a normal subgroup H, G-graded; with quotient_view the same ring is
// regraded over G/H by coarsening components along cosets.
struct SubgroupRingResult {
  GradedRing ring;               // G-graded
  std::optional<GradedRing> quotient_graded_view;  // G/H-graded, when requested
};

inline GradedRing coarsen_grading(const GradedRing& r, const std::vector<Elem>& subgroup);

inline SubgroupRingResult subgroup_ring_graded(const GradedRing& base,
                                               const std::vector<Elem>& subgroup,
                                               bool quotient_view, const Caps& caps = {}) {
  const FiniteGroup& G = base.group();
  if (!G.is_normal(subgroup)) throw NotNormal("subgroup is not normal");
  std::vector<Elem> terms = subgroup;
  std::sort(terms.begin(), terms.end());
  SubgroupRingResult out{detail::build_group_ring(base, terms, caps, "subgroup_ring_graded"), {}};
  if (quotient_view) out.quotient_graded_view = coarsen_grading(out.ring, subgroup);
  return out;
}

// Regrade over G/H: component C = sum of R_x over x in C.
inline GradedRing coarsen_grading(const GradedRing& r, const std::vector<Elem>& subgroup) {
  const FiniteGroup& G = r.group();
  if (!G.is_normal(subgroup)) throw NotNormal("subgroup is not normal");
  auto q = G.quotient(subgroup);
  std::vector<ElementSet> comps(q.group.order);
  for (Elem c = 0; c < q.group.order; ++c) {
    std::vector<std::vector<Elem>> allowed;
    for (Elem x : q.cosets[c]) allowed.push_back(r.component(x).members);
    auto encode = [&](const std::vector<Elem>& parts) {
      Elem s = r.ring.zero;
      for (Elem p : parts) s = r.ring.plus(s, p);
      return s;
    };
    comps[c] = ElementSet(r.ring.order, detail::enumerate_choices(allowed, encode));
  }
  return validate_grading_or_throw(r.ring, q.group, std::move(comps));
}

// Finite graded (A,A)-bimodule, as tables over its own carrier index set.
struct GradedBimodule {
  int order = 1;
  std::vector<std::uint16_t> add, neg;
  Elem zero = 0;
  std::vector<std::uint16_t> left_act;   // [a * order + m]
  std::vector<std::uint16_t> right_act;  // [m * |A| + a]
  std::vector<ElementSet> components;    // indexed by group element

  Elem plus(Elem m1, Elem m2) const { return add[static_cast<std::size_t>(m1) * order + m2]; }
};

inline void validate_bimodule(const GradedRing& A, const GradedBimodule& E) {
  const FiniteRing& R = A.ring;
  int me = E.order, ma = R.order;
  auto L = [&](Elem a, Elem m) { return E.left_act[static_cast<std::size_t>(a) * me + m]; };
  auto Rt = [&](Elem m, Elem a) { return E.right_act[static_cast<std::size_t>(m) * ma + a]; };
  // abelian carrier with neg
  for (Elem m1 = 0; m1 < me; ++m1) {
    if (E.plus(m1, E.zero) != m1) throw RingError("bimodule: zero not neutral");
    if (E.plus(m1, E.neg[m1]) != E.zero) throw RingError("bimodule: bad negation");
    for (Elem m2 = 0; m2 < me; ++m2) {
      if (E.plus(m1, m2) != E.plus(m2, m1)) throw RingError("bimodule: addition not commutative");
      for (Elem m3 = 0; m3 < me; ++m3)
        if (E.plus(E.plus(m1, m2), m3) != E.plus(m1, E.plus(m2, m3)))
          throw RingError("bimodule: addition not associative");
    }
  }
  for (Elem m = 0; m < me; ++m) {
    if (L(R.one, m) != m || Rt(m, R.one) != m) throw RingError("bimodule: action not unital");
  }
  for (Elem a = 0; a < ma; ++a)
    for (Elem m = 0; m < me; ++m) {
      for (Elem b = 0; b < ma; ++b) {
        if (L(R.times(a, b), m) != L(a, L(b, m)))
          throw RingError("bimodule: left action not associative");
        if (Rt(m, R.times(a, b)) != Rt(Rt(m, a), b))
          throw RingError("bimodule: right action not associative");
        if (Rt(L(a, m), b) != L(a, Rt(m, b)))
          throw RingError("bimodule: actions do not commute");
        if (L(R.plus(a, b), m) != E.plus(L(a, m), L(b, m)))
          throw RingError("bimodule: left action not additive in the ring");
      }
      for (Elem m2 = 0; m2 < me; ++m2)
        if (L(a, E.plus(m, m2)) != E.plus(L(a, m), L(a, m2)))
          throw RingError("bimodule: left action not additive in the module");
    }
  // component direct sum
  long long prod = 1;
  for (const auto& c : E.components) {
    prod *= c.size();
    if (prod > me) break;
  }
  if (prod != me) throw RingError("bimodule: components do not form a direct sum");
  // grading compatibility
  const FiniteGroup& G = A.group();
  for (Elem h = 0; h < G.order; ++h)
    for (Elem g = 0; g < G.order; ++g) {
      for (Elem a : A.component(h).members)
        for (Elem m : E.components[g].members) {
          if (!E.components[G.op(h, g)].contains(L(a, m)))
            throw RingError("bimodule: A_h * M_g leaves M_{hg}");
          if (!E.components[G.op(g, h)].contains(Rt(m, a)))
            throw RingError("bimodule: M_g * A_h leaves M_{gh}");
        }
    }
}

// E = A^k with componentwise actions and the inherited grading.
inline GradedBimodule regular_bimodule(const GradedRing& A, int k, const Caps& caps = {}) {
  if (k < 0) throw RingError("copies must be nonnegative");
  const FiniteRing& R = A.ring;
  long long order = 1;
  for (int i = 0; i < k; ++i) {
    order *= R.order;
    detail::check_order_cap(order, caps, "regular_bimodule");
  }
  GradedBimodule E;
  E.order = static_cast<int>(order);
  int me = E.order;
  std::vector<long long> stride(k);
  {
    long long s = 1;
    for (int i = 0; i < k; ++i) {
      stride[i] = s;
      s *= R.order;
    }
  }
  auto coord = [&](Elem m, int i) { return static_cast<Elem>((m / stride[i]) % R.order); };
  auto encode = [&](const std::vector<Elem>& c) {
    long long m = 0;
    for (int i = 0; i < k; ++i) m += c[i] * stride[i];
    return static_cast<Elem>(m);
  };
  E.zero = 0;
  E.add.resize(static_cast<std::size_t>(me) * me);
  E.neg.resize(me);
  std::vector<Elem> c(k);
  for (Elem m1 = 0; m1 < me; ++m1) {
    for (int i = 0; i < k; ++i) c[i] = R.minus(coord(m1, i));
    E.neg[m1] = static_cast<std::uint16_t>(encode(c));
    for (Elem m2 = 0; m2 < me; ++m2) {
      for (int i = 0; i < k; ++i) c[i] = R.plus(coord(m1, i), coord(m2, i));
      E.add[static_cast<std::size_t>(m1) * me + m2] = static_cast<std::uint16_t>(encode(c));
    }
  }
  E.left_act.resize(static_cast<std::size_t>(R.order) * me);
  E.right_act.resize(static_cast<std::size_t>(me) * R.order);
  for (Elem a = 0; a < R.order; ++a)
    for (Elem m = 0; m < me; ++m) {
      for (int i = 0; i < k; ++i) c[i] = R.times(a, coord(m, i));
      E.left_act[static_cast<std::size_t>(a) * me + m] = static_cast<std::uint16_t>(encode(c));
      for (int i = 0; i < k; ++i) c[i] = R.times(coord(m, i), a);
      E.right_act[static_cast<std::size_t>(m) * R.order + a] = static_cast<std::uint16_t>(encode(c));
    }
  E.components.resize(A.group().order);
  for (Elem g = 0; g < A.group().order; ++g) {
    std::vector<std::vector<Elem>> allowed(k, A.component(g).members);
    E.components[g] = ElementSet(me, detail::enumerate_choices(allowed, encode));
  }
  validate_bimodule(A, E);
  return E;
}

struct IdealizationResult {
  GradedRing ring;                 // A ~ E, pairs (a, m) encoded as a + |A| * m
  HomogeneousIdeal zero_prop_e;    // 0 ~ E
  GradedMap projection;            // (a, m) -> a, degree-preserving
};

// Idealization A ~ E: (a,e)(b,f) = (ab, af + eb), component g = A_g + E_g.
inline IdealizationResult idealization(const GradedRing& A, const GradedBimodule& E,
                                       const Caps& caps = {}) {
  validate_bimodule(A, E);
  const FiniteRing& R = A.ring;
  long long order = static_cast<long long>(R.order) * E.order;
  detail::check_order_cap(order, caps, "idealization");
  int m = static_cast<int>(order);
  auto pack = [&](Elem a, Elem e) { return a + R.order * e; };
  auto ring_part = [&](Elem x) { return x % R.order; };
  auto mod_part = [&](Elem x) { return x / R.order; };
  std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
  for (Elem x = 0; x < m; ++x) {
    Elem a = ring_part(x), e = mod_part(x);
    for (Elem y = 0; y < m; ++y) {
      Elem b = ring_part(y), f = mod_part(y);
      add[static_cast<std::size_t>(x) * m + y] =
          static_cast<std::uint16_t>(pack(R.plus(a, b), E.plus(e, f)));
      Elem af = E.left_act[static_cast<std::size_t>(a) * E.order + f];
      Elem eb = E.right_act[static_cast<std::size_t>(e) * R.order + b];
      mul[static_cast<std::size_t>(x) * m + y] =
          static_cast<std::uint16_t>(pack(R.times(a, b), E.plus(af, eb)));
    }
  }
  FiniteRing Ring = FiniteRing::from_flat_trusted(m, std::move(add), std::move(mul));
  const FiniteGroup& G = A.group();
  std::vector<ElementSet> comps(G.order);
  for (Elem g = 0; g < G.order; ++g) {
    std::vector<Elem> members;
    for (Elem a : A.component(g).members)
      for (Elem e : E.components[g].members) members.push_back(pack(a, e));
    comps[g] = ElementSet(m, std::move(members));
  }
  GradedRing graded = validate_grading_or_throw(Ring, G, std::move(comps));

  IdealizationResult out;
  // 0 ~ E is a homogeneous two-sided ideal with (0 ~ E)^2 = 0
  {
    std::vector<Elem> zi;
    for (Elem e = 0; e < E.order; ++e) zi.push_back(pack(R.zero, e));
    auto chk = is_homogeneous_ideal(graded, ElementSet(m, std::move(zi)), Side::TwoSided);
    if (!chk.ok()) throw RingError("0~E failed homogeneous-ideal validation: " + chk.reason);
    for (Elem x : chk.ideal->members.members)
      for (Elem y : chk.ideal->members.members)
        if (graded.ring.times(x, y) != graded.ring.zero)
          throw RingError("(0~E)^2 != 0");
    out.zero_prop_e = *std::move(chk.ideal);
  }
  out.projection.source = std::make_shared<GradedRing>(graded);
  out.projection.target = std::make_shared<GradedRing>(A);
  out.projection.table.resize(m);
  for (Elem x = 0; x < m; ++x) out.projection.table[x] = static_cast<std::uint16_t>(ring_part(x));
  out.ring = std::move(graded);
  return out;
}

struct CornerResult {
  GradedRing ring;              // tR with unity t
  std::vector<Elem> to_ambient;
  std::vector<Elem> from_ambient;  // -1 outside tR
  GradedMap projection;            // x -> tx, from the ambient ring onto tR
  bool degenerate = false;         // t == 0
};

// tR for a central idempotent t of the identity component; components tR_g.
inline CornerResult corner_ring(const GradedRing& r, Elem t) {
  const FiniteRing& R = r.ring;
  if (R.times(t, t) != t || !r.in_component(t, r.group().identity))
    throw NotCentralIdempotent("t is not an idempotent of the identity component");
  for (Elem x = 0; x < R.order; ++x)
    if (R.times(t, x) != R.times(x, t))
      throw NotCentralIdempotent("t is not central");
  std::vector<Elem> carrier;
  for (Elem x = 0; x < R.order; ++x) carrier.push_back(R.times(t, x));
  SubringResult sub = subring_from_subset(R, ElementSet(R.order, std::move(carrier)), t);
  std::vector<ElementSet> comps(r.group().order);
  for (Elem g = 0; g < r.group().order; ++g) {
    std::vector<Elem> part;
    for (Elem x : r.component(g).members) part.push_back(sub.from_ambient[R.times(t, x)]);
    comps[g] = ElementSet(sub.ring.order, std::move(part));
  }
  CornerResult out;
  out.ring = validate_grading_or_throw(sub.ring, r.group(), std::move(comps));
  out.to_ambient = sub.to_ambient;
  out.from_ambient = sub.from_ambient;
  out.degenerate = t == R.zero;
  out.projection.source = std::make_shared<GradedRing>(r);
  out.projection.target = std::make_shared<GradedRing>(out.ring);
  out.projection.table.resize(R.order);
  for (Elem x = 0; x < R.order; ++x)
    out.projection.table[x] = static_cast<std::uint16_t>(out.from_ambient[R.times(t, x)]);
  return out;
}

struct PeirceGlue {
  GradedMap iso;     // corner(t) x corner(1-t) -> R, (tx, (1-t)y) -> tx + (1-t)y
  bool is_graded_isomorphism = false;
};

inline PeirceGlue peirce_glue(const GradedRing& r, Elem t, const Caps& caps = {}) {
  const FiniteRing& R = r.ring;
  CornerResult ct = corner_ring(r, t);
  CornerResult cu = corner_ring(r, R.sub(R.one, t));
  GradedRing prod = direct_product({ct.ring, cu.ring}, caps);
  PeirceGlue out;
  out.iso.source = std::make_shared<GradedRing>(std::move(prod));
  out.iso.target = std::make_shared<GradedRing>(r);
  int n1 = ct.ring.ring.order;
  out.iso.table.resize(out.iso.source->ring.order);
  for (Elem x = 0; x < out.iso.source->ring.order; ++x) {
    Elem a = ct.to_ambient[x % n1];
    Elem b = cu.to_ambient[x / n1];
    out.iso.table[x] = static_cast<std::uint16_t>(R.plus(a, b));
  }
  out.is_graded_isomorphism = out.iso.is_ring_homomorphism() && out.iso.is_bijective() &&
                              is_degree_preserving(out.iso);
  return out;
}

// Ordinary (untwisted) group ring over a plain coefficient ring: the
// cross-oracle for group_ring_graded with trivially graded coefficients.
inline FiniteRing plain_group_ring(const FiniteRing& B, const FiniteGroup& G,
                                   const Caps& caps = {}) {
  long long order = 1;
  for (Elem g = 0; g < G.order; ++g) {
    order *= B.order;
    detail::check_order_cap(order, caps, "plain_group_ring");
  }
  int m = static_cast<int>(order);
  std::vector<long long> stride(G.order);
  {
    long long s = 1;
    for (Elem g = 0; g < G.order; ++g) {
      stride[g] = s;
      s *= B.order;
    }
  }
  auto coeff = [&](Elem x, Elem g) { return static_cast<Elem>((x / stride[g]) % B.order); };
  std::vector<std::uint16_t> add(static_cast<std::size_t>(m) * m), mul(static_cast<std::size_t>(m) * m);
  std::vector<Elem> c(G.order);
  for (Elem x = 0; x < m; ++x)
    for (Elem y = 0; y < m; ++y) {
      long long sa = 0;
      for (Elem g = 0; g < G.order; ++g) sa += B.plus(coeff(x, g), coeff(y, g)) * stride[g];
      add[static_cast<std::size_t>(x) * m + y] = static_cast<std::uint16_t>(sa);
      std::fill(c.begin(), c.end(), B.zero);
      for (Elem g = 0; g < G.order; ++g) {
        Elem a = coeff(x, g);
        if (a == B.zero) continue;
        for (Elem h = 0; h < G.order; ++h) {
          Elem b = coeff(y, h);
          if (b == B.zero) continue;
          Elem gh = G.op(g, h);
          c[gh] = B.plus(c[gh], B.times(a, b));
        }
      }
      long long sm = 0;
      for (Elem g = 0; g < G.order; ++g) sm += c[g] * stride[g];
      mul[static_cast<std::size_t>(x) * m + y] = static_cast<std::uint16_t>(sm);
    }
  return FiniteRing::from_flat(m, std::move(add), std::move(mul));
}

}  // namespace grw
