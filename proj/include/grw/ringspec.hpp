#pragma once

// Ring-spec documents: a JSON construction-expression format for groups and
// graded rings. Parsing yields the built instance plus a structural element
// formatter (matrix grids, coefficient sums) for human-checkable certificates.
// Serialization dumps explicit tables; reparsing a serialized instance
// reproduces the ring bit-exactly.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "grw/constructions.hpp"
#include "grw/finite_group.hpp"
#include "grw/finite_ring.hpp"
#include "grw/grading.hpp"

namespace grw {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownKind : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadReference : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BuiltInstance {
  GradedRing ring;
  std::function<std::string(Elem)> label;  // structural element display
};

namespace detail {

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // convert byte offset to line/column
    std::size_t off = std::min(e.byte, text.size());
    int line = 1, col = 1;
    for (std::size_t i = 0; i < off; ++i) {
      if (text[i] == '\n') { ++line; col = 1; } else ++col;
    }
    throw ParseError("parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
}

inline const json& require_field(const json& j, const char* key, const char* ctx) {
  if (!j.contains(key))
    throw ParseError(std::string(ctx) + ": missing required key \"" + key + "\"");
  return j.at(key);
}

inline FiniteGroup build_group(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("group block: missing kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "cyclic") {
    return FiniteGroup::cyclic(require_field(j, "order", "cyclic group").get<int>());
  }
  if (kind == "product") {
    const json& fs = require_field(j, "factors", "product group");
    if (!fs.is_array() || fs.empty()) throw ParseError("product group: factors must be nonempty");
    FiniteGroup g = build_group(fs[0]);
    for (std::size_t i = 1; i < fs.size(); ++i) g = FiniteGroup::product(g, build_group(fs[i]));
    return g;
  }
  if (kind == "table") {
    auto table = require_field(j, "mul", "table group").get<std::vector<std::vector<Elem>>>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup::from_table(table, std::move(names));
  }
  throw UnknownKind("unknown group kind: " + kind);
}

inline Elem group_elem_ref(const FiniteGroup& g, const json& j) {
  if (j.is_number_integer()) {
    Elem x = j.get<Elem>();
    if (x < 0 || x >= g.order) throw BadReference("group element index out of range");
    return x;
  }
  std::string s = j.get<std::string>();
  for (Elem i = 0; i < g.order; ++i)
    if (g.names[i] == s) return i;
  throw BadReference("group element \"" + s + "\" not found");
}

inline BuiltInstance build_expr(const json& j, const FiniteGroup& group, const Caps& caps);

inline std::vector<Elem> subgroup_ref(const FiniteGroup& g, const json& j) {
  std::vector<Elem> h;
  for (const auto& e : j) h.push_back(group_elem_ref(g, e));
  return h;
}

inline BuiltInstance build_expr(const json& j, const FiniteGroup& group, const Caps& caps) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("ring expression: missing kind");
  std::string kind = j.at("kind").get<std::string>();

  if (kind == "zmod") {
    int n = require_field(j, "n", "zmod").get<int>();
    detail::check_order_cap(n, caps, "zmod");
    GradedRing r = trivial_graded(FiniteRing::zmod(n), group);
    return {std::move(r), [](Elem x) { return std::to_string(x); }};
  }

  if (kind == "table") {
    auto add = require_field(j, "add", "table ring").get<std::vector<std::vector<Elem>>>();
    auto mul = require_field(j, "mul", "table ring").get<std::vector<std::vector<Elem>>>();
    detail::check_order_cap(static_cast<long long>(add.size()), caps, "table ring");
    FiniteRing R = FiniteRing::from_tables(add, mul);
    std::vector<ElementSet> comps(group.order);
    if (j.contains("components")) {
      const json& cj = j.at("components");
      std::vector<char> covered(group.order, 0);
      for (auto it = cj.begin(); it != cj.end(); ++it) {
        Elem g = group_elem_ref(group, json(it.key()));
        comps[g] = ElementSet(R.order, it.value().get<std::vector<Elem>>());
        covered[g] = 1;
      }
      for (Elem g = 0; g < group.order; ++g)
        if (!covered[g]) comps[g] = ElementSet(R.order, {R.zero});
    } else {
      return {trivial_graded(R, group), [](Elem x) { return std::to_string(x); }};
    }
    GradedRing r = validate_grading_or_throw(R, group, std::move(comps));
    return {std::move(r), [](Elem x) { return std::to_string(x); }};
  }

  if (kind == "matrix" || kind == "triangular") {
    BuiltInstance base = build_expr(require_field(j, "base", kind.c_str()), group, caps);
    int n = require_field(j, "n", kind.c_str()).get<int>();
    Sigma sigma;
    for (const auto& s : require_field(j, "sigma", kind.c_str()))
      sigma.push_back(group_elem_ref(group, s));
    bool tri = kind == "triangular";
    GradedRing r = tri ? triangular_graded(base.ring, n, sigma, caps)
                       : matrix_graded(base.ring, n, sigma, caps);
    int bo = base.ring.ring.order;
    auto bl = base.label;
    auto label = [n, bo, bl, tri](Elem x) {
      std::string out = "[";
      long long rem = x;
      // digits in shape order: row-major, triangular skips below-diagonal
      std::vector<std::vector<std::string>> grid(n, std::vector<std::string>(n, "0"));
      for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
          if (tri && i > jj) continue;
          grid[i][jj] = bl(static_cast<Elem>(rem % bo));
          rem /= bo;
        }
      for (int i = 0; i < n; ++i) {
        out += i ? ";[" : "[";
        for (int jj = 0; jj < n; ++jj) out += (jj ? "," : "") + grid[i][jj];
        out += "]";
      }
      return out + "]";
    };
    return {std::move(r), label};
  }

  if (kind == "groupring" || kind == "subgroupring") {
    BuiltInstance base = build_expr(require_field(j, "base", kind.c_str()), group, caps);
    std::vector<Elem> terms;
    bool quotient_view = false;
    GradedRing r;
    if (kind == "groupring") {
      for (Elem g = 0; g < group.order; ++g) terms.push_back(g);
      r = group_ring_graded(base.ring, caps);
    } else {
      terms = subgroup_ref(group, require_field(j, "subgroup", "subgroupring"));
      std::sort(terms.begin(), terms.end());
      if (j.contains("quotient_view")) quotient_view = j.at("quotient_view").get<bool>();
      auto sr = subgroup_ring_graded(base.ring, terms, quotient_view, caps);
      r = quotient_view ? *std::move(sr.quotient_graded_view) : std::move(sr.ring);
    }
    int bo = base.ring.ring.order;
    auto bl = base.label;
    FiniteGroup gcopy = group;
    auto label = [terms, bo, bl, gcopy](Elem x) {
      std::string out;
      long long rem = x;
      for (Elem t : terms) {
        Elem c = static_cast<Elem>(rem % bo);
        rem /= bo;
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        out += bl(c) + "*" + gcopy.name(t);
      }
      return out.empty() ? std::string("0") : out;
    };
    return {std::move(r), label};
  }

  if (kind == "coarsen") {
    BuiltInstance base = build_expr(require_field(j, "base", "coarsen"), group, caps);
    std::vector<Elem> h = subgroup_ref(group, require_field(j, "subgroup", "coarsen"));
    GradedRing r = coarsen_grading(base.ring, h);
    return {std::move(r), base.label};
  }

  if (kind == "product") {
    const json& fs = require_field(j, "factors", "product");
    if (!fs.is_array() || fs.empty()) throw ParseError("product: factors must be nonempty");
    std::vector<BuiltInstance> built;
    std::vector<GradedRing> rings;
    for (const auto& f : fs) {
      built.push_back(build_expr(f, group, caps));
      rings.push_back(built.back().ring);
    }
    GradedRing r = direct_product(rings, caps);
    std::vector<int> orders;
    std::vector<std::function<std::string(Elem)>> labels;
    for (auto& b : built) {
      orders.push_back(b.ring.ring.order);
      labels.push_back(b.label);
    }
    auto label = [orders, labels](Elem x) {
      std::string out = "(";
      long long rem = x;
      for (std::size_t i = 0; i < orders.size(); ++i) {
        out += (i ? ", " : "") + labels[i](static_cast<Elem>(rem % orders[i]));
        rem /= orders[i];
      }
      return out + ")";
    };
    return {std::move(r), label};
  }

  if (kind == "quotient") {
    BuiltInstance base = build_expr(require_field(j, "base", "quotient"), group, caps);
    auto gens = require_field(j, "ideal", "quotient").get<std::vector<Elem>>();
    for (Elem g : gens)
      if (g < 0 || g >= base.ring.ring.order) throw BadReference("ideal generator out of range");
    const FiniteRing& R = base.ring.ring;
    ElementSet members = two_sided_ideal_closure(R, gens);
    auto chk = is_homogeneous_ideal(base.ring, members, Side::TwoSided);
    if (!chk.ok()) throw BadReference("quotient: generated ideal is not homogeneous: " + chk.reason);
    QuotientResult q = quotient_graded(base.ring, *chk.ideal);
    auto bl = base.label;
    std::vector<Elem> reps = q.representative;
    auto label = [bl, reps](Elem x) { return "[" + bl(reps[x]) + "]"; };
    return {std::move(q.quotient), label};
  }

  if (kind == "idealization") {
    BuiltInstance base = build_expr(require_field(j, "base", "idealization"), group, caps);
    int copies = j.contains("copies") ? j.at("copies").get<int>() : 1;
    GradedBimodule E = regular_bimodule(base.ring, copies, caps);
    IdealizationResult r = idealization(base.ring, E, caps);
    int bo = base.ring.ring.order;
    auto bl = base.label;
    auto label = [bo, bl, copies](Elem x) {
      Elem a = x % bo;
      long long m = x / bo;
      std::string out = "(" + bl(a) + " | ";
      for (int i = 0; i < copies; ++i) {
        out += (i ? "," : "") + bl(static_cast<Elem>(m % bo));
        m /= bo;
      }
      if (copies == 0) out += "0";
      return out + ")";
    };
    return {std::move(r.ring), label};
  }

  if (kind == "corner") {
    BuiltInstance base = build_expr(require_field(j, "base", "corner"), group, caps);
    Elem t = require_field(j, "t", "corner").get<Elem>();
    if (t < 0 || t >= base.ring.ring.order) throw BadReference("corner: t out of range");
    CornerResult r = corner_ring(base.ring, t);
    auto bl = base.label;
    std::vector<Elem> amb = r.to_ambient;
    auto label = [bl, amb](Elem x) { return bl(amb[x]); };
    return {std::move(r.ring), label};
  }

  throw UnknownKind("unknown ring kind: " + kind);
}

}  // namespace detail

// Parse text and build the instance. With no group block the trivial group is
// used (so a bare zmod ring is trivially graded).
inline BuiltInstance parse_spec(const std::string& text, const Caps& caps = {}) {
  json j = detail::parse_json_text(text);
  if (!j.is_object() || !j.contains("ring"))
    throw ParseError("ring-spec document: missing \"ring\"");
  FiniteGroup group =
      j.contains("group") ? detail::build_group(j.at("group")) : FiniteGroup::trivial();
  return detail::build_expr(j.at("ring"), group, caps);
}

inline BuiltInstance build_document(const json& j, const Caps& caps = {}) {
  if (!j.is_object() || !j.contains("ring"))
    throw SchemaMismatch("ring-spec document: missing \"ring\"");
  FiniteGroup group =
      j.contains("group") ? detail::build_group(j.at("group")) : FiniteGroup::trivial();
  return detail::build_expr(j.at("ring"), group, caps);
}

// Explicit-table serialization; reparsing yields bit-equal tables.
inline json serialize_instance(const GradedRing& r) {
  json group;
  group["kind"] = "table";
  {
    std::vector<std::vector<Elem>> mul(r.group().order, std::vector<Elem>(r.group().order));
    for (Elem a = 0; a < r.group().order; ++a)
      for (Elem b = 0; b < r.group().order; ++b) mul[a][b] = r.group().op(a, b);
    group["mul"] = mul;
    group["names"] = r.group().names;
  }
  json ring;
  ring["kind"] = "table";
  {
    int n = r.ring.order;
    std::vector<std::vector<Elem>> add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        add[a][b] = r.ring.plus(a, b);
        mul[a][b] = r.ring.times(a, b);
      }
    ring["add"] = add;
    ring["mul"] = mul;
    json comps = json::object();
    for (Elem g = 0; g < r.group().order; ++g)
      comps[r.group().name(g)] = r.component(g).members;
    ring["components"] = comps;
  }
  return json{{"group", group}, {"ring", ring}};
}

}  // namespace grw
