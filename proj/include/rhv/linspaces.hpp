#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rhv/classify.hpp"
#include "rhv/parabolic.hpp"

namespace rhv {

// Thrown when a node is exposed short and the Tits-geometry machinery does
// not apply; callers are pointed at the explicit catalog instead.
struct ExposedShortError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Varieties of lines.  One family per j in S; non-exposed classes are a
// single homogeneous space, exposed-short classes an open orbit plus that
// boundary.
// ---------------------------------------------------------------------------

struct LineFamily {
  int class_node = 0;
  bool exposed_short = false;
  MarkedDiagram closed_orbit;  // full diagram, marks 1 on (S \ {j}) u N(j)
  int closed_dim = 0;
  std::optional<int> open_dim;  // |Gamma|, exposed case only
  std::optional<Root> delta0;   // distinguished long root, exposed case only
};

namespace detail {

// The uniquely determined long root delta_0 = p alpha_j + gamma: it is the
// highest root of its support, j is an end of that support, and gamma is
// supported outside S.
inline Root find_delta0(const RootSystem& R, const std::set<int>& S, int j) {
  std::vector<Root> candidates;
  for (const auto& a : R.positive()) {
    int p = a.coeff(j);
    if (p != 2 && p != 3) continue;
    if (!R.is_long(a)) continue;
    bool clean = true;
    for (int s : S)
      if (s != j && a.coeff(s) != 0) clean = false;
    if (!clean) continue;
    // highest root of its own support
    auto supp = a.support();
    std::set<int> supp_set(supp.begin(), supp.end());
    bool highest = true;
    for (int i : supp) {
      std::vector<int> up = a.c;
      up[i - 1] += 1;
      if (R.is_positive_root(up)) {
        // staying inside the support subsystem
        highest = false;
        break;
      }
    }
    if (!highest) continue;
    // j must be an end of the support subdiagram
    int deg = 0;
    for (int v : R.diagram().neighbors(j))
      if (supp_set.count(v)) ++deg;
    if (deg > 1) continue;
    // for p = 2 the support is a C-chain from j and n(delta0, alpha_j) = 2;
    // that cuts the ambient highest root out of the candidate list
    if (p == 2) {
      Root alpha_j{std::vector<int>(R.rank(), 0)};
      alpha_j.c[j - 1] = 1;
      if (R.pairing(a, alpha_j) != 2) continue;
    }
    candidates.push_back(a);
  }
  if (candidates.size() != 1)
    throw Inconsistency("delta0 search found " + std::to_string(candidates.size()) +
                        " candidates at node " + std::to_string(j));
  return candidates[0];
}

// Gamma = (Delta_X - {alpha}) u {beta - alpha in Delta : beta in Delta_X};
// its cardinality is the dimension of the open orbit of lines.
inline std::set<std::vector<int>> gamma_set(const RootSystem& R, const std::set<int>& S,
                                            const Root& alpha) {
  std::set<std::vector<int>> gamma;
  auto dx = delta_X(R, S);
  for (const auto& b : dx)
    if (!(b == alpha)) gamma.insert(b.c);
  for (const auto& b : dx) {
    std::vector<int> diff(b.c.size());
    bool zero = true;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
      diff[i] = b.c[i] - alpha.c[i];
      if (diff[i]) zero = false;
    }
    if (!zero && R.is_root(diff)) gamma.insert(diff);
  }
  return gamma;
}

}  // namespace detail

inline std::vector<LineFamily> line_classes(const RootSystem& R, const ParabolicSpec& ps) {
  std::vector<LineFamily> out;
  for (int j : ps.S) {
    LineFamily f;
    f.class_node = j;
    std::set<int> closed_marks;
    for (int s : ps.S)
      if (s != j) closed_marks.insert(s);
    for (int v : R.diagram().neighbors(j)) closed_marks.insert(v);
    f.closed_orbit.diagram = R.diagram();
    for (int v : closed_marks) f.closed_orbit.marks[v] = 1;
    f.closed_dim = closed_marks.empty() ? 0 : dimension(R, closed_marks);
    f.exposed_short = is_exposed_short(R, ps.S, j);
    if (f.exposed_short) {
      Root d0 = detail::find_delta0(R, ps.S, j);
      f.delta0 = d0;
      f.open_dim = static_cast<int>(detail::gamma_set(R, ps.S, d0).size());
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<LineFamily> line_classes(const ParabolicSpec& ps) {
  RootSystem R = build_root_system(ps.spec);
  return line_classes(R, ps);
}

// ---------------------------------------------------------------------------
// The cone of alpha-lines through a point: components of the closure of
// D \ S, minus alpha, that meet N(alpha), marked on N(alpha).
// ---------------------------------------------------------------------------

struct ConeOfLines {
  MarkedDiagram cone;            // possibly disconnected or empty (a point)
  int cone_dim = 0;              // dim H/P_{N(alpha)}
  bool exposed_short = false;
  std::optional<int> base_locus_dim;  // projective dim of Base|FF2| at a point
};

inline ConeOfLines cone_of_lines(const RootSystem& R, const ParabolicSpec& ps, int alpha) {
  if (!ps.S.count(alpha)) throw Precondition("cone_of_lines: node not in S");
  const DynkinDiagram& d = R.diagram();
  std::set<int> closure;
  for (int v = 1; v <= d.rank(); ++v)
    if (!ps.S.count(v)) closure.insert(v);
  for (int s : ps.S)
    for (int v : d.neighbors(s))
      if (!ps.S.count(v)) closure.insert(s);
  closure.erase(alpha);

  std::vector<int> keep(closure.begin(), closure.end());
  std::vector<int> to_orig;
  DynkinDiagram sub = d.induced(keep, &to_orig);
  std::set<int> nbrs;
  for (int v : d.neighbors(alpha)) nbrs.insert(v);

  std::set<int> kept_orig;
  for (const auto& comp : sub.components()) {
    bool meets = false;
    for (int v : comp)
      if (nbrs.count(to_orig[v - 1])) meets = true;
    if (meets)
      for (int v : comp) kept_orig.insert(to_orig[v - 1]);
  }

  ConeOfLines out;
  std::vector<int> kept(kept_orig.begin(), kept_orig.end());
  std::vector<int> labels;
  out.cone.diagram = d.induced(kept, &labels);
  out.cone.orig_labels = labels;
  std::set<int> marked_local;
  for (std::size_t t = 0; t < labels.size(); ++t)
    if (nbrs.count(labels[t])) {
      out.cone.marks[static_cast<int>(t) + 1] = 1;
      marked_local.insert(static_cast<int>(t) + 1);
    }
  if (!kept.empty() && !marked_local.empty()) {
    SubSystem ss = sub_root_system(d, kept);
    out.cone_dim = dimension(ss.R, marked_local);
  }
  out.exposed_short = is_exposed_short(R, ps.S, alpha);
  if (out.exposed_short) {
    Root d0 = detail::find_delta0(R, ps.S, alpha);
    int open_dim = static_cast<int>(detail::gamma_set(R, ps.S, d0).size());
    out.base_locus_dim = open_dim - dimension(R, ps.S) + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// k-planes (Tits case): all inclusion-minimal node sets whose removal leaves
// an A_k component with alpha extremal, meeting S only in alpha.
// ---------------------------------------------------------------------------

struct PlaneFamily {
  int k = 0;
  std::vector<int> removed_nodes;
  std::vector<int> chain;        // the A_k component containing alpha
  MarkedDiagram parameter;       // full diagram, marks 1 on removed_nodes
};

namespace detail {

// component of alpha in D \ B, or empty if alpha in B
inline std::vector<int> component_without(const DynkinDiagram& d, int alpha,
                                          const std::set<int>& removed) {
  if (removed.count(alpha)) return {};
  std::vector<int> comp{alpha}, stack{alpha};
  std::set<int> vis{alpha};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : d.neighbors(u)) {
      if (removed.count(v) || vis.count(v)) continue;
      vis.insert(v);
      comp.push_back(v);
      stack.push_back(v);
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

inline bool valid_plane_cut(const DynkinDiagram& d, const std::set<int>& S, int alpha, int k,
                            const std::set<int>& B, std::vector<int>* chain_out) {
  auto comp = component_without(d, alpha, B);
  if (static_cast<int>(comp.size()) != k) return false;
  std::set<int> in_comp(comp.begin(), comp.end());
  for (int v : comp)
    if (S.count(v) && v != alpha) return false;
  // path shape with simple bonds and alpha extremal
  int alpha_deg = 0;
  for (int v : comp) {
    int deg = 0;
    for (int w : d.neighbors(v)) {
      if (!in_comp.count(w)) continue;
      const Edge* e = d.edge_between(v, w);
      if (e->bond != 1) return false;
      ++deg;
    }
    if (deg > 2) return false;
    if (v == alpha) alpha_deg = deg;
  }
  if (k > 1 && alpha_deg != 1) return false;
  if (chain_out) {
    // walk the path starting from alpha
    std::vector<int> chain{alpha};
    int prev = 0, cur = alpha;
    while (static_cast<int>(chain.size()) < k) {
      for (int w : d.neighbors(cur)) {
        if (!in_comp.count(w) || w == prev) continue;
        chain.push_back(w);
        prev = cur;
        cur = w;
        break;
      }
    }
    *chain_out = chain;
  }
  return true;
}

}  // namespace detail

inline std::vector<PlaneFamily> planes(const RootSystem& R, const ParabolicSpec& ps, int alpha,
                                       int k) {
  if (!ps.S.count(alpha)) throw Precondition("planes: node not in S");
  if (k < 1) throw Precondition("planes: k must be >= 1");
  if (is_exposed_short(R, ps.S, alpha))
    throw ExposedShortError("planes: node " + std::to_string(alpha) +
                            " is exposed short; use exposed_planes_catalog");
  const DynkinDiagram& d = R.diagram();
  std::vector<int> others;
  for (int v = 1; v <= d.rank(); ++v)
    if (v != alpha) others.push_back(v);

  std::vector<std::set<int>> minimal;
  std::vector<PlaneFamily> out;
  const int m = static_cast<int>(others.size());
  std::vector<std::vector<int>> by_size(m + 1);
  for (int mask = 0; mask < (1 << m); ++mask)
    by_size[__builtin_popcount(static_cast<unsigned>(mask))].push_back(mask);
  for (int size = 0; size <= m; ++size) {
    for (int mask : by_size[size]) {
      std::set<int> B;
      for (int t = 0; t < m; ++t)
        if (mask & (1 << t)) B.insert(others[t]);
      bool dominated = false;
      for (const auto& mb : minimal)
        if (std::includes(B.begin(), B.end(), mb.begin(), mb.end())) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      std::vector<int> chain;
      if (!detail::valid_plane_cut(d, ps.S, alpha, k, B, &chain)) continue;
      minimal.push_back(B);
      PlaneFamily f;
      f.k = k;
      f.removed_nodes.assign(B.begin(), B.end());
      f.chain = chain;
      f.parameter.diagram = d;
      for (int v : B) f.parameter.marks[v] = 1;
      out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const PlaneFamily& a, const PlaneFamily& b) {
    return a.removed_nodes < b.removed_nodes;
  });
  return out;
}

// Longest A-type chain in D(G) beginning at alpha and containing no other
// element of S; its length is the dimension of the largest linear space of
// class alpha.
inline int max_linear_space(const RootSystem& R, const ParabolicSpec& ps, int alpha) {
  if (!ps.S.count(alpha)) throw Precondition("max_linear_space: node not in S");
  if (is_exposed_short(R, ps.S, alpha))
    throw ExposedShortError("max_linear_space: exposed short; use exposed_planes_catalog");
  const DynkinDiagram& d = R.diagram();
  int best = 1;
  auto dfs = [&](auto&& self, int cur, int prev, int len) -> void {
    best = std::max(best, len);
    for (int w : d.neighbors(cur)) {
      if (w == prev || ps.S.count(w)) continue;
      const Edge* e = d.edge_between(cur, w);
      if (e->bond != 1) continue;
      self(self, w, cur, len + 1);
    }
  };
  dfs(dfs, alpha, 0, 1);
  return best;
}

// ---------------------------------------------------------------------------
// Exposed-short catalog.  Explicit orbit structure for C_n/P_k (k<n),
// B_n/P_n, F4/P4, F4/P3, G2/P1.
// ---------------------------------------------------------------------------

struct ExposedPlaneFamily {
  int k = 0;                   // the P^k's described
  std::string parameter;       // parameter space / construction
  std::string closed_orbit;    // closed orbit inside the family, when stated
  int components = 1;
  int family_dim = -1;         // dimension (through a point where stated)
  std::string orbits;          // orbit structure
};

struct ExposedCatalogEntry {
  std::string space;
  int max_plane = 0;
  std::vector<ExposedPlaneFamily> families;
  std::string notes;
};

inline ExposedCatalogEntry exposed_planes_catalog(const ParabolicSpec& ps, int alpha,
                                                  int k = -1) {
  RootSystem R = build_root_system(ps.spec);
  if (!ps.S.count(alpha)) throw Precondition("catalog: node not in S");
  if (!is_exposed_short(R, ps.S, alpha))
    throw Precondition("catalog: node " + std::to_string(alpha) + " is not exposed short");
  char ser = ps.spec.series;
  int n = ps.spec.rank;
  ExposedCatalogEntry e;
  e.space = ps.str();
  e.notes = "every family of linear spaces is a finite union of G-orbits (at least two)";

  if (ps.S.size() != 1)
    throw UncoveredCase("exposed-short catalog covers maximal parabolics only: " + ps.str());

  if (ser == 'C' && alpha < n) {
    int kk = alpha;
    e.max_plane = std::max(2 * (n - kk) + 1, kk);
    for (int l = 1; l <= e.max_plane; ++l) {
      if (k >= 0 && l != k) continue;
      if (l <= 2 * (n - kk) + 1) {
        ExposedPlaneFamily f;
        f.k = l;
        f.parameter = "{M^" + std::to_string(kk - 1) + " c L c N^" + std::to_string(kk + l) +
                      " c M^perp}";
        f.orbits = "orbits indexed by the rank of the symplectic form on N";
        e.families.push_back(f);
      }
      if (l > 1 && l <= kk) {
        ExposedPlaneFamily f;
        f.k = l;
        f.parameter = "{M^" + std::to_string(kk - l) + " c L c N^" + std::to_string(kk + 1) +
                      " c M^perp, N isotropic}";
        f.orbits = "two orbits";
        e.families.push_back(f);
      }
    }
    return e;
  }

  if (ser == 'B' && alpha == n) {
    e.max_plane = n;
    for (int l = 1; l <= n; ++l) {
      if (k >= 0 && l != k) continue;
      if (l >= 2) {
        ExposedPlaneFamily f;
        f.k = l;
        if (n - l - 1 >= 1) {
          f.parameter = "D" + std::to_string(n + 1) + "/P{" + std::to_string(n - l - 1) + "," +
                        std::to_string(n) + "}";
          f.closed_orbit = "B" + std::to_string(n) + "/P" + std::to_string(n - l - 1);
          f.orbits = "two orbits, indexed by the position of the flag relative to the fixed hyperplane";
        } else {
          f.parameter = "D" + std::to_string(n + 1) + "/P" + std::to_string(n);
          f.orbits = "two orbits";
        }
        e.families.push_back(f);
      }
      if (l == 1) {
        ExposedPlaneFamily f;
        f.k = 1;
        f.parameter = "D" + std::to_string(n + 1) + "/P" + std::to_string(n - 1);
        f.closed_orbit = "B" + std::to_string(n) + "/P" + std::to_string(n - 1);
        f.orbits = "two orbits";
        e.families.push_back(f);
      }
      if (l == 3) {
        ExposedPlaneFamily f;
        f.k = 3;
        f.parameter = "D" + std::to_string(n + 1) + "/P" + std::to_string(n - 2);
        f.closed_orbit = "B" + std::to_string(n) + "/P" + std::to_string(n - 2);
        f.orbits = "two orbits";
        e.families.push_back(f);
      }
    }
    return e;
  }

  if (ser == 'F' && alpha == 4) {
    e.max_plane = 5;
    ExposedPlaneFamily p5{5, "Q5 in P(T2)", "", 1, 5, "maximal P5's through a point"};
    ExposedPlaneFamily p4a{4, "Q6 in P(T1) (the variety of P2's in Q5)", "", 1, 6,
                           "maximal P4's through a point"};
    ExposedPlaneFamily p4b{4, "the two families of P3's in Q6 in P(T1)", "", 2, 6,
                           "maximal P4's through a point, two components"};
    if (k < 0 || k == 5) e.families.push_back(p5);
    if (k < 0 || k == 4) {
      e.families.push_back(p4a);
      e.families.push_back(p4b);
    }
    e.notes = "four types of maximal linear spaces through a point";
    return e;
  }

  if (ser == 'F' && alpha == 3) {
    e.max_plane = 3;
    ExposedPlaneFamily p3{3, "P2's in the quadric fibers of Base|FF2| -> P1", "", 1, -1,
                          "maximal P3's"};
    ExposedPlaneFamily p2{2, "the base P1 of the quadric fibration", "", 1, -1, "maximal P2's"};
    if (k < 0 || k == 3) e.families.push_back(p3);
    if (k < 0 || k == 2) e.families.push_back(p2);
    e.notes = "two types of maximal linear spaces through a point";
    return e;
  }

  if (ser == 'G' && alpha == 1) {
    e.max_plane = 2;
    ExposedPlaneFamily lines{1, "Go(2,7), dimension 7; closed orbit G2/P2 of dimension 5",
                             "G2/P2", 1, 7, "two orbits"};
    ExposedPlaneFamily p2{2, "GQ(3,7) = Q6; the special subfamily tangent to T1 is v2(G2/P1)",
                          "", 1, 6, "planes on the quadric"};
    if (k < 0 || k == 1) e.families.push_back(lines);
    if (k < 0 || k == 2) e.families.push_back(p2);
    return e;
  }

  throw UncoveredCase("no exposed-short catalog entry for " + ps.str());
}

// ---------------------------------------------------------------------------
// Tits shadows: delete S', keep the components meeting S \ S', mark S \ S'.
// ---------------------------------------------------------------------------

inline MarkedDiagram tits_shadow(const DynkinDiagram& d, const std::set<int>& S,
                                 const std::set<int>& Sprime) {
  std::set<int> marks;
  for (int s : S)
    if (!Sprime.count(s)) marks.insert(s);
  if (marks.empty())
    throw Precondition("shadow is a point (S contained in S')");
  std::vector<int> keep;
  for (int v = 1; v <= d.rank(); ++v)
    if (!Sprime.count(v)) keep.push_back(v);
  std::vector<int> to_orig;
  DynkinDiagram sub = d.induced(keep, &to_orig);
  std::set<int> kept_orig;
  for (const auto& comp : sub.components()) {
    bool meets = false;
    for (int v : comp)
      if (marks.count(to_orig[v - 1])) meets = true;
    if (meets)
      for (int v : comp) kept_orig.insert(to_orig[v - 1]);
  }
  MarkedDiagram md;
  std::vector<int> kept(kept_orig.begin(), kept_orig.end());
  md.diagram = d.induced(kept, &md.orig_labels);
  for (std::size_t t = 0; t < md.orig_labels.size(); ++t)
    if (marks.count(md.orig_labels[t])) md.marks[static_cast<int>(t) + 1] = 1;
  return md;
}

inline MarkedDiagram tits_shadow(const DiagramSpec& spec, const std::set<int>& S,
                                 const std::set<int>& Sprime) {
  return tits_shadow(build_diagram(spec), S, Sprime);
}

// ---------------------------------------------------------------------------
// Ambient modules for F_k along a branch from a diagram end.
// ---------------------------------------------------------------------------

struct AmbientModule {
  Weight weight;  // global Bourbaki marks
  enum Tag { FullExterior, ReducedExterior, BracketKernel, Quotient } tag = Quotient;
  std::string note;
};

namespace detail {

// largest chain from `end` isomorphic to A_p or C_p with no interior
// valence-3 node
inline std::vector<int> branch_of(const DynkinDiagram& d, int end) {
  std::vector<int> chain{end};
  int prev = 0, cur = end;
  for (;;) {
    if (d.valence(cur) >= 3) break;  // cur is the last node
    int next = 0;
    for (int w : d.neighbors(cur))
      if (w != prev) next = w;
    if (!next) break;
    const Edge* e = d.edge_between(cur, next);
    if (e->bond == 1) {
      chain.push_back(next);
      prev = cur;
      cur = next;
      continue;
    }
    if (e->bond == 2 && e->arrow_target == cur) {
      chain.push_back(next);  // C_p pattern: arrow points back towards the end
      break;
    }
    break;  // double bond pointing away, or triple bond
  }
  return chain;
}

inline AmbientModule::Tag elementary_tag(char ser, int rank, int end) {
  if ((ser == 'A') || (ser == 'B' && end == 1) || (ser == 'D' && end == 1) ||
      (ser == 'E' && rank == 6 && (end == 1 || end == 6)))
    return AmbientModule::FullExterior;
  if ((ser == 'C' && end == 1) || (ser == 'E' && rank == 7 && end == 7))
    return AmbientModule::ReducedExterior;
  if ((ser == 'G' && end == 2) || (ser == 'F' && end == 1) ||
      (ser == 'E' && rank == 6 && end == 2) || (ser == 'E' && rank == 7 && end == 1) ||
      (ser == 'E' && rank == 8 && end == 8))
    return AmbientModule::BracketKernel;
  return AmbientModule::Quotient;
}

}  // namespace detail

inline AmbientModule ambient_module(const DiagramSpec& spec, int end, int k) {
  DynkinDiagram d = build_diagram(spec);
  if (end < 1 || end > d.rank()) throw Precondition("ambient_module: bad node");
  if (d.rank() > 1 && d.valence(end) != 1)
    throw Precondition("ambient_module: node is not a diagram end");
  if (k < 1) throw Precondition("ambient_module: k must be >= 1");

  AmbientModule out;
  AmbientModule::Tag cls = detail::elementary_tag(spec.series, spec.rank, end);
  auto chain = detail::branch_of(d, end);
  const int p = static_cast<int>(chain.size());

  // the two Veronese re-embedding special cases past the branch
  if (spec.series == 'G' && end == 1 && k == 3) {
    out.weight = Weight(d.rank(), 0);
    out.weight[0] = 2;
    out.tag = AmbientModule::Quotient;
    out.note = "second Veronese re-embedding";
    return out;
  }
  if (spec.series == 'F' && end == 4 && k == 6) {
    out.weight = Weight(d.rank(), 0);
    out.weight[0] = 3;
    out.tag = AmbientModule::Quotient;
    out.note = "third Veronese re-embedding";
    return out;
  }

  if (k <= p) {
    out.weight = fundamental_weight(d.rank(), chain[k - 1]);
    out.tag = cls;
    if (cls == AmbientModule::BracketKernel && k != 2) out.tag = AmbientModule::Quotient;
    if (cls == AmbientModule::Quotient && k == 1) out.tag = AmbientModule::Quotient;
    return out;
  }

  if (k == p + 1) {
    int last = chain.back();
    std::vector<int> conts;
    int prev_of_last = p >= 2 ? chain[p - 2] : 0;
    for (int w : d.neighbors(last))
      if (w != prev_of_last) conts.push_back(w);
    if (conts.empty()) {
      // the chain exhausted the diagram; Lambda^{p+1} V is the determinant line
      out.weight = Weight(d.rank(), 0);
      out.tag = cls;
      out.note = "top exterior power";
      return out;
    }
    if (conts.size() == 2) {  // valence-3 node at the end of the branch
      out.weight = Weight(d.rank(), 0);
      out.weight[conts[0] - 1] = 1;
      out.weight[conts[1] - 1] = 1;
      out.tag = cls;
      out.note = "past-branch extremal weight at the triple point";
      return out;
    }
    const Edge* e = d.edge_between(last, conts[0]);
    if (e->bond > 1 && e->arrow_target == conts[0]) {
      out.weight = Weight(d.rank(), 0);
      out.weight[conts[0] - 1] = e->bond;  // 2 or 3 omega_{p+1}
      out.tag = cls;
      out.note = "past-branch extremal weight across the multiple bond";
      return out;
    }
  }
  throw Precondition("ambient_module: k out of range for this branch");
}

// ---------------------------------------------------------------------------
// Diagram reconstruction from successive closed orbits of line directions.
// ---------------------------------------------------------------------------

struct TraceStep {
  std::string descriptor;         // name of the current marked factor
  MarkedDiagram current;          // its diagram with the marked node
  std::vector<std::string> factor_names;
  std::vector<int> factor_veronese;
};

struct ReconstructionTrace {
  std::vector<TraceStep> steps;
  DynkinDiagram result;
  int result_marked_node = 1;
  bool isomorphic = false;
};

inline ReconstructionTrace reconstruct_diagram(const DiagramSpec& spec, int i) {
  DynkinDiagram d = build_diagram(spec);
  if (i < 1 || i > d.rank()) throw Precondition("reconstruct: bad node");
  if (is_exposed_short_diagram(d, {i}, i))
    throw ExposedShortError("reconstruct: node " + std::to_string(i) + " is exposed short");

  ReconstructionTrace trace;
  std::vector<Edge> result_edges;
  int next_node = 1;

  struct Item {
    int result_node;
    DynkinDiagram comp;  // standalone component
    int mark;            // local node
  };
  std::vector<Item> queue{{next_node++, d, i}};
  std::size_t head = 0;
  while (head < queue.size()) {
    Item it = queue[head++];
    if (is_exposed_short_diagram(it.comp, {it.mark}, it.mark))
      throw ExposedShortError("reconstruction recipe stuck: a factor is exposed short");
    auto Y1 = closed_orbit_Y1(it.comp, std::set<int>{it.mark}, it.mark);

    TraceStep step;
    step.current.diagram = it.comp;
    step.current.marks[it.mark] = 1;
    step.descriptor = name_marked_component(it.comp, step.current.marks);
    for (const auto& f : Y1.factors) {
      step.factor_names.push_back(
          name_marked_component(f.factor.diagram, f.factor.marks, f.veronese_degree));
      step.factor_veronese.push_back(f.veronese_degree);
    }
    trace.steps.push_back(std::move(step));

    for (const auto& f : Y1.factors) {
      int child = next_node++;
      Edge e;
      e.a = it.result_node;
      e.b = child;
      e.bond = f.veronese_degree;
      e.arrow_target = f.veronese_degree > 1 ? child : 0;
      result_edges.push_back(e);
      queue.push_back({child, f.factor.diagram, f.marked_local});
    }
  }
  if (next_node - 1 != d.rank())
    throw Inconsistency("reconstruction produced wrong node count");
  trace.result = DynkinDiagram(d.rank(), std::move(result_edges));
  trace.result_marked_node = 1;
  trace.isomorphic = marked_isomorphic(trace.result, {{1, 1}}, d, {{i, 1}});
  return trace;
}

}  // namespace rhv
