#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rhv/dynkin.hpp"

namespace rhv {

// ---------------------------------------------------------------------------
// Parabolic data for G/P_S: Delta_X, dimension, tangent grading, and the
// classification layer (cominuscule, minuscule, exposed short, Y_1).
// ---------------------------------------------------------------------------

struct ParabolicSpec {
  DiagramSpec spec;
  std::set<int> S;

  std::string str() const {
    std::string s = spec.str() + "/P";
    if (S.size() == 1) return s + std::to_string(*S.begin());
    s += "{";
    bool first = true;
    for (int i : S) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }
};

// Grammar: <Diagram>/P<node> or <Diagram>/P{n1,n2,...}, e.g. E6/P1, D6/P{3,5}.
inline ParabolicSpec parse_parabolic(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw ParseError("expected <Diagram>/P<nodes> in '" + s + "'", s.size());
  ParabolicSpec ps;
  ps.spec = parse_diagram_spec(s.substr(0, slash));
  std::size_t i = slash + 1;
  if (i >= s.size() || std::toupper(static_cast<unsigned char>(s[i])) != 'P')
    throw ParseError("expected 'P' after '/' in '" + s + "'", i);
  ++i;
  auto read_int = [&]() {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected node number in '" + s + "'", i);
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + (s[i++] - '0');
    return v;
  };
  if (i < s.size() && s[i] == '{') {
    ++i;
    for (;;) {
      ps.S.insert(read_int());
      if (i < s.size() && s[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= s.size() || s[i] != '}') throw ParseError("missing '}' in '" + s + "'", i);
    ++i;
  } else {
    ps.S.insert(read_int());
  }
  if (i != s.size()) throw ParseError("trailing input in '" + s + "'", i);
  if (ps.S.empty()) throw ParseError("empty node set in '" + s + "'");
  for (int n : ps.S)
    if (n < 1 || n > ps.spec.rank)
      throw ParseError("node " + std::to_string(n) + " out of range for " + ps.spec.str());
  return ps;
}

// Positive roots whose support meets S.
inline std::vector<Root> delta_X(const RootSystem& R, const std::set<int>& S) {
  for (int n : S)
    if (n < 1 || n > R.rank()) throw Precondition("node out of range");
  std::vector<Root> out;
  for (const auto& a : R.positive()) {
    for (int i : S)
      if (a.coeff(i) > 0) {
        out.push_back(a);
        break;
      }
  }
  return out;
}

inline int dimension(const RootSystem& R, const std::set<int>& S) {
  return static_cast<int>(delta_X(R, S).size());
}

inline int dimension(const ParabolicSpec& ps) {
  return dimension(build_root_system(ps.spec), ps.S);
}

// Semisimple part of the Levi: the induced subdiagram on D \ S.
struct Levi {
  std::vector<int> nodes;  // ascending global labels
  SubSystem sub;
};

inline Levi levi_of(const DynkinDiagram& d, const std::set<int>& S) {
  Levi L;
  for (int i = 1; i <= d.rank(); ++i)
    if (!S.count(i)) L.nodes.push_back(i);
  L.sub = sub_root_system(d, L.nodes);
  return L;
}

// Split global-node marks across the connected components of the Levi, each
// re-indexed by its own Bourbaki-order labels 1..m.
struct LeviComponentWeight {
  std::vector<int> component_nodes;  // global labels
  Weight local_marks;
};

inline std::vector<LeviComponentWeight> split_by_component(const Levi& levi,
                                                           const std::map<int, int>& marks) {
  std::vector<LeviComponentWeight> out;
  for (const auto& comp : levi.sub.R.diagram().components()) {
    LeviComponentWeight cw;
    cw.local_marks.assign(comp.size(), 0);
    for (std::size_t t = 0; t < comp.size(); ++t) {
      int global = levi.sub.to_orig[comp[t] - 1];
      cw.component_nodes.push_back(global);
      auto it = marks.find(global);
      if (it != marks.end()) cw.local_marks[t] = it->second;
    }
    out.push_back(std::move(cw));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tangent grading.  T = sum of T_a over S-degree profiles a; each piece is an
// irreducible module of the Levi with a unique minimal root.
// ---------------------------------------------------------------------------

struct GradedPiece {
  std::vector<int> degree;          // profile over sorted S
  std::vector<Root> roots;
  int dim = 0;
  Root lowest_root;                 // the -phi_a representative
  std::map<int, int> h_highest_weight;  // marks on nodes of D \ S
  int total_degree = 0;
  int rational_curve_degree_bound = 0;  // a rational curve of degree <= p+1 passes through T_p
};

struct Grading {
  ParabolicSpec ps;
  std::vector<int> s_sorted;
  std::vector<GradedPiece> pieces;  // ordered by total degree, then profile
};

inline Grading grading(const RootSystem& R, const ParabolicSpec& ps) {
  Grading G;
  G.ps = ps;
  G.s_sorted.assign(ps.S.begin(), ps.S.end());
  std::map<std::vector<int>, GradedPiece> by_profile;
  for (const auto& a : delta_X(R, ps.S)) {
    std::vector<int> prof;
    prof.reserve(G.s_sorted.size());
    for (int i : G.s_sorted) prof.push_back(a.coeff(i));
    auto& piece = by_profile[prof];
    piece.degree = prof;
    piece.roots.push_back(a);
  }
  for (auto& [prof, piece] : by_profile) {
    piece.dim = static_cast<int>(piece.roots.size());
    piece.total_degree = 0;
    for (int x : prof) piece.total_degree += x;
    piece.rational_curve_degree_bound = piece.total_degree + 1;

    // unique minimal element: no alpha_j (j outside S) can be subtracted
    std::set<std::vector<int>> in_piece;
    for (const auto& r : piece.roots) in_piece.insert(r.c);
    int found = 0;
    for (const auto& r : piece.roots) {
      bool minimal = true;
      for (int j = 1; j <= R.rank(); ++j) {
        if (ps.S.count(j)) continue;
        std::vector<int> down = r.c;
        down[j - 1] -= 1;
        if (in_piece.count(down)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        ++found;
        piece.lowest_root = r;
      }
    }
    if (found != 1)
      throw Inconsistency("graded piece of " + ps.str() + " has " + std::to_string(found) +
                          " minimal roots");
    for (int j = 1; j <= R.rank(); ++j) {
      if (ps.S.count(j)) continue;
      int mark = -R.pairing_with_simple(piece.lowest_root, j);
      if (mark < 0) throw Inconsistency("negative Levi mark in grading of " + ps.str());
      if (mark > 0) piece.h_highest_weight[j] = mark;
    }
  }
  for (auto& [prof, piece] : by_profile) G.pieces.push_back(std::move(piece));
  std::sort(G.pieces.begin(), G.pieces.end(), [](const GradedPiece& a, const GradedPiece& b) {
    if (a.total_degree != b.total_degree) return a.total_degree < b.total_degree;
    return a.degree < b.degree;
  });

  // partition sanity
  std::size_t total = 0;
  for (const auto& p : G.pieces) total += p.roots.size();
  if (total != delta_X(R, ps.S).size()) throw Inconsistency("grading does not partition Delta_X");

  // the degree-1 pieces are exactly the eps_i, i in S (alpha_i itself lies in
  // the eps_i piece); cross-check their highest weight against the adjacency
  // marking recipe
  int eps_pieces = 0;
  for (const auto& piece : G.pieces)
    if (piece.total_degree == 1) ++eps_pieces;
  if (eps_pieces != static_cast<int>(ps.S.size()))
    throw Inconsistency("missing eps_i piece in grading of " + ps.str());
  for (const auto& piece : G.pieces) {
    if (piece.total_degree != 1) continue;
    int i = 0;
    for (std::size_t t = 0; t < piece.degree.size(); ++t)
      if (piece.degree[t] == 1) i = G.s_sorted[t];
    std::map<int, int> recipe;
    for (int v : R.diagram().neighbors(i)) {
      if (ps.S.count(v)) continue;
      const Edge* e = R.diagram().edge_between(i, v);
      recipe[v] = (e->bond > 1 && e->arrow_target == v) ? e->bond : 1;
    }
    if (recipe != piece.h_highest_weight)
      throw Inconsistency("marking recipe disagrees with lowest-root weight at " + ps.str());
  }
  return G;
}

inline Grading grading(const ParabolicSpec& ps) {
  return grading(build_root_system(ps.spec), ps);
}

// ---------------------------------------------------------------------------
// Classification layer.
// ---------------------------------------------------------------------------

// Highest root has coefficient one on node i.
inline bool is_cominuscule(const RootSystem& R, int i) {
  return R.highest_root().coeff(i) == 1;
}

// Minuscule via the dual-system criterion, cross-checked at small rank by
// comparing the Weyl orbit of omega_i with the Weyl dimension.
inline bool is_minuscule_weight(const RootSystem& R, int i,
                                long long orbit_guard = 1000000) {
  RootSystem dual = RootSystem::build(R.diagram().dual());
  bool by_dual = dual.highest_root().coeff(i) == 1;
  if (R.rank() <= 6) {
    std::vector<int> gens;
    for (int j = 1; j <= R.rank(); ++j) gens.push_back(j);
    auto orbit = R.weyl_orbit(fundamental_weight(R.rank(), i), gens, orbit_guard);
    bool by_orbit = (Int(static_cast<long>(orbit.size())) ==
                     weyl_dimension(R, fundamental_weight(R.rank(), i)));
    if (by_orbit != by_dual)
      throw Inconsistency("minuscule criteria disagree at node " + std::to_string(i));
  }
  return by_dual;
}

// j in S is exposed short iff the component of j in D \ (S\{j}) contains a
// longer root; equivalently some positive root supported outside S, other
// than alpha_j itself, pairs with alpha_j with |n| > 1.  Both are evaluated
// and must agree.
inline bool is_exposed_short_diagram(const DynkinDiagram& d, const std::set<int>& S, int j);

inline bool is_exposed_short(const RootSystem& R, const std::set<int>& S, int j) {
  if (!S.count(j)) throw Precondition("exposed-short query: node not in S");
  bool by_diagram = is_exposed_short_diagram(R.diagram(), S, j);

  bool by_roots = false;
  Root alpha_j{std::vector<int>(R.rank(), 0)};
  alpha_j.c[j - 1] = 1;
  for (const auto& a : R.positive()) {
    if (a == alpha_j) continue;
    bool clean = true;
    for (int s : S)
      if (s != j && a.coeff(s) != 0) clean = false;
    if (!clean) continue;
    int p = R.pairing(a, alpha_j);
    if (p > 1 || p < -1) {
      by_roots = true;
      break;
    }
  }

  if (by_diagram != by_roots)
    throw Inconsistency("exposed-short criteria disagree at " + std::to_string(j));
  return by_diagram;
}

// ---------------------------------------------------------------------------
// Closed orbit Y_1 in P(T_{eps_i}): one factor per branch of D \ S adjacent
// to i, marked at the neighbor, Veronese degree = bond multiplicity when the
// arrow points from i into the branch.
// ---------------------------------------------------------------------------

struct Y1Factor {
  MarkedDiagram factor;   // component of D \ S, original labels retained
  int marked_local = 0;   // the neighbor of i, in local labels
  int veronese_degree = 1;
};

struct ClosedOrbitModel {
  std::vector<Y1Factor> factors;
};

inline ClosedOrbitModel closed_orbit_Y1(const DynkinDiagram& d, const std::set<int>& S, int i) {
  if (!S.count(i)) throw Precondition("closed_orbit_Y1: node not in S");
  std::vector<int> rest;
  for (int v = 1; v <= d.rank(); ++v)
    if (!S.count(v)) rest.push_back(v);
  std::vector<int> to_orig;
  DynkinDiagram sub = d.induced(rest, &to_orig);

  ClosedOrbitModel model;
  for (const auto& comp : sub.components()) {
    int neighbor_local = 0;
    for (int v : comp) {
      int orig = to_orig[v - 1];
      if (d.edge_between(i, orig)) {
        neighbor_local = v;
        break;
      }
    }
    if (!neighbor_local) continue;  // branch not adjacent to i

    std::vector<int> comp_orig;
    for (int v : comp) comp_orig.push_back(to_orig[v - 1]);
    Y1Factor f;
    std::vector<int> comp_labels;
    f.factor.diagram = d.induced(comp_orig, &comp_labels);
    f.factor.orig_labels = comp_labels;
    int neighbor_orig = to_orig[neighbor_local - 1];
    for (std::size_t t = 0; t < comp_labels.size(); ++t)
      if (comp_labels[t] == neighbor_orig) f.marked_local = static_cast<int>(t) + 1;
    f.factor.marks[f.marked_local] = 1;
    const Edge* e = d.edge_between(i, neighbor_orig);
    f.veronese_degree = (e->bond > 1 && e->arrow_target == neighbor_orig) ? e->bond : 1;
    model.factors.push_back(std::move(f));
  }
  return model;
}

inline ClosedOrbitModel closed_orbit_Y1(const RootSystem& R, const std::set<int>& S, int i) {
  return closed_orbit_Y1(R.diagram(), S, i);
}

// Diagram-level exposed-short test (no root enumeration): the component of j
// in D \ (S \ {j}) contains a strictly longer root.
inline bool is_exposed_short_diagram(const DynkinDiagram& d, const std::set<int>& S, int j) {
  if (!S.count(j)) throw Precondition("exposed-short query: node not in S");
  auto half = node_half_norms(d);
  std::vector<int> keep;
  for (int v = 1; v <= d.rank(); ++v)
    if (v == j || !S.count(v)) keep.push_back(v);
  std::vector<int> to_orig;
  DynkinDiagram sub = d.induced(keep, &to_orig);
  int local_j = 0;
  for (std::size_t t = 0; t < to_orig.size(); ++t)
    if (to_orig[t] == j) local_j = static_cast<int>(t) + 1;
  for (const auto& comp : sub.components()) {
    if (std::find(comp.begin(), comp.end(), local_j) == comp.end()) continue;
    for (int v : comp)
      if (half[to_orig[v - 1] - 1] > half[j - 1]) return true;
  }
  return false;
}

}  // namespace rhv
