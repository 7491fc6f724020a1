#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rhv/error.hpp"
#include "rhv/linalg.hpp"
#include "rhv/rational.hpp"

namespace rhv {

// ---------------------------------------------------------------------------
// Diagram specs.  Bourbaki node numbering is fixed globally: series A..G,
// nodes 1..rank, and every arrow points towards the shorter root.
// ---------------------------------------------------------------------------

struct DiagramSpec {
  char series = 'A';
  int rank = 1;

  bool operator==(const DiagramSpec&) const = default;
  std::string str() const { return std::string(1, series) + std::to_string(rank); }
};

inline void validate_spec(const DiagramSpec& s) {
  auto fail = [&](const std::string& bound) {
    throw ParseError("invalid rank " + std::to_string(s.rank) + " for series " +
                     std::string(1, s.series) + " (" + bound + ")");
  };
  switch (s.series) {
    case 'A': if (s.rank < 1) fail("rank >= 1"); break;
    case 'B': if (s.rank < 2) fail("rank >= 2"); break;
    case 'C': if (s.rank < 2) fail("rank >= 2"); break;
    case 'D': if (s.rank < 3) fail("rank >= 3"); break;
    case 'E': if (s.rank < 6 || s.rank > 8) fail("rank in {6,7,8}"); break;
    case 'F': if (s.rank != 4) fail("rank = 4"); break;
    case 'G': if (s.rank != 2) fail("rank = 2"); break;
    default: throw ParseError("unknown series '" + std::string(1, s.series) + "'");
  }
}

// Grammar: <SeriesLetter><rank>, case-insensitive letter, e.g. "E6", "d5".
inline DiagramSpec parse_diagram_spec(const std::string& s) {
  if (s.empty()) throw ParseError("empty diagram spec", 0);
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (c < 'A' || c > 'G')
    throw ParseError("unknown series '" + std::string(1, s[0]) + "'", 0);
  if (s.size() < 2) throw ParseError("missing rank in '" + s + "'", 1);
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("bad rank digit in '" + s + "'", i);
    rank = rank * 10 + (s[i] - '0');
    if (rank > 64) throw ParseError("rank out of range in '" + s + "'", i);
  }
  DiagramSpec spec{c, rank};
  validate_spec(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Dynkin diagrams.  Stored as a labeled forest; bonds 1..3; arrow_target is
// the shorter of the two endpoints and present exactly when bond > 1.
// ---------------------------------------------------------------------------

struct Edge {
  int a = 0, b = 0;
  int bond = 1;
  int arrow_target = 0;  // 0 iff bond == 1

  bool touches(int n) const { return a == n || b == n; }
  int other(int n) const { return a == n ? b : a; }
};

class DynkinDiagram {
 public:
  DynkinDiagram() = default;

  DynkinDiagram(int rank, std::vector<Edge> edges)
      : rank_(rank), edges_(std::move(edges)), adj_(rank + 1) {
    if (rank < 0) throw ParseError("negative rank");
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
      if (e.a < 1 || e.a > rank_ || e.b < 1 || e.b > rank_ || e.a == e.b)
        throw ParseError("edge endpoints out of range");
      if (e.bond < 1 || e.bond > 3) throw ParseError("bond multiplicity must be 1..3");
      if ((e.bond > 1) != (e.arrow_target != 0))
        throw ParseError("arrow present iff bond > 1");
      if (e.arrow_target != 0 && e.arrow_target != e.a && e.arrow_target != e.b)
        throw ParseError("arrow must point to an endpoint");
      auto key = std::minmax(e.a, e.b);
      if (!seen.insert(key).second) throw ParseError("duplicate edge");
      adj_[e.a].push_back(e.b);
      adj_[e.b].push_back(e.a);
    }
    for (auto& v : adj_) std::sort(v.begin(), v.end());
    // a Dynkin diagram is a forest
    std::vector<int> color(rank_ + 1, 0), parent(rank_ + 1, 0);
    for (int s = 1; s <= rank_; ++s) {
      if (color[s]) continue;
      std::vector<int> stack{s};
      color[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[u]) {
          if (v == parent[u]) continue;
          if (color[v]) throw ParseError("diagram contains a cycle");
          color[v] = 1;
          parent[v] = u;
          stack.push_back(v);
        }
      }
    }
  }

  int rank() const { return rank_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  int valence(int i) const { return static_cast<int>(adj_[i].size()); }

  const Edge* edge_between(int i, int j) const {
    for (const auto& e : edges_)
      if ((e.a == i && e.b == j) || (e.a == j && e.b == i)) return &e;
    return nullptr;
  }

  bool simply_laced() const {
    for (const auto& e : edges_)
      if (e.bond > 1) return false;
    return true;
  }

  DynkinDiagram dual() const {
    std::vector<Edge> es = edges_;
    for (auto& e : es)
      if (e.bond > 1) e.arrow_target = e.other(e.arrow_target);
    return DynkinDiagram(rank_, std::move(es));
  }

  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> vis(rank_ + 1, false);
    for (int s = 1; s <= rank_; ++s) {
      if (vis[s]) continue;
      std::vector<int> comp, stack{s};
      vis[s] = true;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int v : adj_[u])
          if (!vis[v]) {
            vis[v] = true;
            stack.push_back(v);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // Induced subdiagram on `nodes` (original labels, ascending relabel 1..m).
  DynkinDiagram induced(const std::vector<int>& nodes,
                        std::vector<int>* to_orig = nullptr) const {
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<int, int> local;
    for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> es;
    for (const auto& e : edges_) {
      auto ia = local.find(e.a), ib = local.find(e.b);
      if (ia == local.end() || ib == local.end()) continue;
      Edge ne = e;
      ne.a = ia->second;
      ne.b = ib->second;
      if (ne.arrow_target) ne.arrow_target = local[ne.arrow_target];
      es.push_back(ne);
    }
    if (to_orig) *to_orig = sorted;
    return DynkinDiagram(static_cast<int>(sorted.size()), std::move(es));
  }

  // Cartan matrix, 0-based: a[i][j] = n(alpha_{i+1}, alpha_{j+1}).
  std::vector<std::vector<int>> cartan() const {
    std::vector<std::vector<int>> a(rank_, std::vector<int>(rank_, 0));
    for (int i = 0; i < rank_; ++i) a[i][i] = 2;
    for (const auto& e : edges_) {
      if (e.bond == 1) {
        a[e.a - 1][e.b - 1] = -1;
        a[e.b - 1][e.a - 1] = -1;
      } else {
        int shrt = e.arrow_target, lng = e.other(e.arrow_target);
        a[lng - 1][shrt - 1] = -e.bond;
        a[shrt - 1][lng - 1] = -1;
      }
    }
    return a;
  }

 private:
  int rank_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// (alpha_i, alpha_i)/2 per node, normalized so long roots in each component
// have norm 2; derived from bonds and arrows alone.
inline std::vector<Rat> node_half_norms(const DynkinDiagram& d) {
  std::vector<Rat> out(d.rank(), Rat(0));
  for (const auto& comp : d.components()) {
    std::map<int, Rat> dc;
    std::vector<int> stack{comp[0]};
    dc[comp[0]] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : d.neighbors(u)) {
        if (dc.count(v)) continue;
        const Edge* e = d.edge_between(u, v);
        if (e->bond == 1)
          dc[v] = dc[u];
        else if (e->arrow_target == v)
          dc[v] = dc[u] / e->bond;
        else
          dc[v] = dc[u] * e->bond;
        stack.push_back(v);
      }
    }
    Rat mx = 0;
    for (auto& [node, val] : dc)
      if (val > mx) mx = val;
    for (auto& [node, val] : dc) out[node - 1] = val / mx;
  }
  return out;
}

inline DynkinDiagram build_diagram(const DiagramSpec& spec) {
  validate_spec(spec);
  const int n = spec.rank;
  std::vector<Edge> es;
  auto path = [&](int from, int upto) {
    for (int i = from; i < upto; ++i) es.push_back({i, i + 1, 1, 0});
  };
  switch (spec.series) {
    case 'A':
      path(1, n);
      break;
    case 'B':  // alpha_n short
      path(1, n - 1);
      es.push_back({n - 1, n, 2, n});
      break;
    case 'C':  // alpha_n long
      path(1, n - 1);
      es.push_back({n - 1, n, 2, n - 1});
      break;
    case 'D':
      path(1, n - 2);
      es.push_back({n - 2, n - 1, 1, 0});
      es.push_back({n - 2, n, 1, 0});
      break;
    case 'E':
      es.push_back({1, 3, 1, 0});
      for (int i = 3; i < n; ++i) es.push_back({i, i + 1, 1, 0});
      es.push_back({2, 4, 1, 0});
      break;
    case 'F':  // alpha_3, alpha_4 short
      es.push_back({1, 2, 1, 0});
      es.push_back({2, 3, 2, 3});
      es.push_back({3, 4, 1, 0});
      break;
    case 'G':  // alpha_1 short
      es.push_back({1, 2, 3, 1});
      break;
  }
  return DynkinDiagram(n, std::move(es));
}

// ---------------------------------------------------------------------------
// Marked diagrams: non-negative integer marks on nodes, plus the original
// node labels when the diagram arose as a subdiagram.
// ---------------------------------------------------------------------------

struct MarkedDiagram {
  DynkinDiagram diagram;
  std::map<int, int> marks;      // local node -> multiplicity (> 0 entries only)
  std::vector<int> orig_labels;  // local node i stored at orig_labels[i-1]; empty = identity

  int orig(int local) const {
    return orig_labels.empty() ? local : orig_labels[local - 1];
  }
  std::vector<int> marked_nodes() const {
    std::vector<int> v;
    for (const auto& [n, m] : marks)
      if (m > 0) v.push_back(n);
    return v;
  }
  std::vector<int> marked_orig_nodes() const {
    std::vector<int> v;
    for (int n : marked_nodes()) v.push_back(orig(n));
    std::sort(v.begin(), v.end());
    return v;
  }
};

// Canonical code of a marked forest; two marked diagrams are isomorphic as
// arrowed multigraphs with marks iff their codes agree.
namespace detail {

inline std::string code_from(const DynkinDiagram& d, const std::map<int, int>& marks,
                             int u, int parent) {
  std::vector<std::string> child_codes;
  for (const auto& e : d.edges()) {
    if (!e.touches(u)) continue;
    int v = e.other(u);
    if (v == parent) continue;
    std::string lbl = std::to_string(e.bond);
    if (e.arrow_target == v) lbl += '>';
    if (e.arrow_target == u) lbl += '<';
    child_codes.push_back(lbl + code_from(d, marks, v, u));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string s = "(";
  auto it = marks.find(u);
  if (it != marks.end() && it->second > 0) s += "m" + std::to_string(it->second);
  for (auto& c : child_codes) s += c;
  s += ")";
  return s;
}

}  // namespace detail

inline std::string diagram_code(const DynkinDiagram& d,
                                const std::map<int, int>& marks = {}) {
  std::vector<std::string> comp_codes;
  for (const auto& comp : d.components()) {
    std::string best;
    for (int root : comp) {
      std::string c = detail::code_from(d, marks, root, 0);
      if (best.empty() || c < best) best = c;
    }
    comp_codes.push_back(best);
  }
  std::sort(comp_codes.begin(), comp_codes.end());
  std::string s;
  for (auto& c : comp_codes) s += c + "|";
  return s;
}

inline bool marked_isomorphic(const DynkinDiagram& a, const std::map<int, int>& amarks,
                              const DynkinDiagram& b, const std::map<int, int>& bmarks) {
  return diagram_code(a, amarks) == diagram_code(b, bmarks);
}

// ---------------------------------------------------------------------------
// Roots and weights.
// ---------------------------------------------------------------------------

// Integer coefficient vector over the simple roots (0-based storage).
struct Root {
  std::vector<int> c;

  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const { return c < o.c; }
  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }
  int coeff(int node) const { return c[node - 1]; }
  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
  }
  Root operator-() const {
    Root r = *this;
    for (int& x : r.c) x = -x;
    return r;
  }
};

// Marks in the fundamental-weight basis (0-based storage, node i at marks[i-1]).
using Weight = std::vector<long long>;

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline bool weight_dominant(const Weight& w) {
  for (long long x : w)
    if (x < 0) return false;
  return true;
}

inline Weight fundamental_weight(int rank, int i) {
  Weight w(rank, 0);
  w[i - 1] = 1;
  return w;
}

// ---------------------------------------------------------------------------
// Root systems.  Positive roots are generated from the Cartan matrix by
// height-increasing closure with root strings; nothing is table-driven.
// ---------------------------------------------------------------------------

class RootSystem {
 public:
  static RootSystem build(const DynkinDiagram& d) {
    RootSystem R;
    R.dg_ = d;
    R.A_ = d.cartan();
    const int n = d.rank();
    R.compute_lengths();

    // closure by root strings: q = p - n(beta, alpha_i) many more steps up
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      index[e] = static_cast<int>(roots.size());
      roots.push_back(e);
    }
    std::size_t lo = 0;
    int height = 1;
    while (lo < roots.size()) {
      std::size_t hi = roots.size();
      for (std::size_t r = lo; r < hi; ++r) {
        for (int i = 0; i < n; ++i) {
          std::vector<int> beta = roots[r];
          int pairing = 0;
          for (int j = 0; j < n; ++j) pairing += beta[j] * R.A_[j][i];
          int p = 0;
          std::vector<int> down = beta;
          for (;;) {
            down[i] -= 1;
            bool neg_simple = false;  // simple alpha_i itself walks to zero
            int nonzero = 0, negat = 0;
            for (int x : down) {
              if (x != 0) ++nonzero;
              if (x < 0) ++negat;
            }
            if (nonzero == 0 || negat > 0) {
              neg_simple = true;
            }
            if (!neg_simple && index.count(down)) {
              ++p;
              continue;
            }
            break;
          }
          int q = p - pairing;
          if (q >= 1) {
            std::vector<int> up = beta;
            up[i] += 1;
            if (!index.count(up)) {
              index[up] = static_cast<int>(roots.size());
              roots.push_back(up);
            }
          }
        }
      }
      lo = hi;
      if (++height > 64) throw Error("root closure did not terminate (not finite type?)");
    }

    std::stable_sort(roots.begin(), roots.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                       int ha = 0, hb = 0;
                       for (int x : a) ha += x;
                       for (int x : b) hb += x;
                       if (ha != hb) return ha < hb;
                       return a > b;  // within a height level: alpha_1 first
                     });
    R.positive_.reserve(roots.size());
    for (auto& v : roots) R.positive_.push_back(Root{std::move(v)});
    for (std::size_t i = 0; i < R.positive_.size(); ++i) R.index_[R.positive_[i].c] = static_cast<int>(i);

    R.is_long_.resize(R.positive_.size());
    Rat max_norm = 0;
    for (std::size_t i = 0; i < R.positive_.size(); ++i) {
      Rat nn = R.norm2(R.positive_[i]);
      if (nn > max_norm) max_norm = nn;
    }
    for (std::size_t i = 0; i < R.positive_.size(); ++i) {
      // per-component normalization already makes long roots norm 2
      R.is_long_[i] = (R.norm2(R.positive_[i]) == Rat(2));
    }

    // highest-root sanity: unique maximal-height root per component, and no
    // beta + alpha_i is a root for the global maximum of a connected diagram
    if (d.components().size() == 1 && n >= 1) {
      const Root& top = R.positive_.back();
      int top_h = top.height();
      for (std::size_t i = 0; i + 1 < R.positive_.size(); ++i)
        if (R.positive_[i].height() == top_h) throw Inconsistency("highest root not unique");
      for (int i = 1; i <= n; ++i) {
        std::vector<int> up = top.c;
        up[i - 1] += 1;
        if (R.index_.count(up)) throw Inconsistency("highest root not maximal");
      }
    }

    // fundamental-weight data
    Matrix<Rat> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = R.A_[i][j];
    R.cartan_inv_ = inverse(a);
    R.gram_.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) R.gram_[i][j] = R.cartan_inv_[i][j] * R.d_[j];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) assert(R.gram_[i][j] == R.gram_[j][i]);
    return R;
  }

  const DynkinDiagram& diagram() const { return dg_; }
  int rank() const { return dg_.rank(); }
  int cartan(int i, int j) const { return A_[i - 1][j - 1]; }  // n(alpha_i, alpha_j)
  const std::vector<Root>& positive() const { return positive_; }
  std::size_t n_positive() const { return positive_.size(); }
  const Root& highest_root() const { return positive_.back(); }
  const Rat& half_norm(int node) const { return d_[node - 1]; }  // (a_i,a_i)/2

  bool is_positive_root(const std::vector<int>& c) const { return index_.count(c) != 0; }
  bool is_root(const std::vector<int>& c) const {
    if (index_.count(c)) return true;
    std::vector<int> neg(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
    return index_.count(neg) != 0;
  }
  int root_index(const Root& r) const {
    auto it = index_.find(r.c);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_long(const Root& r) const {
    int i = root_index(r);
    if (i < 0) {
      Root neg = -r;
      i = root_index(neg);
    }
    if (i < 0) throw Precondition("not a root of the system");
    return is_long_[i];
  }

  // n(beta, alpha_i) for beta in simple-root coordinates
  int pairing_with_simple(const Root& beta, int i) const {
    long s = 0;
    for (int j = 0; j < rank(); ++j) s += beta.c[j] * A_[j][i - 1];
    return static_cast<int>(s);
  }

  Rat inner_roots(const Root& a, const Root& b) const {
    Rat s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) {
        if (b.c[j] == 0 || A_[i][j] == 0) continue;
        s += Rat(a.c[i]) * Rat(b.c[j]) * Rat(A_[i][j]) * d_[j];
      }
    }
    return s;
  }

  Rat norm2(const Root& r) const { return inner_roots(r, r); }

  // n(beta, alpha) = 2(beta,alpha)/(alpha,alpha); exact, asserted integral
  int pairing(const Root& beta, const Root& alpha) const {
    Rat v = Rat(2) * inner_roots(beta, alpha) / norm2(alpha);
    assert(v.get_den() == 1);
    return static_cast<int>(v.get_num().get_si());
  }

  // s_alpha(beta) = beta - n(beta, alpha) alpha
  Root reflect(const Root& beta, const Root& alpha) const {
    int m = pairing(beta, alpha);
    Root r = beta;
    for (int i = 0; i < rank(); ++i) r.c[i] -= m * alpha.c[i];
    return r;
  }

  // marks of a root in the fundamental-weight basis: n(beta, alpha_j)
  Weight root_to_weight(const Root& beta) const {
    Weight w(rank(), 0);
    for (int j = 1; j <= rank(); ++j) w[j - 1] = pairing_with_simple(beta, j);
    return w;
  }

  // coefficients over simple roots of a weight-lattice element (rationals)
  std::vector<Rat> weight_to_root_coords(const Weight& w) const {
    std::vector<Rat> c(rank(), Rat(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) c[i] += cartan_inv_[j][i] * Rat(static_cast<long>(w[j]));
    return c;
  }

  Rat inner_weights(const Weight& a, const Weight& b) const {
    Rat s = 0;
    for (int i = 0; i < rank(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank(); ++j) {
        if (b[j] == 0) continue;
        s += Rat(static_cast<long>(a[i])) * Rat(static_cast<long>(b[j])) * gram_[i][j];
      }
    }
    return s;
  }

  // (w, alpha) for alpha in root coordinates
  Rat inner_weight_root(const Weight& w, const Root& alpha) const {
    Rat s = 0;
    for (int j = 0; j < rank(); ++j) {
      if (alpha.c[j] == 0 || w[j] == 0) continue;
      s += Rat(static_cast<long>(w[j])) * Rat(alpha.c[j]) * d_[j];
    }
    // (omega_i, alpha_j) = delta_ij d_j, so only matching indices contribute
    return s;
  }

  // n(w, alpha) for a weight and a root
  Rat pairing_weight_root(const Weight& w, const Root& alpha) const {
    return Rat(2) * inner_weight_root(w, alpha) / norm2(alpha);
  }

  Weight simple_reflection(const Weight& w, int i) const {
    Weight r = w;
    long long mi = w[i - 1];
    if (mi == 0) return r;
    for (int j = 0; j < rank(); ++j) r[j] -= mi * A_[i - 1][j];
    return r;
  }

  // Full orbit of w under the subgroup generated by {s_i : i in gens}.
  // The caller supplies the generator set explicitly.
  std::set<Weight> weyl_orbit(const Weight& w, const std::vector<int>& gens,
                              long long guard = 1000000) const {
    std::set<Weight> orbit{w};
    std::vector<Weight> frontier{w};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& x : frontier) {
        for (int i : gens) {
          Weight y = simple_reflection(x, i);
          if (orbit.insert(y).second) {
            next.push_back(y);
            if (static_cast<long long>(orbit.size()) > guard)
              throw GuardExceeded("weyl orbit guard exceeded",
                                  static_cast<long long>(orbit.size()));
          }
        }
      }
      frontier = std::move(next);
    }
    return orbit;
  }

  // Orbit of a root under reflections in the given simple generators.
  std::set<Root> root_orbit(const Root& r, const std::vector<int>& gens,
                            long long guard = 1000000) const {
    std::set<Root> orbit{r};
    std::vector<Root> frontier{r};
    while (!frontier.empty()) {
      std::vector<Root> next;
      for (const auto& x : frontier) {
        for (int i : gens) {
          Root simple{std::vector<int>(rank(), 0)};
          simple.c[i - 1] = 1;
          Root y = reflect(x, simple);
          if (orbit.insert(y).second) {
            next.push_back(y);
            if (static_cast<long long>(orbit.size()) > guard)
              throw GuardExceeded("root orbit guard exceeded",
                                  static_cast<long long>(orbit.size()));
          }
        }
      }
      frontier = std::move(next);
    }
    return orbit;
  }

  const Matrix<Rat>& cartan_inverse() const { return cartan_inv_; }

 private:
  void compute_lengths() { d_ = node_half_norms(dg_); }

  DynkinDiagram dg_;
  std::vector<std::vector<int>> A_;
  std::vector<Rat> d_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> index_;
  std::vector<bool> is_long_;
  Matrix<Rat> cartan_inv_;
  Matrix<Rat> gram_;
};

inline RootSystem build_root_system(const DiagramSpec& spec) {
  return RootSystem::build(build_diagram(spec));
}

// Induced root system on a node subset, with the local->original label map.
struct SubSystem {
  RootSystem R;
  std::vector<int> to_orig;  // local node i -> to_orig[i-1]

  int to_local(int orig) const {
    for (std::size_t i = 0; i < to_orig.size(); ++i)
      if (to_orig[i] == orig) return static_cast<int>(i) + 1;
    return -1;
  }
};

inline SubSystem sub_root_system(const DynkinDiagram& d, const std::vector<int>& nodes) {
  SubSystem s;
  DynkinDiagram sub = d.induced(nodes, &s.to_orig);
  s.R = RootSystem::build(sub);
  return s;
}

// Weyl dimension formula: prod over positive roots of <l+rho, av>/<rho, av>.
// Exact; works for semisimple (disconnected) systems as well.
inline Int weyl_dimension(const RootSystem& R, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != R.rank())
    throw Precondition("weight rank mismatch");
  if (!weight_dominant(lambda)) throw Precondition("weyl_dimension: non-dominant weight");
  Weight rho(R.rank(), 1);
  Weight lr = weight_add(lambda, rho);
  Rat prod = 1;
  for (const auto& a : R.positive())
    prod *= R.pairing_weight_root(lr, a) / R.pairing_weight_root(rho, a);
  assert(prod.get_den() == 1);
  return prod.get_num();
}

}  // namespace rhv
