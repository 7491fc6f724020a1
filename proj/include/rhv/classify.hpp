#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rhv/dynkin.hpp"

namespace rhv {

// ---------------------------------------------------------------------------
// Recognize an abstract connected diagram as a Bourbaki series member and
// name marked diagrams by the varieties they present.
// ---------------------------------------------------------------------------

namespace detail {

struct IsoState {
  std::vector<int> map_ab;  // a-node -> b-node, 0 = unassigned
  std::vector<bool> used;
};

// Match the subtree of `a` rooted at ua (coming from pa) onto the subtree of
// `b` rooted at ub.  Diagrams are tiny trees; state is copied for backtracking.
inline std::optional<IsoState> match_subtree(const DynkinDiagram& a, const DynkinDiagram& b,
                                             int ua, int ub, int pa, int pb, IsoState st) {
  if (st.used[ub]) return std::nullopt;
  st.map_ab[ua] = ub;
  st.used[ub] = true;
  std::vector<int> ca, cb;
  for (int v : a.neighbors(ua))
    if (v != pa) ca.push_back(v);
  for (int v : b.neighbors(ub))
    if (v != pb) cb.push_back(v);
  if (ca.size() != cb.size()) return std::nullopt;
  if (ca.empty()) return st;
  std::sort(cb.begin(), cb.end());
  do {
    std::optional<IsoState> cur = st;
    for (std::size_t t = 0; cur && t < ca.size(); ++t) {
      const Edge* ea = a.edge_between(ua, ca[t]);
      const Edge* eb = b.edge_between(ub, cb[t]);
      if (ea->bond != eb->bond ||
          (ea->bond > 1 && (ea->arrow_target == ca[t]) != (eb->arrow_target == cb[t]))) {
        cur.reset();
        break;
      }
      cur = match_subtree(a, b, ca[t], cb[t], ua, ub, std::move(*cur));
    }
    if (cur) return cur;
  } while (std::next_permutation(cb.begin(), cb.end()));
  return std::nullopt;
}

inline std::optional<std::vector<int>> find_iso(const DynkinDiagram& a, const DynkinDiagram& b) {
  if (a.rank() != b.rank()) return std::nullopt;
  if (a.rank() == 0) return std::vector<int>{0};
  for (int start = 1; start <= b.rank(); ++start) {
    IsoState st;
    st.map_ab.assign(a.rank() + 1, 0);
    st.used.assign(b.rank() + 1, false);
    auto res = match_subtree(a, b, 1, start, 0, 0, std::move(st));
    if (res) return res->map_ab;
  }
  return std::nullopt;
}

}  // namespace detail

struct ComponentClass {
  DiagramSpec spec;
  std::vector<int> std_to_local;  // Bourbaki node i -> local node (1-indexed at [i])
};

// Identify a connected diagram with a Bourbaki series diagram.  A3-vs-D3
// style coincidences resolve to the earliest series letter.
inline std::optional<ComponentClass> classify_component(const DynkinDiagram& comp) {
  const int r = comp.rank();
  std::vector<DiagramSpec> candidates;
  candidates.push_back({'A', r});
  if (r >= 2) candidates.push_back({'B', r});
  if (r >= 2) candidates.push_back({'C', r});
  if (r >= 3) candidates.push_back({'D', r});
  if (r >= 6 && r <= 8) candidates.push_back({'E', r});
  if (r == 4) candidates.push_back({'F', r});
  if (r == 2) candidates.push_back({'G', r});
  for (const auto& spec : candidates) {
    DynkinDiagram std_d = build_diagram(spec);
    auto iso = detail::find_iso(std_d, comp);
    if (iso) return ComponentClass{spec, *iso};
  }
  return std::nullopt;
}

// Marks of a marked component translated to Bourbaki labels.
inline std::map<int, int> marks_in_bourbaki(const ComponentClass& cls,
                                            const std::map<int, int>& local_marks) {
  std::map<int, int> std_marks;
  for (const auto& [local, m] : local_marks) {
    if (m <= 0) continue;
    for (int i = 1; i <= cls.spec.rank; ++i)
      if (cls.std_to_local[i] == local) std_marks[i] = m;
  }
  return std_marks;
}

// Human name of a single marked component (marks in local labels).
inline std::string name_marked_component(const DynkinDiagram& comp,
                                         const std::map<int, int>& marks,
                                         int veronese = 1) {
  auto cls = classify_component(comp);
  std::string base;
  if (!cls) {
    base = "?";
  } else {
    const int r = cls->spec.rank;
    std::map<int, int> std_marks = marks_in_bourbaki(*cls, marks);
    auto single = [&]() { return std_marks.size() == 1 ? std_marks.begin()->first : 0; };
    int k = single();
    char ser = cls->spec.series;
    if (std_marks.empty()) {
      base = "P0";
    } else if (ser == 'A' && k) {
      int kk = std::min(k, r + 1 - k);
      base = (kk == 1) ? "P" + std::to_string(r)
                       : "G(" + std::to_string(kk) + "," + std::to_string(r + 1) + ")";
    } else if (ser == 'B' && k == 1) {
      base = "Q" + std::to_string(2 * r - 1);
    } else if (ser == 'D' && k == 1) {
      base = "Q" + std::to_string(2 * r - 2);
    } else if (ser == 'D' && (k == r || k == r - 1)) {
      base = "S" + std::to_string(r);
    } else if (ser == 'C' && k == r) {
      base = "GLag(" + std::to_string(r) + "," + std::to_string(2 * r) + ")";
    } else if (ser == 'C' && k == 1) {
      base = "P" + std::to_string(2 * r - 1);
    } else if (ser == 'E' && r == 6 && (k == 1 || k == 6)) {
      base = "OP2";
    } else {
      base = cls->spec.str() + "/P{";
      bool first = true;
      for (auto& [n, m] : std_marks) {
        if (!first) base += ",";
        base += std::to_string(n);
        if (m > 1) base += "^" + std::to_string(m);
        first = false;
      }
      base += "}";
    }
  }
  if (veronese == 2) return "v2(" + base + ")";
  if (veronese == 3) return "v3(" + base + ")";
  return base;
}

// Name a possibly-disconnected marked diagram as a product of factors.
inline std::string name_marked_diagram(const MarkedDiagram& md) {
  auto comps = md.diagram.components();
  if (md.diagram.rank() == 0) return "P0";
  std::vector<std::string> names;
  for (const auto& comp : comps) {
    std::vector<int> to_orig;
    DynkinDiagram sub = md.diagram.induced(comp, &to_orig);
    std::map<int, int> local_marks;
    for (std::size_t t = 0; t < to_orig.size(); ++t) {
      auto it = md.marks.find(to_orig[t]);
      if (it != md.marks.end() && it->second > 0) local_marks[static_cast<int>(t) + 1] = it->second;
    }
    names.push_back(name_marked_component(sub, local_marks));
  }
  std::sort(names.begin(), names.end());
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += " x ";
    s += names[i];
  }
  return s;
}

}  // namespace rhv
