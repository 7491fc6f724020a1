#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rhv/dynkin.hpp"

namespace rhv {

// ---------------------------------------------------------------------------
// Text art for marked diagrams: one line per branch, bonds drawn with the
// arrowhead towards the shorter root, marks as filled nodes with superscript
// multiplicities.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string superscript(int m) {
  static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(m)) out += digits[c - '0'];
  return out;
}

inline std::string node_glyph(int mark) {
  if (mark <= 0) return "○";
  if (mark == 1) return "●";
  return "●" + superscript(mark);
}

inline std::string bond_glyph(const Edge& e, int from, int to) {
  if (e.bond == 1) return "—";
  bool towards_to = (e.arrow_target == to);
  if (e.bond == 2) return towards_to ? "⇒" : "⇐";
  return towards_to ? "⇛" : "⇚";
}

// longest path in a tree component, as a node list (ties broken towards
// smaller original labels so standard shapes render in Bourbaki order)
inline std::vector<int> spine_of(const DynkinDiagram& d, const std::vector<int>& comp,
                                 const std::vector<int>& orig) {
  auto farthest = [&](int s) {
    std::map<int, int> par, dist;
    std::vector<int> stack{s};
    par[s] = 0;
    dist[s] = 0;
    int best = s;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (dist[u] > dist[best] ||
          (dist[u] == dist[best] && orig[u - 1] < orig[best - 1]))
        best = u;
      for (int v : d.neighbors(u)) {
        if (par.count(v)) continue;
        par[v] = u;
        dist[v] = dist[u] + 1;
        stack.push_back(v);
      }
    }
    return std::pair{best, par};
  };
  auto [a, par1] = farthest(comp[0]);
  auto [b, par2] = farthest(a);
  std::vector<int> path;
  for (int v = b; v != 0; v = par2[v]) path.push_back(v);
  // canonical orientation: smaller original label first
  if (orig[path.front() - 1] > orig[path.back() - 1]) std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

inline std::string render_marked_diagram(const MarkedDiagram& md) {
  const DynkinDiagram& d = md.diagram;
  if (d.rank() == 0) return "(point)";
  std::vector<int> orig(d.rank());
  for (int i = 1; i <= d.rank(); ++i) orig[i - 1] = md.orig(i);

  std::vector<std::string> blocks;
  for (const auto& comp : d.components()) {
    auto spine = detail::spine_of(d, comp, orig);
    std::vector<int> at_col(d.rank() + 1, -1);
    std::string line1;
    std::vector<int> cols;
    for (std::size_t t = 0; t < spine.size(); ++t) {
      if (t) {
        const Edge* e = d.edge_between(spine[t - 1], spine[t]);
        line1 += detail::bond_glyph(*e, spine[t - 1], spine[t]);
      }
      at_col[spine[t]] = static_cast<int>(t);
      auto it = md.marks.find(spine[t]);
      line1 += detail::node_glyph(it == md.marks.end() ? 0 : it->second);
    }
    // hang non-spine nodes under their spine neighbor
    std::string line2, line3;
    bool has_branch = false;
    std::set<int> on_spine(spine.begin(), spine.end());
    for (int v : comp) {
      if (on_spine.count(v)) continue;
      // our diagrams have depth-1 branches only
      int attach = 0;
      for (int w : d.neighbors(v))
        if (on_spine.count(w)) attach = w;
      if (!attach) continue;
      has_branch = true;
      int col = at_col[attach] * 2;  // two display cells per spine step
      while (static_cast<int>(line2.size()) < col) line2 += " ";
      while (static_cast<int>(line3.size()) < col) line3 += " ";
      line2 += "|";
      auto it = md.marks.find(v);
      line3 += detail::node_glyph(it == md.marks.end() ? 0 : it->second);
    }
    std::string block = line1;
    if (has_branch) block += "\n" + line2 + "\n" + line3;
    blocks.push_back(block);
  }
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "  ⊔  ";
    out += blocks[i];
  }
  return out;
}

}  // namespace rhv
