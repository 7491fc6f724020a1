// Walk through the tangent-space data of a few spaces: grading, classification
// flags, line families, and the diagram reconstruction chain.

#include <iostream>

#include "rhv/linspaces.hpp"
#include "rhv/render.hpp"

using namespace rhv;

static void show(const std::string& name) {
  ParabolicSpec ps = parse_parabolic(name);
  RootSystem R = build_root_system(ps.spec);
  std::cout << "== " << ps.str() << " (dim " << dimension(R, ps.S) << ")\n";
  MarkedDiagram md{R.diagram(), {}, {}};
  for (int s : ps.S) md.marks[s] = 1;
  std::cout << render_marked_diagram(md) << "\n";
  for (const auto& piece : grading(R, ps).pieces) {
    std::cout << "  T_(";
    for (std::size_t i = 0; i < piece.degree.size(); ++i)
      std::cout << (i ? "," : "") << piece.degree[i];
    std::cout << ") dim " << piece.dim << "\n";
  }
  for (const auto& fam : line_classes(R, ps)) {
    std::cout << "  lines of class " << fam.class_node << ": closed dim " << fam.closed_dim;
    if (fam.open_dim) std::cout << ", open orbit dim " << *fam.open_dim;
    std::cout << "\n";
  }
  std::cout << "\n";
}

int main() {
  show("G2/P1");
  show("F4/P4");
  show("E6/P1");
  show("D6/P6");

  auto tr = reconstruct_diagram(parse_diagram_spec("E6"), 1);
  std::cout << "reconstruction chain for E6/P1:\n";
  for (const auto& st : tr.steps) {
    std::cout << "  " << st.descriptor << " ->";
    if (st.factor_names.empty()) std::cout << " (end)";
    for (const auto& f : st.factor_names) std::cout << " " << f;
    std::cout << "\n";
  }
  std::cout << "isomorphic to E6: " << (tr.isomorphic ? "yes" : "no") << "\n";
  return 0;
}
