#include <catch2/catch.hpp>

#include "rhv/linspaces.hpp"

using namespace rhv;

namespace {

std::vector<DiagramSpec> all_specs(int max_rank) {
  std::vector<DiagramSpec> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({'E', n});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

LineFamily single_family(const std::string& space) {
  ParabolicSpec ps = parse_parabolic(space);
  auto fams = line_classes(ps);
  REQUIRE(fams.size() == 1);
  return fams[0];
}

}  // namespace

TEST_CASE("line families of the worked examples") {
  SECTION("A_n/P_k: one family, not exposed, marks {k-1, k+1}") {
    auto f = single_family("A5/P3");
    REQUIRE_FALSE(f.exposed_short);
    REQUIRE(f.closed_orbit.marks == std::map<int, int>{{2, 1}, {4, 1}});
    REQUIRE_FALSE(f.open_dim.has_value());
  }
  SECTION("F4/P4: exposed; closed F4/P3 of dim 20, open orbit dim 23") {
    auto f = single_family("F4/P4");
    REQUIRE(f.exposed_short);
    REQUIRE(f.closed_orbit.marks == std::map<int, int>{{3, 1}});
    REQUIRE(f.closed_dim == 20);
    REQUIRE(f.open_dim == 23);
    REQUIRE(f.delta0->c == std::vector<int>{0, 1, 2, 2});
  }
  SECTION("G2/P1: closed G2/P2 of dim 5, open dim 7") {
    auto f = single_family("G2/P1");
    REQUIRE(f.exposed_short);
    REQUIRE(f.closed_dim == 5);
    REQUIRE(f.open_dim == 7);
  }
  SECTION("C2/P1: |Gamma| = 4 = dim G(2,4)") {
    auto f = single_family("C2/P1");
    REQUIRE(f.open_dim == 4);
  }
  SECTION("F4/P3: closed orbit F4/P{2,4} of dim 22, open orbit dim 24") {
    auto f = single_family("F4/P3");
    REQUIRE(f.exposed_short);
    REQUIRE(f.closed_orbit.marks == std::map<int, int>{{2, 1}, {4, 1}});
    REQUIRE(f.closed_dim == 22);
    REQUIRE(f.open_dim == 24);
    REQUIRE(f.delta0->c == std::vector<int>{0, 1, 2, 0});
  }
  SECTION("B_n/P_n: the Gamma-set matches the D_{n+1} line model") {
    // lines on B_n/P_n = D_{n+1}/P_{n+1} form D_{n+1}/P_{n-1}
    for (int n : {3, 4, 5}) {
      auto f = line_classes(ParabolicSpec{{'B', n}, {n}})[0];
      REQUIRE(f.exposed_short);
      RootSystem D = build_root_system({'D', n + 1});
      REQUIRE(*f.open_dim == dimension(D, {n - 1}));
    }
  }
  SECTION("G/B: every class closed, marks = complement of the class node") {
    ParabolicSpec ps = parse_parabolic("A4/P{1,2,3,4}");
    for (const auto& f : line_classes(ps)) {
      REQUIRE_FALSE(f.exposed_short);
      std::map<int, int> expect;
      for (int v = 1; v <= 4; ++v)
        if (v != f.class_node) expect[v] = 1;
      REQUIRE(f.closed_orbit.marks == expect);
    }
  }
}

TEST_CASE("Gamma-set sanity on all exposed-short classes, small rank") {
  for (const auto& spec : all_specs(6)) {
    RootSystem R = build_root_system(spec);
    for (int i = 1; i <= spec.rank; ++i) {
      ParabolicSpec ps{spec, {i}};
      if (!is_exposed_short(R, ps.S, i)) continue;
      auto f = line_classes(R, ps)[0];
      INFO(spec.str() << "/P" << i);
      REQUIRE(f.open_dim);
      REQUIRE(*f.open_dim > f.closed_dim);
      REQUIRE(*f.open_dim <= 2 * dimension(R, ps.S) - 2);
      // the reflection form of Gamma agrees with the root-difference form
      const Root& d0 = *f.delta0;
      std::set<std::vector<int>> alt;
      for (const auto& b : delta_X(R, ps.S)) {
        if (b == d0) continue;
        alt.insert(b.c);
        alt.insert(R.reflect(b, d0).c);
      }
      REQUIRE(static_cast<int>(alt.size()) == *f.open_dim);
    }
  }
}

TEST_CASE("cone of lines") {
  SECTION("E6/P1: the D5 spinor variety, closed") {
    ParabolicSpec ps = parse_parabolic("E6/P1");
    RootSystem R = build_root_system(ps.spec);
    auto c = cone_of_lines(R, ps, 1);
    REQUIRE_FALSE(c.exposed_short);
    REQUIRE(c.cone_dim == 10);
    REQUIRE(name_marked_diagram(c.cone) == "S5");
  }
  SECTION("F4/P4: two-orbit cone with base locus of dimension 9") {
    ParabolicSpec ps = parse_parabolic("F4/P4");
    RootSystem R = build_root_system(ps.spec);
    auto c = cone_of_lines(R, ps, 4);
    REQUIRE(c.exposed_short);
    REQUIRE(c.base_locus_dim == 9);
    REQUIRE(c.cone_dim == 6);  // the closed orbit, a six-dimensional quadric
  }
  SECTION("full flag: a point") {
    ParabolicSpec ps = parse_parabolic("A3/P{1,2,3}");
    RootSystem R = build_root_system(ps.spec);
    for (int i = 1; i <= 3; ++i) {
      auto c = cone_of_lines(R, ps, i);
      REQUIRE(c.cone.diagram.rank() == 0);
      REQUIRE(c.cone_dim == 0);
    }
  }
  SECTION("shadow consistency: Y1 = shadow of a point on the space of lines") {
    for (const auto& spec : all_specs(6)) {
      RootSystem R = build_root_system(spec);
      for (int i = 1; i <= spec.rank; ++i) {
        if (is_exposed_short(R, {i}, i)) continue;
        if (R.diagram().neighbors(i).empty()) continue;
        std::set<int> nbrs(R.diagram().neighbors(i).begin(), R.diagram().neighbors(i).end());
        MarkedDiagram sh = tits_shadow(R.diagram(), nbrs, {i});
        ParabolicSpec ps{spec, {i}};
        auto c = cone_of_lines(R, ps, i);
        INFO(spec.str() << "/P" << i);
        REQUIRE(marked_isomorphic(sh.diagram, sh.marks, c.cone.diagram, c.cone.marks));
      }
    }
  }
}

TEST_CASE("planes: the D-series and E6 catalogs") {
  SECTION("D7/P7, k=3: two families") {
    ParabolicSpec ps = parse_parabolic("D7/P7");
    RootSystem R = build_root_system(ps.spec);
    auto fams = planes(R, ps, 7, 3);
    REQUIRE(fams.size() == 2);
    REQUIRE(fams[0].removed_nodes == std::vector<int>{3, 6});
    REQUIRE(fams[1].removed_nodes == std::vector<int>{4});
    REQUIRE(fams[1].chain == std::vector<int>{7, 5, 6});
  }
  SECTION("D6/P6 full list") {
    ParabolicSpec ps = parse_parabolic("D6/P6");
    RootSystem R = build_root_system(ps.spec);
    auto k2 = planes(R, ps, 6, 2);
    REQUIRE(k2.size() == 1);
    REQUIRE(k2[0].removed_nodes == std::vector<int>{3, 5});
    auto k3 = planes(R, ps, 6, 3);
    REQUIRE(k3.size() == 2);
    REQUIRE(k3[0].removed_nodes == std::vector<int>{2, 5});
    REQUIRE(k3[1].removed_nodes == std::vector<int>{3});
    auto k4 = planes(R, ps, 6, 4);
    REQUIRE(k4.size() == 1);
    REQUIRE(k4[0].removed_nodes == std::vector<int>{1, 5});
    auto k5 = planes(R, ps, 6, 5);
    REQUIRE(k5.size() == 1);
    REQUIRE(k5[0].removed_nodes == std::vector<int>{5});
    REQUIRE(planes(R, ps, 6, 6).empty());
    REQUIRE(max_linear_space(R, ps, 6) == 5);
  }
  SECTION("E6/P1: P5 family E6/P2; P4 family E6/P5 (derived label)") {
    ParabolicSpec ps = parse_parabolic("E6/P1");
    RootSystem R = build_root_system(ps.spec);
    auto k5 = planes(R, ps, 1, 5);
    REQUIRE(k5.size() == 1);
    REQUIRE(k5[0].removed_nodes == std::vector<int>{2});
    auto k4 = planes(R, ps, 1, 4);
    bool has_p5_family = false;
    for (const auto& f : k4) has_p5_family |= (f.removed_nodes == std::vector<int>{5});
    REQUIRE(has_p5_family);
    REQUIRE(max_linear_space(R, ps, 1) == 5);
  }
  SECTION("G/B has no planes for k >= 2") {
    ParabolicSpec ps = parse_parabolic("A4/P{1,2,3,4}");
    RootSystem R = build_root_system(ps.spec);
    for (int a = 1; a <= 4; ++a)
      for (int k = 2; k <= 4; ++k) REQUIRE(planes(R, ps, a, k).empty());
  }
  SECTION("exposed-short classes are rejected") {
    ParabolicSpec ps = parse_parabolic("C4/P2");
    RootSystem R = build_root_system(ps.spec);
    REQUIRE_THROWS_AS(planes(R, ps, 2, 2), ExposedShortError);
    REQUIRE_THROWS_AS(max_linear_space(R, ps, 2), ExposedShortError);
  }
}

TEST_CASE("k=1 plane cuts reproduce the line classes on maximal parabolics") {
  for (const auto& spec : all_specs(6)) {
    RootSystem R = build_root_system(spec);
    for (int i = 1; i <= spec.rank; ++i) {
      if (is_exposed_short(R, {i}, i)) continue;
      ParabolicSpec ps{spec, {i}};
      auto fams = planes(R, ps, i, 1);
      REQUIRE(fams.size() == 1);
      auto lf = line_classes(R, ps)[0];
      std::set<int> marks;
      for (const auto& [n, m] : lf.closed_orbit.marks) marks.insert(n);
      REQUIRE(std::set<int>(fams[0].removed_nodes.begin(), fams[0].removed_nodes.end()) ==
              marks);
    }
  }
}

TEST_CASE("max linear spaces") {
  auto R = build_root_system({'A', 6});
  REQUIRE(max_linear_space(R, ParabolicSpec{{'A', 6}, {1}}, 1) == 6);
  auto D6 = build_root_system({'D', 6});
  REQUIRE(max_linear_space(D6, ParabolicSpec{{'D', 6}, {6}}, 6) == 5);
  auto B4 = build_root_system({'B', 4});
  REQUIRE(max_linear_space(B4, ParabolicSpec{{'B', 4}, {1}}, 1) == 3);  // P3's on Q7
}

TEST_CASE("exposed-short catalog") {
  SECTION("F4/P4: the four maximal types") {
    auto e = exposed_planes_catalog(parse_parabolic("F4/P4"), 4);
    REQUIRE(e.max_plane == 5);
    int total_types = 0;
    for (const auto& f : e.families) total_types += f.components;
    REQUIRE(total_types == 4);
    REQUIRE(e.families[0].k == 5);
    REQUIRE(e.families[0].family_dim == 5);
    REQUIRE(e.families[1].k == 4);
    REQUIRE(e.families[1].family_dim == 6);
    REQUIRE(e.families[2].components == 2);
  }
  SECTION("B_n/P_n components") {
    auto e = exposed_planes_catalog(parse_parabolic("B5/P5"), 5, 3);
    REQUIRE(e.families.size() == 2);
    REQUIRE(e.families[0].parameter == "D6/P{1,5}");
    REQUIRE(e.families[0].closed_orbit == "B5/P1");
    REQUIRE(e.families[1].parameter == "D6/P3");
    REQUIRE(e.families[1].closed_orbit == "B5/P3");
    auto k2 = exposed_planes_catalog(parse_parabolic("B5/P5"), 5, 2);
    REQUIRE(k2.families.size() == 1);
    REQUIRE(k2.families[0].parameter == "D6/P{2,5}");
  }
  SECTION("F4/P3: two maximal types") {
    auto e = exposed_planes_catalog(parse_parabolic("F4/P3"), 3);
    REQUIRE(e.max_plane == 3);
    REQUIRE(e.families.size() == 2);
    REQUIRE(e.families[0].k == 3);
    REQUIRE(e.families[1].k == 2);
  }
  SECTION("C_n/P_k families") {
    auto e = exposed_planes_catalog(parse_parabolic("C4/P2"), 2, 2);
    REQUIRE(e.families.size() == 2);  // both shapes exist at l = 2 <= k
  }
  SECTION("uncovered: non-maximal exposed parabolic") {
    // class 2 stays exposed short inside C4/P{1,2}
    REQUIRE_THROWS_AS(exposed_planes_catalog(parse_parabolic("C4/P{1,2}"), 2),
                      UncoveredCase);
  }
  SECTION("not exposed short is a precondition error") {
    REQUIRE_THROWS_AS(exposed_planes_catalog(parse_parabolic("A4/P2"), 2), Precondition);
  }
}

TEST_CASE("tits shadows") {
  SECTION("D_n: shadow of a spinor point on G/P3 is G(3,n)") {
    auto md = tits_shadow(parse_diagram_spec("D6"), {3}, {6});
    REQUIRE(name_marked_diagram(md) == "G(3,6)");
    REQUIRE(md.diagram.rank() == 5);
    REQUIRE(md.marked_orig_nodes() == std::vector<int>{3});
  }
  SECTION("A4: same deletion rule") {
    auto md = tits_shadow(parse_diagram_spec("A4"), {2}, {4});
    REQUIRE(name_marked_diagram(md) == "G(2,4)");
  }
  SECTION("S contained in S' is a point") {
    REQUIRE_THROWS_AS(tits_shadow(parse_diagram_spec("A4"), {2}, {2}), Precondition);
    REQUIRE_THROWS_AS(tits_shadow(parse_diagram_spec("A4"), {2}, {2, 4}), Precondition);
  }
}

TEST_CASE("line-class closed orbits agree with shadows on the line space") {
  for (const auto& spec : all_specs(5)) {
    RootSystem R = build_root_system(spec);
    for (int j = 1; j <= spec.rank; ++j) {
      ParabolicSpec ps{spec, {j}};
      auto fam = line_classes(R, ps)[0];
      // both present G/P_{(S - j) u N(j)}: the family's marked nodes
      std::set<int> expect;
      for (int v : R.diagram().neighbors(j)) expect.insert(v);
      std::set<int> got;
      for (const auto& [n, m] : fam.closed_orbit.marks) got.insert(n);
      REQUIRE(got == expect);
    }
  }
}

TEST_CASE("ambient modules") {
  SECTION("E6 from the end 1") {
    auto am = ambient_module(parse_diagram_spec("E6"), 1, 2);
    REQUIRE(am.weight == fundamental_weight(6, 3));
    REQUIRE(am.tag == AmbientModule::FullExterior);
    auto am3 = ambient_module(parse_diagram_spec("E6"), 1, 3);
    REQUIRE(am3.weight == fundamental_weight(6, 4));
    auto am4 = ambient_module(parse_diagram_spec("E6"), 1, 4);  // p+1: triple point
    REQUIRE(am4.weight == weight_add(fundamental_weight(6, 2), fundamental_weight(6, 5)));
  }
  SECTION("C_n from the end 1: reduced exterior powers") {
    for (int k = 2; k <= 5; ++k) {
      auto am = ambient_module(parse_diagram_spec("C5"), 1, k);
      REQUIRE(am.weight == fundamental_weight(5, k));
      REQUIRE(am.tag == AmbientModule::ReducedExterior);
    }
  }
  SECTION("F4 from the end 4: the chain and the third Veronese") {
    auto am2 = ambient_module(parse_diagram_spec("F4"), 4, 2);
    REQUIRE(am2.weight == fundamental_weight(4, 3));
    auto am3 = ambient_module(parse_diagram_spec("F4"), 4, 3);
    REQUIRE(am3.weight == fundamental_weight(4, 2));
    auto am6 = ambient_module(parse_diagram_spec("F4"), 4, 6);
    REQUIRE(am6.weight == Weight{3, 0, 0, 0});
    REQUIRE(am6.note == "third Veronese re-embedding");
  }
  SECTION("B_n from the end 1: double bond away gives 2w_n at p+1") {
    auto am = ambient_module(parse_diagram_spec("B4"), 1, 4);
    REQUIRE(am.weight == Weight{0, 0, 0, 2});
  }
  SECTION("G2: second Veronese and the triple bond") {
    auto am = ambient_module(parse_diagram_spec("G2"), 1, 3);
    REQUIRE(am.weight == Weight{2, 0});
    auto am2 = ambient_module(parse_diagram_spec("G2"), 2, 2);
    REQUIRE(am2.weight == Weight{3, 0});
    REQUIRE(am2.tag == AmbientModule::BracketKernel);
  }
  SECTION("errors") {
    REQUIRE_THROWS_AS(ambient_module(parse_diagram_spec("E6"), 3, 2), Precondition);
    REQUIRE_THROWS_AS(ambient_module(parse_diagram_spec("A3"), 1, 9), Precondition);
  }
}

TEST_CASE("diagram reconstruction") {
  SECTION("round trip for every non-exposed start, rank <= 6") {
    for (const auto& spec : all_specs(6)) {
      RootSystem R = build_root_system(spec);
      for (int i = 1; i <= spec.rank; ++i) {
        if (is_exposed_short(R, {i}, i)) {
          REQUIRE_THROWS_AS(reconstruct_diagram(spec, i), ExposedShortError);
          continue;
        }
        auto tr = reconstruct_diagram(spec, i);
        INFO(spec.str() << "/P" << i);
        REQUIRE(tr.isomorphic);
      }
    }
  }
  SECTION("E6/P1 chain") {
    auto tr = reconstruct_diagram(parse_diagram_spec("E6"), 1);
    REQUIRE(tr.isomorphic);
    std::vector<std::string> names;
    for (const auto& st : tr.steps) names.push_back(st.descriptor);
    REQUIRE(names == std::vector<std::string>{"OP2", "S5", "G(2,5)", "P1", "P2", "P1"});
    REQUIRE(tr.steps[2].factor_names == std::vector<std::string>{"P1", "P2"});
  }
  SECTION("E7/P1 chain passes through Seg(P1 x P3) and P0 u P2") {
    auto tr = reconstruct_diagram(parse_diagram_spec("E7"), 1);
    REQUIRE(tr.isomorphic);
    REQUIRE(tr.steps[0].descriptor == "E7/P{1}");
    REQUIRE(tr.steps[1].descriptor == "S6");
    REQUIRE(tr.steps[2].descriptor == "G(2,6)");
    REQUIRE(tr.steps[2].factor_names == std::vector<std::string>{"P1", "P3"});
  }
  SECTION("A_n/P_k: Segre then points") {
    auto tr = reconstruct_diagram(parse_diagram_spec("A5"), 3);
    REQUIRE(tr.isomorphic);
    REQUIRE(tr.steps[0].factor_names == std::vector<std::string>{"P2", "P2"});
  }
  SECTION("C_n/P_n: the double bond from the quadratic Veronese") {
    auto tr = reconstruct_diagram(parse_diagram_spec("C5"), 5);
    REQUIRE(tr.isomorphic);
    REQUIRE(tr.steps[0].factor_names == std::vector<std::string>{"v2(P4)"});
    bool has_double = false;
    for (const auto& e : tr.result.edges()) has_double |= (e.bond == 2);
    REQUIRE(has_double);
  }
}

TEST_CASE("W_S-conjugacy of same-length degree-one roots, exhaustive small rank") {
  for (const auto& spec : all_specs(6)) {
    RootSystem R = build_root_system(spec);
    for (int i = 1; i <= spec.rank; ++i) {
      Root ai{std::vector<int>(R.rank(), 0)};
      ai.c[i - 1] = 1;
      std::set<std::vector<int>> target;
      for (const auto& b : R.positive())
        if (b.coeff(i) == 1 && R.norm2(b) == R.norm2(ai)) target.insert(b.c);
      std::vector<int> gens;
      for (int j = 1; j <= spec.rank; ++j)
        if (j != i) gens.push_back(j);
      auto orbit = R.root_orbit(ai, gens);
      std::set<std::vector<int>> orbit_in_target;
      for (const auto& r : orbit)
        if (target.count(r.c)) orbit_in_target.insert(r.c);
      INFO(spec.str() << " node " << i);
      REQUIRE(orbit_in_target == target);
    }
  }
}
