#include <catch2/catch.hpp>

#include "rhv/dynkin.hpp"
#include "rhv/rng.hpp"

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

std::size_t expected_positive(const DiagramSpec& s) {
  switch (s.series) {
    case 'A': return s.rank * (s.rank + 1) / 2;
    case 'B':
    case 'C': return s.rank * s.rank;
    case 'D': return s.rank * (s.rank - 1);
    case 'E': return s.rank == 6 ? 36 : s.rank == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("diagram shapes follow the Bourbaki conventions") {
  auto a3 = build_diagram({'A', 3});
  REQUIRE(a3.edges().size() == 2);
  REQUIRE(a3.edge_between(1, 2) != nullptr);
  REQUIRE(a3.edge_between(2, 3) != nullptr);
  REQUIRE(a3.edge_between(1, 3) == nullptr);
  REQUIRE(a3.simply_laced());

  auto g2 = build_diagram({'G', 2});
  REQUIRE(g2.edges().size() == 1);
  REQUIRE(g2.edges()[0].bond == 3);
  REQUIRE(g2.edges()[0].arrow_target == 1);  // alpha_1 short

  auto d5 = build_diagram({'D', 5});
  REQUIRE(d5.valence(3) == 3);
  REQUIRE(d5.edge_between(3, 4) != nullptr);
  REQUIRE(d5.edge_between(3, 5) != nullptr);
  REQUIRE(d5.edge_between(4, 5) == nullptr);

  auto f4 = build_diagram({'F', 4});
  REQUIRE(f4.edge_between(2, 3)->bond == 2);
  REQUIRE(f4.edge_between(2, 3)->arrow_target == 3);
}

TEST_CASE("invalid specs are rejected with the violated bound") {
  REQUIRE_THROWS_AS(parse_diagram_spec("X9"), ParseError);
  REQUIRE_THROWS_AS(parse_diagram_spec("E9"), ParseError);
  REQUIRE_THROWS_AS(parse_diagram_spec("F3"), ParseError);
  REQUIRE_THROWS_AS(parse_diagram_spec("D2"), ParseError);
  REQUIRE_THROWS_AS(parse_diagram_spec("A0"), ParseError);
  REQUIRE_THROWS_AS(parse_diagram_spec("G3"), ParseError);
  REQUIRE(parse_diagram_spec("e6").series == 'E');
  REQUIRE(parse_diagram_spec("d12").rank == 12);
}

TEST_CASE("root counts and adjoint dimensions re-derived by closure") {
  for (const auto& spec : all_specs(12)) {
    RootSystem R = build_root_system(spec);
    INFO(spec.str());
    REQUIRE(R.n_positive() == expected_positive(spec));
  }
  REQUIRE(build_root_system({'G', 2}).n_positive() + build_root_system({'G', 2}).n_positive() +
              2 ==
          14);
  auto f4 = build_root_system({'F', 4});
  REQUIRE(f4.highest_root().c == std::vector<int>{2, 3, 4, 2});
  REQUIRE(4 + 2 * static_cast<int>(f4.n_positive()) == 52);
  auto e8 = build_root_system({'E', 8});
  REQUIRE(e8.n_positive() == 120);
  REQUIRE(8 + 2 * 120 == 248);
}

TEST_CASE("A2 root system in height order") {
  auto R = build_root_system({'A', 2});
  REQUIRE(R.positive().size() == 3);
  REQUIRE(R.positive()[0].c == std::vector<int>{1, 0});
  REQUIRE(R.positive()[1].c == std::vector<int>{0, 1});
  REQUIRE(R.positive()[2].c == std::vector<int>{1, 1});
}

TEST_CASE("pairings") {
  auto g2 = build_root_system({'G', 2});
  Root a2{{0, 1}};
  REQUIRE(g2.pairing_with_simple(a2, 1) == -3);
  for (const auto& spec : all_specs(5)) {
    RootSystem R = build_root_system(spec);
    for (int i = 1; i <= R.rank(); ++i) {
      Root ai{std::vector<int>(R.rank(), 0)};
      ai.c[i - 1] = 1;
      REQUIRE(R.pairing_with_simple(ai, i) == 2);
    }
  }
  // fundamental weights are dual to the simple coroots
  auto a4 = build_root_system({'A', 4});
  for (int k = 1; k <= 4; ++k)
    for (int j = 1; j <= 4; ++j) {
      Root aj{std::vector<int>(4, 0)};
      aj.c[j - 1] = 1;
      REQUIRE(a4.pairing_weight_root(fundamental_weight(4, k), aj) == Rat(k == j ? 1 : 0));
    }
}

TEST_CASE("reflections") {
  auto a2 = build_root_system({'A', 2});
  REQUIRE(a2.reflect(Root{{0, 1}}, Root{{1, 0}}).c == std::vector<int>{1, 1});
  auto c2 = build_root_system({'C', 2});
  Root alpha{{2, 1}};
  REQUIRE(c2.is_long(alpha));
  REQUIRE(c2.pairing(Root{{1, 0}}, alpha) == 1);
  REQUIRE(c2.reflect(Root{{1, 0}}, alpha).c == std::vector<int>{-1, -1});
  for (const auto& spec : all_specs(4)) {
    RootSystem R = build_root_system(spec);
    for (const auto& a : R.positive()) REQUIRE(R.reflect(a, a).c == (-a).c);
  }
}

TEST_CASE("simple reflections permute the roots up to sign") {
  for (const auto& spec : all_specs(6)) {
    RootSystem R = build_root_system(spec);
    for (const auto& beta : R.positive())
      for (int i = 1; i <= R.rank(); ++i) {
        Root ai{std::vector<int>(R.rank(), 0)};
        ai.c[i - 1] = 1;
        Root r = R.reflect(beta, ai);
        REQUIRE(R.is_root(r.c));
      }
  }
}

TEST_CASE("reflection is an involution on random pairs") {
  Rng rng(2024);
  for (const auto& spec : all_specs(6)) {
    RootSystem R = build_root_system(spec);
    const auto& pos = R.positive();
    for (int t = 0; t < 1000; ++t) {
      const Root& beta = pos[rng.uniform(0, static_cast<long>(pos.size()) - 1)];
      const Root& alpha = pos[rng.uniform(0, static_cast<long>(pos.size()) - 1)];
      Root once = R.reflect(beta, alpha);
      REQUIRE(R.is_root(once.c));
      REQUIRE(R.reflect(once, alpha).c == beta.c);
      // coefficient-wise formula
      int n = R.pairing(beta, alpha);
      for (int i = 0; i < R.rank(); ++i)
        REQUIRE(once.c[i] == beta.c[i] - n * alpha.c[i]);
    }
  }
}

TEST_CASE("length classes") {
  for (const auto& spec : all_specs(6)) {
    RootSystem R = build_root_system(spec);
    std::set<Rat> norms;
    for (const auto& a : R.positive()) norms.insert(R.norm2(a));
    REQUIRE(norms.size() <= 2);
    if (R.diagram().simply_laced()) REQUIRE(norms.size() == 1);
  }
  auto b3 = build_root_system({'B', 3});
  REQUIRE(b3.is_long(Root{{1, 0, 0}}));
  REQUIRE_FALSE(b3.is_long(Root{{0, 0, 1}}));
}

TEST_CASE("highest root is maximal and unique") {
  for (const auto& spec : all_specs(8)) {
    RootSystem R = build_root_system(spec);
    const Root& top = R.highest_root();
    for (int i = 1; i <= R.rank(); ++i) {
      std::vector<int> up = top.c;
      up[i - 1] += 1;
      REQUIRE_FALSE(R.is_root(up));
    }
  }
}

TEST_CASE("weyl orbits") {
  auto a2 = build_root_system({'A', 2});
  REQUIRE(a2.weyl_orbit(fundamental_weight(2, 1), {1, 2}).size() == 3);
  REQUIRE(a2.weyl_orbit(fundamental_weight(2, 1), {}).size() == 1);
  auto b3 = build_root_system({'B', 3});
  REQUIRE(b3.weyl_orbit(fundamental_weight(3, 3), {1, 2, 3}).size() == 8);
  REQUIRE_THROWS_AS(b3.weyl_orbit(fundamental_weight(3, 3), {1, 2, 3}, 4), GuardExceeded);
}

TEST_CASE("weyl dimension formula on adjoint representations") {
  for (const auto& spec : all_specs(6)) {
    RootSystem R = build_root_system(spec);
    Weight adj = R.root_to_weight(R.highest_root());
    REQUIRE(weyl_dimension(R, adj) ==
            Int(R.rank() + 2 * static_cast<long>(R.n_positive())));
  }
}

TEST_CASE("duals and induced subdiagrams") {
  REQUIRE(diagram_code(build_diagram({'B', 3}).dual()) == diagram_code(build_diagram({'C', 3})));
  REQUIRE(diagram_code(build_diagram({'F', 4}).dual()) == diagram_code(build_diagram({'F', 4})));
  std::vector<int> to_orig;
  auto sub = build_diagram({'E', 6}).induced({2, 3, 4, 5, 6}, &to_orig);
  REQUIRE(sub.rank() == 5);
  REQUIRE(sub.components().size() == 1);
  REQUIRE(to_orig == std::vector<int>{2, 3, 4, 5, 6});
}

TEST_CASE("marked diagram codes separate marks but respect symmetry") {
  auto e6 = build_diagram({'E', 6});
  REQUIRE(diagram_code(e6, {{1, 1}}) == diagram_code(e6, {{6, 1}}));  // diagram flip
  REQUIRE(diagram_code(e6, {{1, 1}}) != diagram_code(e6, {{2, 1}}));
  auto a3 = build_diagram({'A', 3});
  REQUIRE(diagram_code(a3, {{1, 1}}) == diagram_code(a3, {{3, 1}}));
  REQUIRE(marked_isomorphic(a3, {{1, 1}}, a3, {{3, 1}}));
  REQUIRE_FALSE(marked_isomorphic(a3, {{1, 1}}, a3, {{2, 1}}));
}
