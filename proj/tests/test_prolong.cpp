#include <catch2/catch.hpp>

#include "rhv/prolong.hpp"

using namespace rhv;

namespace {

// Independent brute-force oracle: one prolongation step as a dense nullspace
// over all monomials of degree d+1.  Slow but straight from the definition;
// the library's solver must agree with it.
PolySystem oracle_prolong_step(const PolySystem& A) {
  const int n = A.nvars, d = A.degree;
  auto up = monomials_of_degree(n, d + 1);
  auto dn = monomials_of_degree(n, d);
  std::map<Monomial, int> up_idx;
  for (std::size_t t = 0; t < up.size(); ++t) up_idx[up[t]] = static_cast<int>(t);

  std::set<Monomial> pivot_set;
  for (const auto& b : A.basis) pivot_set.insert(b.terms.begin()->first);

  Matrix<Rat> rows;
  for (int i = 0; i < n; ++i) {
    for (const auto& mu : dn) {
      if (pivot_set.count(mu)) continue;
      std::vector<Rat> row(up.size(), Rat(0));
      Monomial m = mu;
      m[i] += 1;
      row[up_idx[m]] += Rat(mu[i] + 1);
      for (const auto& b : A.basis) {
        const Monomial& p = b.terms.begin()->first;
        Rat a_mu = b.coeff(mu);
        if (is_zero(a_mu)) continue;
        Monomial pm = p;
        pm[i] += 1;
        row[up_idx[pm]] -= Rat(p[i] + 1) * a_mu;
      }
      bool nonzero = false;
      for (const auto& v : row) nonzero |= !is_zero(v);
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  auto ker = kernel_basis(std::move(rows), static_cast<int>(up.size()));
  std::vector<Poly> gens;
  for (const auto& k : ker) {
    Poly p(n);
    for (std::size_t t = 0; t < up.size(); ++t) p.add_term(up[t], k[t]);
    gens.push_back(std::move(p));
  }
  return PolySystem::span(n, d + 1, gens);
}

bool same_span(const PolySystem& a, const PolySystem& b) {
  if (a.dim() != b.dim()) return false;
  for (const auto& p : a.basis)
    if (!b.contains(p)) return false;
  for (const auto& p : b.basis)
    if (!a.contains(p)) return false;
  return true;
}

// all k x k minors of a generic rows x cols matrix, variables flattened row-major
PolySystem minors_system(int rows, int cols, int k) {
  const int nv = rows * cols;
  auto var = [&](int a, int b) { return Poly::variable(nv, a * cols + b); };
  std::vector<int> rsel(k), csel(k);
  std::vector<Poly> gens;
  auto det_of = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    Poly det(nv);
    do {
      int inv = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (perm[i] > perm[j]) ++inv;
      Poly term = Poly::monomial(nv, Monomial(nv, 0), Rat(inv % 2 ? -1 : 1));
      for (int i = 0; i < k; ++i) term = term * var(rs[i], cs[perm[i]]);
      det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
  };
  auto choose = [&](auto&& self, std::vector<int>& sel, int from, int depth, int total,
                    auto&& cb) -> void {
    if (depth == k) {
      cb();
      return;
    }
    for (int v = from; v < total; ++v) {
      sel[depth] = v;
      self(self, sel, v + 1, depth + 1, total, cb);
    }
  };
  choose(choose, rsel, 0, 0, rows, [&] {
    choose(choose, csel, 0, 0, cols, [&] { gens.push_back(det_of(rsel, csel)); });
  });
  return PolySystem::span(nv, k, gens);
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = x * x - y * y;
  REQUIRE(p.degree() == 2);
  REQUIRE(p.eval({Rat(3), Rat(2)}) == Rat(5));
  REQUIRE(p.derivative(0).eval({Rat(3), Rat(2)}) == Rat(6));
  // graded-lex leading term: x^2 beats x*y beats y^2
  REQUIRE(p.terms.begin()->first == Monomial{2, 0});
  auto basis = poly_rref({p, x * x, y * y});
  REQUIRE(basis.size() == 2);
  REQUIRE(in_span(basis, x * x - y * y));
  REQUIRE_FALSE(in_span(basis, x * y));
}

TEST_CASE("prolongation agrees with the brute-force oracle") {
  SECTION("2x2 minors of a 2x3 matrix") {
    auto A = minors_system(2, 3, 2);
    REQUIRE(A.dim() == 3);
    auto fast = prolongation(A, 1);
    auto slow = oracle_prolong_step(A);
    REQUIRE(same_span(fast, slow));
    REQUIRE(fast.dim() == 0);
  }
  SECTION("2x2 minors of a 3x3 matrix prolong to the determinant") {
    auto A = minors_system(3, 3, 2);
    REQUIRE(A.dim() == 9);
    auto fast = prolongation(A, 1);
    auto slow = oracle_prolong_step(A);
    REQUIRE(same_span(fast, slow));
    REQUIRE(fast.dim() == 1);
    auto det3 = minors_system(3, 3, 3);
    REQUIRE(same_span(fast, det3));
  }
  SECTION("a nondegenerate quadric in >= 3 variables has no prolongation") {
    auto A = ff2_system(parse_ff2_family("Q4"));
    REQUIRE(same_span(prolongation(A, 1), oracle_prolong_step(A)));
    REQUIRE(prolongation(A, 1).dim() == 0);
  }
  SECTION("all quadrics prolong to all cubics") {
    const int n = 3;
    std::vector<Poly> gens;
    for (const auto& m : monomials_of_degree(n, 2)) gens.push_back(Poly::monomial(n, m));
    auto A = PolySystem::span(n, 2, gens);
    auto P = prolongation(A, 1);
    REQUIRE(P.dim() == 10);  // dim S^3 C^3
    REQUIRE(same_span(P, oracle_prolong_step(A)));
  }
}

TEST_CASE("jacobians") {
  auto det3 = minors_system(3, 3, 3);
  auto jac = jacobian(det3);
  REQUIRE(jac.dim() == 9);
  REQUIRE(same_span(jac, minors_system(3, 3, 2)));  // the cofactor quadrics
  auto q = ff2_system(parse_ff2_family("Q4"));
  auto jq = jacobian(q);
  REQUIRE(jq.dim() == 4);  // all linear forms
  PolySystem zero(5, 3);
  REQUIRE(jacobian(zero).dim() == 0);
}

TEST_CASE("duality: P in A^(1) iff Jac(<P>) inside A") {
  auto A = minors_system(3, 3, 2);
  auto A1 = prolongation(A, 1);
  for (const auto& p : A1.basis) {
    auto jp = jacobian(PolySystem::span(A.nvars, 3, {p}));
    for (const auto& d : jp.basis) REQUIRE(A.contains(d));
  }
}

TEST_CASE("ff2 systems have the table dimensions") {
  REQUIRE(ff2_system(parse_ff2_family("G(2,5)")).dim() == 3);
  REQUIRE(ff2_system(parse_ff2_family("G(3,6)")).dim() == 9);
  REQUIRE(ff2_system(parse_ff2_family("GLag(3,6)")).dim() == 6);
  REQUIRE(ff2_system(parse_ff2_family("S6")).dim() == 15);
  REQUIRE(ff2_system(parse_ff2_family("Q4")).dim() == 1);
  REQUIRE_THROWS_AS(parse_ff2_family("H(2,5)"), ParseError);
}

TEST_CASE("strict prolongation matches the normal-space tables") {
  for (const char* fam : {"G(2,5)", "G(3,6)", "GLag(3,6)", "S6", "Q4"}) {
    auto rep = strict_prolongation_report(parse_ff2_family(fam), 4);
    INFO(fam);
    REQUIRE(rep.all_match);
  }
}

TEST_CASE("composition: A^(2) computed by iteration has second partials in A") {
  auto A = ff2_system(parse_ff2_family("GLag(3,6)"));
  REQUIRE(prolongation(A, 2).dim() == 0);
  auto B = minors_system(3, 4, 2);
  auto B2 = prolongation(B, 2);
  for (const auto& p : B2.basis)
    for (int i = 0; i < B.nvars; ++i)
      for (int j = 0; j < B.nvars; ++j) {
        Poly dd = p.derivative(i).derivative(j);
        if (!dd.zero()) REQUIRE(B.contains(dd));
      }
  // iterated fast solver equals the oracle composed with itself
  auto once = oracle_prolong_step(B);
  auto twice = oracle_prolong_step(once);
  REQUIRE(same_span(B2, twice));
}

TEST_CASE("monotonicity: a subsystem's prolongation sits inside the full one") {
  auto A = minors_system(3, 3, 2);
  std::vector<Poly> part(A.basis.begin(), A.basis.begin() + 5);
  auto Asub = PolySystem::span(A.nvars, 2, part);
  auto p_sub = prolongation(Asub, 1);
  auto p_full = prolongation(A, 1);
  for (const auto& q : p_sub.basis) REQUIRE(p_full.contains(q));
}

TEST_CASE("secant lemma identity: prolongations of Segre minors are higher minors") {
  SECTION("3x3") {
    auto A = minors_system(3, 3, 2);
    REQUIRE(same_span(prolongation(A, 1), minors_system(3, 3, 3)));
    REQUIRE(prolongation(A, 2).dim() == 0);
  }
  SECTION("3x4") {
    auto A = minors_system(3, 4, 2);
    REQUIRE(same_span(prolongation(A, 1), minors_system(3, 4, 3)));
    REQUIRE(prolongation(A, 2).dim() == 0);
  }
  SECTION("4x4") {
    auto A = minors_system(4, 4, 2);
    auto A1 = prolongation(A, 1);
    REQUIRE(same_span(A1, minors_system(4, 4, 3)));
    auto A2 = prolongation(A1, 1);
    REQUIRE(same_span(A2, minors_system(4, 4, 4)));
  }
}

TEST_CASE("secant membership sampling") {
  auto A9 = ff2_system(parse_ff2_family("G(3,6)"));
  BaseParam segre{BaseParam::SegreMatrix, 3, 3};
  SECTION("k=1 reduces to base-locus membership") {
    auto rep = secant_membership_check(segre, 1, A9, 20);
    REQUIRE(rep.passes == 20);
    REQUIRE(rep.witness_found);  // a sum of two rank ones violates some minor
  }
  SECTION("k=2 on the determinant") {
    auto rep = secant_membership_check(segre, 2, A9, 100);
    REQUIRE(rep.passes == 100);
    REQUIRE(rep.witness_found);
  }
  SECTION("symmetric case") {
    auto A6 = ff2_system(parse_ff2_family("GLag(3,6)"));
    BaseParam ver{BaseParam::VeroneseSym, 3, 0};
    auto rep = secant_membership_check(ver, 2, A6, 100);
    REQUIRE(rep.passes == 100);
    REQUIRE(rep.witness_found);
  }
  SECTION("determinism under a fixed seed") {
    auto r1 = secant_membership_check(segre, 2, A9, 10, 777);
    auto r2 = secant_membership_check(segre, 2, A9, 10, 777);
    REQUIRE(r1.passes == r2.passes);
    REQUIRE(r1.witness_found == r2.witness_found);
  }
}

TEST_CASE("dimension probes") {
  Rng rng(31);
  SECTION("symplectic base locus, n=3 k=2: differential rank 4") {
    auto F = symplectic_base_param(3, 2);
    auto res = param_dimension_probe(F, rng.rational_vector(F.nparams));
    REQUIRE(res.rank == 4);
    REQUIRE(res.projective_dim == 3);
    REQUIRE_FALSE(res.singular_warning);
  }
  SECTION("F4/P3 base locus: projective dimension 5") {
    auto F = f4p3_base_param();
    auto res = param_dimension_probe(F, rng.rational_vector(F.nparams));
    REQUIRE(res.projective_dim == 5);
  }
  SECTION("sigma_2 of Seg(P2 x P2): projective dimension 7") {
    auto F = segre_secant_param(3, 3);
    auto res = param_dimension_probe(F, rng.rational_vector(F.nparams));
    REQUIRE(res.projective_dim == 7);
  }
  SECTION("singular point raises the warning") {
    auto F = segre_secant_param(3, 3);
    auto res = param_dimension_probe(F, std::vector<Rat>(F.nparams, Rat(0)));
    REQUIRE(res.rank == 0);
    REQUIRE(res.singular_warning);
  }
}

TEST_CASE("guards and serialization") {
  auto A = minors_system(3, 3, 2);
  REQUIRE_THROWS_AS(prolongation(A, 3, 100), GuardExceeded);
  auto js = polysystem_json(prolongation(A, 1));
  REQUIRE(js.find("\"nvars\":9") != std::string::npos);
  REQUIRE(js.find("\"coef\"") != std::string::npos);
}
