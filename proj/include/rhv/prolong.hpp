#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhv/poly.hpp"
#include "rhv/reps.hpp"
#include "rhv/rng.hpp"

namespace rhv {

// ---------------------------------------------------------------------------
// Prolongation calculus.  A^(1) = {P in S^{d+1}V* : every contraction lies in
// span A}; computed as the nullspace of the contraction-membership system.
// The solver parameterizes each partial derivative in the basis of A, which
// keeps the linear system small and sparse.
// ---------------------------------------------------------------------------

inline PolySystem jacobian(const PolySystem& A) {
  if (A.degree < 1) throw Precondition("jacobian: degree must be >= 1");
  std::vector<Poly> gens;
  for (const auto& p : A.basis)
    for (int i = 0; i < A.nvars; ++i) gens.push_back(p.derivative(i));
  return PolySystem::span(A.nvars, A.degree - 1, gens);
}

namespace detail {

inline PolySystem prolong_step(const PolySystem& A) {
  const int n = A.nvars, d = A.degree, m = A.dim();
  PolySystem out(n, d + 1);
  if (m == 0) return out;

  auto mons = monomials_of_degree(n, d + 1);
  // unknowns t[i][j]: the coordinates of dP/dx_i in the basis of A
  auto tvar = [&](int i, int j) { return i * m + j; };

  SparseEchelon ech;
  for (const auto& mm : mons) {
    int i0 = -1;
    for (int i = 0; i < n; ++i) {
      if (mm[i] == 0) continue;
      if (i0 < 0) {
        i0 = i;
        continue;
      }
      // c_mm agrees whether computed via x_{i0} or x_i
      SparseRow row;
      Monomial mu0 = mm, mui = mm;
      mu0[i0] -= 1;
      mui[i] -= 1;
      for (int j = 0; j < m; ++j) {
        Rat c0 = A.basis[j].coeff(mu0);
        if (!is_zero(c0)) row[tvar(i0, j)] += c0 / mm[i0];
        Rat ci = A.basis[j].coeff(mui);
        if (!is_zero(ci)) row[tvar(i, j)] -= ci / mm[i];
      }
      for (auto it = row.begin(); it != row.end();) {
        if (is_zero(it->second))
          it = row.erase(it);
        else
          ++it;
      }
      if (!row.empty()) ech.insert(std::move(row));
    }
  }

  std::vector<Poly> gens;
  for (const auto& t : ech.kernel(n * m)) {
    Poly P(n);
    for (const auto& mm : mons) {
      int i0 = -1;
      for (int i = 0; i < n && i0 < 0; ++i)
        if (mm[i] > 0) i0 = i;
      Monomial mu = mm;
      mu[i0] -= 1;
      Rat c = 0;
      for (int j = 0; j < m; ++j) {
        if (is_zero(t[tvar(i0, j)])) continue;
        c += t[tvar(i0, j)] * A.basis[j].coeff(mu);
      }
      if (!is_zero(c)) P.add_term(mm, c / mm[i0]);
    }
    if (!P.zero()) gens.push_back(std::move(P));
  }
  return PolySystem::span(n, d + 1, gens);
}

inline Int sym_dim(int nvars, int deg) { return binomial(nvars - 1 + deg, deg); }

}  // namespace detail

inline PolySystem prolongation(const PolySystem& A, int l, long long size_guard = 2000000) {
  if (l < 0) throw Precondition("prolongation: l must be >= 0");
  if (detail::sym_dim(A.nvars, A.degree + l) > Int(static_cast<long>(size_guard)))
    throw GuardExceeded("prolongation target space exceeds guard");
  PolySystem cur = A;
  for (int s = 0; s < l; ++s) cur = detail::prolong_step(cur);
  return cur;
}

// ---------------------------------------------------------------------------
// Second-fundamental-form systems for the minuscule families, in the matrix
// chart on T.
// ---------------------------------------------------------------------------

struct FF2Family {
  enum Kind { Grass, Lagrange, Spinor, Quadric } kind = Grass;
  int k = 0, n = 0;  // Grass: G(k,n); Lagrange: k=n of GLag(n,2n); Spinor: k=n of S_n; Quadric: k=dim

  std::string str() const {
    switch (kind) {
      case Grass: return "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
      case Lagrange: return "GLag(" + std::to_string(k) + "," + std::to_string(2 * k) + ")";
      case Spinor: return "S" + std::to_string(k);
      case Quadric: return "Q" + std::to_string(k);
    }
    return "?";
  }

  ParabolicSpec parabolic() const {
    switch (kind) {
      case Grass: return {{'A', n - 1}, {k}};
      case Lagrange: return {{'C', k}, {k}};
      case Spinor: return {{'D', k}, {k}};
      case Quadric: {
        if (k % 2 == 0) return {{'D', (k + 2) / 2}, {1}};
        return {{'B', (k + 1) / 2}, {1}};
      }
    }
    throw Precondition("bad family");
  }
};

// e.g. "G(2,5)", "GLag(3,6)", "S6", "Q4"
inline FF2Family parse_ff2_family(const std::string& s) {
  FF2Family f;
  auto num = [&](std::size_t& i) {
    int v = 0;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected number in family '" + s + "'", i);
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
    return v;
  };
  if (s.rfind("G(", 0) == 0) {
    f.kind = FF2Family::Grass;
    std::size_t i = 2;
    f.k = num(i);
    if (i >= s.size() || s[i] != ',') throw ParseError("expected ',' in '" + s + "'", i);
    ++i;
    f.n = num(i);
    if (i >= s.size() || s[i] != ')') throw ParseError("expected ')' in '" + s + "'", i);
    if (f.k < 1 || f.k >= f.n) throw ParseError("bad Grassmannian '" + s + "'");
    return f;
  }
  if (s.rfind("GLag(", 0) == 0) {
    f.kind = FF2Family::Lagrange;
    std::size_t i = 5;
    f.k = num(i);
    if (i >= s.size() || s[i] != ',') throw ParseError("expected ',' in '" + s + "'", i);
    ++i;
    int n2 = num(i);
    if (n2 != 2 * f.k) throw ParseError("GLag(n,2n) requires second argument 2n");
    return f;
  }
  if (s.size() >= 2 && s[0] == 'S') {
    f.kind = FF2Family::Spinor;
    std::size_t i = 1;
    f.k = num(i);
    if (f.k < 4) throw ParseError("spinor family needs n >= 4");
    return f;
  }
  if (s.size() >= 2 && s[0] == 'Q') {
    f.kind = FF2Family::Quadric;
    std::size_t i = 1;
    f.k = num(i);
    if (f.k < 3) throw ParseError("quadric family needs dimension >= 3");
    return f;
  }
  throw ParseError("unknown family '" + s + "'");
}

inline PolySystem ff2_system(const FF2Family& f) {
  switch (f.kind) {
    case FF2Family::Grass: {
      const int k = f.k, q = f.n - f.k, nv = k * q;
      auto var = [&](int a, int b) { return Poly::variable(nv, a * q + b); };
      std::vector<Poly> gens;
      for (int a = 0; a < k; ++a)
        for (int c = a + 1; c < k; ++c)
          for (int b = 0; b < q; ++b)
            for (int d = b + 1; d < q; ++d)
              gens.push_back(var(a, b) * var(c, d) - var(a, d) * var(c, b));
      return PolySystem::span(nv, 2, gens);
    }
    case FF2Family::Lagrange: {
      const int n = f.k, nv = n * (n + 1) / 2;
      std::vector<std::vector<int>> id(n, std::vector<int>(n));
      int t = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
          id[a][b] = id[b][a] = t++;
        }
      auto var = [&](int a, int b) { return Poly::variable(nv, id[a][b]); };
      std::vector<Poly> gens;
      for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
          for (int b = 0; b < n; ++b)
            for (int d = b + 1; d < n; ++d)
              gens.push_back(var(a, b) * var(c, d) - var(a, d) * var(c, b));
      return PolySystem::span(nv, 2, gens);
    }
    case FF2Family::Spinor: {
      const int n = f.k, nv = n * (n - 1) / 2;
      std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
      int t = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) id[a][b] = t++;
      auto var = [&](int a, int b) { return Poly::variable(nv, id[a][b]); };
      std::vector<Poly> gens;
      for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj < n; ++jj)
          for (int kk = jj + 1; kk < n; ++kk)
            for (int l = kk + 1; l < n; ++l)
              gens.push_back(var(i, jj) * var(kk, l) - var(i, kk) * var(jj, l) +
                             var(i, l) * var(jj, kk));
      return PolySystem::span(nv, 2, gens);
    }
    case FF2Family::Quadric: {
      const int nv = f.k;
      Poly q(nv);
      for (int i = 0; i < nv; ++i) q = q + Poly::variable(nv, i) * Poly::variable(nv, i);
      return PolySystem::span(nv, 2, {q});
    }
  }
  throw Precondition("bad family");
}

// ---------------------------------------------------------------------------
// Strict prolongation: dim A^(k-1) must match dim N_{k+1} from the tables
// (and 0 past the length).
// ---------------------------------------------------------------------------

struct ProlongationRow {
  int k = 0;           // order: A^(k-1) vs N_{k+1}
  int computed = 0;    // dim A^(k-1)
  Int expected;        // dim N_{k+1} from the table (0 past length)
  bool match = false;
};

struct ProlongationReport {
  std::string family;
  std::vector<ProlongationRow> rows;
  bool all_match = true;
};

inline ProlongationReport strict_prolongation_report(const FF2Family& f, int kmax,
                                                     long long size_guard = 2000000) {
  ProlongationReport rep;
  rep.family = f.str();
  NormalSpaces tab = normal_spaces(f.parabolic());
  PolySystem cur = ff2_system(f);
  for (int k = 2; k <= kmax; ++k) {
    if (k > 2) cur = prolongation(cur, 1, size_guard);
    ProlongationRow row;
    row.k = k;
    row.computed = cur.dim();
    row.expected = 0;
    for (const auto& e : tab.entries)
      if (e.j == k) row.expected = e.dim;
    row.match = (Int(row.computed) == row.expected);
    rep.all_match = rep.all_match && row.match;
    rep.rows.push_back(row);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Secant-variety sampling: sums of k points of Base(A) must satisfy all of
// A^(k-1); a generic (k+1)-point sum should violate it.
// ---------------------------------------------------------------------------

struct BaseParam {
  enum Kind { SegreMatrix, VeroneseSym } kind = SegreMatrix;
  int a = 0, b = 0;  // SegreMatrix: a x b rank ones; VeroneseSym: a x a symmetric rank ones

  int nvars() const { return kind == SegreMatrix ? a * b : a * (a + 1) / 2; }

  std::vector<Rat> sample(Rng& rng) const {
    if (kind == SegreMatrix) {
      auto u = rng.nonzero_vector(a), v = rng.nonzero_vector(b);
      std::vector<Rat> x(a * b);
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) x[i * b + j] = u[i] * v[j];
      return x;
    }
    auto l = rng.nonzero_vector(a);
    std::vector<Rat> x(a * (a + 1) / 2);
    int t = 0;
    for (int i = 0; i < a; ++i)
      for (int j = i; j < a; ++j) x[t++] = l[i] * l[j];
    return x;
  }
};

struct SecantReport {
  int trials = 0;
  int passes = 0;
  bool witness_found = false;  // a generic deeper point violating the system
  bool ok() const { return passes == trials && witness_found; }
};

inline SecantReport secant_membership_check(const BaseParam& base, int k, const PolySystem& A,
                                            int trials, std::uint64_t seed = Rng::kDefaultSeed,
                                            long long size_guard = 2000000) {
  if (base.nvars() != A.nvars) throw Precondition("parameterization/system variable mismatch");
  SecantReport rep;
  rep.trials = trials;
  PolySystem prol = prolongation(A, k - 1, size_guard);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rat> x(A.nvars, Rat(0));
    for (int s = 0; s < k; ++s) {
      auto p = base.sample(rng);
      for (int i = 0; i < A.nvars; ++i) x[i] += p[i];
    }
    bool pass = true;
    for (const auto& q : prol.basis)
      if (!is_zero(q.eval(x))) pass = false;
    if (pass) ++rep.passes;
  }
  if (prol.dim() > 0) {
    for (int attempt = 0; attempt < 50 && !rep.witness_found; ++attempt) {
      std::vector<Rat> x(A.nvars, Rat(0));
      for (int s = 0; s < k + 1; ++s) {
        auto p = base.sample(rng);
        for (int i = 0; i < A.nvars; ++i) x[i] += p[i];
      }
      for (const auto& q : prol.basis)
        if (!is_zero(q.eval(x))) rep.witness_found = true;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dimension probes: exact rank of the differential of a rational
// parameterization at a rational point.
// ---------------------------------------------------------------------------

struct ParamMap {
  int nparams = 0;
  std::vector<Poly> coords;  // polynomials in the parameters
};

struct ProbeResult {
  int rank = 0;            // local dimension of the image cone
  int projective_dim = 0;  // rank - 1
  bool singular_warning = false;
};

inline ProbeResult param_dimension_probe(const ParamMap& F, const std::vector<Rat>& point,
                                         std::uint64_t seed = Rng::kDefaultSeed) {
  if (static_cast<int>(point.size()) != F.nparams) throw Precondition("probe: bad point size");
  auto jac_rank = [&](const std::vector<Rat>& at) {
    Matrix<Rat> m;
    for (const auto& f : F.coords) {
      std::vector<Rat> row(F.nparams);
      for (int j = 0; j < F.nparams; ++j) row[j] = f.derivative(j).eval(at);
      m.push_back(std::move(row));
    }
    return rank(std::move(m));
  };
  ProbeResult res;
  res.rank = jac_rank(point);
  res.projective_dim = res.rank - 1;
  Rng rng(seed);
  int r2 = jac_rank(rng.rational_vector(F.nparams));
  if (r2 > res.rank) res.singular_warning = true;
  return res;
}

// Built-in parameterizations for the base-locus probes.

// Base|FF2| of G_w(k,2n): {e (x) u  (+)  e^2}, e in C^k, u in C^{2(n-k)}.
inline ParamMap symplectic_base_param(int n, int k) {
  int uu = 2 * (n - k);
  ParamMap F;
  F.nparams = k + uu;  // e then u
  int nv = F.nparams;
  for (int a = 0; a < k; ++a)
    for (int j = 0; j < uu; ++j)
      F.coords.push_back(Poly::variable(nv, a) * Poly::variable(nv, k + j));
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b)
      F.coords.push_back(Poly::variable(nv, a) * Poly::variable(nv, b));
  return F;
}

// Base|FF2| of F4/P3: {e* (x) u + e (x) u^2, <e*,e> = 0} with e* = a x e.
inline ParamMap f4p3_base_param() {
  ParamMap F;
  F.nparams = 8;  // a(3), e(3), u(2)
  const int nv = 8;
  auto a = [&](int i) { return Poly::variable(nv, i); };
  auto e = [&](int i) { return Poly::variable(nv, 3 + i); };
  auto u = [&](int i) { return Poly::variable(nv, 6 + i); };
  Poly estar[3] = {a(1) * e(2) - a(2) * e(1), a(2) * e(0) - a(0) * e(2),
                   a(0) * e(1) - a(1) * e(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) F.coords.push_back(estar[i] * u(j));
  for (int i = 0; i < 3; ++i) {
    F.coords.push_back(e(i) * u(0) * u(0));
    F.coords.push_back(e(i) * u(0) * u(1));
    F.coords.push_back(e(i) * u(1) * u(1));
  }
  return F;
}

// sigma_2 of Seg(P^{a-1} x P^{b-1}): sums of two rank-one a x b matrices.
inline ParamMap segre_secant_param(int a, int b) {
  ParamMap F;
  F.nparams = 2 * (a + b);
  const int nv = F.nparams;
  auto u1 = [&](int i) { return Poly::variable(nv, i); };
  auto v1 = [&](int i) { return Poly::variable(nv, a + i); };
  auto u2 = [&](int i) { return Poly::variable(nv, a + b + i); };
  auto v2 = [&](int i) { return Poly::variable(nv, 2 * a + b + i); };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) F.coords.push_back(u1(i) * v1(j) + u2(i) * v2(j));
  return F;
}

// JSON serialization of a PolySystem (exponent vectors, "num/den" strings).
inline std::string polysystem_json(const PolySystem& A) {
  std::string s = "{\"nvars\":" + std::to_string(A.nvars) +
                  ",\"degree\":" + std::to_string(A.degree) + ",\"basis\":[";
  for (std::size_t b = 0; b < A.basis.size(); ++b) {
    if (b) s += ",";
    s += "[";
    bool first = true;
    for (const auto& [m, c] : A.basis[b].terms) {
      if (!first) s += ",";
      s += "{\"exp\":[";
      for (int i = 0; i < A.nvars; ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
      }
      s += "],\"coef\":\"" + rat_str(c) + "\"}";
      first = false;
    }
    s += "]";
  }
  return s + "]}";
}

}  // namespace rhv
