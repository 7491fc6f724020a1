#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rhv/error.hpp"
#include "rhv/rational.hpp"

namespace rhv {

// ---------------------------------------------------------------------------
// Sparse homogeneous polynomials with exact rational coefficients.  Monomial
// order is graded lexicographic (degree first, then exponent vectors with
// x1 > x2 > ...); basis outputs are canonical reduced row echelon forms with
// respect to it.
// ---------------------------------------------------------------------------

using Monomial = std::vector<int>;

inline int mono_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

struct MonoGrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == nvars - 1) {
      cur[var] = rest;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, rest - e);
    }
    cur[var] = 0;
  };
  if (nvars == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), MonoGrlexGreater{});
  return out;
}

struct Poly {
  int nvars = 0;
  std::map<Monomial, Rat, MonoGrlexGreater> terms;

  Poly() = default;
  explicit Poly(int nv) : nvars(nv) {}

  static Poly monomial(int nv, const Monomial& m, const Rat& c = Rat(1)) {
    Poly p(nv);
    if (!is_zero(c)) p.terms[m] = c;
    return p;
  }
  static Poly variable(int nv, int i, const Rat& c = Rat(1)) {
    Monomial m(nv, 0);
    m[i] = 1;
    return monomial(nv, m, c);
  }

  bool zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : mono_degree(terms.begin()->first); }
  Rat coeff(const Monomial& m) const {
    auto it = terms.find(m);
    return it == terms.end() ? Rat(0) : it->second;
  }

  Poly& add_term(const Monomial& m, const Rat& c) {
    if (is_zero(c)) return *this;
    Rat& v = terms[m];
    v += c;
    if (is_zero(v)) terms.erase(m);
    return *this;
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, -c);
    return r;
  }
  Poly operator*(const Rat& c) const {
    Poly r(nvars);
    if (is_zero(c)) return r;
    for (const auto& [m, v] : terms) r.terms[m] = v * c;
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r(nvars);
    for (const auto& [m1, c1] : terms)
      for (const auto& [m2, c2] : o.terms) {
        Monomial m(nvars);
        for (int i = 0; i < nvars; ++i) m[i] = m1[i] + m2[i];
        r.add_term(m, c1 * c2);
      }
    return r;
  }

  Poly derivative(int i) const {
    Poly r(nvars);
    for (const auto& [m, c] : terms) {
      if (m[i] == 0) continue;
      Monomial d = m;
      d[i] -= 1;
      r.add_term(d, c * m[i]);
    }
    return r;
  }

  Rat eval(const std::vector<Rat>& x) const {
    Rat s = 0;
    for (const auto& [m, c] : terms) {
      Rat t = c;
      for (int i = 0; i < nvars; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += t;
    }
    return s;
  }

  std::string str(const std::string& var = "x") const {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms) {
      s += (first ? "" : " + ") + rat_str(c);
      for (int i = 0; i < nvars; ++i) {
        if (!m[i]) continue;
        s += "*" + var + std::to_string(i + 1);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
      }
      first = false;
    }
    return s;
  }
};

// Reduced row echelon form of a list of polynomials (rows) over monomial
// columns ordered graded-lex; canonical and deterministic.
inline std::vector<Poly> poly_rref(std::vector<Poly> rows) {
  std::map<Monomial, Poly, MonoGrlexGreater> pivots;  // leading monomial -> row
  for (auto& p : rows) {
    for (;;) {
      if (p.zero()) break;
      Monomial lead = p.terms.begin()->first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rat inv = Rat(1) / p.terms.begin()->second;
        p = p * inv;
        pivots[lead] = p;
        break;
      }
      p = p - it->second * p.terms.begin()->second;
    }
  }
  // back-substitute for full reduction
  std::vector<Monomial> leads;
  for (auto& [m, q] : pivots) leads.push_back(m);
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    for (auto& [m2, q2] : pivots) {
      if (m2 == it->first) continue;
      Rat c = q2.coeff(it->first);
      if (!is_zero(c)) q2 = q2 - it->second * c;
    }
  }
  std::vector<Poly> out;
  for (auto& [m, q] : pivots) out.push_back(q);
  return out;
}

// Remainder of p modulo the span of an rref basis; zero iff p is in the span.
inline Poly reduce_by(const std::vector<Poly>& rref_basis, Poly p) {
  bool progress = true;
  while (progress && !p.zero()) {
    progress = false;
    for (const auto& b : rref_basis) {
      if (b.zero()) continue;
      Rat c = p.coeff(b.terms.begin()->first);
      if (!is_zero(c)) {
        p = p - b * c;
        progress = true;
      }
    }
  }
  return p;
}

inline bool in_span(const std::vector<Poly>& rref_basis, const Poly& p) {
  return reduce_by(rref_basis, p).zero();
}

// A span of homogeneous polynomials of one degree, stored as a canonical
// linearly independent basis.
struct PolySystem {
  int nvars = 0;
  int degree = 0;
  std::vector<Poly> basis;

  PolySystem() = default;
  PolySystem(int nv, int deg) : nvars(nv), degree(deg) {}

  static PolySystem span(int nvars, int degree, const std::vector<Poly>& gens) {
    PolySystem s(nvars, degree);
    for (const auto& g : gens) {
      if (g.zero()) continue;
      for (const auto& [m, c] : g.terms)
        if (mono_degree(m) != degree) throw Precondition("polysystem: inhomogeneous generator");
    }
    s.basis = poly_rref(gens);
    return s;
  }

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Poly& p) const { return in_span(basis, p); }
};

// ---------------------------------------------------------------------------
// Sparse exact linear algebra over column-indexed rational rows (used by the
// prolongation solver).
// ---------------------------------------------------------------------------

using SparseRow = std::map<int, Rat>;

struct SparseEchelon {
  std::map<int, SparseRow> pivots;  // pivot column -> normalized row

  void insert(SparseRow row) {
    for (;;) {
      while (!row.empty() && is_zero(row.begin()->second)) row.erase(row.begin());
      if (row.empty()) return;
      int col = row.begin()->first;
      auto it = pivots.find(col);
      if (it == pivots.end()) {
        Rat inv = Rat(1) / row.begin()->second;
        for (auto& [c, v] : row) v *= inv;
        pivots.emplace(col, std::move(row));
        return;
      }
      Rat f = row.begin()->second;
      for (const auto& [c, v] : it->second) {
        Rat& t = row[c];
        t -= f * v;
        if (is_zero(t)) row.erase(c);
      }
    }
  }

  // kernel basis over columns 0..ncols-1
  std::vector<std::vector<Rat>> kernel(int ncols) const {
    std::vector<bool> is_pivot(ncols, false);
    for (const auto& [c, r] : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> out;
    for (int f = 0; f < ncols; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Rat> x(ncols, Rat(0));
      x[f] = 1;
      for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        Rat s = 0;
        for (const auto& [c, v] : it->second)
          if (c != it->first && !is_zero(x[c])) s += v * x[c];
        x[it->first] = -s;
      }
      out.push_back(std::move(x));
    }
    return out;
  }
};

}  // namespace rhv
