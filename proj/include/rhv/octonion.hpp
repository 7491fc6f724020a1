#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rhv/error.hpp"
#include "rhv/linalg.hpp"
#include "rhv/rational.hpp"
#include "rhv/rng.hpp"

namespace rhv {

// ---------------------------------------------------------------------------
// Complex rationals: the scalar field of the complexified octonions.
// ---------------------------------------------------------------------------

struct CRat {
  Rat re, im;

  CRat() : re(0), im(0) {}
  CRat(int r) : re(r), im(0) {}
  CRat(const Rat& r) : re(r), im(0) {}
  CRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  bool operator==(const CRat& o) const { return re == o.re && im == o.im; }
  bool zero() const { return is_zero(re) && is_zero(im); }

  CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
  CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
  CRat operator-() const { return {-re, -im}; }
  CRat operator*(const CRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  CRat conj() const { return {re, -im}; }
  CRat operator/(const CRat& o) const {
    Rat n = o.re * o.re + o.im * o.im;
    if (is_zero(n)) throw Error("complex division by zero");
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  CRat& operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  std::string str() const {
    if (is_zero(im)) return rat_str(re);
    return rat_str(re) + (sgn(im) >= 0 ? "+" : "") + rat_str(im) + "i";
  }
};

inline CRat crat_i() { return CRat(Rat(0), Rat(1)); }

// ---------------------------------------------------------------------------
// Complexified octonions over the basis 1, eps_1..eps_7.  The multiplication
// table is fixed once and for all by Cayley-Dickson doubling of the
// quaternions: elements are pairs (a,b) of quaternions with
//   (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)),
// and eps_1..eps_3 = (i,0),(j,0),(k,0), eps_4..eps_7 = (0,1),(0,i),(0,j),(0,k).
// ---------------------------------------------------------------------------

namespace detail {

struct OctTable {
  int idx[8][8];
  int sgn[8][8];
};

inline const OctTable& oct_table() {
  static const OctTable table = [] {
    // quaternion units 0:1, 1:i, 2:j, 3:k
    int qidx[4][4], qsgn[4][4];
    auto set = [&](int a, int b, int c, int s) {
      qidx[a][b] = c;
      qsgn[a][b] = s;
    };
    for (int a = 0; a < 4; ++a) {
      set(0, a, a, 1);
      set(a, 0, a, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    set(3, 3, 0, -1);
    set(1, 2, 3, 1);
    set(2, 1, 3, -1);
    set(2, 3, 1, 1);
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);
    set(1, 3, 2, -1);
    auto qconj = [&](int a) { return a == 0 ? 1 : -1; };  // sign of conjugation

    OctTable t{};
    for (int g = 0; g < 8; ++g)
      for (int h = 0; h < 8; ++h) {
        int q1 = g & 3, s1 = g >> 2;
        int q2 = h & 3, s2 = h >> 2;
        int q, s, half;
        if (s1 == 0 && s2 == 0) {  // (a,0)(c,0) = (ac, 0)
          q = qidx[q1][q2];
          s = qsgn[q1][q2];
          half = 0;
        } else if (s1 == 0 && s2 == 1) {  // (a,0)(0,d) = (0, da)
          q = qidx[q2][q1];
          s = qsgn[q2][q1];
          half = 1;
        } else if (s1 == 1 && s2 == 0) {  // (0,b)(c,0) = (0, b conj(c))
          q = qidx[q1][q2];
          s = qsgn[q1][q2] * qconj(q2);
          half = 1;
        } else {  // (0,b)(0,d) = (-conj(d) b, 0)
          q = qidx[q2][q1];
          s = -qsgn[q2][q1] * qconj(q2);
          half = 0;
        }
        t.idx[g][h] = q + 4 * half;
        t.sgn[g][h] = s;
      }
    return t;
  }();
  return table;
}

}  // namespace detail

struct Octonion {
  std::array<CRat, 8> c{};

  Octonion() = default;
  static Octonion one() {
    Octonion x;
    x.c[0] = CRat(1);
    return x;
  }
  static Octonion unit(int k) {
    Octonion x;
    x.c[k] = CRat(1);
    return x;
  }
  static Octonion scalar(const CRat& s) {
    Octonion x;
    x.c[0] = s;
    return x;
  }

  bool zero() const {
    for (const auto& v : c)
      if (!v.zero()) return false;
    return true;
  }
  bool operator==(const Octonion& o) const { return c == o.c; }

  Octonion operator+(const Octonion& o) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = c[k] + o.c[k];
    return r;
  }
  Octonion operator-(const Octonion& o) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = c[k] - o.c[k];
    return r;
  }
  Octonion operator-() const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = -c[k];
    return r;
  }
  Octonion operator*(const CRat& s) const {
    Octonion r;
    for (int k = 0; k < 8; ++k) r.c[k] = c[k] * s;
    return r;
  }

  Octonion conj() const {
    Octonion r = *this;
    for (int k = 1; k < 8; ++k) r.c[k] = -r.c[k];
    return r;
  }
  CRat real() const { return c[0]; }
  bool imaginary() const { return c[0].zero(); }
  Octonion imaginary_part() const {
    Octonion r = *this;
    r.c[0] = CRat();
    return r;
  }

  // N(x) = x conj(x); a scalar because the basis is orthogonal for it
  CRat norm() const {
    CRat n;
    for (int k = 0; k < 8; ++k) n += c[k] * c[k];
    return n;
  }
};

inline Octonion oct_mul(const Octonion& x, const Octonion& y) {
  const auto& t = detail::oct_table();
  Octonion r;
  for (int g = 0; g < 8; ++g) {
    if (x.c[g].zero()) continue;
    for (int h = 0; h < 8; ++h) {
      if (y.c[h].zero()) continue;
      CRat v = x.c[g] * y.c[h];
      if (t.sgn[g][h] < 0) v = -v;
      r.c[t.idx[g][h]] += v;
    }
  }
  return r;
}

inline Octonion operator*(const Octonion& x, const Octonion& y) { return oct_mul(x, y); }

// ---------------------------------------------------------------------------
// G2/P1, octonionically: the null cone in P(Im O).
// ---------------------------------------------------------------------------

inline bool g2p1_membership(const Octonion& u) {
  if (!u.imaginary()) throw Precondition("g2p1: element is not imaginary");
  return u.norm().zero();
}

// kernel basis of v -> uv + vu on Im O; dimension 6 on the cone minus 0
inline std::vector<Octonion> g2p1_tangent(const Octonion& u) {
  if (!u.imaginary()) throw Precondition("g2p1: element is not imaginary");
  Matrix<CRat> m;  // 8 coordinate rows x 7 unknowns
  for (int coord = 0; coord < 8; ++coord) {
    std::vector<CRat> row(7);
    for (int j = 1; j <= 7; ++j) {
      Octonion v = Octonion::unit(j);
      Octonion w = oct_mul(u, v) + oct_mul(v, u);
      row[j - 1] = w.c[coord];
    }
    m.push_back(std::move(row));
  }
  auto ker = kernel_basis(std::move(m), 7);
  std::vector<Octonion> out;
  for (const auto& k : ker) {
    Octonion v;
    for (int j = 1; j <= 7; ++j) v.c[j] = k[j - 1];
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3x3 octonionic matrices and the Hermitian Jordan algebra J3(O).
// ---------------------------------------------------------------------------

struct OctMat3 {
  Octonion m[3][3];

  static OctMat3 mul(const OctMat3& a, const OctMat3& b) {
    OctMat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Octonion s;
        for (int k = 0; k < 3; ++k) s = s + oct_mul(a.m[i][k], b.m[k][j]);
        r.m[i][j] = s;
      }
    return r;
  }
  OctMat3 operator+(const OctMat3& o) const {
    OctMat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] + o.m[i][j];
    return r;
  }
  OctMat3 operator*(const CRat& s) const {
    OctMat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][j] * s;
    return r;
  }
  bool zero() const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!m[i][j].zero()) return false;
    return true;
  }
  Octonion trace_oct() const { return m[0][0] + m[1][1] + m[2][2]; }
};

struct HermOct3 {
  CRat r1, r2, r3;
  Octonion x1, x2, x3;  // x3 at (2,1), x2 at (3,1), x1 at (3,2)

  OctMat3 to_mat() const {
    OctMat3 a;
    a.m[0][0] = Octonion::scalar(r1);
    a.m[1][1] = Octonion::scalar(r2);
    a.m[2][2] = Octonion::scalar(r3);
    a.m[1][0] = x3;
    a.m[0][1] = x3.conj();
    a.m[2][0] = x2;
    a.m[0][2] = x2.conj();
    a.m[2][1] = x1;
    a.m[1][2] = x1.conj();
    return a;
  }

  static std::optional<HermOct3> from_mat(const OctMat3& a) {
    for (int i = 0; i < 3; ++i) {
      if (!a.m[i][i].imaginary_part().zero()) return std::nullopt;
    }
    if (!(a.m[0][1] == a.m[1][0].conj())) return std::nullopt;
    if (!(a.m[0][2] == a.m[2][0].conj())) return std::nullopt;
    if (!(a.m[1][2] == a.m[2][1].conj())) return std::nullopt;
    HermOct3 h;
    h.r1 = a.m[0][0].real();
    h.r2 = a.m[1][1].real();
    h.r3 = a.m[2][2].real();
    h.x3 = a.m[1][0];
    h.x2 = a.m[2][0];
    h.x1 = a.m[2][1];
    return h;
  }

  CRat trace() const { return r1 + r2 + r3; }
  bool traceless() const { return trace().zero(); }
  bool zero() const { return to_mat().zero(); }

  HermOct3 operator+(const HermOct3& o) const {
    HermOct3 r;
    r.r1 = r1 + o.r1;
    r.r2 = r2 + o.r2;
    r.r3 = r3 + o.r3;
    r.x1 = x1 + o.x1;
    r.x2 = x2 + o.x2;
    r.x3 = x3 + o.x3;
    return r;
  }
  HermOct3 operator-(const HermOct3& o) const { return *this + o * CRat(-1); }
  HermOct3 operator*(const CRat& s) const {
    HermOct3 r;
    r.r1 = r1 * s;
    r.r2 = r2 * s;
    r.r3 = r3 * s;
    r.x1 = x1 * s;
    r.x2 = x2 * s;
    r.x3 = x3 * s;
    return r;
  }

  // coordinates in the 27-dimensional basis (r1,r2,r3, x1, x2, x3)
  std::vector<CRat> coords() const {
    std::vector<CRat> v{r1, r2, r3};
    for (const Octonion* x : {&x1, &x2, &x3})
      for (int k = 0; k < 8; ++k) v.push_back(x->c[k]);
    return v;
  }
};

inline OctMat3 matprod(const HermOct3& a, const HermOct3& b) {
  return OctMat3::mul(a.to_mat(), b.to_mat());
}

// A o B = (AB + BA)/2; closes on Hermitian matrices
inline HermOct3 jordan(const HermOct3& a, const HermOct3& b) {
  OctMat3 ab = matprod(a, b), ba = matprod(b, a);
  OctMat3 sym = (ab + ba) * CRat(Rat(1, 2));
  auto h = HermOct3::from_mat(sym);
  if (!h) throw Inconsistency("jordan product left the hermitian space");
  return *h;
}

// scalar trace of a matrix power, asserting the octonionic parts cancel
inline CRat scalar_trace(const OctMat3& m) {
  Octonion t = m.trace_oct();
  if (!t.imaginary_part().zero()) throw Inconsistency("matrix trace is not scalar");
  return t.real();
}

// det A = 1/6 tr(A)^3 - 1/2 tr(A) tr(A^2) + 1/3 tr(A^3), with A^3 the Jordan
// power: (AA)A and A(AA) differ by octonionic imaginary parts that cancel in
// the symmetrized product, whose trace is scalar
inline CRat det(const HermOct3& a) {
  OctMat3 m = a.to_mat();
  OctMat3 m2 = OctMat3::mul(m, m);
  OctMat3 m3 = (OctMat3::mul(m2, m) + OctMat3::mul(m, m2)) * CRat(Rat(1, 2));
  CRat t1 = a.trace();
  CRat t2 = scalar_trace(m2);
  CRat t3 = scalar_trace(m3);
  CRat six(Rat(1, 6)), half(Rat(1, 2)), third(Rat(1, 3));
  return six * t1 * t1 * t1 - half * t1 * t2 + third * t3;
}

// full polarization of the determinant: D(A,A,A) = det A
inline CRat det_polarized(const HermOct3& a, const HermOct3& b, const HermOct3& c) {
  CRat s = det(a + b + c) - det(a + b) - det(a + c) - det(b + c) + det(a) + det(b) + det(c);
  return s * CRat(Rat(1, 6));
}

// standard bases of J3(O) and of its traceless hyperplane
inline std::vector<HermOct3> herm_basis() {
  std::vector<HermOct3> basis;
  for (int d = 0; d < 3; ++d) {
    HermOct3 h;
    (d == 0 ? h.r1 : d == 1 ? h.r2 : h.r3) = CRat(1);
    basis.push_back(h);
  }
  for (int slot = 0; slot < 3; ++slot)
    for (int k = 0; k < 8; ++k) {
      HermOct3 h;
      Octonion& x = (slot == 0 ? h.x1 : slot == 1 ? h.x2 : h.x3);
      x = Octonion::unit(k);
      basis.push_back(h);
    }
  return basis;
}

inline std::vector<HermOct3> herm_traceless_basis() {
  std::vector<HermOct3> basis;
  HermOct3 d1;
  d1.r1 = CRat(1);
  d1.r2 = CRat(-1);
  basis.push_back(d1);
  HermOct3 d2;
  d2.r2 = CRat(1);
  d2.r3 = CRat(-1);
  basis.push_back(d2);
  auto full = herm_basis();
  for (std::size_t t = 3; t < full.size(); ++t) basis.push_back(full[t]);
  return basis;
}

// A^2 = 0 iff A is rank one and traceless; both sides are evaluated and must
// agree (the rank condition via the vanishing of the det gradient).
inline bool is_op2_0_point(const HermOct3& a) {
  OctMat3 sq = OctMat3::mul(a.to_mat(), a.to_mat());
  bool by_square = sq.zero();

  bool by_rank = a.traceless();
  if (by_rank) {
    for (const auto& b : herm_basis()) {
      CRat d = det(a + b) - det(a - b);  // 2 D(A,A,B) * 3 ... odd part; vanishing gradient
      // det(A+tB) - det(A-tB) = 2t * 3 D(A,A,B) + 2t^3 det B; at t=1 subtract det contribution
      d = d - (det(b) + det(b));
      if (!d.zero()) {
        by_rank = false;
        break;
      }
    }
  }
  if (by_square != by_rank)
    throw Inconsistency("A^2 = 0 and rank-one-traceless criteria disagree");
  return by_square;
}

// the displayed base point: r = (i, -i, 0), x3 = 1
inline HermOct3 op2_base_point() {
  HermOct3 a;
  a.r1 = crat_i();
  a.r2 = -crat_i();
  a.x3 = Octonion::one();
  return a;
}

// ---------------------------------------------------------------------------
// Tangent kernels at a point of F4/P4 = {A^2 = 0} in P(J3(O)_0):
//   hatT  = {B traceless : A o B = 0}   (dim 16)
//   hatT1 = {B traceless : A B = 0}     (dim 9), contained in hatT
// ---------------------------------------------------------------------------

struct Op2Tangents {
  std::vector<std::vector<CRat>> hatT;   // coordinates over the traceless basis
  std::vector<std::vector<CRat>> hatT1;
  bool contained = false;                // hatT1 inside hatT
};

inline Op2Tangents op2_0_tangents(const HermOct3& a) {
  if (!is_op2_0_point(a)) throw Precondition("not a point of the A^2 = 0 cone");
  auto basis = herm_traceless_basis();
  const int n = static_cast<int>(basis.size());  // 26

  Matrix<CRat> m_jordan, m_mat;
  std::vector<std::vector<CRat>> jordan_cols, mat_cols;
  for (const auto& b : basis) {
    jordan_cols.push_back(jordan(a, b).coords());
    OctMat3 ab = matprod(a, b);
    std::vector<CRat> v;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 8; ++k) v.push_back(ab.m[i][j].c[k]);
    mat_cols.push_back(std::move(v));
  }
  const int rows_j = static_cast<int>(jordan_cols[0].size());
  for (int r = 0; r < rows_j; ++r) {
    std::vector<CRat> row(n);
    for (int c = 0; c < n; ++c) row[c] = jordan_cols[c][r];
    m_jordan.push_back(std::move(row));
  }
  const int rows_m = static_cast<int>(mat_cols[0].size());
  for (int r = 0; r < rows_m; ++r) {
    std::vector<CRat> row(n);
    for (int c = 0; c < n; ++c) row[c] = mat_cols[c][r];
    m_mat.push_back(std::move(row));
  }

  Op2Tangents out;
  out.hatT = kernel_basis(std::move(m_jordan), n);
  out.hatT1 = kernel_basis(std::move(m_mat), n);

  Matrix<CRat> span = out.hatT;
  int base_rank = rank(span);
  bool ok = true;
  for (const auto& v : out.hatT1) {
    Matrix<CRat> ext = out.hatT;
    ext.push_back(v);
    if (rank(std::move(ext)) != base_rank) ok = false;
  }
  out.contained = ok;
  return out;
}

// reconstruct the Hermitian matrix from traceless-basis coordinates
inline HermOct3 from_traceless_coords(const std::vector<CRat>& v) {
  auto basis = herm_traceless_basis();
  HermOct3 a;
  for (std::size_t t = 0; t < basis.size(); ++t) a = a + basis[t] * v[t];
  return a;
}

// ---------------------------------------------------------------------------
// Base locus of |FF^2| at a point of F4/P4, in T1 (+) T2 = O (+) Im O:
//   u conj(u) = 0,  v conj(v) = 0,  u conj(v) = 0.
// ---------------------------------------------------------------------------

inline bool ff2_base_op2_0(const Octonion& u, const Octonion& v) {
  if (!v.imaginary()) throw Precondition("ff2 base: v must be imaginary");
  if (!u.norm().zero()) return false;
  if (!v.norm().zero()) return false;
  return oct_mul(u, v.conj()).zero();
}

// ---------------------------------------------------------------------------
// Lines on F4/P4: A o B = 0 cuts out lines on the 23-dimensional space of
// lines; A B = 0 the 20-dimensional homogeneous ones.
// ---------------------------------------------------------------------------

struct LineTest {
  bool general_line = false;
  bool homogeneous_line = false;
  bool degenerate = false;  // same projective point
};

inline LineTest line_tests(const HermOct3& a, const HermOct3& b) {
  if (!is_op2_0_point(a) || !is_op2_0_point(b)) throw Precondition("line_tests: not cone points");
  LineTest t;
  // projective coincidence: coordinates proportional
  auto ca = a.coords(), cb = b.coords();
  Matrix<CRat> two{ca, cb};
  t.degenerate = (rank(std::move(two)) < 2);
  OctMat3 ab = matprod(a, b), ba = matprod(b, a);
  t.homogeneous_line = ab.zero();
  OctMat3 sym = (ab + ba) * CRat(Rat(1, 2));
  t.general_line = sym.zero();
  return t;
}

// ---------------------------------------------------------------------------
// Samplers: rational points of the null cones, and rational SO3 conjugation
// (the documented symmetry action A -> g A g^T).
// ---------------------------------------------------------------------------

// null-cone parameterization through the base point u0: for the quadric
// N on a space with basis idx_lo..idx_hi, s generic,
//   v(s) = N(s) u0 - 2 B(s, u0) s
inline Octonion null_from_parameter(const Octonion& base, const Octonion& s, int lo, int hi) {
  CRat ns, bs;
  for (int k = lo; k <= hi; ++k) {
    ns += s.c[k] * s.c[k];
    bs += s.c[k] * base.c[k];
  }
  Octonion out = base * ns - s * (bs + bs);
  return out;
}

inline Octonion random_null_imaginary(Rng& rng) {
  Octonion base = Octonion::unit(1) + Octonion::unit(2) * crat_i();
  for (;;) {
    Octonion s;
    for (int k = 1; k <= 7; ++k) s.c[k] = CRat(rng.rational(), rng.rational());
    Octonion v = null_from_parameter(base, s, 1, 7);
    if (!v.zero()) return v;
  }
}

inline Octonion random_null_octonion(Rng& rng) {
  Octonion base = Octonion::one() + Octonion::unit(1) * crat_i();
  for (;;) {
    Octonion s;
    for (int k = 0; k <= 7; ++k) s.c[k] = CRat(rng.rational(), rng.rational());
    Octonion v = null_from_parameter(base, s, 0, 7);
    if (!v.zero()) return v;
  }
}

inline Octonion random_octonion(Rng& rng, bool imaginary = false) {
  Octonion x;
  for (int k = imaginary ? 1 : 0; k <= 7; ++k) x.c[k] = CRat(rng.rational(), rng.rational());
  return x;
}

// rational rotation by the Cayley transform of a random skew matrix
inline Matrix<Rat> random_so3(Rng& rng) {
  Rat a = rng.rational(), b = rng.rational(), c = rng.rational();
  Matrix<Rat> s{{Rat(0), a, b}, {-a, Rat(0), c}, {-b, -c, Rat(0)}};
  Matrix<Rat> iplus(3, std::vector<Rat>(3, Rat(0))), iminus(3, std::vector<Rat>(3, Rat(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      iplus[i][j] = (i == j ? Rat(1) : Rat(0)) + s[i][j];
      iminus[i][j] = (i == j ? Rat(1) : Rat(0)) - s[i][j];
    }
  Matrix<Rat> inv = inverse(iminus);
  Matrix<Rat> g(3, std::vector<Rat>(3, Rat(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) g[i][j] += iplus[i][k] * inv[k][j];
  return g;
}

inline HermOct3 so3_conjugate(const Matrix<Rat>& g, const HermOct3& a) {
  OctMat3 m = a.to_mat();
  OctMat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Octonion s;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s = s + m.m[k][l] * CRat(g[i][k] * g[j][l]);
      out.m[i][j] = s;
    }
  auto h = HermOct3::from_mat(out);
  if (!h) throw Inconsistency("SO3 conjugation left the hermitian space");
  return *h;
}

// ---------------------------------------------------------------------------
// Dimension probe for the F4/P4 base locus: the parameterization
//   (w, s) -> (w v(s), v(s))
// covers the u conj(v) = 0 locus since ker R_{conj(v)} = im R_v; the rank of
// its differential is the local cone dimension.
// ---------------------------------------------------------------------------

struct OctProbeResult {
  int rank = 0;
  int projective_dim = 0;
  bool singular_warning = false;
};

inline OctProbeResult f4p4_base_probe(Rng& rng) {
  Octonion base = Octonion::unit(1) + Octonion::unit(2) * crat_i();
  auto jac_rank = [&](const Octonion& w, const Octonion& s) {
    Octonion v = null_from_parameter(base, s, 1, 7);
    Matrix<CRat> m;  // 15 coordinate rows (u in O, v in Im O), 15 parameter columns
    std::vector<std::pair<Octonion, Octonion>> cols;  // (du, dv)
    for (int k = 0; k < 8; ++k)
      cols.push_back({oct_mul(Octonion::unit(k), v), Octonion()});
    CRat bs;
    for (int k = 1; k <= 7; ++k) bs += s.c[k] * base.c[k];
    for (int j = 1; j <= 7; ++j) {
      // d/ds_j of N(s) u0 - 2 B(s,u0) s
      Octonion dv = base * (s.c[j] + s.c[j]) - Octonion::unit(j) * (bs + bs) -
                    s * (base.c[j] + base.c[j]);
      cols.push_back({oct_mul(w, dv), dv});
    }
    for (int coord = 0; coord < 15; ++coord) {
      std::vector<CRat> row(15);
      for (int c = 0; c < 15; ++c)
        row[c] = coord < 8 ? cols[c].first.c[coord] : cols[c].second.c[coord - 7];
      m.push_back(std::move(row));
    }
    return rank(std::move(m));
  };
  auto sample = [&]() {
    std::pair<Octonion, Octonion> ws;
    ws.first = random_octonion(rng);
    for (int k = 1; k <= 7; ++k) ws.second.c[k] = CRat(rng.rational(), rng.rational());
    return ws;
  };
  auto [w1, s1] = sample();
  auto [w2, s2] = sample();
  OctProbeResult res;
  res.rank = jac_rank(w1, s1);
  res.projective_dim = res.rank - 1;
  if (jac_rank(w2, s2) > res.rank) res.singular_warning = true;
  return res;
}

}  // namespace rhv
