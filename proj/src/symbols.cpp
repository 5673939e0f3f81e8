#include "rvac/symbols.hpp"

#include <stdexcept>

namespace rvac {

namespace {

inline double kron(int a, int b) { return a == b ? 1.0 : 0.0; }

void fill6(Mat& m, const double (&rows)[6][6]) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = rows[i][j];
}

}  // namespace

PlasmaSymbols assemble_plasma_symbols(const DerivedPlasma& d) {
  const double G = d.gamma;
  const V3& v = d.v;
  const V3& u = d.u;
  const V3& H = d.H;
  const V3& b = d.b;
  const double H2 = H[0] * H[0] + H[1] * H[1] + H[2] * H[2];
  const double vH = v[0] * H[0] + v[1] * H[1] + v[2] * H[2];
  const double rhG = d.rho * d.h * G;
  const double ra2 = d.rho * d.a2;

  PlasmaSymbols s{Mat(8, 8), Mat(8, 8), Mat(8, 8), Mat(8, 8)};

  Mat& A0 = s.A0;
  A0(0, 0) = G / ra2;
  for (int i = 0; i < 3; ++i) set_sym(A0, 0, 1 + i, v[i]);
  for (int a = 0; a < 3; ++a) {
    for (int c = a; c < 3; ++c) {
      const double uu = (rhG + H2 / G) * kron(a, c) -
                        (rhG + (H2 + d.B2) / G) * v[a] * v[c] -
                        H[a] * H[c] / G +
                        (vH / G) * (v[a] * H[c] + H[a] * v[c]);
      set_sym(A0, 1 + a, 1 + c, uu);
      set_sym(A0, 4 + a, 4 + c, (kron(a, c) + u[a] * u[c]) / G);
    }
  }
  A0(7, 7) = 1.0;

  Mat* As[3] = {&s.A1, &s.A2, &s.A3};
  for (int j = 0; j < 3; ++j) {
    Mat& A = *As[j];
    A(0, 0) = u[j] / ra2;
    for (int i = 0; i < 3; ++i) set_sym(A, 0, 1 + i, kron(i, j));
    for (int a = 0; a < 3; ++a) {
      for (int c = a; c < 3; ++c) {
        const double uu =
            v[j] * ((rhG + H2 / G) * kron(a, c) -
                    (rhG + (H2 - d.B2) / G) * v[a] * v[c] -
                    H[a] * H[c] / G) +
            (H[j] / G) * ((v[a] * H[c] + H[a] * v[c]) / (G * G) -
                          2.0 * vH * (kron(a, c) - v[a] * v[c])) +
            (vH / G) * (H[a] * kron(j, c) + kron(j, a) * H[c]) -
            (d.B2 / G) * (v[a] * kron(j, c) + kron(j, a) * v[c]);
        set_sym(A, 1 + a, 1 + c, uu);
        set_sym(A, 4 + a, 4 + c, v[j] * (kron(a, c) + u[a] * u[c]) / G);
      }
      for (int c = 0; c < 3; ++c) {
        const double n = b[a] * kron(j, c) / G - v[j] * b[a] * v[c] / G -
                         H[j] * kron(a, c) / (G * G);
        A(4 + a, 1 + c) = n;
        A(1 + c, 4 + a) = n;
      }
    }
    A(7, 7) = v[j];
  }
  return s;
}

Mat assemble_G(const DerivedPlasma& d, int j1) {
  if (j1 < 1 || j1 > 3) throw std::invalid_argument("G index must be 1..3");
  const int j = j1 - 1;
  const double G = d.gamma;
  const V3& v = d.v;
  const V3& H = d.H;
  const V3& b = d.b;
  const double vH = v[0] * H[0] + v[1] * H[1] + v[2] * H[2];

  Mat m(8, 8);
  for (int i = 0; i < 3; ++i) set_sym(m, 0, 1 + i, kron(i, j) - v[j] * v[i]);
  for (int a = 0; a < 3; ++a) {
    for (int c = a; c < 3; ++c) {
      const double uu =
          v[j] * (2.0 * (d.B2 / G) * v[a] * v[c] -
                  (vH / G) * (v[a] * H[c] + H[a] * v[c])) +
          (H[j] / G) * ((v[a] * H[c] + H[a] * v[c]) / (G * G) -
                        2.0 * vH * (kron(a, c) - v[a] * v[c])) +
          (vH / G) * (H[a] * kron(j, c) + kron(j, a) * H[c]) -
          (d.B2 / G) * (v[a] * kron(j, c) + kron(j, a) * v[c]);
      set_sym(m, 1 + a, 1 + c, uu);
    }
    for (int c = 0; c < 3; ++c) {
      const double n = b[a] * kron(j, c) / G - v[j] * b[a] * v[c] / G -
                       H[j] * kron(a, c) / (G * G);
      m(4 + a, 1 + c) = n;
      m(1 + c, 4 + a) = n;
    }
  }
  return m;
}

const VacuumSymbols& maxwell_symbols() {
  static const VacuumSymbols s = [] {
    VacuumSymbols vs{Mat(6, 6), Mat(6, 6), Mat(6, 6)};
    vs.B1(1, 5) = -1.0;
    vs.B1(2, 4) = 1.0;
    vs.B1(4, 2) = 1.0;
    vs.B1(5, 1) = -1.0;
    vs.B2(0, 5) = 1.0;
    vs.B2(2, 3) = -1.0;
    vs.B2(3, 2) = -1.0;
    vs.B2(5, 0) = 1.0;
    vs.B3(0, 4) = -1.0;
    vs.B3(1, 3) = 1.0;
    vs.B3(3, 1) = 1.0;
    vs.B3(4, 0) = -1.0;
    return vs;
  }();
  return s;
}

SecondarySymmetrizer secondary_symmetrizer(const V3& nu) {
  const double n1 = nu[0], n2 = nu[1], n3 = nu[2];
  SecondarySymmetrizer s{Mat(6, 6), Mat(6, 6), Mat(6, 6), Mat(6, 6),
                         Vec(6, 0.0), Vec(6, 0.0),
                         Mat(6, 6), Mat(6, 6), Mat(6, 6)};

  const double bc0[6][6] = {{1, 0, 0, 0, n3, -n2},  //
                            {0, 1, 0, -n3, 0, n1},  //
                            {0, 0, 1, n2, -n1, 0},  //
                            {0, -n3, n2, 1, 0, 0},  //
                            {n3, 0, -n1, 0, 1, 0},  //
                            {-n2, n1, 0, 0, 0, 1}};
  const double bc1[6][6] = {{n1, n2, n3, 0, 0, 0},   //
                            {n2, -n1, 0, 0, 0, -1},  //
                            {n3, 0, -n1, 0, 1, 0},   //
                            {0, 0, 0, n1, n2, n3},   //
                            {0, 0, 1, n2, -n1, 0},   //
                            {0, -1, 0, n3, 0, -n1}};
  const double bc2[6][6] = {{-n2, n1, 0, 0, 0, 1},   //
                            {n1, n2, n3, 0, 0, 0},   //
                            {0, n3, -n2, -1, 0, 0},  //
                            {0, 0, -1, -n2, n1, 0},  //
                            {0, 0, 0, n1, n2, n3},   //
                            {1, 0, 0, 0, n3, -n2}};
  const double bc3[6][6] = {{-n3, 0, n1, 0, -1, 0},  //
                            {0, -n3, n2, 1, 0, 0},   //
                            {n1, n2, n3, 0, 0, 0},   //
                            {0, 1, 0, -n3, 0, n1},   //
                            {-1, 0, 0, 0, -n3, n2},  //
                            {0, 0, 0, n1, n2, n3}};
  fill6(s.Bc0, bc0);
  fill6(s.Bc1, bc1);
  fill6(s.Bc2, bc2);
  fill6(s.Bc3, bc3);

  for (int i = 0; i < 3; ++i) {
    s.R1[i] = nu[i];
    s.R2[3 + i] = nu[i];
  }
  Mat* Ks[3] = {&s.K1, &s.K2, &s.K3};
  for (int j = 0; j < 3; ++j) {
    Mat& K = *Ks[j];
    for (int a = 0; a < 3; ++a) {
      K(a, j) = nu[a];
      K(3 + a, 3 + j) = nu[a];
    }
  }
  return s;
}

Mat vacuum_front_matrix(double dtphi, double d2phi, double d3phi) {
  const VacuumSymbols& vs = maxwell_symbols();
  return vs.B1 - dtphi * Mat::identity(6) - d2phi * vs.B2 - d3phi * vs.B3;
}

Mat secondary_front_matrix(const V3& nu, double kappa, double d2phi,
                           double d3phi) {
  const SecondarySymmetrizer s = secondary_symmetrizer(nu);
  return s.Bc1 - kappa * s.Bc0 - d2phi * s.Bc2 - d3phi * s.Bc3;
}

BoundarySymbols boundary_symbols(const InterfaceBaseState& base) {
  const PlasmaSymbols ps = assemble_plasma_symbols(base.derived);
  const double k = base.kappa;
  const VacuumSymbols& vs = maxwell_symbols();
  const SecondarySymmetrizer sec = secondary_symmetrizer(base.derived.v);
  BoundarySymbols out{ps.A1 - k * ps.A0, vs.B1 - k * Mat::identity(6),
                      sec.Bc1 - k * sec.Bc0};
  return out;
}

Vec q_form(const InterfaceBaseState& base) {
  const DerivedPlasma& d = base.derived;
  const double vH =
      d.v[0] * d.H[0] + d.v[1] * d.H[1] + d.v[2] * d.H[2];
  Vec f(8, 0.0);
  f[0] = 1.0;
  for (int i = 0; i < 3; ++i) {
    f[1 + i] = (vH * d.H[i] - d.B2 * d.v[i]) / d.gamma;
    f[4 + i] = d.b[i] / d.gamma;
  }
  return f;
}

Vec vN_form(const InterfaceBaseState& base) {
  const DerivedPlasma& d = base.derived;
  Vec f(8, 0.0);
  for (int i = 0; i < 3; ++i)
    f[1 + i] = (kron(0, i) - d.v[0] * d.v[i]) / d.gamma;
  return f;
}

}  // namespace rvac
