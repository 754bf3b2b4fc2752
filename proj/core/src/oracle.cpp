#include "gramcap/oracle.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gramcap/errors.hpp"
#include "gramcap/hypgeo.hpp"

namespace gramcap {

namespace {

const BoundarySegment& segment_at(const std::vector<BoundarySegment>& segs, double t) {
  for (const BoundarySegment& s : segs)
    if (t >= s.t0 - 1e-12 && t <= s.t1 + 1e-12) return s;
  return segs.back();
}

double boundary_value(const std::vector<BoundarySegment>& segs, double t) {
  return segment_s(segment_at(segs, t), t);
}

// ds/dt of the boundary curve, closed form per segment.
double boundary_deriv(const std::vector<BoundarySegment>& segs, double t) {
  const BoundarySegment& s = segment_at(segs, t);
  if (s.kind == BoundarySegment::Kind::constant) return 0.0;
  double u = t - s.t_foot;
  double tw = std::tanh(s.w);
  double x = std::cosh(u) * tw;
  return s.s_sign * std::sinh(u) * tw / (1.0 - x * x);
}

// 3-point Gauss-Legendre on [0, 1]
constexpr double kGx[3] = {0.1127016653792583, 0.5, 0.8872983346207417};
constexpr double kGw[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

}  // namespace

double discrete_capacity(const Annulus& an, int nt, int ns) {
  validate(an);
  if (nt < 8 || ns < 8) throw validation_error("grid must be at least 8x8");
  const double L = an.baseline_length;
  const double dt = L / nt;
  const double dsg = 1.0 / ns;
  const std::size_t cols = static_cast<std::size_t>(nt);
  const std::size_t rows = static_cast<std::size_t>(ns) + 1;

  // Per-cell symmetric 4x4 energy form over the corner values, ordered
  // (j,k), (j,k+1), (j+1,k), (j+1,k+1); assembled by Gauss quadrature of the
  // metric-weighted gradient so the discrete minimum stays an upper estimate
  // of the capacity up to quadrature error.
  std::vector<std::array<double, 10>> cells(cols * static_cast<std::size_t>(ns));
  const double ct = 1.0 / dt;
  const double cs = 1.0 / dsg;
  for (std::size_t j = 0; j < cols; ++j) {
    double tj = j * dt;
    for (int k = 0; k < ns; ++k) {
      std::array<double, 10>& K = cells[j * ns + k];
      K.fill(0.0);
      for (int gx = 0; gx < 3; ++gx) {
        double xi = kGx[gx];
        double t = tj + xi * dt;
        double a1 = boundary_value(an.lower_boundary, t);
        double a2 = boundary_value(an.upper_boundary, t);
        double d = a2 - a1;
        double a1p = boundary_deriv(an.lower_boundary, t);
        double dp = boundary_deriv(an.upper_boundary, t) - a1p;
        for (int gy = 0; gy < 3; ++gy) {
          double eta = kGx[gy];
          double sg = (k + eta) * dsg;
          double s = a1 + sg * d;
          double gamma = (a1p + sg * dp) / d;
          double wq = kGw[gx] * kGw[gy] * dt * dsg;
          double A = wq * d / std::cosh(s);
          double B = wq * std::cosh(s) / d;
          // bilinear shape gradients at (xi, eta)
          // f_t   = ct * (-(1-eta), -eta, (1-eta), eta) . f
          // f_sig = cs * (-(1-xi), (1-xi), -xi, xi) . f
          double u[4] = {-ct * (1.0 - eta), -ct * eta, ct * (1.0 - eta), ct * eta};
          double v[4] = {-cs * (1.0 - xi), cs * (1.0 - xi), -cs * xi, cs * xi};
          double p[4];
          for (int i = 0; i < 4; ++i) p[i] = u[i] - gamma * v[i];
          int idx10 = 0;
          for (int i = 0; i < 4; ++i)
            for (int m = i; m < 4; ++m)
              K[idx10++] += A * p[i] * p[m] + B * v[i] * v[m];
        }
      }
    }
  }

  auto idx = [rows](std::size_t j, int k) { return j * rows + k; };

  // expand the packed symmetric form into a dense 4x4 once per use
  auto cell_matvec = [](const std::array<double, 10>& K, const double f[4], double out[4]) {
    static const int pos[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};
    for (int i = 0; i < 4; ++i) {
      double s = 0.0;
      for (int m = 0; m < 4; ++m) s += K[pos[i][m]] * f[m];
      out[i] = s;
    }
  };

  auto gather = [&](const std::vector<double>& f, std::size_t j, std::size_t jp, int k,
                    double loc[4]) {
    loc[0] = f[idx(j, k)];
    loc[1] = f[idx(j, k + 1)];
    loc[2] = f[idx(jp, k)];
    loc[3] = f[idx(jp, k + 1)];
  };

  // gradient of E(f) = sum_cells f_loc^T K f_loc (gradient = 2 K f_loc)
  auto apply = [&](const std::vector<double>& f, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t jp = (j + 1) % cols;
      for (int k = 0; k < ns; ++k) {
        double loc[4], g[4];
        gather(f, j, jp, k, loc);
        cell_matvec(cells[j * ns + k], loc, g);
        out[idx(j, k)] += 2.0 * g[0];
        out[idx(j, k + 1)] += 2.0 * g[1];
        out[idx(jp, k)] += 2.0 * g[2];
        out[idx(jp, k + 1)] += 2.0 * g[3];
      }
    }
  };

  auto energy = [&](const std::vector<double>& f) {
    double e = 0.0;
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t jp = (j + 1) % cols;
      for (int k = 0; k < ns; ++k) {
        double loc[4], g[4];
        gather(f, j, jp, k, loc);
        cell_matvec(cells[j * ns + k], loc, g);
        for (int i = 0; i < 4; ++i) e += loc[i] * g[i];
      }
    }
    return e;
  };

  const std::size_t nnode = cols * rows;
  std::vector<double> f(nnode, 0.0);
  // seed: profile linear in H between the column's boundary values
  for (std::size_t j = 0; j < cols; ++j) {
    double t = j * dt;
    double a1 = boundary_value(an.lower_boundary, t);
    double a2 = boundary_value(an.upper_boundary, t);
    double h1 = gudermann_h(a1), h2 = gudermann_h(a2);
    for (std::size_t k = 0; k < rows; ++k) {
      double s = a1 + (static_cast<double>(k) / ns) * (a2 - a1);
      f[idx(j, static_cast<int>(k))] = (gudermann_h(s) - h1) / (h2 - h1);
    }
    f[idx(j, 0)] = 0.0;
    f[idx(j, ns)] = 1.0;
  }

  std::vector<double> diag(nnode, 0.0);
  {
    static const int dpos[4] = {0, 4, 7, 9};
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t jp = (j + 1) % cols;
      for (int k = 0; k < ns; ++k) {
        const std::array<double, 10>& K = cells[j * ns + k];
        diag[idx(j, k)] += 2.0 * K[dpos[0]];
        diag[idx(j, k + 1)] += 2.0 * K[dpos[1]];
        diag[idx(jp, k)] += 2.0 * K[dpos[2]];
        diag[idx(jp, k + 1)] += 2.0 * K[dpos[3]];
      }
    }
  }

  auto interior = [&](std::vector<double>& v) {
    for (std::size_t j = 0; j < cols; ++j) {
      v[idx(j, 0)] = 0.0;
      v[idx(j, ns)] = 0.0;
    }
  };
  auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };

  // PCG on the interior unknowns; residual r = -grad E(f)
  std::vector<double> r(nnode), z(nnode), p(nnode), q(nnode);
  apply(f, r);
  for (double& v : r) v = -v;
  interior(r);
  double r0 = std::sqrt(dot(r, r));
  if (r0 > 0.0) {
    for (std::size_t i = 0; i < nnode; ++i) z[i] = r[i] / diag[i];
    interior(z);
    p = z;
    double rz = dot(r, z);
    const int max_iter = 60000;
    int it = 0;
    for (; it < max_iter; ++it) {
      apply(p, q);
      interior(q);
      double alpha = rz / dot(p, q);
      for (std::size_t i = 0; i < nnode; ++i) f[i] += alpha * p[i];
      for (std::size_t i = 0; i < nnode; ++i) r[i] -= alpha * q[i];
      double rn = std::sqrt(dot(r, r));
      if (rn <= 1e-10 * r0) break;
      for (std::size_t i = 0; i < nnode; ++i) z[i] = r[i] / diag[i];
      interior(z);
      double rz_new = dot(r, z);
      for (std::size_t i = 0; i < nnode; ++i) p[i] = z[i] + (rz_new / rz) * p[i];
      rz = rz_new;
    }
    if (it == max_iter)
      throw convergence_error("energy minimizer: residual cap not reached");
  }

  return energy(f);
}

}  // namespace gramcap
