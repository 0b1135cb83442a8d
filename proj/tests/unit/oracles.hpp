#pragma once

// Brute-force reference computations used as independent oracles. Nothing
// here calls into the library's transforms; everything is a literal sum.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Vec = std::vector<cd>;
using Mat = Eigen::MatrixXcd;

inline cd expi(double phase) { return std::polar(1.0, phase); }

inline long mod(long v, long n) { return ((v % n) + n) % n; }

// sum_t f(t) e^{-2 pi i l t / N} conj(g(t - k))
inline cd stft(const Vec& f, const Vec& g, long k, long l) {
  const long n = static_cast<long>(f.size());
  cd s = 0;
  for (long t = 0; t < n; ++t)
    s += f[t] * expi(-2.0 * std::numbers::pi * double(l * t) / double(n)) * std::conj(g[mod(t - k, n)]);
  return s;
}

// M_xi T_x g
inline Vec shift(const Vec& g, long x, long xi) {
  const long n = static_cast<long>(g.size());
  Vec out(g.size());
  for (long t = 0; t < n; ++t) out[t] = expi(2.0 * std::numbers::pi * double(t * xi) / double(n)) * g[mod(t - x, n)];
  return out;
}

inline cd dot(const Vec& f, const Vec& h) {
  cd s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(h[i]);
  return s;
}

inline double norm2(const Vec& f) { return std::sqrt(std::real(dot(f, f))); }

// Frame operator as an explicit sum of outer products.
inline Mat frame_operator(const Vec& g, long a, long b) {
  const long n = static_cast<long>(g.size());
  Mat s = Mat::Zero(n, n);
  for (long k = 0; k < n / a; ++k)
    for (long l = 0; l < n / b; ++l) {
      const Vec e = shift(g, a * k, b * l);
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) s(i, j) += e[i] * std::conj(e[j]);
    }
  return s;
}

// k(t,y) = N^{-1} sum_xi tau(t,xi) e^{2 pi i (t-y) xi / N}
inline Mat kn_kernel(const Mat& tau) {
  const long n = tau.rows();
  Mat k = Mat::Zero(n, n);
  for (long t = 0; t < n; ++t)
    for (long y = 0; y < n; ++y) {
      cd s = 0;
      for (long xi = 0; xi < n; ++xi) s += tau(t, xi) * expi(2.0 * std::numbers::pi * double((t - y) * xi) / double(n));
      k(t, y) = s / double(n);
    }
  return k;
}

// <F, M_(z,t) T_(x,y) W> on Z_N x Z_N.
inline cd tf2(const Mat& f, const Mat& w, long x, long y, long z, long t) {
  const long n = f.rows();
  cd s = 0;
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      s += f(a, b) * std::conj(expi(2.0 * std::numbers::pi * double(z * a + t * b) / double(n)) * w(mod(a - x, n), mod(b - y, n)));
  return s;
}

}  // namespace oracle
