#include "mixmod/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/SVD>

#include "dft_plan.hpp"
#include "mixmod/mixed_norm.hpp"
#include "mixmod/rng.hpp"

namespace mixmod {

namespace {

constexpr double kParsevalTolerance = 1e-8;

void check_square_finite(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DimensionError(std::string(what) + ": matrix must be square and non-empty");
  if (!m.allFinite()) throw DomainError(std::string(what) + ": non-finite entry");
}

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

KernelOperator::KernelOperator(ComplexMatrix k) : k_(std::move(k)) { check_square_finite(k_, "KernelOperator"); }

KernelOperator KernelOperator::zeros(std::size_t n) { return KernelOperator(ComplexMatrix::Zero(ix(n), ix(n))); }

KernelOperator KernelOperator::identity(std::size_t n) {
  return KernelOperator(ComplexMatrix::Identity(ix(n), ix(n)));
}

KernelOperator KernelOperator::tensor(const Signal& u, const Signal& v) {
  if (u.size() != v.size()) throw DimensionError("KernelOperator::tensor: length mismatch");
  const std::size_t n = u.size();
  ComplexMatrix k(ix(n), ix(n));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t y = 0; y < n; ++y) k(ix(t), ix(y)) = u[t] * v[y];
  return KernelOperator(std::move(k));
}

KNSymbol::KNSymbol(ComplexMatrix tau) : tau_(std::move(tau)) { check_square_finite(tau_, "KNSymbol"); }

Signal apply_operator(const KernelOperator& a, const Signal& f) {
  if (f.size() != a.size()) throw DimensionError("apply_operator: signal length differs from kernel size");
  Eigen::VectorXcd v(ix(f.size()));
  for (std::size_t t = 0; t < f.size(); ++t) v(ix(t)) = f[t];
  const Eigen::VectorXcd out = a.matrix() * v;
  return Signal(ComplexVector(out.data(), out.data() + out.size()));
}

SingularSpectrum singular_values(const KernelOperator& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a.matrix());
  if (svd.info() != Eigen::Success) throw NumericalError("singular_values: SVD did not converge");
  const auto& s = svd.singularValues();
  SingularSpectrum out{std::vector<double>(s.data(), s.data() + s.size())};
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double schatten_norm(const SingularSpectrum& sigma, double p) {
  if (!(p >= 1.0)) throw DomainError("schatten_norm: p must be >= 1");
  if (sigma.values.empty()) return 0.0;
  const double peak = *std::max_element(sigma.values.begin(), sigma.values.end());
  if (p == kInfinity || peak == 0.0) return peak;
  double sum = 0.0;
  for (double s : sigma.values) sum += std::pow(s / peak, p);
  return peak * std::pow(sum, 1.0 / p);
}

double schatten_norm(const KernelOperator& a, double p) {
  if (!(p >= 1.0)) throw DomainError("schatten_norm: p must be >= 1");
  return schatten_norm(singular_values(a), p);
}

double schatten_bound_rhs(const KernelOperator& a, const GaborSystem& sys, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError("schatten_bound_rhs: p must lie in [1, 2]");
  const auto bounds = frame_bounds(sys);
  if (std::abs(bounds.lower - 1.0) > kParsevalTolerance || std::abs(bounds.upper - 1.0) > kParsevalTolerance)
    throw NotAFrameError("schatten_bound_rhs: system is not Parseval");
  const auto coeffs = tensor_frame_coeffs(sys, a);
  return mixed_norm(coeffs, MixedNormSpec::permuted({2.0, 2.0, p, p}, kernel_slice_permutation(1)));
}

KernelOperator kn_to_kernel(const KNSymbol& tau) {
  const std::size_t n = tau.size();
  detail::DftPlan plan(n);
  ComplexMatrix k(ix(n), ix(n));
  ComplexVector row(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t xi = 0; xi < n; ++xi) row[xi] = tau(t, xi);
    plan.inverse(row);  // row[u] = sum_xi tau(t, xi) e^{2 pi i u xi / N}
    for (std::size_t y = 0; y < n; ++y) k(ix(t), ix(y)) = scale * row[(t + n - y) % n];
  }
  return KernelOperator(std::move(k));
}

KNSymbol kernel_to_kn(const KernelOperator& k) {
  const std::size_t n = k.size();
  detail::DftPlan plan(n);
  ComplexMatrix tau(ix(n), ix(n));
  ComplexVector row(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t u = 0; u < n; ++u) row[u] = k(t, (t + n - u) % n);
    plan.forward(row);
    for (std::size_t xi = 0; xi < n; ++xi) tau(ix(t), ix(xi)) = row[xi];
  }
  return KNSymbol(std::move(tau));
}

Complex tf_coefficient(const ComplexMatrix& f, const ComplexMatrix& window, const TfIndex& index) {
  const std::size_t n = static_cast<std::size_t>(f.rows());
  if (f.cols() != f.rows() || window.rows() != f.rows() || window.cols() != f.cols())
    throw DimensionError("tf_coefficient: shape mismatch");
  const std::size_t x = wrap_index(index.x, n), y = wrap_index(index.y, n);
  const std::size_t z = wrap_index(index.z, n), t = wrap_index(index.t, n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  Complex s{};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t phase = (z * a + t * b) % n;
      const Complex shifted = std::polar(1.0, step * static_cast<double>(phase)) * window(ix((a + n - x) % n), ix((b + n - y) % n));
      s += f(ix(a), ix(b)) * std::conj(shifted);
    }
  }
  return s;
}

TfIndex kn_remap(const TfIndex& index, std::size_t n) {
  const auto w = [n](long v) { return static_cast<long>(wrap_index(v, n)); };
  return TfIndex{w(index.x), w(-index.t), w(index.z + index.t), w(index.y - index.x)};
}

MagnitudeCheck kn_tf_magnitude_check(const KernelOperator& k, const KernelOperator& window, std::size_t samples,
                                     std::uint64_t seed) {
  if (k.size() != window.size()) throw DimensionError("kn_tf_magnitude_check: kernel and window sizes differ");
  if (window.frobenius_norm() == 0.0) throw DomainError("kn_tf_magnitude_check: zero window");
  const std::size_t n = k.size();
  const ComplexMatrix tau = kernel_to_kn(k).matrix();
  const ComplexMatrix window_symbol = kernel_to_kn(window).matrix();
  const double scale = 1.0 / static_cast<double>(n);

  MagnitudeCheck out;
  auto check = [&](const TfIndex& idx) {
    const double lhs = std::abs(tf_coefficient(k.matrix(), window.matrix(), idx));
    const double rhs = scale * std::abs(tf_coefficient(tau, window_symbol, kn_remap(idx, n)));
    out.max_deviation = std::max(out.max_deviation, std::abs(lhs - rhs));
    ++out.tuples;
  };

  const long nn = static_cast<long>(n);
  if (samples == 0) {
    out.exhaustive = true;
    for (long x = 0; x < nn; ++x)
      for (long y = 0; y < nn; ++y)
        for (long z = 0; z < nn; ++z)
          for (long t = 0; t < nn; ++t) check({x, y, z, t});
  } else {
    CounterRng rng(seed);
    for (std::size_t i = 0; i < samples; ++i)
      check({rng.uniform_int(0, nn - 1), rng.uniform_int(0, nn - 1), rng.uniform_int(0, nn - 1),
             rng.uniform_int(0, nn - 1)});
  }
  return out;
}

KernelOperator build_counterexample(const WilsonBasis& basis, std::span<const SpectrumEntry> lambda) {
  const std::size_t n = basis.dimension();
  if (lambda.size() > n) throw DomainError("build_counterexample: more coefficients than basis elements");
  const auto& w = basis.matrix();
  ComplexMatrix k = ComplexMatrix::Zero(ix(n), ix(n));
  std::set<std::size_t> used;
  for (const auto& entry : lambda) {
    const std::size_t col = basis.ordinal(entry.index);  // throws when inadmissible
    if (!used.insert(col).second) throw DomainError("build_counterexample: repeated Wilson index");
    const auto psi = w.col(ix(col));
    k.noalias() += entry.value * (psi * psi.transpose());
  }
  return KernelOperator(std::move(k));
}

}  // namespace mixmod
