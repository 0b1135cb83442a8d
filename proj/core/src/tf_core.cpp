#include "mixmod/tf_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dft_plan.hpp"

namespace mixmod {

namespace {

Complex unit_phase(std::size_t num, std::size_t n) {
  // e^{2 pi i num / n} with num already reduced mod n
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(n));
}

void require_same_length(const Signal& f, const Window& g, const char* what) {
  if (f.size() != g.size()) throw DimensionError(std::string(what) + ": signal/window length mismatch");
}

}  // namespace

Signal translate(const Signal& f, long x) {
  const std::size_t n = f.size();
  const std::size_t shift = wrap_index(x, n);
  ComplexVector out(n);
  for (std::size_t t = 0; t < n; ++t) out[(t + shift) % n] = f[t];
  return Signal(std::move(out));
}

Signal modulate(const Signal& f, long xi) {
  const std::size_t n = f.size();
  const std::size_t w = wrap_index(xi, n);
  ComplexVector out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = unit_phase((t * w) % n, n) * f[t];
  return Signal(std::move(out));
}

Signal tf_shift(const Signal& f, long x, long xi) { return modulate(translate(f, x), xi); }

Signal dft(const Signal& f, Direction direction) {
  const std::size_t n = f.size();
  ComplexVector data(f.values().begin(), f.values().end());
  detail::DftPlan plan(n);
  if (direction == Direction::Forward)
    plan.forward(data);
  else
    plan.inverse(data);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& v : data) v *= scale;
  return Signal(std::move(data));
}

CoeffArray stft_full(const Signal& f, const Window& g) {
  require_same_length(f, g, "stft_full");
  const std::size_t n = f.size();
  detail::DftPlan plan(n);
  ComplexVector values(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    std::span<Complex> row(values.data() + k * n, n);
    for (std::size_t t = 0; t < n; ++t) row[t] = f[t] * std::conj(g[(t + n - k) % n]);
    plan.forward(row);
  }
  return CoeffArray({{AxisRole::Time, 1, n}, {AxisRole::Frequency, 1, n}}, std::move(values));
}

Signal istft_full(const CoeffArray& V, const Window& g, const Window& psi) {
  const std::size_t n = g.size();
  if (psi.size() != n) throw DimensionError("istft_full: window length mismatch");
  const std::vector<Axis> expected{{AxisRole::Time, 1, n}, {AxisRole::Frequency, 1, n}};
  if (V.axes() != expected) throw DimensionError("istft_full: coefficients are not a full N x N time-frequency grid");
  if (g.signal().norm() == 0.0) throw DomainError("istft_full: zero window");

  detail::DftPlan plan(n);
  ComplexVector out(n, Complex{});
  ComplexVector row(n);
  const auto values = V.values();
  for (std::size_t k = 0; k < n; ++k) {
    std::copy(values.begin() + static_cast<long>(k * n), values.begin() + static_cast<long>((k + 1) * n), row.begin());
    plan.inverse(row);
    for (std::size_t t = 0; t < n; ++t) out[t] += psi[(t + n - k) % n] * row[t];
  }
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& v : out) v *= scale;
  return Signal(std::move(out));
}

Window gaussian_window(std::size_t n) {
  if (n < 2) throw DomainError("gaussian_window: N must be >= 2");
  const double nn = static_cast<double>(n);
  std::vector<double> raw(n);
  for (std::size_t t = 0; t < n; ++t) {
    double s = 0.0;
    for (int j = -3; j <= 3; ++j) {
      const double d = static_cast<double>(t) - j * nn;
      s += std::exp(-std::numbers::pi * d * d / nn);
    }
    raw[t] = s;
  }
  ComplexVector g(n);
  for (std::size_t t = 0; t < n; ++t) g[t] = 0.5 * (raw[t] + raw[(n - t) % n]);
  return Window::unit(Signal(std::move(g)));
}

CoeffArray stft_full_2d(const ComplexMatrix& k, const ComplexMatrix& window) {
  if (k.rows() != k.cols() || window.rows() != window.cols() || k.rows() != window.rows())
    throw DimensionError("stft_full_2d: kernel and window must be the same square size");
  const std::size_t n = static_cast<std::size_t>(k.rows());
  detail::DftPlan plan(n);
  ComplexVector values(n * n * n * n);
  ComplexVector block(n * n);
  ComplexVector column(n);
  auto kk = [&](std::size_t t, std::size_t y) { return k(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(y)); };
  auto ww = [&](std::size_t t, std::size_t y) {
    return window(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(y));
  };

  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t y = 0; y < n; ++y)
          block[t * n + y] = kk(t, y) * std::conj(ww((t + n - x1) % n, (y + n - x2) % n));
      for (std::size_t t = 0; t < n; ++t) plan.forward(std::span<Complex>(block.data() + t * n, n));
      for (std::size_t xi2 = 0; xi2 < n; ++xi2) {
        for (std::size_t t = 0; t < n; ++t) column[t] = block[t * n + xi2];
        plan.forward(column);
        for (std::size_t xi1 = 0; xi1 < n; ++xi1) block[xi1 * n + xi2] = column[xi1];
      }
      const std::size_t base = (x1 * n + x2) * n * n;
      std::copy(block.begin(), block.end(), values.begin() + static_cast<long>(base));
    }
  }
  return CoeffArray({{AxisRole::Time, 1, n}, {AxisRole::Time, 2, n}, {AxisRole::Frequency, 1, n}, {AxisRole::Frequency, 2, n}},
                    std::move(values));
}

}  // namespace mixmod
