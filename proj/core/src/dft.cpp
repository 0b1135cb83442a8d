#include <cmath>
#include <numbers>
#include <utility>

#include "dft_plan.hpp"

namespace mixmod::detail {

DftPlan::DftPlan(std::size_t n) : n_(n), pow2_(n != 0 && (n & (n - 1)) == 0) {
  if (n == 0) throw DimensionError("DftPlan: length must be >= 1");
  twiddle_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    twiddle_[k] = std::polar(1.0, angle);
  }
  if (pow2_) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (std::size_t b = 0; b < bits; ++b)
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      bitrev_[i] = r;
    }
  }
}

void DftPlan::run(std::span<Complex> data, bool inverse) const {
  if (data.size() != n_) throw DimensionError("DftPlan: length mismatch");
  if (n_ == 1) return;

  auto tw = [&](std::size_t k) { return inverse ? std::conj(twiddle_[k]) : twiddle_[k]; };

  if (!pow2_) {
    std::vector<Complex> out(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      Complex s{};
      for (std::size_t t = 0; t < n_; ++t) s += data[t] * tw((t * k) % n_);
      out[k] = s;
    }
    std::copy(out.begin(), out.end(), data.begin());
    return;
  }

  for (std::size_t i = 0; i < n_; ++i)
    if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);

  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex w = tw(j * step);
        const Complex u = data[start + j];
        const Complex v = data[start + j + half] * w;
        data[start + j] = u + v;
        data[start + j + half] = u - v;
      }
    }
  }
}

}  // namespace mixmod::detail
