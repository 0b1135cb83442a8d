#include "mixmod/rng.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace mixmod {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix64(seed ^ mix64(stream ^ 0x5851F42D4C957F2DULL))) {}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t c = counter_++;
  return mix64(key_ + c * 0xD1B54A32D192ED03ULL);
}

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

long CounterRng::uniform_int(long lo, long hi) {
  if (hi < lo) throw DomainError("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // modulo bias is at most span / 2^64
  return lo + static_cast<long>(next_u64() % span);
}

double CounterRng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::complex_normal() {
  const double s = std::sqrt(0.5);
  const double re = normal();
  const double im = normal();
  return {s * re, s * im};
}

Signal random_signal(CounterRng& rng, std::size_t n) {
  ComplexVector v(n);
  for (auto& x : v) x = rng.complex_normal();
  return Signal(std::move(v));
}

ComplexMatrix random_gaussian_matrix(CounterRng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // column-major fill order is part of the reproducibility contract
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = rng.complex_normal();
  return m;
}

ComplexMatrix random_orthonormal(CounterRng& rng, std::size_t n, std::size_t count) {
  if (count > n) throw DimensionError("random_orthonormal: more columns than the dimension");
  const ComplexMatrix a = random_gaussian_matrix(rng, n, count);
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ() * ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(count));
}

}  // namespace mixmod
