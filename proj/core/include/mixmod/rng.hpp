#pragma once

// Counter-based pseudo-random generation. Each draw is a pure function of
// (seed, stream, counter), so results do not depend on thread scheduling or on
// the standard library's distribution implementations.

#include <cstddef>
#include <cstdint>

#include "mixmod/kernel.hpp"
#include "mixmod/types.hpp"

namespace mixmod {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi].
  long uniform_int(long lo, long hi);
  /// Standard normal via Box-Muller.
  double normal();
  /// Circular complex Gaussian with E|z|^2 = 1.
  Complex complex_normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

Signal random_signal(CounterRng& rng, std::size_t n);

/// i.i.d. standard complex Gaussian entries.
ComplexMatrix random_gaussian_matrix(CounterRng& rng, std::size_t rows, std::size_t cols);

/// n x count matrix with orthonormal columns (thin Q of a Gaussian matrix).
ComplexMatrix random_orthonormal(CounterRng& rng, std::size_t n, std::size_t count);

}  // namespace mixmod
