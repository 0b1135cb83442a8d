#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mixmod/types.hpp"

namespace mixmod::detail {

// Unnormalized cyclic DFT of a fixed length.
//   forward: X(k) = sum_t x(t) e^{-2 pi i t k / n}
//   inverse: x(t) = sum_k X(k) e^{+2 pi i t k / n}
// Power-of-two lengths use an iterative radix-2 transform; other lengths use
// the direct sum with a twiddle table indexed by (t*k mod n).
class DftPlan {
 public:
  explicit DftPlan(std::size_t n);

  std::size_t size() const { return n_; }
  void forward(std::span<Complex> data) const { run(data, false); }
  void inverse(std::span<Complex> data) const { run(data, true); }

 private:
  void run(std::span<Complex> data, bool inverse) const;

  std::size_t n_;
  bool pow2_;
  std::vector<Complex> twiddle_;  // e^{-2 pi i k / n}, k = 0..n-1
  std::vector<std::size_t> bitrev_;
};

}  // namespace mixmod::detail
