#pragma once

// Discrete Wilson orthonormal bases of C^N.
//
// One continuous integer translate is 2M samples, so half-integer translates
// fall on multiples of M and channel n oscillates at n / (2M) cycles/sample.
// With K = N / (2M) and u = t - kM (cyclic):
//   n = 0:          psi_{k,0}(t) = g(u)                                   (k even)
//   0 < n < M:      psi_{k,n}(t) = 2^{-1/2} (e^{i pi n u/M} + (-1)^{k+n} e^{-i pi n u/M}) g(u)
//   n = M:          psi_{k,M}(t) = (-1)^u g(u)                            (k + M even)
// where g is the real, even, canonical tight window of the redundancy-2
// lattice (a = M, b = K) seeded by the Gaussian, scaled to unit norm.

#include <cstddef>
#include <vector>

#include "mixmod/kernel.hpp"
#include "mixmod/types.hpp"

namespace mixmod {

/// The Gram matrix of a candidate basis is not the identity.
class GateFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WilsonIndex {
  std::size_t k = 0;  // time slot, 0..2K-1
  std::size_t n = 0;  // channel, 0..M

  friend bool operator==(const WilsonIndex&, const WilsonIndex&) = default;
};

/// Admissible (k, n) for M channels and K unit slots.
bool is_admissible(WilsonIndex index, std::size_t channels, std::size_t slots);

class WilsonBasis {
 public:
  static constexpr double kGateTolerance = 1e-10;

  /// Builds the window and runs the Gram gate. Requires M >= 2 and 2M | N.
  static WilsonBasis build(std::size_t n, std::size_t channels);

  /// Uses a supplied real-valued window; the Gram gate still applies.
  static WilsonBasis from_window(std::size_t n, std::size_t channels, const Window& window);

  std::size_t dimension() const { return n_; }
  std::size_t channels() const { return m_; }
  std::size_t slots() const { return n_ / (2 * m_); }
  const Window& window() const { return window_; }

  /// Admissible indices in storage order (k major, n minor).
  const std::vector<WilsonIndex>& indices() const { return indices_; }
  std::size_t ordinal(WilsonIndex index) const;
  Signal element(WilsonIndex index) const;

  /// N x N unitary matrix whose columns are the basis elements in index order.
  const ComplexMatrix& matrix() const { return elements_; }

  /// max |G - I| over the Gram matrix, recorded at construction.
  double gram_deviation() const { return gram_deviation_; }

 private:
  WilsonBasis(std::size_t n, std::size_t channels, Window window);

  std::size_t n_;
  std::size_t m_;
  Window window_;
  std::vector<WilsonIndex> indices_;
  std::vector<long> ordinal_of_slot_;  // dense (2K)x(M+1), -1 when inadmissible
  ComplexMatrix elements_;
  double gram_deviation_ = 0.0;
};

WilsonBasis build_wilson_basis(std::size_t n, std::size_t channels);

/// <f, psi_{k,n}> on a dense (2K) x (M+1) grid, axes [(time,1), (frequency,1)];
/// inadmissible slots are masked and zero.
CoeffArray wilson_coefficients(const WilsonBasis& basis, const Signal& f);

/// sum over admissible slots of C(k,n) psi_{k,n}.
Signal wilson_synthesis(const WilsonBasis& basis, const CoeffArray& coeffs);

/// <k, psi_{j1,l1} (x) psi_{j2,l2}> with (psi (x) phi)(t,y) = psi(t) phi(y), axes
/// [(time,1), (time,2), (frequency,1), (frequency,2)] indexed (j1, j2, l1, l2).
CoeffArray tensor_wilson_coefficients(const WilsonBasis& basis, const KernelOperator& k);

}  // namespace mixmod
