#pragma once

// Integral operators on C^N: singular values and Schatten norms, the
// frame-coefficient upper bound for Schatten norms, the Kohn-Nirenberg
// symbol <-> kernel correspondence, and kernels with prescribed spectra built
// from a Wilson basis.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mixmod/gabor.hpp"
#include "mixmod/kernel.hpp"
#include "mixmod/types.hpp"
#include "mixmod/wilson.hpp"

namespace mixmod {

Signal apply_operator(const KernelOperator& a, const Signal& f);

/// Singular values, nonincreasing.
struct SingularSpectrum {
  std::vector<double> values;
};

SingularSpectrum singular_values(const KernelOperator& a);

/// l^p norm of the singular values; p = infinity gives the operator norm.
/// Throws DomainError for p < 1.
double schatten_norm(const SingularSpectrum& sigma, double p);
double schatten_norm(const KernelOperator& a, double p);

/// (sum_n (sum_m |<k, Phi_{m,n}>|^2)^{p/2})^{1/p} for a Parseval system.
/// Throws NotAFrameError unless the frame bounds are within 1e-8 of 1, and
/// DomainError unless p lies in [1, 2].
double schatten_bound_rhs(const KernelOperator& a, const GaborSystem& sys, double p);

/// k(t, y) = N^{-1} sum_xi tau(t, xi) e^{2 pi i (t - y) xi / N}.
KernelOperator kn_to_kernel(const KNSymbol& tau);

/// Inverse of kn_to_kernel: tau(t, xi) = sum_u k(t, t - u) e^{-2 pi i u xi / N}.
/// The map is sqrt(N) times a unitary, so ||tau||_F = sqrt(N) ||k||_F.
KNSymbol kernel_to_kn(const KernelOperator& k);

/// A time-frequency shift M_(z,t) T_(x,y) on Z_N x Z_N.
struct TfIndex {
  long x = 0;
  long y = 0;
  long z = 0;
  long t = 0;

  friend bool operator==(const TfIndex&, const TfIndex&) = default;
};

/// <F, M_(z,t) T_(x,y) W> = sum_{a,b} F(a,b) conj(e^{2 pi i (z a + t b)/N} W(a - x, b - y)).
Complex tf_coefficient(const ComplexMatrix& f, const ComplexMatrix& window, const TfIndex& index);

/// Index map carrying kernel-side shifts to symbol-side shifts:
/// |<k, M_(z,t) T_(x,y) W>| = N^{-1} |<tau, M_(z+t, y-x) T_(x,-t) W'>|,
/// with tau = kernel_to_kn(k) and W' = kernel_to_kn(W).
TfIndex kn_remap(const TfIndex& index, std::size_t n);

struct MagnitudeCheck {
  std::size_t tuples = 0;
  bool exhaustive = false;
  double max_deviation = 0.0;
};

/// Compares both sides of the magnitude identity at `samples` random index
/// tuples, or at all N^4 tuples when samples == 0.
MagnitudeCheck kn_tf_magnitude_check(const KernelOperator& k, const KernelOperator& window, std::size_t samples,
                                     std::uint64_t seed);

struct SpectrumEntry {
  WilsonIndex index;
  Complex value;
};

/// k(t, y) = sum lambda_{k,n} psi_{k,n}(t) psi_{k,n}(y); its singular values are |lambda|.
/// Throws DomainError for inadmissible or repeated indices.
KernelOperator build_counterexample(const WilsonBasis& basis, std::span<const SpectrumEntry> lambda);

}  // namespace mixmod
