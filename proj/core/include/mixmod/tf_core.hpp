#pragma once

// Time-frequency primitives on Z_N: translation, modulation, the unitary DFT,
// and the full-grid short-time Fourier (Gabor) transform with its inversion.
//
// Conventions:
//   T_x f(t)  = f(t - x mod N)
//   M_xi f(t) = e^{2 pi i t xi / N} f(t)
//   V_g f(k, l) = <f, M_l T_k g> = sum_t f(t) e^{-2 pi i l t / N} conj(g(t - k))

#include <cstddef>

#include "mixmod/kernel.hpp"
#include "mixmod/types.hpp"

namespace mixmod {

enum class Direction { Forward, Inverse };

Signal translate(const Signal& f, long x);
Signal modulate(const Signal& f, long xi);

/// M_xi T_x f (modulation after translation).
Signal tf_shift(const Signal& f, long x, long xi);

/// Unitary DFT, F(xi) = N^{-1/2} sum_t f(t) e^{-2 pi i t xi / N}; Inverse is the adjoint.
Signal dft(const Signal& f, Direction direction);

/// V_g f on the full N x N grid. Axes [(time,1,N), (frequency,1,N)].
CoeffArray stft_full(const Signal& f, const Window& g);

/// (1/N) sum_{k,l} V(k,l) M_l T_k psi. For V = stft_full(f, g) this equals <psi, g> f.
/// Throws DimensionError on shape mismatch and DomainError when g is zero.
Signal istft_full(const CoeffArray& V, const Window& g, const Window& psi);

/// Periodized Gaussian sum_{|j|<=3} exp(-pi (t - jN)^2 / N), made exactly even
/// and unit-normalized. Requires N >= 2.
Window gaussian_window(std::size_t n);

/// Full-grid STFT of a function on Z_N x Z_N,
///   V(x1, x2, xi1, xi2) = sum_{t,y} k(t,y) conj(W(t - x1, y - x2)) e^{-2 pi i (xi1 t + xi2 y) / N},
/// with axes [(time,1), (time,2), (frequency,1), (frequency,2)], each of extent N.
CoeffArray stft_full_2d(const ComplexMatrix& k, const ComplexMatrix& window);

}  // namespace mixmod
