#pragma once

// Lattice Gabor systems {M_{bl} T_{ak} g} on C^N: analysis and synthesis maps,
// the frame operator and its extreme eigenvalues, canonical dual and tight
// windows, and coefficients of kernels against the tensor system
// Phi_{m,n} = phi_m (x) conj(phi_n).

#include <cstddef>
#include <memory>

#include "mixmod/kernel.hpp"
#include "mixmod/types.hpp"

namespace mixmod {

class GaborLattice {
 public:
  /// Requires a | N and b | N (a, b >= 1).
  GaborLattice(std::size_t n, std::size_t a, std::size_t b);

  std::size_t dimension() const { return n_; }
  std::size_t time_step() const { return a_; }
  std::size_t frequency_step() const { return b_; }
  std::size_t time_count() const { return n_ / a_; }
  std::size_t frequency_count() const { return n_ / b_; }
  std::size_t size() const { return time_count() * frequency_count(); }
  /// N / (a b); at least 1 is necessary for the frame property.
  double redundancy() const;

  friend bool operator==(const GaborLattice&, const GaborLattice&) = default;

 private:
  std::size_t n_;
  std::size_t a_;
  std::size_t b_;
};

enum class WindowKind { Raw, Dual, Tight };

const char* to_string(WindowKind kind);
WindowKind window_kind_from_string(const std::string& s);

/// Hermitian eigendecomposition of the frame operator, eigenvalues ascending.
struct FrameSpectrum {
  Eigen::VectorXd eigenvalues;
  ComplexMatrix eigenvectors;
};

class GaborSystem {
 public:
  GaborSystem(GaborLattice lattice, Window window, WindowKind kind = WindowKind::Raw);

  const GaborLattice& lattice() const { return lattice_; }
  const Window& window() const { return window_; }
  WindowKind kind() const { return kind_; }
  std::size_t dimension() const { return lattice_.dimension(); }
  std::size_t size() const { return lattice_.size(); }

  /// Element (k, l) = tf_shift(window, a k, b l).
  Signal element(std::size_t k, std::size_t l) const;

  /// N x |Lambda| matrix whose column k * (N/b) + l is element (k, l).
  const ComplexMatrix& synthesis_matrix() const { return elements_; }

  /// Eigendecomposition of S, computed once on first use and shared by copies.
  const FrameSpectrum& spectrum() const;

 private:
  struct SpectrumCache;

  GaborLattice lattice_;
  Window window_;
  WindowKind kind_;
  ComplexMatrix elements_;
  std::shared_ptr<SpectrumCache> cache_;
};

/// Coefficients <f, M_{bl} T_{ak} g>, axes [(time,1,N/a), (frequency,1,N/b)].
CoeffArray gabor_analysis(const GaborSystem& sys, const Signal& f);

/// sum_{k,l} C(k,l) element(k,l); the adjoint of gabor_analysis.
Signal gabor_synthesis(const GaborSystem& sys, const CoeffArray& coeffs);

/// S = sum element element^*.
ComplexMatrix frame_operator(const GaborSystem& sys);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Extreme eigenvalues of S (negative round-off clamped to 0).
FrameBounds frame_bounds(const GaborSystem& sys);

enum class CanonicalKind { Dual, Tight };

/// Dual: S^{-1} g. Tight: S^{-1/2} g. Throws NotAFrameError when
/// lambda_min(S) < 1e-12 lambda_max(S).
Window canonical_window(const GaborSystem& sys, CanonicalKind kind);

/// The system on the same lattice generated by canonical_window(sys, kind).
GaborSystem canonical_system(const GaborSystem& sys, CanonicalKind kind);

/// Four-axis array of <k, Phi_{m,n}> = sum_{t,y} k(t,y) conj(phi_m(t)) phi_n(y),
/// axes [(time,1), (time,2), (frequency,1), (frequency,2)] indexed by
/// (m_time, n_time, m_freq, n_freq).
CoeffArray tensor_frame_coeffs(const GaborSystem& sys, const KernelOperator& k);

}  // namespace mixmod
