#include "mixmod/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include <Eigen/Eigenvalues>

#include "mixmod/tf_core.hpp"

namespace mixmod {

namespace {

constexpr double kEigenFloor = 1e-12;

Eigen::VectorXcd to_vector(const Signal& f) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t t = 0; t < f.size(); ++t) v(static_cast<Eigen::Index>(t)) = f[t];
  return v;
}

Signal to_signal(const Eigen::VectorXcd& v) {
  return Signal(ComplexVector(v.data(), v.data() + v.size()));
}

}  // namespace

GaborLattice::GaborLattice(std::size_t n, std::size_t a, std::size_t b) : n_(n), a_(a), b_(b) {
  if (n == 0 || a == 0 || b == 0) throw DomainError("GaborLattice: N, a, b must be positive");
  if (n % a != 0 || n % b != 0) throw DomainError("GaborLattice: a and b must divide N");
}

double GaborLattice::redundancy() const {
  return static_cast<double>(n_) / static_cast<double>(a_ * b_);
}

const char* to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::Raw: return "raw";
    case WindowKind::Dual: return "dual";
    case WindowKind::Tight: return "tight";
  }
  return "raw";
}

WindowKind window_kind_from_string(const std::string& s) {
  if (s == "raw") return WindowKind::Raw;
  if (s == "dual") return WindowKind::Dual;
  if (s == "tight") return WindowKind::Tight;
  throw DomainError("unknown window kind: " + s);
}

struct GaborSystem::SpectrumCache {
  std::once_flag once;
  FrameSpectrum value;
};

GaborSystem::GaborSystem(GaborLattice lattice, Window window, WindowKind kind)
    : lattice_(lattice), window_(std::move(window)), kind_(kind), cache_(std::make_shared<SpectrumCache>()) {
  if (window_.size() != lattice_.dimension()) throw DimensionError("GaborSystem: window length differs from lattice N");
  const std::size_t n = lattice_.dimension();
  elements_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(lattice_.size()));
  Eigen::Index col = 0;
  for (std::size_t k = 0; k < lattice_.time_count(); ++k) {
    for (std::size_t l = 0; l < lattice_.frequency_count(); ++l, ++col) {
      elements_.col(col) = to_vector(element(k, l));
    }
  }
}

Signal GaborSystem::element(std::size_t k, std::size_t l) const {
  if (k >= lattice_.time_count() || l >= lattice_.frequency_count())
    throw DimensionError("GaborSystem::element: index out of range");
  return tf_shift(window_.signal(), static_cast<long>(lattice_.time_step() * k),
                  static_cast<long>(lattice_.frequency_step() * l));
}

const FrameSpectrum& GaborSystem::spectrum() const {
  std::call_once(cache_->once, [this] {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(frame_operator(*this));
    if (solver.info() != Eigen::Success) throw NumericalError("frame operator eigensolve failed");
    cache_->value = FrameSpectrum{solver.eigenvalues(), solver.eigenvectors()};
  });
  return cache_->value;
}

CoeffArray gabor_analysis(const GaborSystem& sys, const Signal& f) {
  if (f.size() != sys.dimension()) throw DimensionError("gabor_analysis: signal length differs from lattice N");
  const Eigen::VectorXcd c = sys.synthesis_matrix().adjoint() * to_vector(f);
  const auto& lat = sys.lattice();
  return CoeffArray({{AxisRole::Time, 1, lat.time_count()}, {AxisRole::Frequency, 1, lat.frequency_count()}},
                    ComplexVector(c.data(), c.data() + c.size()));
}

Signal gabor_synthesis(const GaborSystem& sys, const CoeffArray& coeffs) {
  const auto& lat = sys.lattice();
  if (coeffs.extents() != std::vector<std::size_t>{lat.time_count(), lat.frequency_count()})
    throw DimensionError("gabor_synthesis: coefficient extents do not match the lattice");
  const auto v = coeffs.values();
  Eigen::VectorXcd c(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) c(static_cast<Eigen::Index>(i)) = v[i];
  return to_signal(sys.synthesis_matrix() * c);
}

ComplexMatrix frame_operator(const GaborSystem& sys) {
  const auto& e = sys.synthesis_matrix();
  return e * e.adjoint();
}

FrameBounds frame_bounds(const GaborSystem& sys) {
  const auto& ev = sys.spectrum().eigenvalues;
  return FrameBounds{std::max(0.0, ev.minCoeff()), std::max(0.0, ev.maxCoeff())};
}

Window canonical_window(const GaborSystem& sys, CanonicalKind kind) {
  const auto& spec = sys.spectrum();
  const double lmax = spec.eigenvalues.maxCoeff();
  const double lmin = spec.eigenvalues.minCoeff();
  if (!(lmax > 0.0) || lmin < kEigenFloor * lmax)
    throw NotAFrameError("canonical_window: frame operator is singular (not a frame)");

  Eigen::VectorXd scale(spec.eigenvalues.size());
  for (Eigen::Index i = 0; i < scale.size(); ++i)
    scale(i) = kind == CanonicalKind::Dual ? 1.0 / spec.eigenvalues(i) : 1.0 / std::sqrt(spec.eigenvalues(i));
  const auto& v = spec.eigenvectors;
  const Eigen::VectorXcd g = to_vector(sys.window().signal());
  const Eigen::VectorXcd out = v * (scale.cast<Complex>().asDiagonal() * (v.adjoint() * g));
  return Window::raw(to_signal(out));
}

GaborSystem canonical_system(const GaborSystem& sys, CanonicalKind kind) {
  return GaborSystem(sys.lattice(), canonical_window(sys, kind),
                     kind == CanonicalKind::Dual ? WindowKind::Dual : WindowKind::Tight);
}

CoeffArray tensor_frame_coeffs(const GaborSystem& sys, const KernelOperator& k) {
  if (k.size() != sys.dimension()) throw DimensionError("tensor_frame_coeffs: kernel size differs from lattice N");
  const auto& e = sys.synthesis_matrix();
  const ComplexMatrix c = e.adjoint() * k.matrix() * e;  // c(m, n) = <k, Phi_{m,n}>

  const auto& lat = sys.lattice();
  const std::size_t tk = lat.time_count();
  const std::size_t fl = lat.frequency_count();
  ComplexVector values(tk * tk * fl * fl);
  for (std::size_t mk = 0; mk < tk; ++mk)
    for (std::size_t nk = 0; nk < tk; ++nk)
      for (std::size_t ml = 0; ml < fl; ++ml)
        for (std::size_t nl = 0; nl < fl; ++nl)
          values[((mk * tk + nk) * fl + ml) * fl + nl] =
              c(static_cast<Eigen::Index>(mk * fl + ml), static_cast<Eigen::Index>(nk * fl + nl));
  return CoeffArray({{AxisRole::Time, 1, tk}, {AxisRole::Time, 2, tk}, {AxisRole::Frequency, 1, fl}, {AxisRole::Frequency, 2, fl}},
                    std::move(values));
}

}  // namespace mixmod
