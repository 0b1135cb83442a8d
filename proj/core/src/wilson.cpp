#include "mixmod/wilson.hpp"

#include <cmath>
#include <numbers>

#include "mixmod/gabor.hpp"
#include "mixmod/tf_core.hpp"

namespace mixmod {

namespace {

void check_shape(std::size_t n, std::size_t channels) {
  if (channels < 2) throw DomainError("Wilson basis: need M >= 2 channels");
  if (n == 0 || n % (2 * channels) != 0) throw DomainError("Wilson basis: 2M must divide N");
}

}  // namespace

bool is_admissible(WilsonIndex index, std::size_t channels, std::size_t slots) {
  if (index.k >= 2 * slots || index.n > channels) return false;
  if (index.n == 0) return index.k % 2 == 0;
  if (index.n == channels) return (index.k + channels) % 2 == 0;
  return true;
}

WilsonBasis WilsonBasis::build(std::size_t n, std::size_t channels) {
  check_shape(n, channels);
  const std::size_t slots = n / (2 * channels);
  const GaborSystem seed(GaborLattice(n, channels, slots), gaussian_window(n));
  const Window tight = canonical_window(seed, CanonicalKind::Tight);

  ComplexVector g(n);
  for (std::size_t t = 0; t < n; ++t) g[t] = 0.5 * (tight[t].real() + tight[(n - t) % n].real());
  return WilsonBasis(n, channels, Window::unit(Signal(std::move(g))));
}

WilsonBasis WilsonBasis::from_window(std::size_t n, std::size_t channels, const Window& window) {
  check_shape(n, channels);
  if (window.size() != n) throw DimensionError("Wilson basis: window length differs from N");
  for (std::size_t t = 0; t < n; ++t)
    if (std::abs(window[t].imag()) > 1e-12) throw DomainError("Wilson basis: window must be real-valued");
  return WilsonBasis(n, channels, window);
}

WilsonBasis::WilsonBasis(std::size_t n, std::size_t channels, Window window)
    : n_(n), m_(channels), window_(std::move(window)) {
  const std::size_t slots = n_ / (2 * m_);
  ordinal_of_slot_.assign(2 * slots * (m_ + 1), -1);
  for (std::size_t k = 0; k < 2 * slots; ++k) {
    for (std::size_t ch = 0; ch <= m_; ++ch) {
      const WilsonIndex idx{k, ch};
      if (!is_admissible(idx, m_, slots)) continue;
      ordinal_of_slot_[k * (m_ + 1) + ch] = static_cast<long>(indices_.size());
      indices_.push_back(idx);
    }
  }
  if (indices_.size() != n_) throw GateFailure("Wilson basis: admissible index count differs from N");

  const auto big_n = static_cast<Eigen::Index>(n_);
  elements_.resize(big_n, big_n);
  const double root2 = std::sqrt(2.0);
  const std::size_t period = 2 * m_;
  for (std::size_t col = 0; col < n_; ++col) {
    const auto [k, ch] = indices_[col];
    for (std::size_t t = 0; t < n_; ++t) {
      const std::size_t u = (t + n_ - (k * m_) % n_) % n_;
      const double gu = window_[u].real();
      Complex value;
      if (ch == 0) {
        value = gu;
      } else if (ch == m_) {
        value = (u % 2 == 0) ? gu : -gu;
      } else {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((ch * u) % period) / static_cast<double>(period);
        value = ((k + ch) % 2 == 0) ? Complex(root2 * std::cos(angle) * gu, 0.0)
                                    : Complex(0.0, root2 * std::sin(angle) * gu);
      }
      elements_(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(col)) = value;
    }
  }

  const ComplexMatrix gram = elements_.adjoint() * elements_;
  gram_deviation_ = (gram - ComplexMatrix::Identity(big_n, big_n)).cwiseAbs().maxCoeff();
  if (!(gram_deviation_ <= kGateTolerance))
    throw GateFailure("Wilson basis: Gram matrix deviates from identity by " + std::to_string(gram_deviation_));
}

std::size_t WilsonBasis::ordinal(WilsonIndex index) const {
  if (!is_admissible(index, m_, slots())) throw DomainError("Wilson index outside the admissible set");
  return static_cast<std::size_t>(ordinal_of_slot_[index.k * (m_ + 1) + index.n]);
}

Signal WilsonBasis::element(WilsonIndex index) const {
  const auto col = elements_.col(static_cast<Eigen::Index>(ordinal(index)));
  return Signal(ComplexVector(col.data(), col.data() + col.size()));
}

WilsonBasis build_wilson_basis(std::size_t n, std::size_t channels) { return WilsonBasis::build(n, channels); }

CoeffArray wilson_coefficients(const WilsonBasis& basis, const Signal& f) {
  if (f.size() != basis.dimension()) throw DimensionError("wilson_coefficients: signal length differs from N");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(f.size()));
  for (std::size_t t = 0; t < f.size(); ++t) v(static_cast<Eigen::Index>(t)) = f[t];
  const Eigen::VectorXcd c = basis.matrix().adjoint() * v;

  const std::size_t rows = 2 * basis.slots();
  const std::size_t cols = basis.channels() + 1;
  ComplexVector values(rows * cols, Complex{});
  std::vector<bool> mask(rows * cols, false);
  const auto& idx = basis.indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const std::size_t flat = idx[i].k * cols + idx[i].n;
    values[flat] = c(static_cast<Eigen::Index>(i));
    mask[flat] = true;
  }
  return CoeffArray({{AxisRole::Time, 1, rows}, {AxisRole::Frequency, 1, cols}}, std::move(values), std::move(mask));
}

Signal wilson_synthesis(const WilsonBasis& basis, const CoeffArray& coeffs) {
  const std::size_t rows = 2 * basis.slots();
  const std::size_t cols = basis.channels() + 1;
  if (coeffs.extents() != std::vector<std::size_t>{rows, cols})
    throw DimensionError("wilson_synthesis: coefficient grid does not match the basis");
  const auto values = coeffs.values();
  const auto& idx = basis.indices();
  Eigen::VectorXcd c(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) c(static_cast<Eigen::Index>(i)) = values[idx[i].k * cols + idx[i].n];
  const Eigen::VectorXcd f = basis.matrix() * c;
  return Signal(ComplexVector(f.data(), f.data() + f.size()));
}

CoeffArray tensor_wilson_coefficients(const WilsonBasis& basis, const KernelOperator& k) {
  if (k.size() != basis.dimension()) throw DimensionError("tensor_wilson_coefficients: kernel size differs from N");
  const auto& w = basis.matrix();
  const ComplexMatrix c = w.adjoint() * k.matrix() * w.conjugate();

  const std::size_t rows = 2 * basis.slots();
  const std::size_t cols = basis.channels() + 1;
  const std::size_t total = rows * rows * cols * cols;
  ComplexVector values(total, Complex{});
  std::vector<bool> mask(total, false);
  const auto& idx = basis.indices();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const std::size_t flat = ((idx[a].k * rows + idx[b].k) * cols + idx[a].n) * cols + idx[b].n;
      values[flat] = c(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      mask[flat] = true;
    }
  }
  return CoeffArray({{AxisRole::Time, 1, rows}, {AxisRole::Time, 2, rows}, {AxisRole::Frequency, 1, cols}, {AxisRole::Frequency, 2, cols}},
                    std::move(values), std::move(mask));
}

}  // namespace mixmod
