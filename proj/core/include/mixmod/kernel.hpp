#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "mixmod/types.hpp"

namespace mixmod {

using ComplexMatrix = Eigen::MatrixXcd;

/// Integral operator on C^N given by its kernel, (Af)(t) = sum_y k(t, y) f(y).
/// The operator is the kernel matrix itself (counting measure, no 1/N).
class KernelOperator {
 public:
  explicit KernelOperator(ComplexMatrix k);

  static KernelOperator zeros(std::size_t n);
  static KernelOperator identity(std::size_t n);
  /// k(t, y) = u(t) v(y)
  static KernelOperator tensor(const Signal& u, const Signal& v);

  std::size_t size() const { return static_cast<std::size_t>(k_.rows()); }
  const ComplexMatrix& matrix() const { return k_; }
  const Complex& operator()(std::size_t t, std::size_t y) const {
    return k_(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(y));
  }
  double frobenius_norm() const { return k_.norm(); }

 private:
  ComplexMatrix k_;
};

/// Kohn-Nirenberg symbol tau(t, xi) on Z_N x Z_N.
class KNSymbol {
 public:
  explicit KNSymbol(ComplexMatrix tau);

  std::size_t size() const { return static_cast<std::size_t>(tau_.rows()); }
  const ComplexMatrix& matrix() const { return tau_; }
  const Complex& operator()(std::size_t t, std::size_t xi) const {
    return tau_(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(xi));
  }
  double frobenius_norm() const { return tau_.norm(); }

 private:
  ComplexMatrix tau_;
};

}  // namespace mixmod
