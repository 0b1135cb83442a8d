#pragma once

// Value types shared by every module: finite signals on Z_N, windows, and
// labeled multi-axis coefficient arrays.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mixmod {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Operand shapes do not agree (lengths, extents, arities).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the region where the operation is defined.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The frame operator is singular (lower frame bound numerically zero).
class NotAFrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An eigen/singular value solver failed to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduce an integer shift onto {0..n-1}.
std::size_t wrap_index(long v, std::size_t n);

/// Complex vector of length N >= 1 with finite entries, indexed by t in Z_N.
class Signal {
 public:
  explicit Signal(ComplexVector values);
  Signal(std::initializer_list<Complex> values);

  static Signal zeros(std::size_t n);
  static Signal ones(std::size_t n);
  static Signal impulse(std::size_t n, std::size_t at = 0);

  std::size_t size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t t) const { return values_[t]; }

  double norm() const;
  double norm_squared() const;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  ComplexVector values_;
};

/// <f, h> = sum_t f(t) conj(h(t)); linear in the first slot.
Complex inner(const Signal& f, const Signal& h);

Signal operator+(const Signal& f, const Signal& h);
Signal operator-(const Signal& f, const Signal& h);
Signal operator*(Complex c, const Signal& f);

double max_abs_diff(const Signal& f, const Signal& h);

enum class Normalization { Unit, Raw };

/// A signal used as an analysis/synthesis window. Unit-tagged windows are
/// normalized to ||g||_2 = 1 on construction.
class Window {
 public:
  /// Normalizes; throws DomainError for the zero signal.
  static Window unit(const Signal& g);
  static Window raw(Signal g);

  const Signal& signal() const { return signal_; }
  Normalization normalization() const { return tag_; }
  std::size_t size() const { return signal_.size(); }
  const Complex& operator[](std::size_t t) const { return signal_[t]; }

 private:
  Window(Signal g, Normalization tag) : signal_(std::move(g)), tag_(tag) {}

  Signal signal_;
  Normalization tag_;
};

enum class AxisRole { Time, Frequency };

const char* to_string(AxisRole role);
AxisRole axis_role_from_string(const std::string& s);

/// One labeled axis: (role, variable index, extent). Variable indices are
/// 1-based to match the kernel variables (t, y) = (1, 2).
struct Axis {
  AxisRole role = AxisRole::Time;
  int var = 1;
  std::size_t extent = 0;

  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Multi-axis complex array stored row-major in the order of `axes`
/// (the last axis varies fastest). An optional mask marks structural slots;
/// masked-out entries are held at zero and skipped by norms.
class CoeffArray {
 public:
  CoeffArray(std::vector<Axis> axes, ComplexVector values, std::vector<bool> mask = {});

  static CoeffArray zeros(std::vector<Axis> axes);

  const std::vector<Axis>& axes() const { return axes_; }
  std::size_t rank() const { return axes_.size(); }
  std::vector<std::size_t> extents() const;
  std::size_t size() const { return values_.size(); }

  std::span<const Complex> values() const { return values_; }
  const std::vector<bool>& mask() const { return mask_; }
  bool has_mask() const { return !mask_.empty(); }
  bool admissible(std::size_t flat) const { return mask_.empty() || mask_[flat]; }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  const Complex& at(std::span<const std::size_t> index) const;
  const Complex& at(std::initializer_list<std::size_t> index) const;

  /// Sum of |x|^2 over admissible entries.
  double energy() const;

  friend bool operator==(const CoeffArray&, const CoeffArray&) = default;

 private:
  std::vector<Axis> axes_;
  ComplexVector values_;
  std::vector<bool> mask_;
};

/// Row-major strides for the given extents.
std::vector<std::size_t> row_major_strides(std::span<const std::size_t> extents);

}  // namespace mixmod
