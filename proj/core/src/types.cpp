#include "mixmod/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

namespace mixmod {

std::size_t wrap_index(long v, std::size_t n) {
  const long m = static_cast<long>(n);
  long r = v % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

Signal::Signal(ComplexVector values) : values_(std::move(values)) {
  if (values_.empty()) throw DimensionError("Signal: length must be >= 1");
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("Signal: non-finite entry");
  }
}

Signal::Signal(std::initializer_list<Complex> values) : Signal(ComplexVector(values)) {}

Signal Signal::zeros(std::size_t n) { return Signal(ComplexVector(n, Complex{})); }

Signal Signal::ones(std::size_t n) { return Signal(ComplexVector(n, Complex{1.0, 0.0})); }

Signal Signal::impulse(std::size_t n, std::size_t at) {
  ComplexVector v(n, Complex{});
  if (at >= n) throw DimensionError("Signal::impulse: position out of range");
  v[at] = 1.0;
  return Signal(std::move(v));
}

double Signal::norm_squared() const {
  double s = 0.0;
  for (const auto& v : values_) s += std::norm(v);
  return s;
}

double Signal::norm() const { return std::sqrt(norm_squared()); }

Complex inner(const Signal& f, const Signal& h) {
  if (f.size() != h.size()) throw DimensionError("inner: length mismatch");
  Complex s{};
  for (std::size_t t = 0; t < f.size(); ++t) s += f[t] * std::conj(h[t]);
  return s;
}

namespace {

template <typename Op>
Signal zip(const Signal& f, const Signal& h, Op op) {
  if (f.size() != h.size()) throw DimensionError("Signal arithmetic: length mismatch");
  ComplexVector out(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) out[t] = op(f[t], h[t]);
  return Signal(std::move(out));
}

}  // namespace

Signal operator+(const Signal& f, const Signal& h) {
  return zip(f, h, [](Complex a, Complex b) { return a + b; });
}

Signal operator-(const Signal& f, const Signal& h) {
  return zip(f, h, [](Complex a, Complex b) { return a - b; });
}

Signal operator*(Complex c, const Signal& f) {
  ComplexVector out(f.values().begin(), f.values().end());
  for (auto& v : out) v *= c;
  return Signal(std::move(out));
}

double max_abs_diff(const Signal& f, const Signal& h) {
  if (f.size() != h.size()) throw DimensionError("max_abs_diff: length mismatch");
  double m = 0.0;
  for (std::size_t t = 0; t < f.size(); ++t) m = std::max(m, std::abs(f[t] - h[t]));
  return m;
}

Window Window::unit(const Signal& g) {
  const double n = g.norm();
  if (n == 0.0) throw DomainError("Window::unit: zero window");
  return Window((1.0 / n) * g, Normalization::Unit);
}

Window Window::raw(Signal g) { return Window(std::move(g), Normalization::Raw); }

const char* to_string(AxisRole role) { return role == AxisRole::Time ? "time" : "frequency"; }

AxisRole axis_role_from_string(const std::string& s) {
  if (s == "time") return AxisRole::Time;
  if (s == "frequency") return AxisRole::Frequency;
  throw DomainError("unknown axis role: " + s);
}

std::vector<std::size_t> row_major_strides(std::span<const std::size_t> extents) {
  std::vector<std::size_t> strides(extents.size(), 1);
  for (std::size_t i = extents.size(); i-- > 1;) strides[i - 1] = strides[i] * extents[i];
  return strides;
}

CoeffArray::CoeffArray(std::vector<Axis> axes, ComplexVector values, std::vector<bool> mask)
    : axes_(std::move(axes)), values_(std::move(values)), mask_(std::move(mask)) {
  std::size_t count = 1;
  std::set<std::pair<AxisRole, int>> seen;
  for (const auto& a : axes_) {
    count *= a.extent;
    if (!seen.emplace(a.role, a.var).second)
      throw DimensionError("CoeffArray: duplicate (role, var) axis label");
  }
  if (count != values_.size())
    throw DimensionError("CoeffArray: product of extents does not match value count");
  if (!mask_.empty() && mask_.size() != values_.size())
    throw DimensionError("CoeffArray: mask size does not match value count");
}

CoeffArray CoeffArray::zeros(std::vector<Axis> axes) {
  std::size_t count = 1;
  for (const auto& a : axes) count *= a.extent;
  return CoeffArray(std::move(axes), ComplexVector(count, Complex{}));
}

std::vector<std::size_t> CoeffArray::extents() const {
  std::vector<std::size_t> e;
  e.reserve(axes_.size());
  for (const auto& a : axes_) e.push_back(a.extent);
  return e;
}

std::size_t CoeffArray::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != axes_.size()) throw DimensionError("CoeffArray: index arity mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (index[i] >= axes_[i].extent) throw DimensionError("CoeffArray: index out of range");
    flat = flat * axes_[i].extent + index[i];
  }
  return flat;
}

const Complex& CoeffArray::at(std::span<const std::size_t> index) const {
  return values_[flat_index(index)];
}

const Complex& CoeffArray::at(std::initializer_list<std::size_t> index) const {
  return at(std::span<const std::size_t>(index.begin(), index.size()));
}

double CoeffArray::energy() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (admissible(i)) s += std::norm(values_[i]);
  return s;
}

}  // namespace mixmod
