#include "mixmod/mixed_norm.hpp"

#include <algorithm>
#include <cmath>

#include "mixmod/tf_core.hpp"

namespace mixmod {

namespace {

// l^p norm of the strided slice values[offset + i * stride], i < count.
double slice_norm(const std::vector<double>& values, std::size_t offset, std::size_t stride, std::size_t count,
                  double p) {
  double peak = 0.0;
  for (std::size_t i = 0; i < count; ++i) peak = std::max(peak, values[offset + i * stride]);
  if (p == kInfinity || peak == 0.0) return peak;
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += std::pow(values[offset + i * stride] / peak, p);
  return peak * std::pow(sum, 1.0 / p);
}

void check_exponents(std::span<const double> p) {
  for (double v : p)
    if (!(v >= 1.0)) throw DomainError("mixed_norm: exponents must lie in [1, inf]");
}

}  // namespace

CoeffArray permute_axes(const CoeffArray& a, const Permutation& c) {
  const std::size_t m = a.rank();
  if (c.arity() != m) throw DimensionError("permute_axes: permutation arity differs from axis count");

  std::vector<Axis> axes(m);
  for (std::size_t j = 0; j < m; ++j) axes[c(j)] = a.axes()[j];
  std::vector<std::size_t> out_ext(m);
  for (std::size_t i = 0; i < m; ++i) out_ext[i] = axes[i].extent;
  const auto out_strides = row_major_strides(out_ext);

  // stride in the output of each input axis
  std::vector<std::size_t> moved(m);
  for (std::size_t j = 0; j < m; ++j) moved[j] = out_strides[c(j)];

  const auto in_ext = a.extents();
  const auto values = a.values();
  ComplexVector out(values.size());
  std::vector<bool> mask(a.has_mask() ? values.size() : 0);
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    std::size_t target = 0;
    for (std::size_t j = 0; j < m; ++j) target += idx[j] * moved[j];
    out[target] = values[flat];
    if (a.has_mask()) mask[target] = a.mask()[flat];
    for (std::size_t j = m; j-- > 0;) {
      if (++idx[j] < in_ext[j]) break;
      idx[j] = 0;
    }
  }
  return CoeffArray(std::move(axes), std::move(out), std::move(mask));
}

bool is_slice_permutation(const Permutation& c, std::size_t d) {
  if (d == 0 || c.arity() != 4 * d) throw DimensionError("is_slice_permutation: arity must be 4d");
  for (std::size_t i = 0; i < 4 * d; ++i) {
    const bool first_variable = i < d || (i >= 2 * d && i < 3 * d);
    const bool lands_inner = c(i) < 2 * d;
    if (first_variable != lands_inner) return false;
  }
  return true;
}

Permutation kernel_slice_permutation(std::size_t d) {
  if (d == 0) throw DomainError("kernel_slice_permutation: d must be >= 1");
  std::vector<std::size_t> image(4 * d);
  for (std::size_t i = 0; i < d; ++i) {
    image[i] = i;                  // (time,1)      -> innermost block
    image[2 * d + i] = d + i;      // (frequency,1) -> second block
    image[d + i] = 2 * d + i;      // (time,2)      -> third block
    image[3 * d + i] = 3 * d + i;  // (frequency,2) -> outermost block
  }
  return Permutation(std::move(image));
}

MixedNormSpec MixedNormSpec::unweighted(std::vector<double> exponents) {
  const std::size_t m = exponents.size();
  return MixedNormSpec{std::move(exponents), Permutation::identity(m), Weight::one()};
}

MixedNormSpec MixedNormSpec::permuted(std::vector<double> exponents, Permutation c) {
  return MixedNormSpec{std::move(exponents), std::move(c), Weight::one()};
}

double mixed_norm(const CoeffArray& a, const MixedNormSpec& spec) {
  const std::size_t m = a.rank();
  if (spec.exponents.size() != m || spec.permutation.arity() != m)
    throw DimensionError("mixed_norm: exponent/permutation arity differs from axis count");
  if (spec.weight.arity() != 0 && spec.weight.arity() != m)
    throw DimensionError("mixed_norm: weight arity differs from axis count");
  check_exponents(spec.exponents);

  const CoeffArray r = spec.permutation.is_identity() ? a : permute_axes(a, spec.permutation);
  auto ext = r.extents();
  const auto values = r.values();

  std::vector<double> mag(values.size());
  const bool weighted = spec.weight.kind() != Weight::Kind::One;
  std::vector<long> centered(m);
  std::vector<std::size_t> idx(m, 0);
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    if (!r.admissible(flat)) {
      mag[flat] = 0.0;
    } else if (weighted) {
      for (std::size_t i = 0; i < m; ++i)
        centered[i] = static_cast<long>(idx[i]) - static_cast<long>(ext[i] / 2);
      mag[flat] = std::abs(values[flat]) * spec.weight(centered);
    } else {
      mag[flat] = std::abs(values[flat]);
    }
    if (weighted) {
      for (std::size_t j = m; j-- > 0;) {
        if (++idx[j] < ext[j]) break;
        idx[j] = 0;
      }
    }
  }

  // Axis 0 is the slowest in storage and the innermost norm.
  for (std::size_t axis = 0; axis < m; ++axis) {
    const std::size_t count = ext[axis];
    std::size_t rest = 1;
    for (std::size_t j = axis + 1; j < m; ++j) rest *= ext[j];
    std::vector<double> reduced(rest);
    for (std::size_t j = 0; j < rest; ++j) reduced[j] = slice_norm(mag, j, rest, count, spec.exponents[axis]);
    mag = std::move(reduced);
  }
  return mag.empty() ? 0.0 : mag.front();
}

double modulation_norm_full(const Signal& f, const Window& g, const MixedNormSpec& spec) {
  if (spec.exponents.size() != 2) throw DimensionError("modulation_norm_full: signals need a 2-axis spec");
  return mixed_norm(stft_full(f, g), spec);
}

double modulation_norm_full(const KernelOperator& k, const ComplexMatrix& window, const MixedNormSpec& spec) {
  if (spec.exponents.size() != 4) throw DimensionError("modulation_norm_full: kernels need a 4-axis spec");
  return mixed_norm(stft_full_2d(k.matrix(), window), spec);
}

double modulation_norm_lattice(const Signal& f, const GaborSystem& sys, const MixedNormSpec& spec) {
  if (spec.exponents.size() != 2) throw DimensionError("modulation_norm_lattice: signals need a 2-axis spec");
  return mixed_norm(gabor_analysis(sys, f), spec);
}

std::vector<double> conjugate_exponents(std::span<const double> p) {
  check_exponents(p);
  std::vector<double> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 1.0)
      out[i] = kInfinity;
    else if (p[i] == kInfinity)
      out[i] = 1.0;
    else
      out[i] = p[i] / (p[i] - 1.0);
  }
  return out;
}

double duality_pairing(const CoeffArray& a, const CoeffArray& b) {
  if (a.extents() != b.extents()) throw DimensionError("duality_pairing: extents differ");
  const auto av = a.values();
  const auto bv = b.values();
  Complex s{};
  for (std::size_t i = 0; i < av.size(); ++i)
    if (a.admissible(i) && b.admissible(i)) s += av[i] * std::conj(bv[i]);
  return std::abs(s);
}

bool embedding_condition_holds(std::size_t d, double s, double p) {
  if (d == 0) return false;
  const double dd = static_cast<double>(d);
  return s >= 0.0 && p > 2.0 * dd / (dd + s);
}

EmbeddingConstant embedding_constant(std::size_t d, double s, double p, std::size_t truncation) {
  if (d == 0) throw DomainError("embedding_constant: d must be >= 1");
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError("embedding_constant: p must lie in [1, 2]");
  if (!(s >= 0.0)) throw DomainError("embedding_constant: s must be >= 0");

  EmbeddingConstant out;
  if (p == 2.0) {
    out.q = kInfinity;
    return out;  // sup of (1+|n|)^{-s} is 1, attained at n = 0
  }
  if (!embedding_condition_holds(d, s, p))
    throw DomainError("embedding_constant: p <= 2d/(d+s); the weight series diverges, no finite constant");

  const std::size_t dim = 2 * d;
  const double q = 2.0 * p / (2.0 - p);
  const double decay = s * q;
  out.q = q;

  const long radius = static_cast<long>(truncation);
  std::vector<long> n(dim, -radius);
  double partial = 0.0;
  while (true) {
    double r2 = 0.0;
    for (long v : n) r2 += static_cast<double>(v) * static_cast<double>(v);
    partial += std::pow(1.0 + std::sqrt(r2), -decay);
    std::size_t j = dim;
    while (j-- > 0) {
      if (++n[j] <= radius) break;
      n[j] = -radius;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }

  // Points with max-norm r number at most 2D(2r+1)^{D-1} <= D 2^D (1+r)^{D-1}
  // and have |n| >= r; compare the radial sum with its integral.
  const double big_d = static_cast<double>(dim);
  out.tail_bound = big_d * std::pow(2.0, big_d) * std::pow(1.0 + static_cast<double>(truncation), big_d - decay) /
                   (decay - big_d);
  out.constant = std::pow(partial, 1.0 / q);
  out.upper_bound = std::pow(partial + out.tail_bound, 1.0 / q);
  return out;
}

}  // namespace mixmod
