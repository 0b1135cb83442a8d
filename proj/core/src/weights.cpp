#include <algorithm>
#include <cmath>

#include "mixmod/mixed_norm.hpp"
#include "mixmod/rng.hpp"

namespace mixmod {

Weight Weight::one(std::size_t arity) { return Weight(Kind::One, 0.0, arity, "one", {}); }

Weight Weight::poly(double s, std::size_t arity) {
  if (!std::isfinite(s)) throw DomainError("Weight::poly: exponent must be finite");
  return Weight(Kind::Poly, s, arity, "poly", {});
}

Weight Weight::custom(std::string name, Function fn, std::size_t arity) {
  if (!fn) throw DomainError("Weight::custom: empty function");
  return Weight(Kind::Custom, 0.0, arity, std::move(name), std::move(fn));
}

double Weight::operator()(std::span<const long> z) const {
  if (arity_ != 0 && z.size() != arity_) throw DimensionError("weight_eval: arity mismatch");
  switch (kind_) {
    case Kind::One:
      return 1.0;
    case Kind::Poly: {
      if (s_ == 0.0) return 1.0;
      double r2 = 0.0;
      for (long v : z) r2 += static_cast<double>(v) * static_cast<double>(v);
      return std::pow(1.0 + std::sqrt(r2), s_);
    }
    case Kind::Custom:
      return fn_(z);
  }
  return 1.0;
}

Weight Weight::reciprocal() const {
  switch (kind_) {
    case Kind::One:
      return *this;
    case Kind::Poly:
      return poly(-s_, arity_);
    case Kind::Custom: {
      auto fn = fn_;
      return custom("1/" + name_, [fn](std::span<const long> z) { return 1.0 / fn(z); }, arity_);
    }
  }
  return *this;
}

double weight_eval(const Weight& w, std::span<const long> z) { return w(z); }

WeightLawReport check_weight_laws(const Weight& w, const Weight& v, std::size_t arity, std::size_t samples,
                                  std::uint64_t seed, long radius) {
  if (arity == 0) throw DimensionError("check_weight_laws: arity must be positive");
  if (radius < 1) throw DomainError("check_weight_laws: radius must be >= 1");
  WeightLawReport report;
  report.samples = samples;

  CounterRng rng(seed);
  std::vector<long> z1(arity), z2(arity), sum(arity);
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t j = 0; j < arity; ++j) {
      z1[j] = rng.uniform_int(-radius, radius);
      z2[j] = rng.uniform_int(-radius, radius);
      sum[j] = z1[j] + z2[j];
    }
    report.submultiplicative_ratio = std::max(report.submultiplicative_ratio, v(sum) / (v(z1) * v(z2)));
    report.moderate_constant = std::max(report.moderate_constant, w(sum) / (v(z1) * w(z2)));
  }

  std::vector<long> z(arity, 0), twice(arity, 0);
  for (long r = 1; r <= radius; ++r) {
    z[0] = r;
    twice[0] = 2 * r;
    report.probe_ratios.push_back(w(twice) / (v(z) * w(z)));
  }
  bool increasing = true;
  for (std::size_t i = 1; i < report.probe_ratios.size(); ++i)
    increasing = increasing && report.probe_ratios[i] > report.probe_ratios[i - 1];
  report.moderate_unbounded = increasing && report.probe_ratios.size() > 1 && report.probe_ratios.back() > 1.0;
  return report;
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || hit[v]) throw DomainError("Permutation: image is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t m) {
  std::vector<std::size_t> image(m);
  for (std::size_t i = 0; i < m; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::from_one_based(std::span<const std::size_t> image) {
  std::vector<std::size_t> zero(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == 0) throw DomainError("Permutation: one-based image contains 0");
    zero[i] = image[i] - 1;
  }
  return Permutation(std::move(zero));
}

std::vector<std::size_t> Permutation::one_based() const {
  std::vector<std::size_t> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

}  // namespace mixmod
