#pragma once

// Weights, coordinate permutations, and iterated mixed norms
// l^{p_1,...,p_m}_w on labeled coefficient arrays, plus the mixed modulation
// norms built from them.
//
// Norm evaluation order: the array is first reindexed by the permutation,
// then multiplied entrywise by the weight at the centered index
// (i -> i - floor(E/2) per axis), then reduced with l^{p_1} over axis 1
// (innermost), l^{p_2} over axis 2, and so on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mixmod/gabor.hpp"
#include "mixmod/kernel.hpp"
#include "mixmod/types.hpp"

namespace mixmod {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Positive weight on Z^m. Arity 0 accepts any index length.
class Weight {
 public:
  enum class Kind { One, Poly, Custom };
  using Function = std::function<double(std::span<const long>)>;

  static Weight one(std::size_t arity = 0);
  /// v_s(z) = (1 + |z|)^s with the Euclidean norm.
  static Weight poly(double s, std::size_t arity = 0);
  static Weight custom(std::string name, Function fn, std::size_t arity = 0);

  Kind kind() const { return kind_; }
  double exponent() const { return s_; }
  std::size_t arity() const { return arity_; }
  const std::string& name() const { return name_; }

  /// Throws DimensionError on arity mismatch.
  double operator()(std::span<const long> z) const;

  /// 1 / w, used for dual pairings.
  Weight reciprocal() const;

 private:
  Weight(Kind kind, double s, std::size_t arity, std::string name, Function fn)
      : kind_(kind), s_(s), arity_(arity), name_(std::move(name)), fn_(std::move(fn)) {}

  Kind kind_;
  double s_;
  std::size_t arity_;
  std::string name_;
  Function fn_;
};

double weight_eval(const Weight& w, std::span<const long> z);

struct WeightLawReport {
  std::size_t samples = 0;
  /// max v(z1 + z2) / (v(z1) v(z2)); <= 1 for a submultiplicative v.
  double submultiplicative_ratio = 0.0;
  /// max w(z1 + z2) / (v(z1) w(z2)): the smallest moderateness constant C observed.
  double moderate_constant = 0.0;
  /// Ratio w(2z) / (v(z) w(z)) along z = (r, 0, ..., 0), r = 1..radius.
  std::vector<double> probe_ratios;
  /// Probe ratios strictly increasing and ending above 1: no finite C.
  bool moderate_unbounded = false;
};

/// Random sampling of z1, z2 in the box [-radius, radius]^m, deterministic in seed.
WeightLawReport check_weight_laws(const Weight& w, const Weight& v, std::size_t arity, std::size_t samples,
                                  std::uint64_t seed, long radius = 8);

/// Bijection c on {1..m}, stored 0-based. Acts on vectors by c(x)_i = x_{c(i)}.
class Permutation {
 public:
  /// From a 0-based image; throws DomainError unless it is a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t m);
  static Permutation from_one_based(std::span<const std::size_t> image);

  std::size_t arity() const { return image_.size(); }
  /// 0-based c(i).
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  std::vector<std::size_t> one_based() const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Reindex so that the result enumerates A o c: result axis c(j) is input axis j.
CoeffArray permute_axes(const CoeffArray& a, const Permutation& c);

/// c maps {1..d} u {2d+1..3d} onto {1..2d} and {d+1..2d} u {3d+1..4d} onto {2d+1..4d}.
/// Throws DimensionError unless arity = 4d.
bool is_slice_permutation(const Permutation& c, std::size_t d);

/// The slice permutation that puts (time,1), (frequency,1) innermost and
/// (time,2), (frequency,2) outermost for 4d-axis kernel arrays; image
/// (1, 3, 2, 4) for d = 1.
Permutation kernel_slice_permutation(std::size_t d = 1);

struct MixedNormSpec {
  std::vector<double> exponents;
  Permutation permutation;
  Weight weight;

  /// Identity permutation, unit weight.
  static MixedNormSpec unweighted(std::vector<double> exponents);
  static MixedNormSpec permuted(std::vector<double> exponents, Permutation c);
};

/// Throws DimensionError on arity mismatch, DomainError on an exponent < 1.
double mixed_norm(const CoeffArray& a, const MixedNormSpec& spec);

/// Mixed modulation norm of a signal from its full-grid STFT (arity 2).
double modulation_norm_full(const Signal& f, const Window& g, const MixedNormSpec& spec);

/// Mixed modulation norm of a kernel from its 4-axis full-grid STFT with the
/// given window function on Z_N x Z_N (arity 4).
double modulation_norm_full(const KernelOperator& k, const ComplexMatrix& window, const MixedNormSpec& spec);

/// Mixed norm of the lattice-sampled coefficients gabor_analysis(sys, f).
double modulation_norm_lattice(const Signal& f, const GaborSystem& sys, const MixedNormSpec& spec);

/// p' with 1/p + 1/p' = 1 (1 <-> infinity).
std::vector<double> conjugate_exponents(std::span<const double> p);

/// |sum A conj(B)| over entries admissible in both.
double duality_pairing(const CoeffArray& a, const CoeffArray& b);

/// p > 2d / (d + s) and s >= 0.
bool embedding_condition_holds(std::size_t d, double s, double p);

struct EmbeddingConstant {
  double q = 0.0;            // 2p / (2 - p); infinity at p = 2
  double constant = 1.0;     // ||(1+|n|)^{-s}||_{l^q} over the centered box
  double tail_bound = 0.0;   // integral-test bound on the q-th power tail outside the box
  double upper_bound = 1.0;  // (partial^q + tail)^{1/q}: bound for the full lattice constant
};

/// Hoelder constant C with ||x||_{l^{2,p}} <= C ||x||_{l^{2,2}} (outer weight
/// (1+|n|)^s) on Z^{2d} x Z^{2d}, summed over the box |n_i| <= truncation.
/// Requires 1 <= p <= 2, s >= 0 and p > 2d/(d+s); otherwise throws DomainError
/// (no finite constant is claimed).
EmbeddingConstant embedding_constant(std::size_t d, double s, double p, std::size_t truncation);

}  // namespace mixmod
