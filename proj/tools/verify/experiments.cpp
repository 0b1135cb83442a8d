#include "experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <numbers>
#include <thread>

#include "mixmod/gabor.hpp"
#include "mixmod/mixed_norm.hpp"
#include "mixmod/operators.hpp"
#include "mixmod/rng.hpp"
#include "mixmod/tf_core.hpp"
#include "mixmod/wilson.hpp"

namespace verify {

using namespace mixmod;

namespace {

using Records = std::vector<TrialRecord>;

// Runs body(i) for i < count on a worker pool and concatenates the results in
// index order. The first failing trial (by index) is rethrown as TrialFailure.
Records parallel_trials(std::size_t count, const std::function<Records(std::size_t)>& body) {
  std::vector<Records> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = worker_count(count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Records out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const std::exception& e) {
        throw TrialFailure(i, e.what());
      }
    }
    for (auto& r : results[i]) out.push_back(std::move(r));
  }
  return out;
}

std::string p_label(const char* what, double p) { return std::string(what) + " p=" + format_double(p); }

TrialRecord upper(std::size_t i, std::string label, std::string dig, double lhs, double rhs, double tol,
                  bool relative = true) {
  double v = std::max(0.0, lhs - rhs);
  if (relative && rhs > 0) v /= rhs;
  return {i, std::move(label), std::move(dig), lhs, rhs, v, tol, true};
}

TrialRecord deviation(std::size_t i, std::string label, std::string dig, double measured, double tol) {
  return {i, std::move(label), std::move(dig), measured, 0.0, measured, tol, true};
}

TrialRecord info(std::size_t i, std::string label, std::string dig, double lhs, double rhs) {
  return {i, std::move(label), std::move(dig), lhs, rhs, 0.0, 0.0, false};
}

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Parseval system from a random window on the configured lattice.
GaborSystem random_parseval(CounterRng& rng, std::size_t n, std::size_t a, std::size_t b) {
  const GaborSystem raw(GaborLattice(n, a, b), Window::unit(random_signal(rng, n)));
  return canonical_system(raw, CanonicalKind::Tight);
}

ComplexMatrix gaussian_tensor(std::size_t n) {
  const auto g = gaussian_window(n);
  ComplexMatrix w(n, n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t y = 0; y < n; ++y) w(t, y) = g[t] * g[y];
  return w;
}

std::vector<Axis> kernel_axes(std::size_t e) {
  return {{AxisRole::Time, 1, e}, {AxisRole::Time, 2, e}, {AxisRole::Frequency, 1, e}, {AxisRole::Frequency, 2, e}};
}

CoeffArray random_array(CounterRng& rng, std::vector<Axis> axes) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.extent;
  ComplexVector v(total);
  for (auto& z : v) z = rng.complex_normal();
  return CoeffArray(std::move(axes), std::move(v));
}

Permutation random_permutation(CounterRng& rng, std::size_t m) {
  std::vector<std::size_t> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = i;
  for (std::size_t i = m; i-- > 1;) std::swap(img[i], img[static_cast<std::size_t>(rng.uniform_int(0, long(i)))]);
  return Permutation(std::move(img));
}

// ---------------------------------------------------------------------------

Report schatten_bound(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  r.trials = parallel_trials(c.trials, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    const auto sys = random_parseval(rng, c.n, c.a, c.b);
    const KernelOperator k(random_gaussian_matrix(rng, c.n, c.n));
    const auto dig = digest(k.matrix());
    const auto sigma = singular_values(k);
    Records out;
    for (double p : c.p_grid) {
      const double lhs = schatten_norm(sigma, p);
      const double rhs = schatten_bound_rhs(k, sys, p);
      out.push_back(upper(i, p_label("bound", p), dig, lhs, rhs, 1e-9));
      if (p == 2.0) {
        const double gap = std::abs(lhs - rhs) / k.frobenius_norm();
        out.push_back({i, "equality p=2", dig, lhs, rhs, gap, 1e-8, true});
      }
    }
    return out;
  });
  return r;
}

Report lemma31(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  r.trials = parallel_trials(c.trials, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    const auto sys = random_parseval(rng, c.n, c.a, c.b);
    const ComplexMatrix f = random_orthonormal(rng, c.n, c.n);
    const ComplexMatrix g = random_orthonormal(rng, c.n, c.n);
    const ComplexMatrix big_g = random_gaussian_matrix(rng, c.n, sys.size());
    const auto dig = digest(big_g);
    const ComplexMatrix& phi = sys.synthesis_matrix();
    // analysis(j, n) = <f_j, phi_n>, pairing(n, j) = <G(., n), g_j>
    const ComplexMatrix analysis = f.adjoint().conjugate() * phi.conjugate();
    const ComplexMatrix pairing = big_g.transpose() * g.conjugate();
    Eigen::VectorXcd t(c.n);
    for (std::size_t j = 0; j < c.n; ++j) t(j) = analysis.row(j).transpose().cwiseProduct(pairing.col(j)).sum();
    Records out;
    for (double p : c.p_grid) {
      double lhs = 0, rhs = 0;
      for (Eigen::Index j = 0; j < t.size(); ++j) lhs += std::pow(std::abs(t(j)), p);
      for (Eigen::Index n = 0; n < big_g.cols(); ++n) rhs += std::pow(big_g.col(n).norm(), p);
      out.push_back(upper(i, p_label("T(G)", p), dig, std::pow(lhs, 1 / p), std::pow(rhs, 1 / p), 1e-9, false));
    }
    return out;
  });
  return r;
}

Report kn_roundtrip(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const double tol = 1e-12;
  r.trials = parallel_trials(c.trials, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    const KernelOperator k(random_gaussian_matrix(rng, c.n, c.n));
    const KNSymbol s(random_gaussian_matrix(rng, c.n, c.n));
    const auto dig = digest(k.matrix());
    const auto tau = kernel_to_kn(k);
    const double scale = std::sqrt(double(c.n));
    Records out;
    out.push_back(deviation(i, "kernel->symbol->kernel", dig, max_abs(kn_to_kernel(tau).matrix() - k.matrix()), tol));
    out.push_back(
        deviation(i, "symbol->kernel->symbol", digest(s.matrix()), max_abs(kernel_to_kn(kn_to_kernel(s)).matrix() - s.matrix()), tol));
    out.push_back(deviation(i, "frobenius scale sqrt(N)", dig,
                            std::abs(tau.frobenius_norm() - scale * k.frobenius_norm()) / tau.frobenius_norm(), tol));
    return out;
  });

  // Closed-form symbols.
  const std::size_t n = c.n, idx = c.trials;
  const auto ident = kn_to_kernel(KNSymbol(ComplexMatrix::Ones(n, n)));
  r.trials.push_back(deviation(idx, "constant symbol -> identity", "", max_abs(ident.matrix() - ComplexMatrix::Identity(n, n)), tol));
  ComplexMatrix mult(n, n), want_diag = ComplexMatrix::Zero(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    const Complex m(1.0 + double(t), -0.5 * double(t));
    mult.row(t).setConstant(m);
    want_diag(t, t) = m;
  }
  r.trials.push_back(deviation(idx, "multiplier symbol -> diagonal", "", max_abs(kn_to_kernel(KNSymbol(mult)).matrix() - want_diag), tol));
  ComplexMatrix shift(n, n), want_shift = ComplexMatrix::Zero(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t xi = 0; xi < n; ++xi) shift(t, xi) = std::polar(1.0, 2 * std::numbers::pi * double(xi) / double(n));
    want_shift(t, (t + 1) % n) = 1.0;
  }
  r.trials.push_back(deviation(idx, "phase symbol -> cyclic shift", "", max_abs(kn_to_kernel(KNSymbol(shift)).matrix() - want_shift), tol));
  return r;
}

Report kn_magnitude(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const double tol = 1e-9;
  const std::size_t samples = c.n <= 4 ? 0 : 4096;
  // Record 0 is always the exhaustive check at N = 4.
  r.trials = parallel_trials(c.trials + 1, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    const std::size_t n = i == 0 ? 4 : c.n;
    const KernelOperator k(random_gaussian_matrix(rng, n, n));
    const KernelOperator w(random_gaussian_matrix(rng, n, n));
    const auto m = kn_tf_magnitude_check(k, w, i == 0 ? 0 : samples, rng.next_u64());
    const std::string label = (m.exhaustive ? "exhaustive N=" : "sampled N=") + std::to_string(n) + " tuples=" +
                              std::to_string(m.tuples);
    return Records{deviation(i, label, digest(k.matrix()), m.max_deviation, tol)};
  });
  return r;
}

Report norm_equivalence(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const ComplexMatrix window = gaussian_tensor(c.n);
  const ComplexMatrix window_symbol = kernel_to_kn(KernelOperator(window)).matrix();
  const auto slice = kernel_slice_permutation(1);
  r.trials = parallel_trials(c.trials, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    const KernelOperator k(random_gaussian_matrix(rng, c.n, c.n));
    const auto dig = digest(k.matrix());
    const ComplexMatrix tau = kernel_to_kn(k).matrix();
    const auto vk = stft_full_2d(k.matrix(), window);
    const auto vt = stft_full_2d(tau, window_symbol);
    Records out;
    for (double p : c.p_grid) {
      const auto spec = MixedNormSpec::permuted({2, 2, p, p}, slice);
      const double kernel_norm = mixed_norm(vk, spec);
      const double symbol_norm = mixed_norm(vt, spec) / double(c.n);
      if (p == 2.0)
        out.push_back({i, "ratio p=2", dig, kernel_norm, symbol_norm, std::abs(kernel_norm / symbol_norm - 1), 1e-10, true});
      else
        out.push_back(info(i, p_label("ratio", p), dig, kernel_norm, symbol_norm));
    }
    return out;
  });
  for (double p : c.p_grid) {
    double lo = INFINITY, hi = 0;
    const std::string tag = p == 2.0 ? "ratio p=2" : p_label("ratio", p);
    for (const auto& t : r.trials)
      if (t.label == tag) {
        lo = std::min(lo, t.lhs / t.rhs);
        hi = std::max(hi, t.lhs / t.rhs);
      }
    if (hi > 0) {
      r.observed["ratio_min p=" + format_double(p)] = lo;
      r.observed["ratio_max p=" + format_double(p)] = hi;
      r.observed["C p=" + format_double(p)] = std::max(hi, 1 / lo);
    }
  }
  return r;
}

// Tensor Wilson coefficients of the counterexample with lambda = (1+|j-K|)^{-1}.
Table sharpness_table(std::size_t channels) {
  Table t{"sharpness", {"K", "N", "S1", "relaxed_norm"}, {}};
  const auto perm = Permutation::from_one_based(std::vector<std::size_t>{2, 4, 1, 3});
  const auto spec = MixedNormSpec::permuted({2, 2, 1, kInfinity}, perm);
  for (std::size_t slots = 2; 2 * channels * slots <= 64; slots *= 2) {
    const std::size_t n = 2 * channels * slots;
    const auto basis = build_wilson_basis(n, channels);
    std::vector<SpectrumEntry> lambda;
    for (const auto& idx : basis.indices()) {
      const double jc = std::abs(double(idx.k) - double(slots));
      lambda.push_back({idx, 1.0 / (1.0 + jc)});
    }
    const auto k = build_counterexample(basis, lambda);
    t.rows.push_back({double(slots), double(n), schatten_norm(k, 1.0),
                      mixed_norm(tensor_wilson_coefficients(basis, k), spec)});
  }
  return t;
}

Report counterexample(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const auto basis = build_wilson_basis(c.n, c.channels);
  const double tol = 1e-9;
  auto spectrum_record = [&](std::size_t i, std::string label, const std::vector<SpectrumEntry>& lambda) {
    const auto k = build_counterexample(basis, lambda);
    std::vector<double> want(c.n, 0.0);
    for (std::size_t j = 0; j < lambda.size(); ++j) want[j] = std::abs(lambda[j].value);
    std::sort(want.rbegin(), want.rend());
    const auto got = singular_values(k).values;
    double dev = 0;
    for (std::size_t j = 0; j < c.n; ++j) dev = std::max(dev, std::abs(got[j] - want[j]));
    return deviation(i, std::move(label), digest(k.matrix()), dev, tol);
  };
  // Record 0: geometric lambda over every admissible index.
  r.trials = parallel_trials(c.trials + 1, [&](std::size_t i) {
    std::vector<SpectrumEntry> lambda;
    if (i == 0) {
      for (std::size_t j = 0; j < basis.indices().size(); ++j) lambda.push_back({basis.indices()[j], std::ldexp(1.0, -int(j))});
      return Records{spectrum_record(i, "geometric", lambda)};
    }
    CounterRng rng(c.seed, i);
    for (const auto& idx : basis.indices())
      if (rng.uniform() < 0.5) lambda.push_back({idx, rng.complex_normal()});
    return Records{spectrum_record(i, "random subset", lambda)};
  });
  r.tables.push_back(sharpness_table(c.channels));
  const auto& rows = r.tables.back().rows;
  if (!rows.empty()) {
    double spread = 0;
    for (const auto& row : rows) spread = std::max(spread, std::abs(row[3] / rows.front()[3] - 1));
    r.observed["relaxed_norm_spread"] = spread;
    r.observed["S1_growth"] = rows.back()[2] / rows.front()[2];
  }
  r.observed["gram_deviation"] = basis.gram_deviation();
  return r;
}

// Family (1+|n|)^{-beta} on the outer box of radius R; inner extents 1.
std::pair<double, double> witness_norms(double beta, double s, double p, std::size_t radius) {
  const std::size_t e = 2 * radius + 1;
  ComplexVector v(e * e);
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < e; ++b)
      v[a * e + b] = std::pow(1.0 + std::hypot(double(a) - double(radius), double(b) - double(radius)), -beta);
  const CoeffArray x({{AxisRole::Time, 1, 1}, {AxisRole::Frequency, 1, 1}, {AxisRole::Time, 2, e}, {AxisRole::Frequency, 2, e}},
                     std::move(v));
  MixedNormSpec weighted = MixedNormSpec::unweighted({2, 2, 2, 2});
  weighted.weight = Weight::poly(s);
  return {mixed_norm(x, weighted), mixed_norm(x, MixedNormSpec::unweighted({2, 2, p, p}))};
}

Report embedding(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const std::size_t d = 1;
  const double s = c.s;
  const std::size_t e = c.n;
  const std::size_t truncation = std::max<std::size_t>(8, e);  // box covers every centered index
  Records recs;
  for (double p : c.p_grid) {
    if (!embedding_condition_holds(d, s, p)) {
      recs.push_back(info(0, p_label("outside region", p), "", p, 2.0 * d / (d + s)));
      continue;
    }
    const auto emb = embedding_constant(d, s, p, truncation);
    r.observed["C p=" + format_double(p)] = emb.constant;
    r.observed["C_upper p=" + format_double(p)] = emb.upper_bound;
    auto trials = parallel_trials(c.trials, [&](std::size_t i) {
      CounterRng rng(c.seed, i);
      const auto x = random_array(rng, kernel_axes(e));
      const double lhs = mixed_norm(x, MixedNormSpec::unweighted({2, 2, p, p}));
      MixedNormSpec weighted = MixedNormSpec::unweighted({2, 2, 2, 2});
      weighted.weight = Weight::custom("outer", [s](std::span<const long> z) {
        return std::pow(1.0 + std::hypot(double(z[2]), double(z[3])), s);
      });
      return Records{upper(i, p_label("holder", p), digest(x.values()), lhs, emb.constant * mixed_norm(x, weighted), 1e-12)};
    });
    recs.insert(recs.end(), trials.begin(), trials.end());

    // Witness family between the two exponent thresholds.
    const double beta = 0.5 * (2.0 * d / p + d + s);
    r.observed["witness_beta p=" + format_double(p)] = beta;
    Table tab{"witness p=" + format_double(p), {"R", "weighted_l22", "l2p"}, {}};
    for (std::size_t radius = 4; radius <= 64; radius *= 2) {
      const auto [w, l] = witness_norms(beta, s, p, radius);
      tab.rows.push_back({double(radius), w, l});
    }
    for (std::size_t i = 1; i < tab.rows.size(); ++i) {
      const double growth = tab.rows[i][1] / tab.rows[i - 1][1];
      recs.push_back({c.trials + i, "witness growth R=" + format_double(tab.rows[i][0]), "", growth, 1.1,
                      std::max(0.0, 1.1 - growth), 0.0, true});
    }
    for (std::size_t i = 2; i < tab.rows.size(); ++i) {
      const double ratio = (tab.rows[i][2] - tab.rows[i - 1][2]) / (tab.rows[i - 1][2] - tab.rows[i - 2][2]);
      recs.push_back({c.trials + i, "witness increment ratio R=" + format_double(tab.rows[i][0]), "", ratio, 1.0,
                      ratio < 1.0 ? 0.0 : ratio, 0.0, true});
    }
    r.tables.push_back(std::move(tab));
  }
  // The critical exponent p = 2d/(d+s) must be refused.
  const double boundary = 2.0 * d / (d + s);
  bool refused = false;
  if (boundary >= 1.0 && boundary < 2.0) {
    try {
      embedding_constant(d, s, boundary, truncation);
    } catch (const DomainError&) {
      refused = true;
    }
    recs.push_back({c.trials + 100, "boundary p=" + format_double(boundary) + " flagged divergent", "", boundary,
                    boundary, refused ? 0.0 : 1.0, 0.0, true});
  }
  r.trials = std::move(recs);
  return r;
}

Report frame_suite(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const double tol = 1e-10;
  const GaborSystem raw(GaborLattice(c.n, c.a, c.b), gaussian_window(c.n));
  const auto bounds = frame_bounds(raw);
  const auto tight = canonical_system(raw, CanonicalKind::Tight);
  const auto dual = canonical_system(raw, CanonicalKind::Dual);
  const auto tb = frame_bounds(tight);
  r.observed["A"] = bounds.lower;
  r.observed["B"] = bounds.upper;
  Records recs;
  recs.push_back(deviation(0, "tight lower bound", "", std::abs(tb.lower - 1), tol));
  recs.push_back(deviation(0, "tight upper bound", "", std::abs(tb.upper - 1), tol));
  auto trials = parallel_trials(c.trials, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    auto f = random_signal(rng, c.n);
    f = Complex(1.0 / f.norm()) * f;
    const auto dig = digest(f.values());
    const auto g = Window::unit(random_signal(rng, c.n));
    Records out;
    const double energy = gabor_analysis(raw, f).energy();
    out.push_back({i, "frame inequality", dig, energy, bounds.upper,
                   std::max({0.0, bounds.lower - energy, energy - bounds.upper}), tol, true});
    out.push_back(deviation(i, "dual reconstruction", dig, max_abs_diff(gabor_synthesis(raw, gabor_analysis(dual, f)), f), tol));
    out.push_back(deviation(i, "dual reconstruction swapped", dig, max_abs_diff(gabor_synthesis(dual, gabor_analysis(raw, f)), f), tol));
    out.push_back(deviation(i, "stft inversion", dig, max_abs_diff(istft_full(stft_full(f, g), g, g), f), tol));
    for (double p : c.p_grid) {
      const auto spec = MixedNormSpec::unweighted({p, p});
      out.push_back(info(i, p_label("lattice/full", p), dig, modulation_norm_lattice(f, tight, spec),
                         modulation_norm_full(f, gaussian_window(c.n), spec)));
    }
    return out;
  });
  recs.insert(recs.end(), trials.begin(), trials.end());
  r.trials = std::move(recs);
  for (double p : c.p_grid) {
    double lo = INFINITY, hi = 0;
    for (const auto& t : r.trials)
      if (t.label == p_label("lattice/full", p)) {
        lo = std::min(lo, t.lhs / t.rhs);
        hi = std::max(hi, t.lhs / t.rhs);
      }
    if (hi > 0) {
      r.observed["lattice_ratio_min p=" + format_double(p)] = lo;
      r.observed["lattice_ratio_max p=" + format_double(p)] = hi;
    }
  }
  return r;
}

Report wilson_suite(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const double tol = 1e-10;
  const auto basis = build_wilson_basis(c.n, c.channels);
  Records recs;
  recs.push_back(deviation(0, "gram deviation", "", basis.gram_deviation(), tol));
  const auto swap = Permutation::from_one_based(std::vector<std::size_t>{2, 1});
  auto trials = parallel_trials(c.trials, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    const auto f = random_signal(rng, c.n);
    const auto dig = digest(f.values());
    const auto coeffs = wilson_coefficients(basis, f);
    Records out;
    out.push_back({i, "energy", dig, coeffs.energy(), f.norm_squared(),
                   std::abs(coeffs.energy() - f.norm_squared()) / f.norm_squared(), tol, true});
    out.push_back(deviation(i, "reconstruction", dig, max_abs_diff(wilson_synthesis(basis, coeffs), f) / f.norm(), tol));
    for (double p : c.p_grid) {
      const double direct = mixed_norm(coeffs, MixedNormSpec::unweighted({p, p}));
      const double swapped = mixed_norm(coeffs, MixedNormSpec::permuted({p, p}, swap));
      out.push_back({i, p_label("permutation invariance", p), dig, swapped, direct, std::abs(swapped - direct) / direct,
                     1e-12, true});
    }
    return out;
  });
  recs.insert(recs.end(), trials.begin(), trials.end());
  r.trials = std::move(recs);
  return r;
}

Report monotonicity(const ExperimentConfig& c) {
  Report r{c, {}, {}, {}};
  const double tol = 1e-12;
  r.trials = parallel_trials(c.trials, [&](std::size_t i) {
    CounterRng rng(c.seed, i);
    Records out;
    const auto x = random_array(rng, kernel_axes(3));
    const auto dig = digest(x.values());
    std::vector<double> p(4), q(4);
    for (std::size_t j = 0; j < 4; ++j) {
      p[j] = 1.0 + 3.0 * rng.uniform();
      q[j] = rng.uniform() < 0.2 ? kInfinity : p[j] + 3.0 * rng.uniform();
    }
    const auto c4 = random_permutation(rng, 4);
    out.push_back(upper(i, "exponent monotonicity", dig, mixed_norm(x, MixedNormSpec::permuted(q, c4)),
                        mixed_norm(x, MixedNormSpec::permuted(p, c4)), tol));

    MixedNormSpec lo = MixedNormSpec::permuted(p, c4), hi = lo;
    const double t = 2.0 * rng.uniform();
    lo.weight = Weight::poly(t);
    hi.weight = Weight::poly(t + 2.0 * rng.uniform());
    out.push_back(upper(i, "weight monotonicity", dig, mixed_norm(x, lo), mixed_norm(x, hi), tol));

    const double e = rng.uniform() < 0.1 ? kInfinity : 1.0 + 4.0 * rng.uniform();
    const double base = mixed_norm(x, MixedNormSpec::unweighted({e, e, e, e}));
    const double permuted = mixed_norm(x, MixedNormSpec::permuted({e, e, e, e}, random_permutation(rng, 4)));
    out.push_back({i, "permutation invariance", dig, permuted, base, std::abs(permuted - base) / base, tol, true});

    const KernelOperator k(random_gaussian_matrix(rng, c.n, c.n));
    const auto sigma = singular_values(k);
    const double ps = 1.0 + 3.0 * rng.uniform();
    const double qs = rng.uniform() < 0.1 ? kInfinity : ps + 3.0 * rng.uniform();
    out.push_back(upper(i, "schatten monotonicity", digest(k.matrix()), schatten_norm(sigma, qs), schatten_norm(sigma, ps), tol));
    return out;
  });
  return r;
}

}  // namespace

std::size_t worker_count(std::size_t jobs) {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VERIFY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::min(n, jobs));
}

Report run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto& name = cfg.name;
  if (name == "schatten-bound") return schatten_bound(cfg);
  if (name == "lemma31") return lemma31(cfg);
  if (name == "kn-roundtrip") return kn_roundtrip(cfg);
  if (name == "kn-magnitude") return kn_magnitude(cfg);
  if (name == "norm-equivalence") return norm_equivalence(cfg);
  if (name == "counterexample") return counterexample(cfg);
  if (name == "embedding") return embedding(cfg);
  if (name == "frame-suite") return frame_suite(cfg);
  if (name == "wilson-suite") return wilson_suite(cfg);
  return monotonicity(cfg);
}

}  // namespace verify
