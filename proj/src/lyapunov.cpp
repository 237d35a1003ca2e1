#include "bcb/lyapunov.hpp"

#include "bcb/parallel.hpp"
#include "bcb/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace bcb {

double lambda_bound(const BoundInputs& in) {
  if (!(in.a_L >= 0.0) || !(in.a_R >= 0.0)) throw std::invalid_argument("lambda_bound: a_L and a_R must be >= 0");
  if (!(in.ell >= 0.0 && in.ell <= 1.0) || !(in.r >= 0.0 && in.r <= 1.0))
    throw std::invalid_argument("lambda_bound: ell and r must lie in [0, 1]");
  if (in.ell + in.r > 1.0 + 1e-12) throw std::invalid_argument("lambda_bound: ell + r must not exceed 1");
  if (in.d < 1) throw std::invalid_argument("lambda_bound: d must be at least 1");
  const double a = std::min(std::pow(in.a_L, in.ell) * std::pow(in.a_R, 1.0 - in.ell),
                            std::pow(in.a_L, 1.0 - in.r) * std::pow(in.a_R, in.r));
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  return ((in.ell + in.r - 1.0) * std::numbers::ln2 + std::log(a)) / in.d;
}

double simple_bound(double a_L, double a_R, int d) {
  if (d < 1) throw std::invalid_argument("simple_bound: d must be at least 1");
  const double a = std::min(a_L, a_R);
  if (!(a > 0.0)) return -std::numeric_limits<double>::infinity();
  return std::log(a) / d;
}

void attach_bounds(LyapReport& rep, const PwaMap<double>& map) {
  const DetMins dm = det_mins(map);
  const int d = static_cast<int>(map.dim());
  rep.simple_bound = simple_bound(dm.a_L, dm.a_R, d);
  if (rep.stats.n == 0) return;
  rep.lambda_bound = lambda_bound({dm.a_L, dm.a_R, rep.stats.l_frac(), rep.stats.r_frac(), d});
  rep.lambda_bound_tail = lambda_bound({dm.a_L, dm.a_R, rep.stats.l_tail_min, rep.stats.r_tail_min, d});
}

SphereEstimate sphere_measure_mc(const Mat& a, double c, long samples, std::uint64_t seed, unsigned threads) {
  if (a.rows() != a.cols() || a.rows() < 1) throw std::invalid_argument("sphere_measure_mc: A must be square");
  if (samples < 1) throw std::invalid_argument("sphere_measure_mc: samples must be at least 1");
  if (!(c >= 0.0)) throw std::invalid_argument("sphere_measure_mc: c must be non-negative");
  const double det = a.determinant();
  if (det == 0.0) throw std::invalid_argument("sphere_measure_mc: A is singular");

  constexpr long kChunk = 8192;
  const long chunks = (samples + kChunk - 1) / kChunk;
  std::vector<long> hits(static_cast<std::size_t>(chunks), 0);
  const Eigen::Index d = a.rows();
  parallel_for(
      hits.size(),
      [&](std::size_t k) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss;
        const long begin = static_cast<long>(k) * kChunk;
        const long end = std::min(samples, begin + kChunk);
        Vec v(d);
        long count = 0;
        for (long i = begin; i < end; ++i) {
          for (Eigen::Index j = 0; j < d; ++j) v(j) = gauss(rng);
          // Scale-free test on the raw Gaussian, so A = I is counted exactly.
          if ((a * v).norm() <= c * v.norm()) ++count;
        }
        hits[k] = count;
      },
      threads);

  long total = 0;
  for (long h : hits) total += h;
  SphereEstimate out;
  out.samples = samples;
  out.estimate = static_cast<double>(total) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  out.bound = std::pow(c, static_cast<double>(d)) / std::abs(det);
  return out;
}

std::vector<LyapRow> sweep_lyapunov(const BcnfParams& base, double lo, double hi, int count, double mu, long n,
                                    long burn_in, unsigned threads) {
  if (count < 1) throw std::invalid_argument("sweep_lyapunov: count must be at least 1");
  if (count > 1 && !(lo < hi)) throw std::invalid_argument("sweep_lyapunov: need lo < hi");
  const auto values = linspace(lo, hi, count);
  std::vector<LyapRow> rows(values.size());
  parallel_for(
      values.size(),
      [&](std::size_t i) {
        BcnfParams p = base;
        p.delta_R = values[i];
        p.mu = mu;
        const auto map = bcnf_map(p);
        Vec v0(2);
        v0 << 1.0, 0.0;
        auto rep = lyapunov_estimate(map, Vec(Vec::Zero(2)), v0, n, burn_in);
        attach_bounds(rep, map);
        rows[i] = {values[i],        mu,
                   rep.lambda_hat,   rep.lambda_bound,
                   rep.simple_bound, rep.stats.l_frac(),
                   rep.stats.r_frac(), rep.stats.on_sigma,
                   rep.stats.escaped};
      },
      threads);
  return rows;
}

}  // namespace bcb
