#include "bcb/stability.hpp"

#include "bcb/parallel.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace bcb {

std::string to_string(Condition c) { return c == Condition::OmegaInterior ? "ii" : "iii"; }

std::string to_string(StabilityStatus s) {
  switch (s) {
    case StabilityStatus::Satisfied: return "satisfied";
    case StabilityStatus::Inconclusive: return "inconclusive";
    case StabilityStatus::Degenerate: return "degenerate";
  }
  return "unknown";
}

std::optional<Condition> parse_condition(const std::string& s) {
  if (s == "ii") return Condition::OmegaInterior;
  if (s == "iii") return Condition::UnionInterior;
  return std::nullopt;
}

StabilityReport smallest_m(const PwaMap<double>& map, const StarPolygon& omega, const StabilityOptions& opts) {
  if (map.dim() != 2) throw std::invalid_argument("smallest_m: map must be planar");
  if (opts.m_max < 1) throw std::invalid_argument("smallest_m: m_max must be at least 1");
  if (!validate(omega)) throw std::invalid_argument("smallest_m: Omega must contain the origin in its interior");
  const PwaMap<double> g = map.with_mu(0.0);

  StabilityReport report;
  report.condition = opts.condition;
  report.m = opts.m_max;

  StarPolygon previous = omega;  // g^{m-1}(Omega)
  StarPolygon xi = omega;        // union_{i<m} g^i(Omega)
  for (int m = 1; m <= opts.m_max; ++m) {
    StarPolygon current;
    try {
      current = image_polygon(g, previous, opts.simplify_rel_tol);
      if (m > 1) {
        xi = union_star(xi, previous);
        xi = simplify(xi, opts.simplify_rel_tol * xi.max_radius());
      }
    } catch (const DegenerateImage& e) {
      report.status = StabilityStatus::Degenerate;
      report.m = m;
      report.note = e.what();
      return report;
    }
    const StarPolygon& outer = opts.condition == Condition::UnionInterior ? xi : omega;
    report.eta = opts.eta > 0.0 ? opts.eta : opts.eta_rel * outer.diameter();
    report.per_step.push_back({m, current.vertex_count(), xi.vertex_count()});
    const bool ok = contains_in_interior(outer, current, report.eta);
    report.union_set = xi;
    report.image = current;
    if (ok) {
      report.status = StabilityStatus::Satisfied;
      report.m = m;
      return report;
    }
    if (current.vertex_count() > opts.max_vertices || xi.vertex_count() > opts.max_vertices) {
      report.status = StabilityStatus::Inconclusive;
      report.m = opts.m_max;
      report.note = "vertex limit exceeded at m = " + std::to_string(m);
      return report;
    }
    previous = std::move(current);
  }
  report.status = StabilityStatus::Inconclusive;
  return report;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw std::invalid_argument("linspace: count must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double steps = static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) out[i] = ((steps - i) * lo + i * hi) / steps;
  return out;
}

std::vector<SweepRow> sweep_delta_R(const BcnfParams& base, double lo, double hi, int count,
                                    const StabilityOptions& opts, const StarPolygon& omega, unsigned threads) {
  if (!(lo < hi)) throw std::invalid_argument("sweep_delta_R: need lo < hi");
  if (count < 2) throw std::invalid_argument("sweep_delta_R: count must be at least 2");
  const auto values = linspace(lo, hi, count);
  std::vector<SweepRow> rows(values.size());
  parallel_for(
      values.size(),
      [&](std::size_t i) {
        BcnfParams p = base;
        p.delta_R = values[i];
        p.mu = 0.0;
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = smallest_m(bcnf_map(p), omega, opts);
        const auto t1 = std::chrono::steady_clock::now();
        SweepRow row;
        row.delta_R = values[i];
        row.status = rep.status;
        if (rep.satisfied()) row.smallest_m = rep.m;
        row.wall_time = std::chrono::duration<double>(t1 - t0).count();
        rows[i] = row;
      },
      threads);
  return rows;
}

TrappingEvidence trapping_evidence(const PwaMap<double>& map, const StarPolygon& omega, double epsilon, int n_max,
                                   int grid) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("trapping_evidence: epsilon must be positive");
  if (grid < 2) throw std::invalid_argument("trapping_evidence: grid must be at least 2");
  if (map.dim() != 2) throw std::invalid_argument("trapping_evidence: map must be planar");
  const auto vs = omega.vertices();
  double x0 = vs[0].x(), x1 = x0, y0 = vs[0].y(), y1 = y0;
  for (const auto& v : vs) {
    x0 = std::min(x0, v.x());
    x1 = std::max(x1, v.x());
    y0 = std::min(y0, v.y());
    y1 = std::max(y1, v.y());
  }
  TrappingEvidence ev;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const Point q(x0 + (x1 - x0) * i / (grid - 1), y0 + (y1 - y0) * j / (grid - 1));
      const bool inside = point_in_polygon(vs, q) ||
                          [&] {
                            for (std::size_t k = 0; k < vs.size(); ++k)
                              if (point_segment_distance(q, vs[k], vs[(k + 1) % vs.size()]) == 0.0) return true;
                            return false;
                          }();
      if (!inside) continue;
      ++ev.samples;
      Vec x = q;
      int entry = 0;  // first step from which the orbit stays inside
      for (int n = 0; n <= n_max; ++n) {
        if (!(x.norm() < epsilon)) entry = n + 1;
        if (n < n_max) x = eval_map(map, x);
      }
      if (entry > n_max) {
        ++ev.failures;
      } else {
        ev.max_entry = std::max(ev.max_entry, entry);
      }
    }
  }
  ev.trapped = ev.samples > 0 && ev.failures == 0;
  return ev;
}

}  // namespace bcb
