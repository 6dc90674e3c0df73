#include "vclass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "vclass/extremal.hpp"
#include "vclass/metrics.hpp"
#include "vclass/specfun.hpp"

namespace vclass {
namespace {

double two_point_delta(double a, bool mirrored) {
  const DiscreteDistribution d = make_two_point({a});
  return kolmogorov_distance(mirrored ? d.mirrored() : d).delta;
}

// Uniform on [0, 1) from the top 53 bits.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on (0, 1].
double open_unit_uniform(std::mt19937_64& rng) { return 1.0 - unit_uniform(rng); }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

DiscreteDistribution sample_uniform(std::mt19937_64& rng, int max_atoms) {
  const int n = uniform_int(rng, 2, max_atoms);
  std::vector<Atom> atoms(static_cast<std::size_t>(n));
  double total = 0.0;
  for (Atom& a : atoms) {
    a.x = -5.0 + 10.0 * unit_uniform(rng);
    a.p = -std::log(open_unit_uniform(rng));
    total += a.p;
  }
  for (Atom& a : atoms) a.p /= total;
  return DiscreteDistribution(std::move(atoms));
}

DiscreteDistribution sample_near_extremal(std::mt19937_64& rng) {
  const double x_phi = extremal_constants().x_phi;
  const double a = x_phi * std::exp(0.05 * (2.0 * unit_uniform(rng) - 1.0));
  const bool mirror = (rng() & 1U) != 0;
  const bool perturb = (rng() & 1U) != 0;
  DiscreteDistribution base = make_two_point({a});
  if (mirror) base = base.mirrored();
  if (!perturb) return base;

  const double mass = 1e-3 * open_unit_uniform(rng);
  std::vector<Atom> atoms;
  for (const Atom& atom : base.atoms()) atoms.push_back({atom.x, atom.p * (1.0 - mass)});
  atoms.push_back({-5.0 + 10.0 * unit_uniform(rng), mass});
  return DiscreteDistribution(std::move(atoms));
}

}  // namespace

GoldenSectionResult golden_section_maximize(const std::function<double(double)>& f, double lo,
                                            double hi, double tol) {
  if (!(lo <= hi) || !(tol > 0.0)) {
    throw std::invalid_argument("golden_section_maximize: need lo <= hi and tol > 0");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  int iterations = 0;
  while (hi - lo > tol && iterations < 500) {
    ++iterations;
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? GoldenSectionResult{c, fc, iterations} : GoldenSectionResult{d, fd, iterations};
}

SweepResult sweep_two_point(double a_min, double a_max, int n_grid, bool mirrored) {
  if (!std::isfinite(a_min) || !std::isfinite(a_max) || !(a_min > 0.0) || !(a_min < a_max)) {
    throw std::invalid_argument("sweep_two_point: need 0 < a_min < a_max");
  }
  if (n_grid < 100) throw std::invalid_argument("sweep_two_point: n_grid must be >= 100");

  SweepResult result;
  result.grid.reserve(static_cast<std::size_t>(n_grid));
  const double log_min = std::log(a_min);
  const double log_step = (std::log(a_max) - log_min) / (n_grid - 1);
  for (int k = 0; k < n_grid; ++k) {
    double a = std::exp(log_min + k * log_step);
    if (k == 0) a = a_min;
    if (k == n_grid - 1) a = a_max;
    result.grid.push_back({a, two_point_delta(a, mirrored)});
    result.extreme_parameters = result.extreme_parameters || is_extreme_parameter({a});
  }

  const auto f = [mirrored](double a) { return two_point_delta(a, mirrored); };
  const auto& g = result.grid;
  const std::size_t n = g.size();
  result.best_delta = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double left = k > 0 ? g[k - 1].delta : -1.0;
    const double right = k + 1 < n ? g[k + 1].delta : -1.0;
    if (g[k].delta < left || g[k].delta < right) continue;

    const GoldenSectionResult refined =
        golden_section_maximize(f, g[k > 0 ? k - 1 : 0].a, g[std::min(k + 1, n - 1)].a,
                                kSweepRefineTol);
    double cand_a = g[k].a;
    double cand_delta = g[k].delta;
    if (refined.value > cand_delta) {
      cand_a = refined.x;
      cand_delta = refined.value;
    }
    if (cand_delta > result.best_delta + 1e-12) {
      result.best_a = cand_a;
      result.best_delta = cand_delta;
      result.refine_iterations = refined.iterations;
    }
  }
  return result;
}

DiscreteDistribution sample_distribution(std::mt19937_64& rng, int max_atoms, Sampler sampler) {
  if (sampler == Sampler::kNearExtremal) return standardize(sample_near_extremal(rng));
  for (;;) {
    const DiscreteDistribution raw = sample_uniform(rng, max_atoms);
    if (raw.size() >= 2 && moments(raw).variance > 1e-12) return standardize(raw);
  }
}

CampaignSummary random_V_campaign(int n_trials, int max_atoms, std::uint64_t seed,
                                  Sampler sampler) {
  if (n_trials < 1) throw std::invalid_argument("random_V_campaign: n_trials must be >= 1");
  if (max_atoms < 2 || max_atoms > 64) {
    throw std::invalid_argument("random_V_campaign: max_atoms must lie in [2, 64]");
  }
  const double c_phi = extremal_constants().c_phi;
  std::mt19937_64 rng(seed);

  CampaignSummary summary;
  summary.max_delta = -1.0;
  for (int trial = 0; trial < n_trials; ++trial) {
    const auto index = static_cast<std::size_t>(trial);
    const DiscreteDistribution d = sample_distribution(rng, max_atoms, sampler);
    const DistanceReport distance = kolmogorov_distance(d);
    if (distance.delta > summary.max_delta) {
      summary.max_delta = distance.delta;
      summary.max_delta_trial = index;
      summary.max_delta_distribution_json = distribution_to_json(d, -1);
    }
    if (distance.delta > c_phi + kBoundSlack) {
      summary.violations.push_back({index, "distance", distance.delta, distribution_to_json(d, -1)});
    }
    for (const double x : kCantelliProbes) {
      const CantelliReport tails = cantelli_check(d, x);
      summary.min_cantelli_slack = std::min(summary.min_cantelli_slack, tails.slack);
      if (tails.slack < -kBoundSlack) {
        summary.violations.push_back(
            {index, "cantelli@" + format_real(x), tails.slack, distribution_to_json(d, -1)});
      }
    }
    ++summary.trials;
  }
  return summary;
}

const CurveSeries& CurveDump::column(std::string_view name) const {
  for (const CurveSeries& s : series) {
    if (s.name == name) return s;
  }
  throw std::out_of_range("CurveDump: no series named " + std::string(name));
}

CurveDump dump_curves(double range_min, double range_max, double step) {
  if (!std::isfinite(range_min) || !std::isfinite(range_max) || !(range_min < range_max)) {
    throw std::invalid_argument("dump_curves: need finite range_min < range_max");
  }
  if (!(step > 0.0) || step > 0.5 * (range_max - range_min)) {
    throw std::invalid_argument("dump_curves: need 0 < step <= (range_max - range_min)/2");
  }
  const auto count =
      static_cast<std::size_t>(std::floor((range_max - range_min) / step * (1.0 + 1e-12))) + 1;

  const DiscreteDistribution f_phi = extremal_distribution(extremal_constants(), false);
  CurveDump dump;
  dump.x.reserve(count);
  dump.series = {{"cantelli_bound", {}}, {"normal_tail", {}}, {"psi", {}},
                 {"normal_cdf", {}},     {"f_phi", {}}};
  for (std::size_t k = 0; k < count; ++k) {
    const double x = range_min + static_cast<double>(k) * step;
    dump.x.push_back(x);
    dump.series[0].y.push_back(1.0 / (1.0 + x * x));
    dump.series[1].y.push_back(normal_cdf(-std::abs(x)));
    dump.series[2].y.push_back(psi(x));
    dump.series[3].y.push_back(normal_cdf(x));
    dump.series[4].y.push_back(f_phi.cdf_at(x));
  }
  return dump;
}

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "a,delta\n";
  for (const SweepPoint& p : sweep.grid) out << format_real(p.a) << ',' << format_real(p.delta) << '\n';
}

void write_curves_csv(std::ostream& out, const CurveDump& dump) {
  out << 'x';
  for (const CurveSeries& s : dump.series) out << ',' << s.name;
  out << '\n';
  for (std::size_t k = 0; k < dump.x.size(); ++k) {
    out << format_real(dump.x[k]);
    for (const CurveSeries& s : dump.series) out << ',' << format_real(s.y[k]);
    out << '\n';
  }
}

}  // namespace vclass
