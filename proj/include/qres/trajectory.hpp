// Copyright 2026 The qres authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qres/linalg.hpp"
#include "qres/measure.hpp"
#include "qres/pauli.hpp"
#include "qres/types.hpp"

namespace qres {

/// One sample of a complex-eigenvalue trajectory. `energy` comes from the
/// direct-measurement path; `energy_diag` is the diagonalization cross-check.
/// `speed` is the finite-difference |dE/dtheta| (0 for a single point).
struct TrajectoryPoint {
  double alpha = 0.0;
  double theta = 0.0;
  Complex energy{0.0, 0.0};
  Complex energy_diag{0.0, 0.0};
  double speed = 0.0;
  bool jump_warning = false;
};

struct ScanOptions {
  MeasureOptions measure;
  std::size_t n_electrons = 1;
  double commute_tol = 1e-8;
  double jump_threshold = 0.5;  // Hartree, continuation-break warning
};

using HamiltonianBuilder = std::function<PauliSum(double alpha, double theta)>;

/**
 * Follows one complex eigenvalue along a strictly increasing theta grid by
 * nearest-eigenvalue continuation (seeded by `seed_target` at the first
 * point), measuring each energy with the direct-measurement pipeline on the
 * continued eigenstate.
 */
inline std::vector<TrajectoryPoint> trajectory_scan(
    const HamiltonianBuilder& builder, double alpha,
    const std::vector<double>& thetas, Complex seed_target,
    const ScanOptions& options = {}) {
  if (thetas.empty()) {
    throw std::invalid_argument("trajectory_scan: empty theta grid");
  }
  for (std::size_t k = 1; k < thetas.size(); ++k) {
    if (thetas[k] <= thetas[k - 1]) {
      throw std::invalid_argument(
          "trajectory_scan: thetas must be strictly increasing");
    }
  }

  std::vector<TrajectoryPoint> points;
  points.reserve(thetas.size());
  Complex follow = seed_target;
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    const PauliSum h = builder(alpha, thetas[k]);
    const SectorEigen sector =
        sector_eig(h, options.n_electrons, options.commute_tol);
    std::size_t best = 0;
    for (std::size_t j = 1; j < sector.decomposition.eigenvalues.size(); ++j) {
      if (std::abs(sector.decomposition.eigenvalues[j] - follow) <
          std::abs(sector.decomposition.eigenvalues[best] - follow)) {
        best = j;
      }
    }
    const Complex lambda = sector.decomposition.eigenvalues[best];

    TrajectoryPoint point;
    point.alpha = alpha;
    point.theta = thetas[k];
    point.energy_diag = lambda;
    point.jump_warning =
        k > 0 && std::abs(lambda - follow) > options.jump_threshold;

    const ComplexVector column =
        sector.decomposition.eigenvectors.col(static_cast<Eigen::Index>(best));
    std::vector<Complex> eigenstate(column.data(), column.data() + column.size());
    MeasureOptions measure = options.measure;
    measure.seed = options.measure.seed + 2 * static_cast<std::uint64_t>(k);
    point.energy = measure_eigenvalue(h, eigenstate, measure).energy;

    follow = lambda;
    points.push_back(point);
  }

  // Central differences inside the grid, one-sided at the ends.
  if (points.size() >= 2) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      const std::size_t lo = k == 0 ? 0 : k - 1;
      const std::size_t hi = k + 1 == points.size() ? k : k + 1;
      points[k].speed = std::abs(points[hi].energy - points[lo].energy) /
                        (points[hi].theta - points[lo].theta);
    }
  }
  return points;
}

/// Scans one trajectory per alpha, concurrently across alphas.
inline std::vector<std::vector<TrajectoryPoint>> scan_grid(
    const HamiltonianBuilder& builder, const std::vector<double>& alphas,
    const std::vector<double>& thetas, Complex seed_target,
    const ScanOptions& options = {}) {
  std::vector<std::future<std::vector<TrajectoryPoint>>> jobs;
  jobs.reserve(alphas.size());
  for (double alpha : alphas) {
    jobs.push_back(std::async(std::launch::async, [&, alpha] {
      return trajectory_scan(builder, alpha, thetas, seed_target, options);
    }));
  }
  std::vector<std::vector<TrajectoryPoint>> out;
  out.reserve(alphas.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

struct StationaryPoint {
  double alpha = 0.0;
  double theta = 0.0;
  Complex energy{0.0, 0.0};
  double speed = 0.0;
};

/**
 * Point of minimal trajectory speed across all trajectories; ties resolve to
 * the smaller theta, then the smaller alpha. Single-point trajectories carry
 * no usable finite difference and are skipped.
 */
inline StationaryPoint stationary_point(
    const std::vector<std::vector<TrajectoryPoint>>& trajectories) {
  const TrajectoryPoint* best = nullptr;
  for (const auto& trajectory : trajectories) {
    if (trajectory.size() < 2) continue;
    for (const auto& point : trajectory) {
      if (best == nullptr || point.speed < best->speed ||
          (point.speed == best->speed &&
           (point.theta < best->theta ||
            (point.theta == best->theta && point.alpha < best->alpha)))) {
        best = &point;
      }
    }
  }
  if (best == nullptr) {
    throw std::invalid_argument(
        "stationary_point: need a trajectory with at least two points");
  }
  return {best->alpha, best->theta, best->energy, best->speed};
}

namespace detail {

inline std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace detail

/// CSV export, one row per point:
/// alpha,theta,re_E,im_E,speed,re_E_diag,im_E_diag
inline std::string trajectories_csv(
    const std::vector<std::vector<TrajectoryPoint>>& trajectories) {
  std::string out = "alpha,theta,re_E,im_E,speed,re_E_diag,im_E_diag\n";
  for (const auto& trajectory : trajectories) {
    for (const auto& p : trajectory) {
      out += detail::format_double(p.alpha) + ',' +
             detail::format_double(p.theta) + ',' +
             detail::format_double(p.energy.real()) + ',' +
             detail::format_double(p.energy.imag()) + ',' +
             detail::format_double(p.speed) + ',' +
             detail::format_double(p.energy_diag.real()) + ',' +
             detail::format_double(p.energy_diag.imag()) + '\n';
    }
  }
  return out;
}

/// JSON mirror of the CSV with caller-supplied run metadata attached.
inline nlohmann::json trajectories_json(
    const std::vector<std::vector<TrajectoryPoint>>& trajectories,
    const nlohmann::json& metadata) {
  nlohmann::json out;
  out["metadata"] = metadata;
  out["trajectories"] = nlohmann::json::array();
  for (const auto& trajectory : trajectories) {
    nlohmann::json t;
    t["alpha"] = trajectory.empty() ? 0.0 : trajectory.front().alpha;
    t["points"] = nlohmann::json::array();
    for (const auto& p : trajectory) {
      t["points"].push_back({{"theta", p.theta},
                             {"re_E", p.energy.real()},
                             {"im_E", p.energy.imag()},
                             {"speed", p.speed},
                             {"re_E_diag", p.energy_diag.real()},
                             {"im_E_diag", p.energy_diag.imag()},
                             {"jump_warning", p.jump_warning}});
    }
    out["trajectories"].push_back(std::move(t));
  }
  return out;
}

/// Minimal static SVG rendering of the trajectories in the complex plane.
inline std::string trajectories_svg(
    const std::vector<std::vector<TrajectoryPoint>>& trajectories,
    const StationaryPoint* marker = nullptr) {
  constexpr double kWidth = 720.0, kHeight = 540.0, kMargin = 60.0;
  double re_min = 1e300, re_max = -1e300, im_min = 1e300, im_max = -1e300;
  for (const auto& trajectory : trajectories) {
    for (const auto& p : trajectory) {
      re_min = std::min(re_min, p.energy.real());
      re_max = std::max(re_max, p.energy.real());
      im_min = std::min(im_min, p.energy.imag());
      im_max = std::max(im_max, p.energy.imag());
    }
  }
  if (re_min > re_max) {
    re_min = im_min = 0.0;
    re_max = im_max = 1.0;
  }
  if (re_max - re_min < 1e-12) {
    re_min -= 0.5;
    re_max += 0.5;
  }
  if (im_max - im_min < 1e-12) {
    im_min -= 0.5;
    im_max += 0.5;
  }
  const auto sx = [&](double re) {
    return kMargin + (re - re_min) / (re_max - re_min) * (kWidth - 2 * kMargin);
  };
  const auto sy = [&](double im) {
    return kHeight - kMargin -
           (im - im_min) / (im_max - im_min) * (kHeight - 2 * kMargin);
  };
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"14\">Re E (Hartree)</text>\n"
      << "<text x=\"16\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
      << kHeight / 2 << ")\">Im E (Hartree)</text>\n";
  for (std::size_t t = 0; t < trajectories.size(); ++t) {
    const auto& trajectory = trajectories[t];
    if (trajectory.empty()) continue;
    const char* color = kPalette[t % 8];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& p : trajectory) {
      svg << sx(p.energy.real()) << ',' << sy(p.energy.imag()) << ' ';
    }
    svg << "\"/>\n";
    for (const auto& p : trajectory) {
      svg << "<circle cx=\"" << sx(p.energy.real()) << "\" cy=\""
          << sy(p.energy.imag()) << "\" r=\"2.5\" fill=\"" << color
          << "\"/>\n";
    }
    svg << "<text x=\"" << sx(trajectory.back().energy.real()) + 6 << "\" y=\""
        << sy(trajectory.back().energy.imag()) << "\" font-size=\"11\" fill=\""
        << color << "\">alpha=" << trajectory.back().alpha << "</text>\n";
  }
  if (marker != nullptr) {
    svg << "<circle cx=\"" << sx(marker->energy.real()) << "\" cy=\""
        << sy(marker->energy.imag())
        << "\" r=\"6\" fill=\"none\" stroke=\"#00a000\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << sx(marker->energy.real()) + 8 << "\" y=\""
        << sy(marker->energy.imag()) - 8
        << "\" font-size=\"12\" fill=\"#00a000\">alpha=" << marker->alpha
        << ", theta=" << marker->theta << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qres
