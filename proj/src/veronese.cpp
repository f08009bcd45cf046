#include "conindex/veronese.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace conindex {

std::string_view to_string(NormedField f) {
  switch (f) {
    case NormedField::R: return "R";
    case NormedField::C: return "C";
    case NormedField::H: return "H";
  }
  return "?";
}

NormedField parse_field(std::string_view s) {
  if (s == "R") return NormedField::R;
  if (s == "C") return NormedField::C;
  if (s == "H") return NormedField::H;
  throw std::invalid_argument("unknown field '" + std::string(s) + "' (expected R, C or H)");
}

namespace {

void check_in_field(VeroneseField f, const Quaternion& q) {
  const bool ok = f.tag == NormedField::H || (f.tag == NormedField::C && q.y == 0.0 && q.z == 0.0) ||
                  (f.tag == NormedField::R && q.x == 0.0 && q.y == 0.0 && q.z == 0.0);
  if (!ok) throw std::invalid_argument("veronese_embed: coordinate outside the field " + std::string(to_string(f.tag)));
}

void put(VeroneseField f, const Quaternion& q, double* out) {
  const double parts[4] = {q.w, q.x, q.y, q.z};
  std::copy_n(parts, f.m(), out);
}

}  // namespace

std::vector<double> veronese_embed(VeroneseField f, const std::array<Quaternion, 3>& point) {
  const auto& [u, v, w] = point;
  for (const auto& q : point) check_in_field(f, q);
  const double uu = u.norm2();
  const double vv = v.norm2();
  const double ww = w.norm2();
  const double total = uu + vv + ww;
  if (total == 0.0) throw std::invalid_argument("veronese_embed: zero triple is not a point of FP^2");

  const double s3 = std::numbers::sqrt3;
  const int m = f.m();
  std::vector<double> out(static_cast<std::size_t>(3 * m + 2));
  put(f, s3 * (v * w.conj()), out.data());
  put(f, s3 * (w * u.conj()), out.data() + m);
  put(f, s3 * (u * v.conj()), out.data() + 2 * m);
  out[3 * m] = (s3 / 2.0) * (uu - vv);
  out[3 * m + 1] = 0.5 * (2.0 * ww - uu - vv);
  for (auto& c : out) c /= total;
  return out;
}

std::vector<double> veronese_embed(VeroneseField f, std::span<const double> coords) {
  const auto m = static_cast<std::size_t>(f.m());
  if (coords.size() != 3 * m) throw std::invalid_argument("veronese_embed: expected 3m real coordinates");
  std::array<Quaternion, 3> point{};
  for (std::size_t slot = 0; slot < 3; ++slot) {
    double parts[4] = {0.0, 0.0, 0.0, 0.0};
    std::copy_n(coords.begin() + static_cast<std::ptrdiff_t>(slot * m), m, parts);
    point[slot] = {parts[0], parts[1], parts[2], parts[3]};
  }
  return veronese_embed(f, point);
}

ChartMap veronese_chart(VeroneseField f) {
  return [f](std::span<const double> x, std::span<double> out) {
    const auto m = static_cast<std::size_t>(f.m());
    std::vector<double> coords(3 * m, 0.0);
    std::copy(x.begin(), x.end(), coords.begin());
    coords[2 * m] = 1.0;  // w = 1
    const auto y = veronese_embed(f, coords);
    std::copy(y.begin(), y.end(), out.begin());
  };
}

std::vector<double> spherical_mean_curvature(const ChartMap& map, std::size_t domain_dim, std::size_t ambient_dim,
                                             std::span<const double> x, double h) {
  const auto k = static_cast<Eigen::Index>(domain_dim);
  const auto N = static_cast<Eigen::Index>(ambient_dim);
  std::vector<double> probe(x.begin(), x.end());
  Eigen::VectorXd buf(N);
  auto eval = [&](std::initializer_list<std::pair<std::size_t, double>> shifts) {
    probe.assign(x.begin(), x.end());
    for (const auto& [axis, d] : shifts) probe[axis] += d;
    map(probe, {buf.data(), ambient_dim});
    return Eigen::VectorXd(buf);
  };

  const Eigen::VectorXd f0 = eval({});
  Eigen::MatrixXd d1(N, k);
  std::vector<Eigen::VectorXd> plus(domain_dim), minus(domain_dim);
  for (std::size_t i = 0; i < domain_dim; ++i) {
    plus[i] = eval({{i, h}});
    minus[i] = eval({{i, -h}});
    d1.col(static_cast<Eigen::Index>(i)) = (plus[i] - minus[i]) / (2.0 * h);
  }
  const Eigen::MatrixXd metric = d1.transpose() * d1;
  const Eigen::MatrixXd inv = metric.ldlt().solve(Eigen::MatrixXd::Identity(k, k));

  Eigen::VectorXd trace = Eigen::VectorXd::Zero(N);
  for (std::size_t i = 0; i < domain_dim; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    trace += inv(ii, ii) * (plus[i] - 2.0 * f0 + minus[i]) / (h * h);
    for (std::size_t j = i + 1; j < domain_dim; ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      const Eigen::VectorXd dij =
          (eval({{i, h}, {j, h}}) - eval({{i, h}, {j, -h}}) - eval({{i, -h}, {j, h}}) + eval({{i, -h}, {j, -h}})) /
          (4.0 * h * h);
      trace += 2.0 * inv(ii, jj) * dij;
    }
  }

  // project out span(tangent, position)
  Eigen::MatrixXd frame(N, k + 1);
  frame << d1, f0;
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(frame);
  const Eigen::MatrixXd basis = qr.householderQ() * Eigen::MatrixXd::Identity(N, k + 1);
  const Eigen::VectorXd normal = trace - basis * (basis.transpose() * trace);
  return {normal.data(), normal.data() + N};
}

std::vector<std::vector<double>> chart_points(std::size_t domain_dim, std::size_t grid) {
  std::vector<std::vector<double>> pts;
  const double step = 2.0 / static_cast<double>(grid - 1);
  if (domain_dim == 2) {
    for (std::size_t a = 0; a < grid; ++a) {
      for (std::size_t b = 0; b < grid; ++b) pts.push_back({-1.0 + step * a, -1.0 + step * b});
    }
    return pts;
  }
  static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (domain_dim > std::size(primes)) throw std::invalid_argument("chart_points: domain dimension too large");
  for (std::size_t idx = 1; idx <= grid * grid; ++idx) {
    std::vector<double> p(domain_dim);
    for (std::size_t axis = 0; axis < domain_dim; ++axis) {
      double r = 0.0, frac = 1.0;
      for (std::size_t v = idx; v > 0; v /= primes[axis]) {
        frac /= primes[axis];
        r += frac * static_cast<double>(v % primes[axis]);
      }
      p[axis] = -1.0 + 2.0 * r;
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

MinimalityReport minimality_residual(const ChartMap& map, std::size_t domain_dim, std::size_t ambient_dim,
                                     std::size_t grid) {
  if (grid < 8) throw std::invalid_argument("minimality_residual: grid must be >= 8 per axis");
  MinimalityReport report;
  report.step = 2.0 / static_cast<double>(grid - 1);
  const auto pts = chart_points(domain_dim, grid);
  report.points = pts.size();
  for (const auto& p : pts) {
    const auto coarse = spherical_mean_curvature(map, domain_dim, ambient_dim, p, report.step);
    const auto fine = spherical_mean_curvature(map, domain_dim, ambient_dim, p, report.step / 2.0);
    double nc = 0.0, nf = 0.0, ne = 0.0;
    for (std::size_t a = 0; a < ambient_dim; ++a) {
      const double extrap = (4.0 * fine[a] - coarse[a]) / 3.0;
      nc += coarse[a] * coarse[a];
      nf += fine[a] * fine[a];
      ne += extrap * extrap;
    }
    report.residual_h = std::max(report.residual_h, std::sqrt(nc));
    report.residual_half = std::max(report.residual_half, std::sqrt(nf));
    report.residual = std::max(report.residual, std::sqrt(ne));
  }
  report.observed_order = std::log2(report.residual_h / report.residual_half);
  return report;
}

MinimalityReport veronese_minimality_residual(VeroneseField f, std::size_t grid) {
  return minimality_residual(veronese_chart(f), static_cast<std::size_t>(f.domain_dim()),
                             static_cast<std::size_t>(f.ambient_dim()), grid);
}

}  // namespace conindex
