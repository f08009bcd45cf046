#pragma once

// The oscillatory integral
//     I_K(r) = int_r^{Kr} cos^2(alpha log s + theta) s^{2 beta - 1} ds
// and its discrete second difference I_K(K^2 r) - 2 I_K(K r) + I_K(r), which is
// positive once K exceeds a threshold K0(sigma) depending only on |beta| >= sigma.
//
// Scaling covariance: I_K(r; theta) = r^{2 beta} I_K(1; theta + alpha log r), so
// checking r = 1 over a full period of theta covers every r.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conindex {

struct OscParams {
  double alpha = 1.0;  // > 0
  double beta = 1.0;   // |beta| >= sigma
  double theta = 0.0;
  double K = 3.0;      // > 2
  double r = 1.0;      // > 0
  double sigma = 0.0;

  // Throws std::invalid_argument when the constraints above fail.
  static OscParams make(double alpha, double beta, double theta, double K, double r, double sigma);
};

// Closed form, valid for any beta (beta = 0 uses the limiting antiderivative).
double osc_integral_raw(double alpha, double beta, double theta, double K, double r);
double osc_integral(const OscParams& p);

struct OscSecondDifference {
  double value = 0.0;
  // value divided by the positive factor (1/2) r^{2beta} (K^{2beta}-1)^3 / (2beta); its sign is the sign of value
  double normalized = 0.0;
  bool below_k0 = false;  // K < the supplied K0: positivity is not guaranteed
};

OscSecondDifference osc_second_difference_raw(double alpha, double beta, double theta, double K, double r);
OscSecondDifference osc_second_difference(const OscParams& p, std::optional<double> k0 = std::nullopt);

// Geometric search grid K_m = 2 * 1.05^m.
double k_grid(int m);

struct OscSample {
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;
};

struct K0Result {
  double sigma = 0.0;
  double K0 = 0.0;
  int grid_index = 0;
  double min_normalized = 0.0;  // smallest sampled normalised second difference at K0
  std::size_t samples = 0;
  // Smallest grid K at which the sufficient inequalities of the existence argument
  // hold for every sampled (alpha, beta); an upper bound for the true threshold.
  std::optional<double> certificate_K;
  std::optional<int> certificate_index;
};

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, OscSample failing) : std::runtime_error(what), failing_(failing) {}
  const OscSample& failing() const { return failing_; }

 private:
  OscSample failing_;
};

struct K0SearchOptions {
  int alpha_points = 61;   // log grid on [1e-3, 1e3]
  int beta_points = 12;    // geometric grid on [sigma, 10], plus sigma itself, both signs
  int theta_points = 64;   // uniform on [0, pi)
  int max_grid_index = 1200;
};

// The sample set used by find_K0 (r = 1).
std::vector<OscSample> k0_samples(double sigma, const K0SearchOptions& opts = {});

K0Result find_K0(double sigma, const K0SearchOptions& opts = {});

// Sufficient condition from the existence argument at one (alpha, |beta|, K):
//   (|e^{x} - e^{-iy}| / (e^{x}-1))^6 <= 1 + 20 min(y,1)^2/(e^{x}-1) < 1 + y^2/x^2,
// with x = 2|beta| log K, y = 2 alpha log K.
bool k0_certificate_holds(double alpha, double beta, double K);

}  // namespace conindex
