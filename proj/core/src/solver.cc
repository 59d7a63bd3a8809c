// Copyright 2026 The Spiraltile Authors.
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

#include "spiraltile/solver.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>
#include <utility>

#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTangencyResidual = 1e-10;
constexpr double kPhiTolerance = 1e-12;
constexpr int kPhiCoarseSteps = 64;

double Deg(double radians) { return radians * 180.0 / kPi; }

RuleCheck Rule(std::string id, std::string text, double lhs, double rhs,
               bool passed, bool applicable) {
  RuleCheck r;
  r.rule_id = std::move(id);
  r.inequality = std::move(text);
  r.lhs = lhs;
  r.rhs = rhs;
  r.passed = applicable && passed;
  r.applicable = applicable;
  return r;
}

double ValueOr(const std::optional<double>& v) { return v ? *v : kNaN; }

// A triangular residual problem with cached trigonometry.
struct TriProblem {
  int n = 0;
  int m = 0;
  double phi = 0.0;
  double theta = 0.0;
  Family family = Family::kTriangleOmegaPhi;
  RotationSense sense = RotationSense::kCo;
  double exponent = 0.0;  // m/n
  double sin_phi = 0.0;
  double sin_theta = 0.0;
  double sin_sum = 0.0;   // sin(theta + phi)
  double sin_diff = 0.0;  // sin(phi - theta)

  TriProblem(int n_, int m_, double phi_, double theta_, Family f,
             RotationSense s)
      : n(n_), m(m_), phi(phi_), theta(theta_), family(f), sense(s) {
    exponent = static_cast<double>(m) / n;
    sin_phi = std::sin(phi);
    sin_theta = std::sin(theta);
    sin_sum = std::sin(theta + phi);
    sin_diff = std::sin(phi - theta);
  }

  // Numerator and denominator of the co-rotating lambda form.
  std::pair<double, double> Parts(double kappa) const {
    if (family == Family::kTriangleOmegaPhi) {
      return {sin_phi, sin_sum - kappa * sin_theta};
    }
    return {kappa * sin_phi, sin_theta + kappa * sin_diff};
  }

  std::optional<double> Residual(double kappa) const {
    auto [num, den] = Parts(kappa);
    if (sense == RotationSense::kContra) std::swap(num, den);
    if (!(num > 0.0 && den > 0.0)) return std::nullopt;
    const double lambda = num / den;
    if (!std::isfinite(lambda)) return std::nullopt;
    return std::pow(kappa, exponent) - lambda;
  }

  // Upper end of the scan interval: 1, or the kappa where the co-rotating
  // denominator (omega = phi contra: the numerator) reaches zero.
  double Supremum() const {
    double sup = 1.0;
    if (family == Family::kTriangleOmegaPhi) {
      if (sin_theta > 0.0) sup = std::min(sup, sin_sum / sin_theta);
    } else if (sin_diff < 0.0) {
      sup = std::min(sup, -sin_theta / sin_diff);
    }
    return sup;
  }

  // Sign of the residual as kappa approaches a finite supremum from below:
  // the curve diverges for co-rotating forms and vanishes for contra ones.
  int LimitSignAtSupremum() const {
    return sense == RotationSense::kCo ? -1 : 1;
  }

  // Interior stationary point of the cleared-denominator residual, which
  // separates the two possible co-rotating roots.
  std::optional<double> StationaryPoint() const {
    if (sense != RotationSense::kCo) return std::nullopt;
    if (family == Family::kTriangleOmegaPhi) {
      if (sin_theta <= 0.0) return std::nullopt;
      return m * sin_sum / ((m + n) * sin_theta);
    }
    if (n == m || sin_diff == 0.0) return std::nullopt;
    const double base = (1.0 - exponent) * sin_phi / sin_diff;
    if (!(base > 0.0)) return std::nullopt;
    return std::pow(base, 1.0 / exponent);
  }
};

int Sign(double v) { return (v > 0.0) - (v < 0.0); }

struct Sample {
  double kappa = 0.0;
  double f = 0.0;
  int sign = 0;
  bool seed = false;
};

struct ScanResult {
  std::vector<Sample> samples;
  std::vector<std::pair<double, double>> brackets;
  std::optional<double> tangent_root;
};

ScanResult Scan(const TriProblem& p) {
  ScanResult out;
  const double lo = kScanFloor;
  const double sup = p.Supremum();
  if (!(sup > lo)) return out;
  const bool open_end = sup < 1.0;

  std::vector<Sample>& s = out.samples;
  s.reserve(kScanPoints + 1);
  for (int k = 0; k < kScanPoints; ++k) {
    Sample x;
    x.kappa = k == kScanPoints - 1
                  ? sup
                  : lo + (sup - lo) * k / (kScanPoints - 1);
    if (k == kScanPoints - 1 && open_end) {
      x.f = kNaN;
      x.sign = p.LimitSignAtSupremum();
    } else {
      auto f = p.Residual(x.kappa);
      if (!f) continue;
      x.f = *f;
      x.sign = Sign(*f);
    }
    s.push_back(x);
  }
  if (auto seed = p.StationaryPoint(); seed && *seed > lo && *seed < sup) {
    if (auto f = p.Residual(*seed)) {
      Sample x{*seed, *f, Sign(*f), true};
      auto it = std::lower_bound(
          s.begin(), s.end(), x.kappa,
          [](const Sample& a, double k) { return a.kappa < k; });
      if (it == s.end() || it->kappa != x.kappa) {
        s.insert(it, x);
      } else {
        it->seed = true;
      }
    }
  }

  for (size_t k = 0; k + 1 < s.size(); ++k) {
    if (s[k].sign == 0) {
      out.brackets.emplace_back(s[k].kappa, s[k].kappa);
    } else if (s[k].sign * s[k + 1].sign < 0) {
      out.brackets.emplace_back(s[k].kappa, s[k + 1].kappa);
    }
  }

  for (size_t k = 1; k + 1 < s.size(); ++k) {
    if (!s[k].seed || s[k].sign == 0) continue;
    if (std::abs(s[k].f) < kTangencyResidual &&
        s[k - 1].sign == s[k + 1].sign && s[k - 1].sign == s[k].sign) {
      out.tangent_root = s[k].kappa;
    }
  }
  return out;
}

double Bisect(const TriProblem& p, double a, double b) {
  if (a == b) return a;
  const double fa = *p.Residual(a);
  const int sa = Sign(fa);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    auto f = p.Residual(mid);
    // Midpoints stay inside the domain; a missing value means the pole.
    const int sm = f ? Sign(*f) : p.LimitSignAtSupremum();
    if (sm == 0) return mid;
    if (sm == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

int CountRoots(const TriProblem& p) {
  ScanResult r = Scan(p);
  return static_cast<int>(r.brackets.size()) + (r.tangent_root ? 1 : 0);
}

TriProblem ProblemFor(const DesignRequest& req, Angle theta) {
  return TriProblem(req.n, req.m, req.phi.radians(), theta.radians(),
                    req.family, req.sense);
}

bool GatePassed(const FeasibilityReport& report, std::string_view id) {
  const RuleCheck* r = report.Find(id);
  return r == nullptr || !r->applicable || r->passed;
}

}  // namespace

bool FeasibilityReport::AllApplicablePassed() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleCheck& r) {
    return !r.applicable || r.passed;
  });
}

const RuleCheck* FeasibilityReport::Find(std::string_view rule_id) const {
  for (const RuleCheck& r : rules) {
    if (r.rule_id == rule_id) return &r;
  }
  return nullptr;
}

FeasibilityReport Feasibility(Family family, int n, int m, Angle phi,
                              RotationSense sense,
                              std::optional<double> kappa) {
  FeasibilityReport report;
  report.theta = ThetaFrom(n, m, phi, sense);
  const double p = phi.radians();
  const double t = report.theta.radians();
  const bool co = sense == RotationSense::kCo;
  const bool omega_phi_co = family == Family::kTriangleOmegaPhi && co;
  const bool omega_phi_contra = family == Family::kTriangleOmegaPhi && !co;
  const bool omega_zero = family == Family::kTriangleOmegaZero;
  const bool omega_zero_co = omega_zero && co;
  const bool omega_zero_contra = omega_zero && !co;

  const DiagnosticPoints tri_co =
      DiagnosticPointsFor(phi, report.theta, Family::kTriangleOmegaPhi,
                          RotationSense::kCo);
  const DiagnosticPoints zero_co =
      DiagnosticPointsFor(phi, report.theta, Family::kTriangleOmegaZero,
                          RotationSense::kCo);
  const double i_zero = ValueOr(zero_co.i);
  const bool i_at_least_one = tri_co.i && *tri_co.i >= 1.0;
  const bool i_below_one = tri_co.i && *tri_co.i < 1.0;
  std::vector<RuleCheck>& r = report.rules;

  {
    bool applicable = family == Family::kQuadrangular && kappa.has_value();
    double lhs = kNaN;
    double rhs = kNaN;
    bool passed = false;
    if (applicable) {
      const Angle sigma = SigmaFrom(*kappa, phi);
      const double lambda = LambdaPower(*kappa, n, m);
      const Angle omega =
          OmegaFrom(EffectiveLambda(lambda, sense), report.theta, sigma);
      const BranchSenses b = BranchSensesFor(sigma, omega, phi, report.theta);
      lhs = Deg(sigma.radians() - (kPi / 2 - p / 2));
      rhs = Deg((omega + sigma).radians() - (kPi / 2 - t / 2));
      passed = b.combined.has_value() && *b.combined == sense;
    }
    r.push_back(Rule("R2",
                     co ? "branch margins share a sign (co-rotating)"
                        : "branch margins differ in sign (contra-rotating)",
                     lhs, rhs, passed, applicable));
  }

  r.push_back(Rule("R4", "theta + 2 phi < 180", Deg(t + 2 * p), 180.0,
                   t + 2 * p < kPi, omega_phi_co));
  r.push_back(Rule("R4.phi", "phi < 90", Deg(p), 90.0, p < kPi / 2,
                   omega_phi_co));
  r.push_back(Rule("R5", "2 theta + phi < 180 (I >= 1)", Deg(2 * t + p),
                   180.0, 2 * t + p < kPi, omega_phi_co && i_at_least_one));
  r.push_back(Rule("R5.sum", "theta + phi < 120 (I >= 1)", Deg(t + p), 120.0,
                   t + p < 2 * kPi / 3, omega_phi_co && i_at_least_one));
  r.push_back(Rule("R6", "2 theta + phi > 180 (I < 1)", Deg(2 * t + p), 180.0,
                   2 * t + p > kPi, omega_phi_co && i_below_one));
  r.push_back(Rule("R6a", "theta - phi > 0 (I < 1)", Deg(t - p), 0.0, t > p,
                   omega_phi_co && i_below_one));
  r.push_back(Rule("R6a.range", "(180 - phi)/2 < theta < 180 - 2 phi (I < 1)",
                   Deg(t), Deg(kPi - 2 * p),
                   (kPi - p) / 2 < t && t < kPi - 2 * p,
                   omega_phi_co && i_below_one));
  r.push_back(Rule("R6b", "0 < phi < 60 (I < 1)", Deg(p), 60.0,
                   p > 0 && p < kPi / 3, omega_phi_co && i_below_one));
  r.push_back(Rule("R7", "H > 1 (I >= 1)", ValueOr(tri_co.h), 1.0,
                   tri_co.h && *tri_co.h > 1.0,
                   omega_phi_co && i_at_least_one));

  {
    const DiagnosticPoints d = DiagnosticPointsFor(
        phi, report.theta, Family::kTriangleOmegaPhi, RotationSense::kContra);
    r.push_back(Rule("R8", "reciprocal H < 1", ValueOr(d.h), 1.0,
                     d.h && *d.h < 1.0, omega_phi_contra));
  }

  const bool phi_below_theta = p < t;
  const bool phi_above_theta = p > t;
  r.push_back(Rule("R9", "H > 1 (phi < theta)", ValueOr(zero_co.h), 1.0,
                   zero_co.h && *zero_co.h > 1.0,
                   omega_zero_co && phi_below_theta));
  r.push_back(Rule("R9a", "2 theta - phi < 180 (phi < theta, I > 1)",
                   Deg(2 * t - p), 180.0, 2 * t - p < kPi,
                   omega_zero_co && phi_below_theta && i_zero > 1.0));
  r.push_back(Rule("R9b", "2 theta - phi > 180 (phi < theta, I < 1)",
                   Deg(2 * t - p), 180.0, 2 * t - p > kPi,
                   omega_zero_co && phi_below_theta && i_zero < 1.0));
  r.push_back(Rule("R10", "phi != theta", Deg(std::abs(p - t)), 0.0,
                   std::abs(p - t) > kBranchEqualityTolerance, omega_zero));
  r.push_back(Rule("R11", "I < 0 (phi > theta)", i_zero, 0.0, i_zero < 0.0,
                   omega_zero_co && phi_above_theta));
  r.push_back(Rule("R11a", "n < m (phi > theta)", n, m, n < m,
                   omega_zero_co && phi_above_theta));

  {
    const DiagnosticPoints d = DiagnosticPointsFor(
        phi, report.theta, Family::kTriangleOmegaZero, RotationSense::kContra);
    r.push_back(Rule("R12", "reciprocal H < 1", ValueOr(d.h), 1.0,
                     d.h && *d.h < 1.0, omega_zero_contra));
  }
  return report;
}

SpiralSystem DesignQuadrangular(const DesignRequest& req) {
  if (req.family != Family::kQuadrangular) {
    throw Error(ErrorCode::kInvalidArgument,
                "family: quadrangular design needs \"quad\"");
  }
  ValidateRequest(req);
  SpiralSystem s;
  s.n = req.n;
  s.m = req.m;
  s.phi = req.phi;
  s.theta = ThetaFrom(req.n, req.m, req.phi, req.sense);
  s.kappa = *req.kappa;
  s.lambda = LambdaPower(s.kappa, s.n, s.m);
  s.sigma = SigmaFrom(s.kappa, s.phi);
  s.omega = OmegaFrom(EffectiveLambda(s.lambda, req.sense), s.theta, s.sigma);
  s.sense = req.sense;
  s.family = Family::kQuadrangular;

  const BranchSenses b = BranchSensesFor(s.sigma, s.omega, s.phi, s.theta);
  if (!b.combined || *b.combined != req.sense) {
    throw Error(ErrorCode::kClosureInfeasible,
                std::string("branches are ") +
                    (b.combined ? std::string(ToString(*b.combined)) +
                                      "-rotating"
                                : std::string("non-convergent")) +
                    ", requested " + std::string(ToString(req.sense)) +
                    "-rotating: the system cannot close");
  }
  const FeasibilityVerdict v = ValidateSystem(s);
  if (!v.ok()) {
    throw Error(ErrorCode::kInternalInconsistency,
                "designed system violates " + v.violations.front().invariant);
  }
  return s;
}

std::optional<double> TriangularResidual(double kappa, int n, int m,
                                         Angle phi, Angle theta,
                                         Family family, RotationSense sense) {
  if (!IsTriangular(family)) return std::nullopt;
  return TriProblem(n, m, phi.radians(), theta.radians(), family, sense)
      .Residual(kappa);
}

SolveReport SolveTriangular(const DesignRequest& req) {
  if (!IsTriangular(req.family)) {
    throw Error(ErrorCode::kInvalidArgument,
                "family: root solving needs a triangular family");
  }
  ValidateRequest(req);
  SolveReport report;
  report.request = req;
  report.feasibility = Feasibility(req.family, req.n, req.m, req.phi,
                                   req.sense);
  report.theta = report.feasibility.theta;
  report.diagnostics =
      DiagnosticPointsFor(req.phi, report.theta, req.family, req.sense);
  report.zero_root_excluded = req.family == Family::kTriangleOmegaZero &&
                              req.sense == RotationSense::kCo;

  if (!GatePassed(report.feasibility, "R10")) {
    throw Error(ErrorCode::kDegenerateFamily,
                "phi equals theta: the shape curve collapses to "
                "lambda = kappa");
  }
  for (const char* gate : {"R4", "R8", "R12"}) {
    if (!GatePassed(report.feasibility, gate)) {
      const RuleCheck* r = report.feasibility.Find(gate);
      throw Error(ErrorCode::kNoSolution,
                  std::string(gate) + " fails (" + r->inequality +
                      "): no root exists");
    }
  }

  const TriProblem problem = ProblemFor(req, report.theta);
  const ScanResult scan = Scan(problem);
  std::vector<std::pair<double, std::pair<double, double>>> roots;
  for (const auto& [a, b] : scan.brackets) {
    roots.push_back({Bisect(problem, a, b), {a, b}});
  }
  if (scan.tangent_root) {
    report.tangent = true;
    roots.push_back({*scan.tangent_root,
                     {*scan.tangent_root, *scan.tangent_root}});
  }
  std::sort(roots.begin(), roots.end());

  for (const auto& [kappa, bracket] : roots) {
    Solution sol;
    sol.kappa = kappa;
    sol.lambda = LambdaPower(kappa, req.n, req.m);
    sol.sigma = SigmaFrom(kappa, req.phi);
    sol.omega = req.family == Family::kTriangleOmegaPhi ? req.phi : Angle();
    sol.bracket_lo = bracket.first;
    sol.bracket_hi = bracket.second;
    SpiralSystem& s = sol.system;
    s.n = req.n;
    s.m = req.m;
    s.phi = req.phi;
    s.theta = report.theta;
    s.kappa = sol.kappa;
    s.lambda = sol.lambda;
    s.sigma = sol.sigma;
    s.omega = sol.omega;
    s.sense = req.sense;
    s.family = req.family;
    const FeasibilityVerdict v = ValidateSystem(s);
    if (!v.ok()) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "root at kappa = " + std::to_string(kappa) + " violates " +
                      v.violations.front().invariant);
    }
    report.solutions.push_back(std::move(sol));
  }
  return report;
}

SpiralSystem SelectSolution(const SolveReport& report) {
  if (report.solutions.empty()) {
    throw Error(ErrorCode::kNoSolution, "no root found for the request");
  }
  if (!report.request.solution_index) {
    return report.solutions.back().system;
  }
  const int k = *report.request.solution_index;
  if (k >= static_cast<int>(report.solutions.size())) {
    throw Error(ErrorCode::kNoSolution,
                "solution_index " + std::to_string(k) + " requested but " +
                    std::to_string(report.solutions.size()) +
                    " solution(s) exist");
  }
  return report.solutions[k].system;
}

PhiMaxResult PhiMax(int n, int m) {
  if (n < 3 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "phimax needs n >= 3 and m >= 1");
  }
  auto problem = [n, m](double phi) {
    const double theta = (kTwoPi + m * phi) / n;
    return TriProblem(n, m, phi, theta, Family::kTriangleOmegaPhi,
                      RotationSense::kCo);
  };
  // Beyond this bound theta + 2 phi >= pi and no root exists.
  const double bound = kPi * (n - 2) / (m + 2 * n);

  int last_two = -1;
  for (int k = 1; k < kPhiCoarseSteps; ++k) {
    if (CountRoots(problem(bound * k / kPhiCoarseSteps)) == 2) last_two = k;
  }
  if (last_two < 0) {
    throw Error(ErrorCode::kNoTransition,
                "no two-root region found for (n, m) = (" +
                    std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  double lo = bound * last_two / kPhiCoarseSteps;
  double hi = bound * (last_two + 1) / kPhiCoarseSteps;
  if (last_two + 1 < kPhiCoarseSteps && CountRoots(problem(hi)) == 2) {
    throw Error(ErrorCode::kNoTransition,
                "two roots persist up to the feasible phi bound");
  }
  while (hi - lo > kPhiTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (CountRoots(problem(mid)) == 2) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double phi_max = 0.5 * (lo + hi);
  const TriProblem p = problem(phi_max);
  PhiMaxResult result;
  result.n = n;
  result.m = m;
  result.phi_max = Angle::Radians(phi_max);
  result.kappa_at_tangency = *p.StationaryPoint();
  return result;
}

std::vector<PhiMaxCell> PhiMaxTable(int m_lo, int m_hi, int n_lo, int n_hi,
                                    bool parallel) {
  auto eval = [](int n, int m) {
    PhiMaxCell cell;
    cell.n = n;
    cell.m = m;
    try {
      cell.result = PhiMax(n, m);
    } catch (const Error& e) {
      cell.error = e.what();
    }
    return cell;
  };
  std::vector<std::pair<int, int>> keys;
  for (int m = m_lo; m <= m_hi; ++m) {
    for (int n = n_lo; n <= n_hi; ++n) keys.emplace_back(n, m);
  }
  std::vector<PhiMaxCell> cells(keys.size());
  const unsigned workers =
      parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
  if (workers == 1 || keys.size() < 2) {
    for (size_t k = 0; k < keys.size(); ++k) {
      cells[k] = eval(keys[k].first, keys[k].second);
    }
    return cells;
  }
  // Each worker owns the slots it claims, so the output order is fixed.
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t k = next++; k < keys.size(); k = next++) {
        cells[k] = eval(keys[k].first, keys[k].second);
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return cells;
}

}  // namespace spiraltile
