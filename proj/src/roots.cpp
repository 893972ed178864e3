#include "fbc/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace fbc {

namespace {

using cd = std::complex<double>;

cd eval(const std::vector<double>& c, cd x) {
  cd y = 0;
  for (size_t i = c.size(); i-- > 0;) y = y * x + c[i];
  return y;
}

cd eval_deriv(const std::vector<double>& c, cd x) {
  cd y = 0;
  for (size_t i = c.size(); i-- > 1;) y = y * x + static_cast<double>(i) * c[i];
  return y;
}

}  // namespace

std::vector<cd> poly_roots(const std::vector<double>& coeffs_in) {
  std::vector<double> c = coeffs_in;
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  double scale = 0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  for (double& v : c) v /= scale;

  // Companion matrix for the initial approximations.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
  std::vector<cd> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()[i];
  // Spread exactly coincident starting points so the Aberth denominators
  // stay nonzero.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (roots[i] == roots[j]) roots[i] += cd(1e-8 * (i + 1), 1e-8);

  // Aberth-Ehrlich refinement.
  for (int iter = 0; iter < 400; ++iter) {
    double max_update = 0;
    for (int i = 0; i < n; ++i) {
      cd p = eval(c, roots[i]);
      cd dp = eval_deriv(c, roots[i]);
      if (std::abs(dp) == 0.0) continue;
      cd ratio = p / dp;
      cd dsum = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i) dsum += 1.0 / (roots[i] - roots[j]);
      }
      cd denom = 1.0 - ratio * dsum;
      if (std::abs(denom) == 0.0) continue;
      cd upd = ratio / denom;
      roots[i] -= upd;
      max_update = std::max(max_update, std::abs(upd));
    }
    if (max_update < 1e-13) break;
  }

  // Newton polish; skipped near multiple roots where p' collapses.
  for (auto& r : roots) {
    for (int k = 0; k < 6; ++k) {
      cd p = eval(c, r);
      cd dp = eval_deriv(c, r);
      if (std::abs(dp) < 1e-12) break;
      cd step = p / dp;
      if (!(std::abs(step) < 1.0)) break;
      r -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(r))) break;
    }
  }
  return roots;
}

std::vector<cd> laurent1_roots(const Laurent1& p) {
  if (p.is_zero()) throw ValidationError("ZeroPolynomial", "roots of zero polynomial");
  int64_t min_exp = 0;
  std::vector<Integer> coeffs = laurent1_coeffs(p, min_exp);
  std::vector<double> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i].to_double();
  return poly_roots(c);
}

double max_root_modulus(const Laurent1& p) {
  auto roots = laurent1_roots(p);
  double m = 0;
  for (auto r : roots) m = std::max(m, std::abs(r));
  return m;
}

MinRoot min_modulus_root(const Laurent1& p) {
  auto roots = laurent1_roots(p);
  if (roots.empty())
    throw ValidationError("ZeroPolynomial", "min_modulus_root: polynomial is a unit");
  size_t best = 0;
  for (size_t i = 1; i < roots.size(); ++i)
    if (std::abs(roots[i]) < std::abs(roots[best])) best = i;
  MinRoot out;
  out.root = roots[best];
  out.modulus = std::abs(roots[best]);
  out.real = std::abs(roots[best].imag()) <= 1e-8 * std::max(1.0, out.modulus);
  return out;
}

double perron_root(const Laurent1& char_poly, double lo, double hi) {
  int64_t min_exp = 0;
  std::vector<Integer> icoeffs = laurent1_coeffs(char_poly, min_exp);
  std::vector<double> c(icoeffs.size());
  for (size_t i = 0; i < icoeffs.size(); ++i) c[i] = icoeffs[i].to_double();
  auto f = [&](double t) { return eval(c, cd(t, 0)).real(); };

  if (hi <= lo) return hi;
  if (f(hi) == 0.0) return hi;
  // p(t) > 0 beyond the largest real root and p < 0 just below a simple
  // Perron root: scan down from hi for a sign change.
  double neg = hi, pos = hi;
  bool found = false;
  const int kSteps = 4096;
  for (int i = 1; i <= kSteps; ++i) {
    double t = hi - (hi - lo) * i / kSteps;
    if (f(t) < 0) {
      neg = t;
      pos = hi - (hi - lo) * (i - 1) / kSteps;
      found = true;
      break;
    }
    if (f(t) == 0.0) return t;
  }
  if (!found) {
    // Root equals (numerically) an endpoint or the gap is below scan
    // resolution; fall back to the largest real root from the full solver.
    double best = lo;
    for (auto r : laurent1_roots(char_poly)) {
      if (std::abs(r.imag()) < 1e-9 && r.real() > best) best = r.real();
    }
    return best;
  }
  for (int i = 0; i < 200 && pos - neg > 1e-13; ++i) {
    double mid = 0.5 * (neg + pos);
    (f(mid) < 0 ? neg : pos) = mid;
  }
  double r = 0.5 * (neg + pos);
  for (int k = 0; k < 4; ++k) {
    double dp = eval_deriv(c, cd(r, 0)).real();
    if (std::abs(dp) < 1e-12) break;
    r -= f(r) / dp;
  }
  return r;
}

}  // namespace fbc
