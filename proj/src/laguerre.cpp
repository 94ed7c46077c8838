// Copyright 2026 The landau-vortex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vortex/laguerre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace vortex::laguerre {
namespace {

void validate(LaguerreIndex idx) {
  if (idx.p < -1) {
    throw std::invalid_argument("Laguerre degree must be >= -1, got " +
                                std::to_string(idx.p));
  }
  if (idx.l < -1) {
    throw std::invalid_argument("Laguerre superscript must be >= -1, got " +
                                std::to_string(idx.l));
  }
}

template <typename Real>
Real recurrence(int p, int l, Real x) {
  if (p < 0) return Real(0);
  Real prev = Real(1);
  if (p == 0) return prev;
  const Real alpha = static_cast<Real>(l);
  Real cur = Real(1) + alpha - x;
  for (int n = 1; n < p; ++n) {
    const Real next =
        ((Real(2 * n + 1) + alpha - x) * cur - (Real(n) + alpha) * prev) /
        Real(n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double binomial(int n, int k) {
  if (k < 0) return 0.0;
  if (n >= 0 && k > n) return 0.0;
  double b = 1.0;
  for (int i = 1; i <= k; ++i) {
    b *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return b;
}

// Bisection on a bracket known to hold exactly one sign change.
double bisect(LaguerreIndex idx, double lo, double hi) {
  double flo = eval(idx, lo);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = eval(idx, mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double eval(LaguerreIndex idx, double x) {
  validate(idx);
  return recurrence<double>(idx.p, idx.l, x);
}

double eval_derivative(LaguerreIndex idx, double x) {
  validate(idx);
  if (idx.p <= 0) return 0.0;
  return -eval({idx.p - 1, idx.l + 1}, x);
}

std::vector<double> coefficients(LaguerreIndex idx) {
  validate(idx);
  if (idx.p < 0) return {};
  std::vector<double> c(static_cast<std::size_t>(idx.p) + 1);
  double inv_factorial = 1.0;
  for (int j = 0; j <= idx.p; ++j) {
    if (j > 0) inv_factorial /= static_cast<double>(j);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(j)] =
        sign * binomial(idx.p + idx.l, idx.p - j) * inv_factorial;
  }
  return c;
}

double check_recurrences(int p, int l, double x) {
  const double lpl = eval({p, l}, x);
  const double lpl1 = eval({p, l + 1}, x);
  const double lm1l1 = eval({p - 1, l + 1}, x);
  const double r1 = std::abs(lpl - (lpl1 - lm1l1));
  const double s1 =
      std::max({1.0, std::abs(lpl), std::abs(lpl1), std::abs(lm1l1)});

  const double lhs = x * eval_derivative({p, l}, x);
  const double pl = static_cast<double>(p) * lpl;
  const double tail = static_cast<double>(p + l) * eval({p - 1, l}, x);
  const double r2 = std::abs(lhs - (pl - tail));
  const double s2 =
      std::max({1.0, std::abs(lhs), std::abs(pl), std::abs(tail)});
  return std::max(r1 / s1, r2 / s2);
}

double factorial_ratio(int l, int p) {
  if (l < 0 || p < 0) {
    throw std::invalid_argument("factorial_ratio needs nonnegative l and p");
  }
  if (l + p > 170) {
    throw std::range_error("factorial_ratio overflows double for l + p > 170");
  }
  double r = 1.0;
  for (int i = 1; i <= l; ++i) r *= static_cast<double>(p + i);
  return r;
}

QuadratureRule gauss_laguerre(int n, int alpha) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre needs n >= 1");
  if (alpha < 0) throw std::invalid_argument("gauss_laguerre needs alpha >= 0");

  // Jacobi matrix of the monic generalized Laguerre recurrence.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0 + alpha;
  for (int i = 1; i < n; ++i) sub(i - 1) = std::sqrt(double(i) * (i + alpha));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);

  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const long double norm =
      static_cast<long double>(factorial_ratio(alpha, n));
  for (int i = 0; i < n; ++i) {
    long double x = solver.eigenvalues()(i);
    for (int it = 0; it < 4; ++it) {
      const long double f = recurrence<long double>(n, alpha, x);
      const long double df = -recurrence<long double>(n - 1, alpha + 1, x);
      if (df == 0.0L) break;
      x -= f / df;
    }
    const long double next = recurrence<long double>(n + 1, alpha, x);
    const long double w =
        norm * x / ((n + 1.0L) * (n + 1.0L) * next * next);
    rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(x);
    rule.weights[static_cast<std::size_t>(i)] = static_cast<double>(w);
  }
  return rule;
}

double weighted_inner_product(int p1, int p2, int l, int weight_power) {
  if (p1 < 0 || p2 < 0 || l < 0 || weight_power < 0) {
    throw std::invalid_argument("weighted_inner_product needs indices >= 0");
  }
  // Exact for degree p1 + p2 <= 2n - 1.
  const int n = (p1 + p2) / 2 + 1;
  const QuadratureRule rule = gauss_laguerre(n, weight_power);
  long double sum = 0.0L;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const long double x = rule.nodes[i];
    sum += rule.weights[i] * recurrence<long double>(p1, l, x) *
           recurrence<long double>(p2, l, x);
  }
  return static_cast<double>(sum);
}

std::vector<double> positive_roots(LaguerreIndex idx) {
  validate(idx);
  if (idx.p <= 0) return {};
  if (idx.l == -1) {
    // L_p^{-1}(x) = -(x / p) L_{p-1}^1(x)
    return positive_roots({idx.p - 1, 1});
  }
  // Zeros of L_p^l interlace with those of its derivative -L_{p-1}^{l+1},
  // so each gap between consecutive critical points holds exactly one root.
  std::vector<double> brackets{0.0};
  for (double c : positive_roots({idx.p - 1, idx.l + 1})) brackets.push_back(c);
  double upper = 4.0 * idx.p + 2.0 * idx.l + 10.0;
  const double tail_sign = (idx.p % 2 == 0) ? 1.0 : -1.0;
  while (eval(idx, upper) * tail_sign <= 0.0) upper *= 2.0;
  brackets.push_back(upper);

  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(idx.p));
  for (std::size_t i = 0; i + 1 < brackets.size(); ++i) {
    roots.push_back(bisect(idx, brackets[i], brackets[i + 1]));
  }
  return roots;
}

}  // namespace vortex::laguerre
