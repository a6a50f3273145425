#include "aastokes/special_functions.hpp"

#include "aastokes/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace aastokes {

namespace {

// Coefficients of H_{2M-1}(x)/x as a polynomial in y = x^2, lowest first.
struct EtaTable {
  std::array<std::vector<double>, OrderIndex::max_value + 1> poly;
  std::array<double, OrderIndex::max_value + 1> scale{};

  EtaTable() {
    // Hermite coefficient vectors in powers of x.
    std::vector<std::vector<double>> h(2 * OrderIndex::max_value);
    h[0] = {1.0};
    h[1] = {0.0, 2.0};
    for (std::size_t n = 1; n + 1 < h.size(); ++n) {
      std::vector<double> next(n + 2, 0.0);
      for (std::size_t j = 0; j < h[n].size(); ++j) next[j + 1] += 2.0 * h[n][j];
      for (std::size_t j = 0; j < h[n - 1].size(); ++j)
        next[j] -= 2.0 * static_cast<double>(n) * h[n - 1][j];
      h[n + 1] = std::move(next);
    }
    double factorial = 1.0;
    for (int m = 1; m <= OrderIndex::max_value; ++m) {
      if (m > 1) factorial *= (m - 1);
      const auto& odd = h[2 * m - 1];
      std::vector<double> even;
      for (std::size_t j = 1; j < odd.size(); j += 2) even.push_back(odd[j]);
      poly[m] = std::move(even);
      const double sign = (m % 2 == 1) ? 1.0 : -1.0;
      scale[m] = sign / (std::ldexp(1.0, 2 * m - 1) * std::sqrt(std::numbers::pi) * factorial);
    }
  }
};

const EtaTable& eta_table() {
  static const EtaTable table;
  return table;
}

// H_{n}(x)/x for odd n via the recurrence divided through by x.
double odd_hermite_over_x(int n, double x) {
  double prev = 1.0;     // H_0
  double curr = 2.0 * x; // H_1
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * curr - 2.0 * k * prev;
    prev = curr;
    curr = next;
  }
  return curr / x;
}

} // namespace

OrderIndex::OrderIndex(int m) : m_(m) {
  if (m < 1 || m > max_value)
    throw ParameterError("order index M must lie in [1, " + std::to_string(max_value) +
                         "], got " + std::to_string(m));
}

double hermite(int k, double x) {
  if (k < 0) throw ParameterError("hermite: negative degree");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * x;
  for (int n = 1; n < k; ++n) {
    const double next = 2.0 * x * curr - 2.0 * n * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

double eta_2m(OrderIndex m, double x) {
  const auto& table = eta_table();
  const int M = m.value();
  double p;
  if (std::abs(x) < 1.0) {
    const auto& c = table.poly[M];
    const double y = x * x;
    p = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * y + *it;
  } else {
    p = odd_hermite_over_x(2 * M - 1, x);
  }
  return table.scale[M] * p * std::exp(-x * x);
}

QrEvaluator::QrEvaluator(OrderIndex m, double r) : m_(m.value()) {
  if (!(r >= 0.0)) throw ParameterError("Q_M/R_M: r must be non-negative");
  const double onep = 1.0 + r;
  inv_sqrt_ = 1.0 / std::sqrt(onep);
  // qc_k = (1+r)^{-(k+1/2)} (-1)^k / (4^k k!)
  qc_[0] = inv_sqrt_;
  for (int k = 1; k < m_; ++k) qc_[k] = -qc_[k - 1] / (4.0 * k * onep);
  // rc_k = (1+r)^{-(k+1)} (-1)^k / (4^{k-1} (k-1)!) = 4k qc_k / sqrt(1+r)
  for (int k = 1; k < m_; ++k) rc_[k] = 4.0 * k * qc_[k] * inv_sqrt_;
}

void QrEvaluator::both(double x, double& q_out, double& r_out) const {
  const double z = x * inv_sqrt_;
  double q = qc_[0];
  double rr = 0.0;
  double prev = 1.0;    // H_0
  double curr = 2.0 * z; // H_1
  int n = 1;
  for (int k = 1; k < m_; ++k) {
    // curr holds H_{2k-1}
    rr += rc_[k] * curr;
    double next = 2.0 * z * curr - 2.0 * n * prev;
    prev = curr;
    curr = next;
    ++n;
    // curr holds H_{2k}
    q += qc_[k] * curr;
    next = 2.0 * z * curr - 2.0 * n * prev;
    prev = curr;
    curr = next;
    ++n;
  }
  q_out = q;
  r_out = rr;
}

double QrEvaluator::q(double x) const {
  double q, r;
  both(x, q, r);
  return q;
}

double QrEvaluator::r(double x) const {
  double q, r;
  both(x, q, r);
  return r;
}

double q_m(OrderIndex m, double x, double r) { return QrEvaluator(m, r).q(x); }

double r_m(OrderIndex m, double x, double r) { return QrEvaluator(m, r).r(x); }

} // namespace aastokes
