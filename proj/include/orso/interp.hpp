#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "orso/common.hpp"

namespace orso {

// Monotone cubic (Fritsch-Carlson) interpolant through strictly increasing
// (x, y) data.  Used by tabulated Young functions in log-log coordinates.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y)
      : x_(std::move(x)), y_(std::move(y)) {
    const size_t n = x_.size();
    if (n < 2 || y_.size() != n) throw domain_error("MonotoneCubic: need >= 2 nodes");
    m_.resize(n);
    std::vector<double> d(n - 1);
    for (size_t i = 0; i + 1 < n; ++i) {
      const double h = x_[i + 1] - x_[i];
      if (!(h > 0.0)) throw domain_error("MonotoneCubic: x not increasing");
      d[i] = (y_[i + 1] - y_[i]) / h;
    }
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (size_t i = 1; i + 1 < n; ++i)
      m_[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    for (size_t i = 0; i + 1 < n; ++i) {
      if (d[i] == 0.0) { m_[i] = m_[i + 1] = 0.0; continue; }
      const double a = m_[i] / d[i], b = m_[i + 1] / d[i];
      const double s = a * a + b * b;
      if (s > 9.0) {
        const double t = 3.0 / std::sqrt(s);
        m_[i] = t * a * d[i];
        m_[i + 1] = t * b * d[i];
      }
    }
  }

  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  double y_front() const { return y_.front(); }
  double y_back() const { return y_.back(); }
  double slope_front() const { return m_.front(); }
  double slope_back() const { return m_.back(); }

  double operator()(double x) const {
    const size_t n = x_.size();
    if (x <= x_[0]) return y_[0] + m_[0] * (x - x_[0]);
    if (x >= x_[n - 1]) return y_[n - 1] + m_[n - 1] * (x - x_[n - 1]);
    const size_t i = seg(x);
    const double h = x_[i + 1] - x_[i];
    const double t = (x - x_[i]) / h;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * y_[i] + h10 * h * m_[i] + h01 * y_[i + 1] + h11 * h * m_[i + 1];
  }

  // Inverse for data with non-decreasing y; generalized: returns the largest
  // x with value(x) <= yq inside the node range (clamped extrapolation
  // outside).
  double inverse(double yq) const {
    const size_t n = x_.size();
    if (yq <= y_[0]) {
      if (m_[0] > 0.0) return x_[0] + (yq - y_[0]) / m_[0];
      return x_[0];
    }
    if (yq >= y_[n - 1]) {
      if (m_[n - 1] > 0.0) return x_[n - 1] + (yq - y_[n - 1]) / m_[n - 1];
      return x_[n - 1];
    }
    auto it = std::upper_bound(y_.begin(), y_.end(), yq);
    size_t i = static_cast<size_t>(it - y_.begin());
    if (i == 0) i = 1;
    double lo = x_[i - 1], hi = x_[std::min(i, n - 1)];
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      ((*this)(mid) <= yq ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

 private:
  size_t seg(double x) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    size_t i = static_cast<size_t>(it - x_.begin());
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
  }

  std::vector<double> x_, y_, m_;
};

}  // namespace orso
