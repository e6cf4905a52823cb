#pragma once

#include <cmath>

namespace lstat {

// Neumaier's variant of compensated summation; robust when a summand is
// larger in magnitude than the running sum.
class compensated_sum {
 public:
  compensated_sum() = default;
  explicit compensated_sum(double initial) : sum_(initial) {}

  compensated_sum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      correction_ += (sum_ - t) + x;
    } else {
      correction_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  compensated_sum& operator+=(const compensated_sum& other) {
    *this += other.sum_;
    *this += other.correction_;
    return *this;
  }

  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace lstat
