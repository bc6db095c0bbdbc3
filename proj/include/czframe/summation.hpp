#pragma once

#include <cmath>
#include <complex>
#include <span>

namespace czframe {

// Neumaier compensated sum. Results do not depend on thread count because every
// reduction in the library is accumulated serially over a fixed index order.
class CompensatedSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double v) noexcept {
        add(v);
        return *this;
    }
    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class ComplexCompensatedSum {
public:
    void add(std::complex<double> v) noexcept {
        re_.add(v.real());
        im_.add(v.imag());
    }
    ComplexCompensatedSum& operator+=(std::complex<double> v) noexcept {
        add(v);
        return *this;
    }
    [[nodiscard]] std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

inline double compensated_sum(std::span<const double> values) noexcept {
    CompensatedSum s;
    for (double v : values) s.add(v);
    return s.value();
}

} // namespace czframe
