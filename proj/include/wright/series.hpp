#pragma once

// Shared machinery for the power series of this library: compensated
// accumulation, an overflow-free running product and the stopping rule.

#include <cmath>
#include <limits>

namespace wright {

struct SeriesTolerance {
    double rel_tol = 1e-13;
    double abs_tol = 1e-300;
    int max_terms = 2000;
};

// A truncated series value together with its truncation diagnostics.
struct SeriesEval {
    double value = 0.0;
    int terms_used = 0;
    double last_term_magnitude = 0.0;
    bool converged = false;
    // Sum of |terms|; sets the rounding noise floor of the value.
    double abs_sum = 0.0;
    // Relative rounding error of one term in the arithmetic used.
    double unit_roundoff = std::numeric_limits<double>::epsilon();

    double noise_floor() const noexcept { return 4.0 * unit_roundoff * abs_sum; }
};

// Neumaier compensated summation.
template <class Real>
class BasicCompensatedSum {
public:
    void add(Real x) noexcept
    {
        const Real t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_ += std::fabs(x);
    }
    Real value() const noexcept { return sum_ + comp_; }
    Real abs_sum() const noexcept { return abs_; }

private:
    Real sum_ = 0;
    Real comp_ = 0;
    Real abs_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;

// m * 2^e kept normalised, so long products of ratios never overflow.
class ScaledReal {
public:
    ScaledReal() = default;
    explicit ScaledReal(double v) noexcept { assign(v, 0); }

    static ScaledReal from_log(double log_abs, int sign) noexcept;

    ScaledReal& operator*=(double f) noexcept
    {
        assign(mant_ * f, exp_);
        return *this;
    }
    ScaledReal& operator*=(const ScaledReal& o) noexcept
    {
        assign(mant_ * o.mant_, exp_ + o.exp_);
        return *this;
    }
    friend ScaledReal operator*(ScaledReal a, const ScaledReal& b) noexcept { return a *= b; }

    double value() const noexcept { return std::ldexp(mant_, static_cast<int>(clamp_exp(exp_))); }
    double log_abs() const noexcept
    {
        return std::log(std::fabs(mant_)) + static_cast<double>(exp_) * 0.69314718055994530942;
    }
    bool is_zero() const noexcept { return mant_ == 0.0; }

private:
    void assign(double m, long e) noexcept
    {
        int k = 0;
        mant_ = std::frexp(m, &k);
        exp_ = (mant_ == 0.0) ? 0 : e + k;
    }
    static long clamp_exp(long e) noexcept
    {
        return e > 100000 ? 100000 : (e < -100000 ? -100000 : e);
    }

    double mant_ = 0.0;
    long exp_ = 0;
};

// 1/Gamma(x) in scaled form; exact zero at the poles.
ScaledReal rgamma_scaled(double x);
// Gamma(y) in scaled form for y > 0.
ScaledReal gamma_scaled(double y);

// 1/Gamma(x) = magnitude * oscillation. For x < 1/2 the reflection
// Gamma(1-x) sin(pi x)/pi is used, so the oscillation carries the sign
// changes and the exact zeros at the poles; otherwise it is 1.
struct ReciprocalGammaParts {
    ScaledReal magnitude;
    double oscillation;
};
ReciprocalGammaParts rgamma_parts(double x);

// Accumulates terms and decides when to stop. A series stops after three
// consecutive envelopes that are below abs_tol + rel_tol*|sum| and
// non-increasing. The envelope is the magnitude of the term with any
// oscillating factor (sin, cos, sign) dropped, so interior zeros of that
// factor cannot fake convergence. A stopped sum still counts as
// unconverged when cancellation has left fewer than three digits above its
// rounding floor.
template <class Real>
class BasicSeriesAccumulator {
public:
    // term_roundoff is the relative rounding error of one term; it defaults
    // to the unit roundoff of Real.
    explicit BasicSeriesAccumulator(const SeriesTolerance& tol,
                                    double term_roundoff = std::numeric_limits<Real>::epsilon()) noexcept
        : tol_(tol), roundoff_(term_roundoff)
    {
    }

    // Returns true once the stopping rule has fired or the term budget is spent.
    bool add(Real term, Real envelope) noexcept
    {
        if (done()) {
            return true;
        }
        ++count_;
        if (!std::isfinite(term) || !std::isfinite(envelope)) {
            finite_ = false;
            last_ = std::numeric_limits<Real>::infinity();
            return true;
        }
        sum_.add(term);
        envelope = std::fmax(envelope, std::fabs(term));
        last_ = envelope;
        const Real threshold = tol_.abs_tol + tol_.rel_tol * std::fabs(sum_.value());
        small_run_ = (envelope <= threshold && envelope <= prev_env_) ? small_run_ + 1 : 0;
        prev_env_ = envelope;
        stopped_ = stopped_ || small_run_ >= 3;
        return done();
    }

    bool done() const noexcept { return stopped_ || count_ >= tol_.max_terms || !finite_; }
    int count() const noexcept { return count_; }

    SeriesEval result() const noexcept
    {
        SeriesEval r;
        r.value = static_cast<double>(sum_.value());
        r.terms_used = count_;
        r.last_term_magnitude = static_cast<double>(last_);
        r.abs_sum = static_cast<double>(sum_.abs_sum());
        r.unit_roundoff = roundoff_;
        const bool resolved = r.noise_floor() <= 1e-3 * std::fabs(r.value) || r.abs_sum <= tol_.abs_tol;
        r.converged = stopped_ && finite_ && resolved;
        return r;
    }

private:
    SeriesTolerance tol_;
    double roundoff_;
    BasicCompensatedSum<Real> sum_;
    int count_ = 0;
    int small_run_ = 0;
    Real prev_env_ = std::numeric_limits<Real>::infinity();
    Real last_ = 0;
    bool stopped_ = false;
    bool finite_ = true;
};

using SeriesAccumulator = BasicSeriesAccumulator<double>;

}  // namespace wright
