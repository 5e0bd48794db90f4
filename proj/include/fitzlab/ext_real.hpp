#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fitzlab {

// Raised when a computation would produce -inf or NaN (improper function
// values), or when an input function has no finite value at all.
struct ImproperValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a query point leaves the domain of a grid or model.
struct OutOfDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Extended real value: a finite double or +infinity.
///
/// -infinity is never representable. Every constructor and arithmetic
/// operation checks for it (and for NaN) and throws ImproperValueError,
/// so a +inf sentinel cannot silently decay into ordinary float math.
class ExtReal {
  public:
    ExtReal() : v_(0.0) {}

    ExtReal(double v) : v_(v) {
        if (std::isnan(v) || v == -std::numeric_limits<double>::infinity())
            throw ImproperValueError("ExtReal: value is NaN or -inf");
    }

    static ExtReal infinity() {
        ExtReal r;
        r.v_ = std::numeric_limits<double>::infinity();
        return r;
    }

    bool is_finite() const { return std::isfinite(v_); }
    bool is_inf() const { return !std::isfinite(v_); }

    /// Finite value; throws if +inf.
    double finite() const {
        if (is_inf()) throw ImproperValueError("ExtReal: +inf where a finite value is required");
        return v_;
    }

    /// Raw double, +inf allowed. For comparisons and serialization.
    double raw() const { return v_; }

    friend ExtReal operator+(ExtReal a, ExtReal b) {
        if (a.is_inf() || b.is_inf()) return infinity();
        return ExtReal(a.v_ + b.v_);
    }

    /// Subtract a finite shift. inf - finite stays inf.
    friend ExtReal operator-(ExtReal a, double b) {
        if (a.is_inf()) return infinity();
        return ExtReal(a.v_ - b);
    }

    friend ExtReal operator+(ExtReal a, double b) { return a + ExtReal(b); }

    /// Scale by a nonnegative factor with the convex-analysis convention
    /// 0 * inf = 0.
    ExtReal scale(double lambda) const {
        if (lambda < 0.0) throw std::invalid_argument("ExtReal::scale: negative factor");
        if (lambda == 0.0) return ExtReal(0.0);
        if (is_inf()) return infinity();
        return ExtReal(lambda * v_);
    }

    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtReal a, ExtReal b) { return a.v_ != b.v_; }
    friend bool operator<(ExtReal a, ExtReal b) { return a.v_ < b.v_; }
    friend bool operator<=(ExtReal a, ExtReal b) { return a.v_ <= b.v_; }
    friend bool operator>(ExtReal a, ExtReal b) { return a.v_ > b.v_; }
    friend bool operator>=(ExtReal a, ExtReal b) { return a.v_ >= b.v_; }

    friend ExtReal min(ExtReal a, ExtReal b) { return a < b ? a : b; }
    friend ExtReal max(ExtReal a, ExtReal b) { return a < b ? b : a; }

  private:
    double v_;
};

}  // namespace fitzlab
