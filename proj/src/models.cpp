#include "fitzlab/models.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fitzlab {

namespace {

class QuadraticModel final : public ScalarModel {
  public:
    explicit QuadraticModel(double q) : q_(q) {
        if (!(q > 0.0)) throw std::invalid_argument("quadratic model: q must be > 0");
    }
    ExtReal value(double x) const override { return ExtReal(0.5 * q_ * x * x); }
    ExtReal conjugate_value(double s) const override { return ExtReal(0.5 * s * s / q_); }
    double subgradient(double x) const override { return q_ * x; }
    std::unique_ptr<ScalarModel> conjugate_model() const override {
        return std::make_unique<QuadraticModel>(1.0 / q_);
    }
    std::unique_ptr<ScalarModel> clone() const override {
        return std::make_unique<QuadraticModel>(q_);
    }
    std::string describe() const override {
        std::ostringstream os;
        os << "quadratic(q=" << q_ << ")";
        return os.str();
    }

  private:
    double q_;
};

class PowerModel final : public ScalarModel {
  public:
    explicit PowerModel(double p) : p_(p) {
        if (!(p > 1.0)) throw std::invalid_argument("power model: p must be > 1");
    }
    ExtReal value(double x) const override { return ExtReal(std::pow(std::fabs(x), p_) / p_); }
    ExtReal conjugate_value(double s) const override {
        const double q = p_ / (p_ - 1.0);
        return ExtReal(std::pow(std::fabs(s), q) / q);
    }
    double subgradient(double x) const override {
        if (x == 0.0) return 0.0;
        return (x > 0.0 ? 1.0 : -1.0) * std::pow(std::fabs(x), p_ - 1.0);
    }
    std::unique_ptr<ScalarModel> conjugate_model() const override {
        return std::make_unique<PowerModel>(p_ / (p_ - 1.0));
    }
    std::unique_ptr<ScalarModel> clone() const override { return std::make_unique<PowerModel>(p_); }
    std::string describe() const override {
        std::ostringstream os;
        os << "power(p=" << p_ << ")";
        return os.str();
    }

  private:
    double p_;
};

class AbsModel final : public ScalarModel {
  public:
    ExtReal value(double x) const override { return ExtReal(std::fabs(x)); }
    ExtReal conjugate_value(double s) const override {
        return std::fabs(s) <= 1.0 ? ExtReal(0.0) : ExtReal::infinity();
    }
    double subgradient(double x) const override {
        if (x == 0.0) return 0.0;  // midpoint of [-1, 1]
        return x > 0.0 ? 1.0 : -1.0;
    }
    std::unique_ptr<ScalarModel> conjugate_model() const override;
    std::unique_ptr<ScalarModel> clone() const override { return std::make_unique<AbsModel>(); }
    std::string describe() const override { return "abs"; }
};

class IntervalIndicatorModel final : public ScalarModel {
  public:
    IntervalIndicatorModel(double a, double b) : a_(a), b_(b) {
        if (!(a < b)) throw std::invalid_argument("interval indicator: needs a < b");
    }
    ExtReal value(double x) const override {
        return (x >= a_ && x <= b_) ? ExtReal(0.0) : ExtReal::infinity();
    }
    ExtReal conjugate_value(double s) const override { return ExtReal(std::max(a_ * s, b_ * s)); }
    double subgradient(double x) const override {
        if (x > a_ && x < b_) return 0.0;
        throw OutOfDomainError("interval indicator: no bounded subgradient at " +
                               std::to_string(x));
    }
    std::unique_ptr<ScalarModel> conjugate_model() const override {
        return make_interval_support(a_, b_);
    }
    std::unique_ptr<ScalarModel> clone() const override {
        return std::make_unique<IntervalIndicatorModel>(a_, b_);
    }
    std::string describe() const override {
        std::ostringstream os;
        os << "indicator[" << a_ << "," << b_ << "]";
        return os.str();
    }

  private:
    double a_, b_;
};

class IntervalSupportModel final : public ScalarModel {
  public:
    IntervalSupportModel(double a, double b) : a_(a), b_(b) {
        if (!(a < b)) throw std::invalid_argument("interval support: needs a < b");
    }
    ExtReal value(double s) const override { return ExtReal(std::max(a_ * s, b_ * s)); }
    ExtReal conjugate_value(double x) const override {
        return (x >= a_ && x <= b_) ? ExtReal(0.0) : ExtReal::infinity();
    }
    double subgradient(double s) const override {
        if (s > 0.0) return b_;
        if (s < 0.0) return a_;
        return 0.5 * (a_ + b_);  // kink midpoint
    }
    std::unique_ptr<ScalarModel> conjugate_model() const override {
        return std::make_unique<IntervalIndicatorModel>(a_, b_);
    }
    std::unique_ptr<ScalarModel> clone() const override {
        return std::make_unique<IntervalSupportModel>(a_, b_);
    }
    std::string describe() const override {
        std::ostringstream os;
        os << "support[" << a_ << "," << b_ << "]";
        return os.str();
    }

  private:
    double a_, b_;
};

std::unique_ptr<ScalarModel> AbsModel::conjugate_model() const {
    return std::make_unique<IntervalIndicatorModel>(-1.0, 1.0);
}

class OffsetModel final : public ScalarModel {
  public:
    OffsetModel(std::unique_ptr<ScalarModel> base, double c) : base_(std::move(base)), c_(c) {}
    ExtReal value(double x) const override { return base_->value(x) + c_; }
    ExtReal conjugate_value(double s) const override { return base_->conjugate_value(s) - c_; }
    double subgradient(double x) const override { return base_->subgradient(x); }
    std::unique_ptr<ScalarModel> conjugate_model() const override {
        return std::make_unique<OffsetModel>(base_->conjugate_model(), -c_);
    }
    std::unique_ptr<ScalarModel> clone() const override {
        return std::make_unique<OffsetModel>(base_->clone(), c_);
    }
    std::string describe() const override {
        std::ostringstream os;
        os << base_->describe() << "+" << c_;
        return os.str();
    }

  private:
    std::unique_ptr<ScalarModel> base_;
    double c_;
};

// base(x) + a x; conjugate is base*(s - a).
class TiltModel final : public ScalarModel {
  public:
    TiltModel(std::unique_ptr<ScalarModel> base, double a) : base_(std::move(base)), a_(a) {}
    ExtReal value(double x) const override { return base_->value(x) + a_ * x; }
    ExtReal conjugate_value(double s) const override { return base_->conjugate_value(s - a_); }
    double subgradient(double x) const override { return base_->subgradient(x) + a_; }
    std::unique_ptr<ScalarModel> conjugate_model() const override {
        return make_arg_shift(base_->conjugate_model(), a_);
    }
    std::unique_ptr<ScalarModel> clone() const override {
        return std::make_unique<TiltModel>(base_->clone(), a_);
    }
    std::string describe() const override {
        std::ostringstream os;
        os << base_->describe() << "+" << a_ << "*x";
        return os.str();
    }

  private:
    std::unique_ptr<ScalarModel> base_;
    double a_;
};

// base(x - a); conjugate is base*(s) + a s.
class ArgShiftModel final : public ScalarModel {
  public:
    ArgShiftModel(std::unique_ptr<ScalarModel> base, double a) : base_(std::move(base)), a_(a) {}
    ExtReal value(double x) const override { return base_->value(x - a_); }
    ExtReal conjugate_value(double s) const override { return base_->conjugate_value(s) + a_ * s; }
    double subgradient(double x) const override { return base_->subgradient(x - a_); }
    std::unique_ptr<ScalarModel> conjugate_model() const override {
        return make_tilt(base_->conjugate_model(), a_);
    }
    std::unique_ptr<ScalarModel> clone() const override {
        return std::make_unique<ArgShiftModel>(base_->clone(), a_);
    }
    std::string describe() const override {
        std::ostringstream os;
        os << base_->describe() << "(x-" << a_ << ")";
        return os.str();
    }

  private:
    std::unique_ptr<ScalarModel> base_;
    double a_;
};

}  // namespace

std::unique_ptr<ScalarModel> make_quadratic(double q) { return std::make_unique<QuadraticModel>(q); }
std::unique_ptr<ScalarModel> make_power(double p) { return std::make_unique<PowerModel>(p); }
std::unique_ptr<ScalarModel> make_abs() { return std::make_unique<AbsModel>(); }
std::unique_ptr<ScalarModel> make_interval_indicator(double a, double b) {
    return std::make_unique<IntervalIndicatorModel>(a, b);
}
std::unique_ptr<ScalarModel> make_interval_support(double a, double b) {
    return std::make_unique<IntervalSupportModel>(a, b);
}
std::unique_ptr<ScalarModel> make_offset(std::unique_ptr<ScalarModel> base, double c) {
    return std::make_unique<OffsetModel>(std::move(base), c);
}
std::unique_ptr<ScalarModel> make_tilt(std::unique_ptr<ScalarModel> base, double a) {
    return std::make_unique<TiltModel>(std::move(base), a);
}
std::unique_ptr<ScalarModel> make_arg_shift(std::unique_ptr<ScalarModel> base, double a) {
    return std::make_unique<ArgShiftModel>(std::move(base), a);
}

FunctionModel::FunctionModel(std::vector<std::unique_ptr<ScalarModel>> components)
    : comps_(std::move(components)) {
    if (comps_.empty()) throw std::invalid_argument("FunctionModel: needs >= 1 component");
}

FunctionModel::FunctionModel(const FunctionModel& other) {
    comps_.reserve(other.comps_.size());
    for (const auto& c : other.comps_) comps_.push_back(c->clone());
}

FunctionModel& FunctionModel::operator=(const FunctionModel& other) {
    if (this == &other) return *this;
    std::vector<std::unique_ptr<ScalarModel>> copy;
    copy.reserve(other.comps_.size());
    for (const auto& c : other.comps_) copy.push_back(c->clone());
    comps_ = std::move(copy);
    return *this;
}

ExtReal FunctionModel::value(std::span<const double> x) const {
    if (x.size() != comps_.size())
        throw std::invalid_argument("FunctionModel::value: dimension mismatch");
    ExtReal s(0.0);
    for (std::size_t i = 0; i < comps_.size(); ++i) s = s + comps_[i]->value(x[i]);
    return s;
}

ExtReal FunctionModel::conjugate_value(std::span<const double> s) const {
    if (s.size() != comps_.size())
        throw std::invalid_argument("FunctionModel::conjugate_value: dimension mismatch");
    ExtReal v(0.0);
    for (std::size_t i = 0; i < comps_.size(); ++i) v = v + comps_[i]->conjugate_value(s[i]);
    return v;
}

std::vector<double> FunctionModel::subgradient(std::span<const double> x) const {
    if (x.size() != comps_.size())
        throw std::invalid_argument("FunctionModel::subgradient: dimension mismatch");
    std::vector<double> g(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) g[i] = comps_[i]->subgradient(x[i]);
    return g;
}

FunctionModel FunctionModel::conjugate() const {
    std::vector<std::unique_ptr<ScalarModel>> conj;
    conj.reserve(comps_.size());
    for (const auto& c : comps_) conj.push_back(c->conjugate_model());
    return FunctionModel(std::move(conj));
}

std::string FunctionModel::describe() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << " (+) ";
        os << comps_[i]->describe();
    }
    return os.str();
}

FunctionModel FunctionModel::quadratic(std::size_t n, double q) {
    std::vector<std::unique_ptr<ScalarModel>> cs;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(make_quadratic(q));
    return FunctionModel(std::move(cs));
}

FunctionModel FunctionModel::power(std::size_t n, double p) {
    std::vector<std::unique_ptr<ScalarModel>> cs;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(make_power(p));
    return FunctionModel(std::move(cs));
}

FunctionModel FunctionModel::absolute_value(std::size_t n) {
    std::vector<std::unique_ptr<ScalarModel>> cs;
    for (std::size_t i = 0; i < n; ++i) cs.push_back(make_abs());
    return FunctionModel(std::move(cs));
}

FunctionModel FunctionModel::with_offset(FunctionModel base, double c) {
    // fold the offset into the first component
    std::vector<std::unique_ptr<ScalarModel>> cs;
    for (std::size_t i = 0; i < base.dimension(); ++i) cs.push_back(base.component(i).clone());
    cs[0] = make_offset(std::move(cs[0]), c);
    return FunctionModel(std::move(cs));
}

}  // namespace fitzlab
