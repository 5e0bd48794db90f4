#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fitzlab/ext_real.hpp"

namespace fitzlab {

/// One-dimensional convex lower semicontinuous function with a closed-form
/// conjugate and a deterministic subgradient selection. These are the
/// oracles the rest of the laboratory is tested against.
class ScalarModel {
  public:
    virtual ~ScalarModel() = default;

    virtual ExtReal value(double x) const = 0;
    virtual ExtReal conjugate_value(double s) const = 0;

    /// Deterministic selection: at a kink, the midpoint of the bounded
    /// subgradient interval; outside the domain (or where the subgradient
    /// set is unbounded) throws OutOfDomainError.
    virtual double subgradient(double x) const = 0;

    /// The conjugate as another closed-form model.
    virtual std::unique_ptr<ScalarModel> conjugate_model() const = 0;

    virtual std::unique_ptr<ScalarModel> clone() const = 0;
    virtual std::string describe() const = 0;
};

std::unique_ptr<ScalarModel> make_quadratic(double q);           // q x^2 / 2, q > 0
std::unique_ptr<ScalarModel> make_power(double p);               // |x|^p / p, p > 1
std::unique_ptr<ScalarModel> make_abs();                         // |x|
std::unique_ptr<ScalarModel> make_interval_indicator(double a, double b);
std::unique_ptr<ScalarModel> make_interval_support(double a, double b);  // max(a s, b s)
std::unique_ptr<ScalarModel> make_offset(std::unique_ptr<ScalarModel> base, double c);
std::unique_ptr<ScalarModel> make_tilt(std::unique_ptr<ScalarModel> base, double a);  // base + a x
std::unique_ptr<ScalarModel> make_arg_shift(std::unique_ptr<ScalarModel> base, double a);  // base(x - a)

/// Separable sum of scalar models: f(x) = sum_i f_i(x_i). Copyable value
/// type; the conjugate is the separable sum of the component conjugates.
class FunctionModel {
  public:
    explicit FunctionModel(std::vector<std::unique_ptr<ScalarModel>> components);

    FunctionModel(const FunctionModel& other);
    FunctionModel& operator=(const FunctionModel& other);
    FunctionModel(FunctionModel&&) noexcept = default;
    FunctionModel& operator=(FunctionModel&&) noexcept = default;

    std::size_t dimension() const { return comps_.size(); }
    const ScalarModel& component(std::size_t i) const { return *comps_[i]; }

    ExtReal value(std::span<const double> x) const;
    ExtReal conjugate_value(std::span<const double> s) const;
    std::vector<double> subgradient(std::span<const double> x) const;
    FunctionModel conjugate() const;

    std::string describe() const;

    // common catalog entries
    static FunctionModel quadratic(std::size_t n, double q);
    static FunctionModel power(std::size_t n, double p);
    static FunctionModel absolute_value(std::size_t n);
    static FunctionModel with_offset(FunctionModel base, double c);

  private:
    std::vector<std::unique_ptr<ScalarModel>> comps_;
};

}  // namespace fitzlab
