#pragma once

#include <functional>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "epibound/errors.hpp"

namespace epibound {

struct EpidemicParams {
    double tau;    // per-edge transmission rate multiplier
    double gamma;  // recovery rate

    EpidemicParams(double tau_, double gamma_);
    /// gamma/tau; requires tau > 0.
    double alpha() const;
};

enum class ClosureKind { Product, Min, GeoSqrt, Custom };

/// Symmetric pair closure W: [0,1]^2 -> [0,1] approximating <I_iI_j> from the
/// node marginals, bounded by max(x+y-1,0) below and min(x,y) above.
class Closure {
public:
    static Closure product();
    static Closure minimum();
    static Closure geo_sqrt();
    /// Expression over x, y using + - * / min max sqrt pow. Validated on a
    /// 200-point grid; throws ValidationError if the bounds fail.
    static Closure custom(const std::string& expr, std::optional<double> r = std::nullopt);
    /// Same, but skips validation (for inspecting ill-formed candidates).
    static Closure custom_unchecked(const std::string& expr, std::optional<double> r = std::nullopt);
    /// {"kind": "product"|"min"|"geo_sqrt"|"custom", "expr"?: string, "r"?: real}
    static Closure from_config(const nlohmann::json& config);
    static Closure from_spec(const std::string& spec);  // kind name, inline JSON, or config file path

    /// Evaluates W. Arguments outside [0,1] by more than 1e-12 raise a domain
    /// error; values within that slack are clamped.
    double operator()(double x, double y) const;

    ClosureKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

    bool has_envelope() const noexcept { return static_cast<bool>(envelope_); }
    double envelope(double x, double y) const { return envelope_(x, y); }
    std::optional<double> r_bound() const noexcept { return r_; }

private:
    Closure() = default;
    ClosureKind kind_ = ClosureKind::Custom;
    std::string name_;
    std::function<double(double, double)> eval_;
    std::function<double(double, double)> envelope_;  // optional V with W <= xy + V*min
    std::optional<double> r_;
};

struct ClosureValidationReport {
    int grid_resolution = 0;
    long violations = 0;
    double worst_violation = 0.0;  // largest bound overshoot found
    double worst_x = 0.0, worst_y = 0.0;
    std::string worst_kind;        // "lower" or "upper"
    double worst_symmetry_gap = 0.0;
    bool ok() const { return violations == 0 && worst_symmetry_gap <= 1e-12; }
    std::string summary() const;
};

/// Checks symmetry and both Fréchet bounds on a uniform (res+1)^2 grid.
ClosureValidationReport validate_closure(const Closure& c, int grid_resolution);

struct WcondReport {
    bool lower_ok = false;          // xy <= W everywhere on the grid
    bool upper_ok = false;          // W <= xy + V*min(x,y)
    bool below_min_ok = false;      // xy + V*min(x,y) <= min(x,y)
    double v_max = 0.0;             // sup of V over the grid
    double r_used = 0.0;            // declared r, or v_max when derived
    bool r_ok = false;              // r_used < 1
    double origin_limit = 0.0;      // V estimate at (0,0) from shrinking boxes
    bool origin_ok = false;
    double max_adjacent_jump = 0.0;
    bool continuity_ok = false;
    double worst_x = 0.0, worst_y = 0.0;
    bool satisfied() const {
        return lower_ok && upper_ok && below_min_ok && r_ok && origin_ok && continuity_ok;
    }
    std::string summary() const;
};

/// Verifies xy <= W <= xy + V*min <= min with V bounded away from 1 and
/// V(0,0) = 0 (sampled on the grid and along shrinking boxes at the origin;
/// empirical, so it can only falsify). Uses the closure's envelope when
/// present, otherwise derives V = (W - xy)/min pointwise.
WcondReport check_wcond(const Closure& c, int grid_resolution);

}  // namespace epibound
