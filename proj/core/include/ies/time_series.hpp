#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ies {

/// Physical unit carried by a TimeSeries. The model works in energy units
/// throughout: gas and hydrogen flows are MW(h) of fuel energy, CO2 flows
/// are tonnes per hour.
enum class Unit {
    MW,
    MWh,
    Tonnes,
    TonnesPerHour,
    UsdPerMWh,
    Dimensionless,
};

std::string to_string(Unit unit);
Unit unit_from_string(const std::string& text);

/// Fixed-length hourly signal. The universal carrier for loads, availability
/// profiles, prices, and extracted schedules.
struct TimeSeries {
    std::vector<double> values;
    Unit unit = Unit::Dimensionless;
    double dt_hours = 1.0;

    TimeSeries() = default;
    TimeSeries(std::vector<double> v, Unit u, double dt = 1.0)
        : values(std::move(v)), unit(u), dt_hours(dt) {}

    static TimeSeries constant(std::size_t n, double value, Unit u, double dt = 1.0) {
        return TimeSeries(std::vector<double>(n, value), u, dt);
    }
    static TimeSeries zeros(std::size_t n, Unit u, double dt = 1.0) {
        return constant(n, 0.0, u, dt);
    }

    std::size_t size() const { return values.size(); }
    bool empty() const { return values.empty(); }

    double& operator[](std::size_t t) { return values[t]; }
    double operator[](std::size_t t) const { return values[t]; }

    double at(std::size_t t) const {
        if (t >= values.size()) throw std::out_of_range("TimeSeries index " + std::to_string(t));
        return values[t];
    }

    double sum() const {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }

    /// Sum of values weighted by the step length; for a MW series this is MWh.
    double energy() const { return sum() * dt_hours; }

    double min() const;
    double max() const;
    bool all_finite() const;

    bool operator==(const TimeSeries&) const = default;
};

}  // namespace ies
