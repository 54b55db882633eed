#pragma once

#include <string>
#include <vector>

#include "ies/params.hpp"
#include "ies/time_series.hpp"

namespace ies {

struct Profiles {
    TimeSeries elec_load;
    TimeSeries heat_load;
    TimeSeries gas_load;
    TimeSeries wind_avail;
    TimeSeries pv_avail;

    bool operator==(const Profiles&) const = default;
};

/// Full description of one optimization case. Immutable value object once
/// built; safe to share across threads.
struct ScenarioConfig {
    std::string name;
    int horizon = 24;
    double dt_hours = 1.0;
    Mode mode = Mode::M4;
    bool allow_negative_prices = false;

    Profiles profiles;
    WastePlantParams plant;
    FlueGasParams flue;
    HeatPumpParams pump;
    ConverterParams el;
    ConverterParams mr;
    ConverterParams hfc;
    ConverterParams chp;
    ConverterParams gb;
    std::vector<StorageParams> storages;
    CarbonMarketParams carbon;
    TariffParams tariffs;

    double grid_import_max = 0.0;  // MW
    double gas_import_max = 0.0;   // MW
    double thermal_min = 0.0;      // MW
    double thermal_max = 0.0;      // MW

    bool operator==(const ScenarioConfig&) const = default;
};

/// One invariant violation: path names the offending field, message says
/// what failed. Violations are data, not failures.
struct Violation {
    std::string path;
    std::string message;

    std::string str() const { return path + ": " + message; }
    bool operator==(const Violation&) const = default;
};

/// Checks every documented invariant. Pure; returns violations in a stable
/// field order so repeated calls on the same config agree exactly.
std::vector<Violation> validate(const ScenarioConfig& config);

}  // namespace ies
