#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ies/time_series.hpp"

namespace ies {

/// Operating modes of the plant. Each mode extends the previous one:
///   M1  traditional power-to-gas (single-stage electricity -> gas), no fuel cell
///   M2  two-stage power-to-gas with hydrogen storage, fuel cell, and
///       methanation heat recovery
///   M3  M2 plus flue-gas heat recovery (spray tower + water-source heat pump)
///   M4  M3 plus CO2 separation feeding the methanation reactor
enum class Mode { M1, M2, M3, M4 };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

constexpr bool mode_has_refined_p2g(Mode m) { return m != Mode::M1; }
constexpr bool mode_has_hfc(Mode m) { return m != Mode::M1; }
constexpr bool mode_has_heat_recovery(Mode m) { return m == Mode::M3 || m == Mode::M4; }
constexpr bool mode_has_separation(Mode m) { return m == Mode::M4; }

/// Waste-incineration plant. Daily electric output is fixed by the waste
/// throughput; flue-gas heat and raw CO2 scale linearly with electric output.
struct WastePlantParams {
    double daily_energy = 0.0;       // MWh produced over the horizon
    double p_min = 0.0;              // MW
    double p_max = 0.0;              // MW
    double ramp = 0.0;               // MW per hour
    double flue_heat_per_mwh = 0.0;  // MWh recoverable flue heat per MWh electric
    double co2_per_mwh = 0.0;        // t CO2 in flue gas per MWh electric
    double carbon_coeff = 0.0;       // $/t, plant carbon-trading coefficient
    double emis_intensity = 0.0;     // t/MWh actual emission intensity
    double emis_baseline = 0.0;      // t/MWh free emission baseline

    bool operator==(const WastePlantParams&) const = default;
};

/// Flue-gas treatment chain: CO2 separation stage and spray-tower heat
/// harvest that feeds the heat pump.
struct FlueGasParams {
    double sep_energy_per_t = 0.0;  // MWh electricity per t CO2 separated
    double co2_fraction = 1.0;      // CO2 share of flue gas
    double sep_rate = 1.0;          // separation rate of the device
    double spray_efficiency = 1.0;  // spray-tower heat harvest efficiency

    bool operator==(const FlueGasParams&) const = default;
};

/// Water-source heat pump lifting spray-tower condensate heat to network
/// temperature. cop_curve, when present, maps source temperature (degC) to
/// COP; dispatch uses the constant cop.
struct HeatPumpParams {
    double cop = 0.0;    // heat out per unit electricity
    double p_max = 0.0;  // MW electric draw limit
    std::vector<std::pair<double, double>> cop_curve;  // (temperature degC, cop)

    bool operator==(const HeatPumpParams&) const = default;
};

/// Interpolates cop_curve at the given source temperature (clamped at the
/// ends); falls back to the constant cop when no curve is configured.
double cop_at(const HeatPumpParams& pump, double temperature_c);

/// Energy converter shared by EL, MR, HFC, CHP, and GB. Outputs are fixed
/// fractions of input; dual-output devices carry a heat-to-electric ratio
/// band (equal bounds encode a fixed ratio).
struct ConverterParams {
    double eta_primary = 0.0;    // first output per unit input
    double eta_secondary = 0.0;  // second output per unit input, 0 if single-output
    double in_min = 0.0;         // MW
    double in_max = 0.0;         // MW
    double ramp_up = 0.0;        // MW per hour
    double ramp_down = 0.0;      // MW per hour
    double ratio_min = 0.0;      // heat-to-electric lower bound
    double ratio_max = 0.0;      // heat-to-electric upper bound

    bool operator==(const ConverterParams&) const = default;
};

enum class Carrier { Electric, Heat, Gas, Hydrogen };

std::string to_string(Carrier carrier);
Carrier carrier_from_string(const std::string& text);

struct StorageParams {
    Carrier carrier = Carrier::Electric;
    double p_charge_max = 0.0;     // MW
    double p_discharge_max = 0.0;  // MW
    double eta_charge = 1.0;
    double eta_discharge = 1.0;
    double soc_min = 0.0;      // MWh
    double soc_max = 0.0;      // MWh
    double soc_initial = 0.0;  // MWh, also the required end-of-day level

    bool operator==(const StorageParams&) const = default;
};

/// Stepped carbon market: ladder base price / interval / growth plus the
/// quota, actual-emission, and capture coefficient sets. Actual coefficients
/// default to the quota values when a scenario does not override them.
struct CarbonMarketParams {
    double base_price = 0.0;   // $/t
    double interval = 0.0;     // t, ladder interval length
    double growth = 0.0;       // ladder price growth per interval
    double quota_elec = 0.0;   // t/MWh free allowance on purchased electricity
    double quota_heat = 0.0;   // t/MWh free allowance on produced heat
    double e2h_factor = 0.0;   // CHP electricity-to-equivalent-heat factor
    double capture_p2g = 0.0;  // t/MWh credit on electrolyzer electricity
    double capture_mr = 0.0;   // t/MWh credit on methanation hydrogen input
    double actual_elec = 0.0;  // t/MWh actual intensity of purchased electricity
    double actual_heat = 0.0;  // t/MWh actual intensity of produced heat

    bool operator==(const CarbonMarketParams&) const = default;
};

struct TariffParams {
    TimeSeries elec_price;          // $/MWh, time-of-use
    double gas_price = 0.0;         // $/MWh of gas energy
    double co2_price = 0.0;         // $/t purchased CO2 feedstock
    double p2g_opex = 0.0;          // $/MWh electrolyzer electricity
    double curtail_wind = 0.0;      // $/MWh curtailed wind
    double curtail_pv = 0.0;        // $/MWh curtailed PV
    double om_wind = 0.0;           // $/MWh dispatched wind
    double om_pv = 0.0;             // $/MWh dispatched PV
    double thermal_cost = 0.0;      // $/MWh thermal unit output
    double co2_per_mwh_gas = 0.0;   // t CO2 feedstock per MWh CH4 synthesized

    bool operator==(const TariffParams&) const = default;
};

}  // namespace ies
