#include "ies/scenario.hpp"

#include <cmath>

namespace ies {

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::M1: return "M1";
        case Mode::M2: return "M2";
        case Mode::M3: return "M3";
        case Mode::M4: return "M4";
    }
    return "M4";
}

Mode mode_from_string(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (t == "M1" || t == "1") return Mode::M1;
    if (t == "M2" || t == "2") return Mode::M2;
    if (t == "M3" || t == "3") return Mode::M3;
    if (t == "M4" || t == "4") return Mode::M4;
    throw std::invalid_argument("unknown mode: " + text);
}

std::string to_string(Carrier carrier) {
    switch (carrier) {
        case Carrier::Electric: return "electric";
        case Carrier::Heat: return "heat";
        case Carrier::Gas: return "gas";
        case Carrier::Hydrogen: return "hydrogen";
    }
    return "electric";
}

Carrier carrier_from_string(const std::string& text) {
    if (text == "electric") return Carrier::Electric;
    if (text == "heat") return Carrier::Heat;
    if (text == "gas") return Carrier::Gas;
    if (text == "hydrogen") return Carrier::Hydrogen;
    throw std::invalid_argument("unknown storage carrier: " + text);
}

double cop_at(const HeatPumpParams& pump, double temperature_c) {
    if (pump.cop_curve.empty()) return pump.cop;
    const auto& curve = pump.cop_curve;
    if (temperature_c <= curve.front().first) return curve.front().second;
    if (temperature_c >= curve.back().first) return curve.back().second;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (temperature_c <= curve[i].first) {
            const double t0 = curve[i - 1].first, t1 = curve[i].first;
            const double c0 = curve[i - 1].second, c1 = curve[i].second;
            const double w = (temperature_c - t0) / (t1 - t0);
            return c0 + w * (c1 - c0);
        }
    }
    return curve.back().second;
}

namespace {

class Checker {
  public:
    explicit Checker(std::vector<Violation>& out) : out_(out) {}

    void require(bool ok, const std::string& path, const std::string& message) {
        if (!ok) out_.push_back({path, message});
    }

    void series(const TimeSeries& ts, const std::string& path, int horizon, double dt,
                bool non_negative) {
        require(static_cast<int>(ts.size()) == horizon, path,
                "length " + std::to_string(ts.size()) + " does not match horizon " +
                    std::to_string(horizon));
        require(ts.all_finite(), path, "contains non-finite entries");
        require(ts.dt_hours == dt, path, "dt_hours differs from scenario dt");
        if (non_negative && ts.all_finite() && !ts.empty())
            require(ts.min() >= 0.0, path, "negative entries not allowed for this signal");
    }

    void converter(const ConverterParams& c, const std::string& path) {
        require(c.eta_primary > 0.0 && c.eta_primary <= 1.0, path + ".eta_primary",
                "must be in (0, 1]");
        require(c.eta_secondary >= 0.0 && c.eta_secondary <= 1.0, path + ".eta_secondary",
                "must be in [0, 1]");
        require(c.eta_primary + c.eta_secondary <= 1.1, path + ".eta_primary",
                "combined efficiency exceeds 1.1");
        require(c.in_min >= 0.0 && c.in_min <= c.in_max, path + ".in_min",
                "require 0 <= in_min <= in_max");
        require(c.ramp_up >= 0.0, path + ".ramp_up", "must be >= 0");
        require(c.ramp_down >= 0.0, path + ".ramp_down", "must be >= 0");
        require(c.ratio_min <= c.ratio_max, path + ".ratio_min", "ratio_min exceeds ratio_max");
        require(c.ratio_min >= 0.0, path + ".ratio_min", "must be >= 0");
    }

  private:
    std::vector<Violation>& out_;
};

}  // namespace

std::vector<Violation> validate(const ScenarioConfig& cfg) {
    std::vector<Violation> out;
    Checker ck(out);
    const int T = cfg.horizon;
    const double dt = cfg.dt_hours;

    ck.require(T >= 1, "horizon", "must be at least 1");
    ck.require(dt > 0.0 && std::isfinite(dt), "dt_hours", "must be positive and finite");
    if (T < 1 || !(dt > 0.0)) return out;  // nothing else is checkable

    ck.series(cfg.profiles.elec_load, "profiles.elec_load", T, dt, true);
    ck.series(cfg.profiles.heat_load, "profiles.heat_load", T, dt, true);
    ck.series(cfg.profiles.gas_load, "profiles.gas_load", T, dt, true);
    ck.series(cfg.profiles.wind_avail, "profiles.wind_avail", T, dt, true);
    ck.series(cfg.profiles.pv_avail, "profiles.pv_avail", T, dt, true);

    const auto& p = cfg.plant;
    ck.require(p.p_min >= 0.0 && p.p_min <= p.p_max, "plant.p_min",
               "require 0 <= p_min <= p_max");
    ck.require(p.ramp > 0.0, "plant.ramp", "must be > 0");
    ck.require(p.daily_energy >= T * dt * p.p_min && p.daily_energy <= T * dt * p.p_max,
               "plant.daily_energy",
               "daily energy infeasible: must lie in [T*p_min, T*p_max] = [" +
                   std::to_string(T * dt * p.p_min) + ", " + std::to_string(T * dt * p.p_max) +
                   "]");
    ck.require(p.flue_heat_per_mwh >= 0.0, "plant.flue_heat_per_mwh", "must be >= 0");
    ck.require(p.co2_per_mwh >= 0.0, "plant.co2_per_mwh", "must be >= 0");
    ck.require(p.carbon_coeff >= 0.0, "plant.carbon_coeff", "must be >= 0");
    ck.require(p.emis_intensity >= p.emis_baseline && p.emis_baseline >= 0.0,
               "plant.emis_intensity", "require emis_intensity >= emis_baseline >= 0");

    const auto& f = cfg.flue;
    ck.require(f.co2_fraction > 0.0 && f.co2_fraction <= 1.0, "flue.co2_fraction",
               "must be in (0, 1]");
    ck.require(f.sep_rate > 0.0 && f.sep_rate <= 1.0, "flue.sep_rate", "must be in (0, 1]");
    ck.require(f.spray_efficiency > 0.0 && f.spray_efficiency <= 1.0, "flue.spray_efficiency",
               "must be in (0, 1]");
    ck.require(f.sep_energy_per_t >= 0.0, "flue.sep_energy_per_t", "must be >= 0");

    ck.require(cfg.pump.cop > 1.0, "pump.cop", "must be > 1");
    ck.require(cfg.pump.p_max >= 0.0, "pump.p_max", "must be >= 0");
    for (std::size_t i = 1; i < cfg.pump.cop_curve.size(); ++i)
        ck.require(cfg.pump.cop_curve[i].first > cfg.pump.cop_curve[i - 1].first,
                   "pump.cop_curve", "temperatures must be strictly increasing");

    ck.converter(cfg.el, "el");
    ck.converter(cfg.mr, "mr");
    ck.converter(cfg.hfc, "hfc");
    ck.converter(cfg.chp, "chp");
    ck.converter(cfg.gb, "gb");

    for (std::size_t i = 0; i < cfg.storages.size(); ++i) {
        const auto& s = cfg.storages[i];
        const std::string path = "storages[" + std::to_string(i) + "]";
        ck.require(s.soc_min >= 0.0 && s.soc_min <= s.soc_initial && s.soc_initial <= s.soc_max,
                   path + ".soc_initial", "require 0 <= soc_min <= soc_initial <= soc_max");
        ck.require(s.eta_charge > 0.0 && s.eta_charge <= 1.0, path + ".eta_charge",
                   "must be in (0, 1]");
        ck.require(s.eta_discharge > 0.0 && s.eta_discharge <= 1.0, path + ".eta_discharge",
                   "must be in (0, 1]");
        ck.require(s.p_charge_max >= 0.0, path + ".p_charge_max", "must be >= 0");
        ck.require(s.p_discharge_max >= 0.0, path + ".p_discharge_max", "must be >= 0");
    }

    const auto& cm = cfg.carbon;
    ck.require(cm.base_price >= 0.0, "carbon.base_price", "must be >= 0");
    ck.require(cm.interval > 0.0, "carbon.interval", "must be > 0");
    ck.require(cm.growth >= 0.0, "carbon.growth", "must be >= 0");
    ck.require(cm.quota_elec >= 0.0, "carbon.quota_elec", "must be >= 0");
    ck.require(cm.quota_heat >= 0.0, "carbon.quota_heat", "must be >= 0");
    ck.require(cm.e2h_factor >= 0.0, "carbon.e2h_factor", "must be >= 0");
    ck.require(cm.capture_p2g >= 0.0, "carbon.capture_p2g", "must be >= 0");
    ck.require(cm.capture_mr >= 0.0, "carbon.capture_mr", "must be >= 0");
    ck.require(cm.actual_elec >= 0.0, "carbon.actual_elec", "must be >= 0");
    ck.require(cm.actual_heat >= 0.0, "carbon.actual_heat", "must be >= 0");

    const auto& tf = cfg.tariffs;
    ck.series(tf.elec_price, "tariffs.elec_price", T, dt, !cfg.allow_negative_prices);
    ck.require(tf.gas_price >= 0.0, "tariffs.gas_price", "must be >= 0");
    ck.require(tf.co2_price >= 0.0, "tariffs.co2_price", "must be >= 0");
    ck.require(tf.p2g_opex >= 0.0, "tariffs.p2g_opex", "must be >= 0");
    ck.require(tf.curtail_wind >= 0.0, "tariffs.curtail_wind", "must be >= 0");
    ck.require(tf.curtail_pv >= 0.0, "tariffs.curtail_pv", "must be >= 0");
    ck.require(tf.om_wind >= 0.0, "tariffs.om_wind", "must be >= 0");
    ck.require(tf.om_pv >= 0.0, "tariffs.om_pv", "must be >= 0");
    ck.require(tf.thermal_cost >= 0.0, "tariffs.thermal_cost", "must be >= 0");
    ck.require(tf.co2_per_mwh_gas >= 0.0, "tariffs.co2_per_mwh_gas", "must be >= 0");

    ck.require(cfg.grid_import_max >= 0.0, "grid_import_max", "must be >= 0");
    ck.require(cfg.gas_import_max >= 0.0, "gas_import_max", "must be >= 0");
    ck.require(cfg.thermal_min >= 0.0 && cfg.thermal_min <= cfg.thermal_max, "thermal_min",
               "require 0 <= thermal_min <= thermal_max");

    // Mode-implied device availability.
    if (mode_has_hfc(cfg.mode))
        ck.require(cfg.hfc.in_max > 0.0, "hfc.in_max",
                   "mode " + to_string(cfg.mode) + " requires a hydrogen fuel cell");
    if (mode_has_heat_recovery(cfg.mode)) {
        ck.require(cfg.pump.p_max > 0.0, "pump.p_max",
                   "mode " + to_string(cfg.mode) + " requires the heat-recovery pump");
        ck.require(cfg.plant.flue_heat_per_mwh > 0.0, "plant.flue_heat_per_mwh",
                   "mode " + to_string(cfg.mode) + " requires recoverable flue heat");
    }
    if (mode_has_separation(cfg.mode))
        ck.require(cfg.plant.co2_per_mwh > 0.0, "plant.co2_per_mwh",
                   "mode M4 requires flue-gas CO2 to separate");

    return out;
}

}  // namespace ies
