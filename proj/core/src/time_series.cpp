#include "ies/time_series.hpp"

#include <algorithm>
#include <limits>

namespace ies {

std::string to_string(Unit unit) {
    switch (unit) {
        case Unit::MW: return "MW";
        case Unit::MWh: return "MWh";
        case Unit::Tonnes: return "t";
        case Unit::TonnesPerHour: return "t/h";
        case Unit::UsdPerMWh: return "$/MWh";
        case Unit::Dimensionless: return "dimensionless";
    }
    return "dimensionless";
}

Unit unit_from_string(const std::string& text) {
    if (text == "MW") return Unit::MW;
    if (text == "MWh") return Unit::MWh;
    if (text == "t") return Unit::Tonnes;
    if (text == "t/h") return Unit::TonnesPerHour;
    if (text == "$/MWh") return Unit::UsdPerMWh;
    if (text == "dimensionless") return Unit::Dimensionless;
    throw std::invalid_argument("unknown unit: " + text);
}

double TimeSeries::min() const {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    return *std::min_element(values.begin(), values.end());
}

double TimeSeries::max() const {
    if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
    return *std::max_element(values.begin(), values.end());
}

bool TimeSeries::all_finite() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace ies
