#include "radloc/csv.hpp"

#include <array>
#include <charconv>

namespace radloc {

std::string format_number(double value) {
    std::array<char, 64> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 6);
    return std::string(buf.data(), res.ptr);
}

std::string sweep_csv(std::string_view param_name, const std::vector<ScenarioResult>& results) {
    std::string out =
        "sweep_param,value,e_ca,e_rla,improvement_pct,localized_fraction,raw_e_ca,raw_e_rla\n";
    for (const ScenarioResult& r : results) {
        const double improvement =
            r.errors.e_ca > 0.0 ? 100.0 * (r.errors.e_ca - r.errors.e_rla) / r.errors.e_ca : 0.0;
        out += param_name;
        out += ',';
        out += std::to_string(r.sweep_value);
        out += ',';
        out += format_number(r.errors.e_ca);
        out += ',';
        out += format_number(r.errors.e_rla);
        out += ',';
        out += format_number(improvement);
        out += ',';
        out += format_number(r.errors.localized_fraction);
        out += ',';
        out += format_number(r.errors.raw_e_ca);
        out += ',';
        out += format_number(r.errors.raw_e_rla);
        out += '\n';
    }
    return out;
}

} // namespace radloc
