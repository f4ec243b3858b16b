#include "lp2dt/json_io.hpp"

namespace lp2dt {

ordered_json data_to_json(const DeltaFamilyData& data) {
    ordered_json j;
    j["A"] = data.A;
    j["deltas"] = data.deltas;
    ordered_json pis = ordered_json::array();
    for (const auto& p : data.pis) pis.push_back(p.parts);
    j["pis"] = std::move(pis);
    ordered_json pairs = ordered_json::array();
    for (auto [a, b] : data.coincidences) pairs.push_back({a + 1, b + 1});
    j["coincidences"] = std::move(pairs);
    return j;
}

DeltaFamilyData data_from_json(const ordered_json& j) {
    DeltaFamilyData data;
    data.A = j.at("A").get<int>();
    auto ds = j.at("deltas").get<std::vector<int>>();
    if (ds.size() != 3) throw Error("deltas must have three entries");
    std::copy(ds.begin(), ds.end(), data.deltas.begin());
    auto pis = j.at("pis").get<std::vector<std::vector<int>>>();
    if (pis.size() != 6) throw Error("pis must have six entries");
    for (size_t i = 0; i < 6; ++i) data.pis[i] = Partition2D(pis[i]);
    for (const auto& pair : j.at("coincidences")) {
        auto p = pair.get<std::vector<int>>();
        if (p.size() != 2) throw Error("coincidence pairs must have two entries");
        data.coincidences.emplace_back(p[0] - 1, p[1] - 1);
    }
    data.validate();
    return data;
}

ordered_json row_to_json(const TableRow& row) {
    ordered_json j = data_to_json(row.data);
    j["c_ss"] = row.c_ss;
    j["c_st"] = row.c_st;
    j["multiplicity"] = row.multiplicity;
    j["free_components"] = row.free_components;
    return j;
}

TableRow row_from_json(const ordered_json& j) {
    TableRow row;
    row.data = data_from_json(j);
    row.c_ss = j.at("c_ss").get<long long>();
    row.c_st = j.at("c_st").get<long long>();
    row.multiplicity = j.at("multiplicity").get<int>();
    row.free_components = j.at("free_components").get<int>();
    return row;
}

ordered_json report_to_json(const InvariantReport& rep) {
    ordered_json j;
    j["b"] = rep.b;
    j["parity"] = rep.even ? "even" : "odd";
    j["dt_bar"] = to_string(rep.dt_bar);
    j["dt_hat"] = to_string(rep.dt_hat);
    j["chi_stable"] = rep.chi_stable;
    j["sum_c_ss"] = rep.sum_c_ss;
    j["sum_c_st"] = rep.sum_c_st;
    j["rows"] = rep.rows;
    if (rep.even) {
        j["hilb_half_chi"] = rep.hilb_half;
        j["pi_n"] = {to_string(rep.pi_n[0]), to_string(rep.pi_n[1])};
        j["n_used"] = {rep.n_used[0], rep.n_used[1]};
        j["dt_hat_integral"] = rep.dt_hat_integral;
        j["c_ss_even"] = rep.c_ss_even;
    } else {
        j["dt_signed"] = rep.dt_signed;
    }
    j["provenance"] = rep.provenance;
    return j;
}

ordered_json table_to_json(int b, const std::vector<TableRow>& rows) {
    ordered_json j;
    j["schema_version"] = kCacheSchemaVersion;
    j["b"] = b;
    ordered_json out = ordered_json::array();
    for (const auto& row : rows) out.push_back(row_to_json(row));
    j["rows"] = std::move(out);
    return j;
}

bool table_from_json(const ordered_json& j, int b, std::vector<TableRow>& rows) {
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != kCacheSchemaVersion)
        return false;
    if (!j.contains("b") || j["b"].get<int>() != b) return false;
    rows.clear();
    for (const auto& rj : j.at("rows")) rows.push_back(row_from_json(rj));
    return true;
}

}  // namespace lp2dt
