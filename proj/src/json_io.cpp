#include "formwell/json_io.hpp"

namespace formwell {

using nlohmann::ordered_json;

namespace {

ordered_json d_star_f_to_json(const Form& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [idx, p] : f.coeffs()) {
        arr.push_back({{"basis", idx.to_string()}, {"coeff", p.to_string()}});
    }
    return arr;
}

ordered_json discrepancies_to_json(const std::vector<TableDiscrepancy>& ds) {
    ordered_json arr = ordered_json::array();
    for (const TableDiscrepancy& d : ds) {
        arr.push_back({{"basis", d.basis.to_string()},
                       {"table", d.table_value.to_string()},
                       {"oracle", d.oracle_value.to_string()}});
    }
    return arr;
}

}  // namespace

ordered_json report_to_json(const VerificationReport& r) {
    ordered_json j;
    j["metric"] = metric_name(r.metric);
    j["is_vacuum_solution"] = r.is_vacuum_solution;
    j["duality"] = duality_name(r.duality);
    j["condition_sum"] = r.condition_sum.to_string();
    j["condition_constant"] =
        r.condition_constant ? ordered_json(r.condition_constant->to_string())
                             : ordered_json(nullptr);
    j["lorenz"] = r.lorenz_value.to_string();
    j["wavelike_potential"] = r.wavelike_potential;
    j["harmonic_potential"] = r.harmonic_potential;
    j["wavelike_field"] = r.wavelike_field;
    j["E"] = {r.eb.e1.to_string(), r.eb.e2.to_string(), r.eb.e3.to_string()};
    j["B"] = {r.eb.b1.to_string(), r.eb.b2.to_string(), r.eb.b3.to_string()};
    j["eb_inner"] = r.eb_inner.to_string();
    j["energy"] = r.energy.to_string();
    j["d_star_F"] = d_star_f_to_json(r.d_star_f);
    j["table_discrepancies"] = discrepancies_to_json(r.table_discrepancies);
    return j;
}

ordered_json tables_to_json(const Metric& m) {
    ordered_json arr = ordered_json::array();
    for (const StarTableRow& row : star_table_report(m)) {
        ordered_json entry;
        entry["input"] = row.input.to_string();
        entry["output"] = row.table_value.to_string();
        entry["source"] = row.from_paper ? "paper" : "derived";
        entry["oracle_matches"] = row.matches;
        if (!row.matches) entry["oracle"] = row.oracle_value.to_string();
        arr.push_back(entry);
    }
    return arr;
}

ordered_json fields_to_json(const Form& faraday) {
    FaradayComponents c = faraday_components(faraday);
    EBFields eb = eb_fields(faraday);
    ordered_json j;
    j["F"] = {{"dz1/\\dz2", c.f12.to_string()},     {"dzb1/\\dzb2", c.f1b2b.to_string()},
              {"dz1/\\dzb1", c.f11b.to_string()},   {"dz1/\\dzb2", c.f12b.to_string()},
              {"dz2/\\dzb1", c.f21b.to_string()},   {"dz2/\\dzb2", c.f22b.to_string()}};
    j["E"] = {eb.e1.to_string(), eb.e2.to_string(), eb.e3.to_string()};
    j["B"] = {eb.b1.to_string(), eb.b2.to_string(), eb.b3.to_string()};
    j["eb_inner"] = eb_inner(faraday).to_string();
    j["energy"] = energy(faraday).to_string();
    return j;
}

}  // namespace formwell
