#pragma once

#include <json.hpp>

#include "formwell/maxwell.hpp"

namespace formwell {

/// Stable-key JSON for a verification report. Deterministic: canonical
/// orderings everywhere, exact strings for every value.
nlohmann::ordered_json report_to_json(const VerificationReport& r);

nlohmann::ordered_json tables_to_json(const Metric& m);

nlohmann::ordered_json fields_to_json(const Form& faraday);

}  // namespace formwell
