#pragma once

#include <iosfwd>
#include <json.hpp>
#include <optional>

#include "qbs/accounting.h"
#include "qbs/oracle.h"
#include "qbs/search.h"

namespace qbs {

using Json = nlohmann::ordered_json;

Json to_json(const ReconcileReport& report);
Json to_json(const CostFormula& formula);
Json to_json(const ScanResult& result);

/// Full search report; `complexity` is embedded under the key of the same name.
Json to_json(const SearchReport& report, const std::optional<ReconcileReport>& complexity);

void write_text(std::ostream& out, const SearchReport& report);

}  // namespace qbs
