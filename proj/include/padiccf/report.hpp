#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace padiccf {

// One per-index entry of a criterion's audit ledger.
struct IndexVerdict {
    long index = 0;
    bool holds = true;
    std::string note;
};

// Reproducible record of a hypothesis/inequality check over an index range.
struct CriterionReport {
    std::string criterion;
    std::vector<IndexVerdict> verdicts;
    std::optional<long> first_violation;
    std::string summary;

    bool holds_on_range() const { return !first_violation.has_value(); }

    void record(long index, bool holds, std::string note = {}) {
        verdicts.push_back({index, holds, std::move(note)});
        if (!holds && !first_violation) first_violation = index;
    }

    nlohmann::json to_json() const;
};

}  // namespace padiccf
