#include "padiccf/report.hpp"

namespace padiccf {

nlohmann::json CriterionReport::to_json() const {
    nlohmann::json ledger = nlohmann::json::array();
    for (const auto& v : verdicts) {
        nlohmann::json entry = {{"index", v.index}, {"holds", v.holds}};
        if (!v.note.empty()) entry["note"] = v.note;
        ledger.push_back(std::move(entry));
    }
    nlohmann::json j = {
        {"criterion", criterion},
        {"holds_on_range", holds_on_range()},
        {"first_violation", nullptr},
        {"ledger", std::move(ledger)},
    };
    if (first_violation) j["first_violation"] = *first_violation;
    if (!summary.empty()) j["summary"] = summary;
    return j;
}

}  // namespace padiccf
