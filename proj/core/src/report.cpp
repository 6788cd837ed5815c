#include "fenchel/report.hpp"

#include <nlohmann/json.hpp>

namespace fenchel {

std::string check_report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["status"] = r.status;
    j["worst_violation"] = r.worst_violation;
    j["witness"] = r.witness;
    return j.dump();
}

}  // namespace fenchel
