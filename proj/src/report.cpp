#include "biggl/report.hpp"

#include "json.hpp"

#include <sstream>

namespace biggl {

std::string Report::text() const {
    std::ostringstream os;
    os << command << ": " << (pass() ? "pass" : "FAIL") << " (" << checks << " checks)\n";
    for (auto& i : items) {
        os << "  mismatch " << i.name << "\n";
        os << "    lhs  = " << i.lhs << "\n";
        os << "    rhs  = " << i.rhs << "\n";
        os << "    diff = " << i.diff << "\n";
    }
    return os.str();
}

std::string Report::json() const {
    nlohmann::json j;
    j["command"] = command;
    j["status"] = pass() ? "pass" : "fail";
    j["checks"] = checks;
    j["items"] = nlohmann::json::array();
    for (auto& i : items) {
        j["items"].push_back({{"name", i.name}, {"lhs", i.lhs}, {"rhs", i.rhs}, {"diff", i.diff}});
    }
    return j.dump(2) + "\n";
}

}  // namespace biggl
