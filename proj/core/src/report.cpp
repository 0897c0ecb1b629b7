#include "edgeest/report.hpp"

#include <nlohmann/json.hpp>

namespace edgeest {

std::string EstimateReport::flags() const {
    std::string out;
    auto add = [&](const char* token) {
        if (!out.empty()) out += ';';
        out += token;
    };
    if (exact) add("exact");
    if (fallback) add("fallback");
    if (promise_unverified) add("promise-unverified");
    if (degenerate) add("degenerate");
    return out;
}

std::string EstimateReport::to_json() const {
    nlohmann::json j{
        {"estimate", estimate},
        {"exact_flag", exact},
        {"fallback_flag", fallback},
        {"rounds", rounds},
        {"queries", {{"bis", queries.bis_count}, {"is", queries.is_count}}},
        {"seed", seed},
        {"preset", preset},
    };
    return j.dump();
}

} // namespace edgeest
