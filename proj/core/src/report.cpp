#include "extsq/report.hpp"

#include <sstream>

#include <json.hpp>

namespace extsq {

std::string VerificationReport::to_json() const {
    nlohmann::json out;
    out["identity"] = identity;
    nlohmann::json params_obj = nlohmann::json::object();
    for (const auto& [name, value] : params) params_obj[name] = value;
    out["params"] = params_obj;
    out["status"] = pass ? "pass" : "fail";
    if (discrepancy) {
        nlohmann::json d;
        if (const auto* sym = std::get_if<SymbolicDiscrepancy>(&*discrepancy)) {
            d["x_degree"] = sym->x_degree;
            d["y_degree"] = sym->y_degree;
            d["difference"] = sym->difference.to_string();
        } else {
            const auto& num = std::get<NumericDiscrepancy>(*discrepancy);
            d["m"] = num.m;
            d["relative_error"] = num.relative_error;
        }
        out["discrepancy"] = d;
    }
    out["terms_checked"] = terms_checked;
    out["elapsed_ms"] = elapsed.count();
    return out.dump();
}

std::string VerificationReport::to_table() const {
    std::ostringstream out;
    out << identity << "  ";
    for (const auto& [name, value] : params) out << name << "=" << value << " ";
    out << " " << (pass ? "pass" : "FAIL");
    out << "  terms=" << terms_checked << "  elapsed=" << elapsed.count() << "ms";
    if (discrepancy) {
        if (const auto* sym = std::get_if<SymbolicDiscrepancy>(&*discrepancy)) {
            out << "\n  first discrepancy at X^" << sym->x_degree << "*Y^" << sym->y_degree
                << ": " << sym->difference.to_string();
        } else {
            const auto& num = std::get<NumericDiscrepancy>(*discrepancy);
            out << "\n  first discrepancy at m=" << num.m
                << ", relative error " << num.relative_error;
        }
    }
    return out.str();
}

}  // namespace extsq
