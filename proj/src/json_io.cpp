#include "polycat/json_io.hpp"

namespace polycat {

namespace {

nlohmann::json coeffStrings(const TruncSeries& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BigInt& c : s.coeffs()) arr.push_back(c.str());
    return arr;
}

nlohmann::json oracleFlag(const std::optional<bool>& flag) {
    if (!flag) return "skipped";
    return *flag;
}

} // namespace

nlohmann::json toJson(const TruncSeries& s) {
    return nlohmann::json{{"p", s.field().value().str()},
                          {"n", s.degreeBound()},
                          {"coeffs", coeffStrings(s)}};
}

nlohmann::json toJson(const SolveReport& report, const QuadraticProblem& prob,
                      bool includeNumeric) {
    nlohmann::json j;
    j["p"] = prob.p.value().str();
    j["n"] = prob.n;
    j["a"] = prob.a.value().str();
    j["form"] = formName(report.form);
    j["roots"] = nlohmann::json::array({nlohmann::json{{"coeffs", coeffStrings(report.root1)}},
                                        nlohmann::json{{"coeffs", coeffStrings(report.root2)}}});
    j["verified"] = report.verified;
    j["oracles"] = nlohmann::json{{"fixed_point", report.fixedPointAgrees},
                                  {"hensel", oracleFlag(report.henselAgrees)},
                                  {"brute_force", oracleFlag(report.bruteForceAgrees)}};
    if (includeNumeric && report.numeric) {
        j["numeric"] = nlohmann::json{{"modulus", report.numeric->x1.modulus().str()},
                                      {"x1", report.numeric->x1.value().str()},
                                      {"x2", report.numeric->x2.value().str()}};
    } else {
        j["numeric"] = nullptr;
    }
    return j;
}

std::vector<BigInt> bigIntsFromJson(const nlohmann::json& array) {
    if (!array.is_array()) throw ParseError("expected a JSON array of integers");
    std::vector<BigInt> out;
    out.reserve(array.size());
    for (const auto& item : array) {
        if (item.is_string()) {
            out.push_back(parseBigInt(item.get<std::string>()));
        } else if (item.is_number_unsigned()) {
            out.push_back(BigInt(item.get<std::uint64_t>()));
        } else if (item.is_number_integer()) {
            out.push_back(BigInt(item.get<std::int64_t>()));
        } else {
            throw ParseError("array entries must be integers or decimal strings");
        }
    }
    return out;
}

} // namespace polycat
