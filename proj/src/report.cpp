#include "compositae/report.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace compositae::report {

json triangle_document(const std::string& mode, const std::string& expr, std::size_t order, const std::string& at,
                       bool exact, const std::vector<Entry>& entries) {
    json records = json::array();
    for (const auto& e : entries) records.push_back({{"n", e.n}, {"k", e.k}, {"value", e.value}});
    return {{"schema_version", schema_version}, {"mode", mode},   {"expr", expr},      {"order", order},
            {"at", at},                         {"exact", exact}, {"records", records}};
}

json derivative_document(const std::string& outer, const std::string& inner, std::size_t order,
                         const std::string& at, bool exact, const std::string& value) {
    return {{"schema_version", schema_version},
            {"mode", "derivative"},
            {"outer", outer},
            {"inner", inner},
            {"order", order},
            {"at", at},
            {"exact", exact},
            {"records", json::array({{{"n", order}, {"value", value}}})}};
}

json conformance_document(const std::string& suite, std::uint64_t seed, const std::vector<ConformanceRecord>& records) {
    json rows = json::array();
    for (const auto& r : records)
        rows.push_back({{"suite", r.suite},
                        {"entry", r.entry},
                        {"source", r.source},
                        {"formula", r.formula},
                        {"point", r.point},
                        {"row", r.row},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"exact", r.exact},
                        {"expect_match", r.expect_match},
                        {"matched", r.matched},
                        {"pass", r.pass()},
                        {"note", r.note}});
    const auto s = summarize(records);
    return {{"schema_version", schema_version},
            {"mode", "verify"},
            {"suite", suite},
            {"seed", seed},
            {"summary", {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}}},
            {"records", rows}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string conformance_csv(const std::vector<ConformanceRecord>& records) {
    std::ostringstream os;
    os << "suite,entry,source,formula,point,row,expected,computed,exact,expect_match,matched,pass,note\n";
    for (const auto& r : records) {
        os << csv_field(r.suite) << ',' << csv_field(r.entry) << ',' << csv_field(r.source) << ','
           << csv_field(r.formula) << ',' << csv_field(r.point) << ',' << csv_field(r.row) << ','
           << csv_field(r.expected) << ',' << csv_field(r.computed) << ',' << (r.exact ? "true" : "false") << ','
           << (r.expect_match ? "true" : "false") << ',' << (r.matched ? "true" : "false") << ','
           << (r.pass() ? "pass" : "FAIL") << ',' << csv_field(r.note) << '\n';
    }
    return os.str();
}

std::string render_text(const json& doc) {
    const std::string mode = doc.at("mode").get<std::string>();
    std::ostringstream os;
    if (mode == "composita" || mode == "bell") {
        os << "# " << mode << " of " << doc.at("expr").get<std::string>() << " at x = " << doc.at("at").get<std::string>()
           << ", n <= " << doc.at("order").get<std::size_t>() << (doc.at("exact").get<bool>() ? ", exact" : ", float")
           << '\n';
        std::map<std::size_t, std::vector<std::string>> rows;
        for (const auto& r : doc.at("records")) rows[r.at("n").get<std::size_t>()].push_back(r.at("value").get<std::string>());
        for (const auto& [n, vals] : rows) {
            os << "row " << n << ": ";
            for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? " ; " : "") << vals[i];
            os << '\n';
        }
        return os.str();
    }
    if (mode == "derivative") {
        const auto& r = doc.at("records").at(0);
        os << "d^" << r.at("n").get<std::size_t>() << "/dx^" << r.at("n").get<std::size_t>() << " "
           << doc.at("outer").get<std::string>() << "(" << doc.at("inner").get<std::string>() << ") at x = "
           << doc.at("at").get<std::string>() << ": " << r.at("value").get<std::string>() << '\n';
        return os.str();
    }
    if (mode == "verify") {
        for (const auto& r : doc.at("records")) {
            os << (r.at("pass").get<bool>() ? "pass" : "FAIL") << "  " << r.at("entry").get<std::string>() << "  "
               << r.at("row").get<std::string>() << " at " << r.at("point").get<std::string>() << "  ["
               << r.at("formula").get<std::string>() << "]  expected " << r.at("expected").get<std::string>()
               << ", computed " << r.at("computed").get<std::string>();
            if (!r.at("expect_match").get<bool>()) os << "  (known misprint, mismatch expected)";
            const auto note = r.at("note").get<std::string>();
            if (!note.empty()) os << "  note: " << note;
            os << '\n';
        }
        const auto& s = doc.at("summary");
        os << doc.at("suite").get<std::string>() << ": " << s.at("total").get<std::size_t>() << " records, "
           << s.at("passed").get<std::size_t>() << " passed, " << s.at("failed").get<std::size_t>() << " failed\n";
        return os.str();
    }
    throw std::invalid_argument("render_text: unknown mode '" + mode + "'");
}

}  // namespace compositae::report
