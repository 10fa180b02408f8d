#pragma once

// Output documents shared by the CLI and the tests. Every command builds a
// JSON document first; text output is rendered from that document, so the two
// formats cannot drift apart.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "compositae/conformance.hpp"

namespace compositae::report {

using nlohmann::json;

inline constexpr int schema_version = 1;

struct Entry {
    std::size_t n, k;
    std::string value;
};

// mode is "composita" or "bell".
json triangle_document(const std::string& mode, const std::string& expr, std::size_t order, const std::string& at,
                       bool exact, const std::vector<Entry>& entries);

json derivative_document(const std::string& outer, const std::string& inner, std::size_t order,
                         const std::string& at, bool exact, const std::string& value);

json conformance_document(const std::string& suite, std::uint64_t seed, const std::vector<ConformanceRecord>& records);

std::string conformance_csv(const std::vector<ConformanceRecord>& records);

// Text form of any document above; throws std::invalid_argument on an unknown mode.
std::string render_text(const json& doc);

}  // namespace compositae::report
