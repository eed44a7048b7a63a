#ifndef CANON_CLI_JSON_IO_HPP
#define CANON_CLI_JSON_IO_HPP

#include "canon/ehrhart.hpp"
#include "canon/embedded.hpp"
#include "canon/hilbert.hpp"
#include "canon/ratpoly.hpp"
#include "canon/rootloc.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace canon::cli {

using nlohmann::json;

inline constexpr const char* kToolName = "canon";
inline constexpr const char* kToolVersion = "0.1.0";

/// {"coeffs": ["num/den", ...]} in ascending degree.
json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

/// "1/2, 1, 1/2" -> 1/2 + z + 1/2 z^2
Polynomial parse_coefficients(const std::string& text);

json report_to_json(const RootReport& r);
json approx_to_json(const std::vector<ApproxRoot>& roots);
json verdict_to_json(const StripVerdict& v);
json chern_to_json(const ChernData& c);
json closed_form_to_json(const ClosedFormRoots& r);
json lemma_summary_to_json(const LemmaSummary& s, std::uint64_t seed);

/**
 * The one JSON document every command emits per result.
 *
 * flags/report fields are copied from the exact engine; approx_roots only
 * ever carries display values with their residuals.
 */
struct VerdictDocument {
    std::string command;
    json input = json::object();
    Polynomial polynomial;
    std::optional<StripVerdict> strip;
    std::optional<CanonicalLineCheck> line_check;
    std::optional<Rational> line;
    std::vector<ApproxRoot> approx_roots;
    json extra = json::object();
    std::optional<std::uint64_t> seed;

    [[nodiscard]] json to_json(bool with_timestamp) const;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

} // namespace canon::cli

#endif
