#include "canon/cli/json_io.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace canon::cli {

json polynomial_to_json(const Polynomial& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
    return json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw InputError("polynomial must be an object with a \"coeffs\" array");
    std::vector<Rational> c;
    for (const auto& x : j["coeffs"]) {
        if (!x.is_string()) throw InputError("polynomial coefficients must be \"num/den\" strings");
        c.push_back(parse_rational(x.get<std::string>()));
    }
    return Polynomial(std::move(c));
}

Polynomial parse_coefficients(const std::string& text)
{
    std::vector<Rational> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
    if (c.empty()) throw InputError("empty coefficient list");
    return Polynomial(std::move(c));
}

json report_to_json(const RootReport& r)
{
    return json{{"line", to_fraction_string(r.line)},
                {"left", r.left_count},
                {"on", r.on_count},
                {"right", r.right_count}};
}

json approx_to_json(const std::vector<ApproxRoot>& roots)
{
    json arr = json::array();
    for (const auto& r : roots)
        arr.push_back(json{{"re", r.value.real()}, {"im", r.value.imag()}, {"residual", r.residual}});
    return arr;
}

json verdict_to_json(const StripVerdict& v)
{
    return json{{"cs", v.cs},
                {"ncs", v.ncs},
                {"cl", v.cl},
                {"dim", v.dim},
                {"reports",
                 json::array({report_to_json(v.at_minus_one), report_to_json(v.at_narrow_low),
                              report_to_json(v.at_half), report_to_json(v.at_narrow_high),
                              report_to_json(v.at_zero)})}};
}

json chern_to_json(const ChernData& c)
{
    if (const auto* curve = std::get_if<CurveData>(&c)) return json{{"type", "curve"}, {"g", curve->genus}};
    if (const auto* s = std::get_if<SurfaceData>(&c))
        return json{{"type", "surface"}, {"c1sq", to_fraction_string(s->c1sq)}, {"c2", to_fraction_string(s->c2)}};
    const auto& t = std::get<ThreefoldData>(c);
    return json{{"type", "threefold"}, {"c1cube", to_fraction_string(t.c1cube)}, {"c1c2", to_fraction_string(t.c1c2)}};
}

json closed_form_to_json(const ClosedFormRoots& r)
{
    json pairs = json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(json{{"real_part", to_fraction_string(p.real_part)},
                             {"radicand", to_fraction_string(p.radicand)}});
    json iso = json::array();
    for (const auto& x : r.isolated) iso.push_back(to_fraction_string(x));
    return json{{"pairs", pairs}, {"isolated", iso}, {"form", "real_part +- sqrt(radicand)/2"}};
}

json lemma_summary_to_json(const LemmaSummary& s, std::uint64_t seed)
{
    json failures = json::array();
    for (const auto& f : s.failures) {
        failures.push_back(json{{"case_seed", f.seed},
                                {"s", to_fraction_string(f.s)},
                                {"ambient", polynomial_to_json(f.ambient)},
                                {"restricted", polynomial_to_json(f.restricted)},
                                {"report", report_to_json(f.report)}});
    }
    return json{{"tool", kToolName},
                {"version", kToolVersion},
                {"command", "lemma-test"},
                {"seed", seed},
                {"cases", s.cases},
                {"checks", s.checks},
                {"passed", s.passed},
                {"failed", s.failures.size()},
                {"ok", s.ok()},
                {"failures", failures}};
}

json VerdictDocument::to_json(bool with_timestamp) const
{
    json j{{"tool", kToolName}, {"version", kToolVersion}, {"command", command}, {"input", input}};
    j["polynomial"] = polynomial_to_json(polynomial);
    j["polynomial"]["text"] = polynomial.to_string();
    j["degree"] = polynomial.degree();
    if (strip) j["verdict"] = verdict_to_json(*strip);
    if (line) j["line"] = to_fraction_string(*line);
    if (line_check) {
        j["canonical_line"] = line_check->holds;
        j["line_report"] = report_to_json(line_check->report);
    }
    j["approx_roots"] = approx_to_json(approx_roots);
    for (const auto& [k, v] : extra.items()) j[k] = v;
    if (seed) j["seed"] = *seed;
    if (with_timestamp) j["timestamp"] = utc_timestamp();
    return j;
}

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace canon::cli
