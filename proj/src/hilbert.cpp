#include "canon/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace canon {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::int64_t kMaxScanRows = 1'000'000;

} // namespace

int dimension_of(const ChernData& data)
{
    return std::visit(overloaded{[](const CurveData&) { return 1; },
                                 [](const SurfaceData&) { return 2; },
                                 [](const ThreefoldData&) { return 3; }},
                      data);
}

std::string describe(const ChernData& data)
{
    return std::visit(
        overloaded{[](const CurveData& c) { return "curve(g=" + std::to_string(c.genus) + ")"; },
                   [](const SurfaceData& s) {
                       return "surface(c1^2=" + to_display_string(s.c1sq) + ", c2=" + to_display_string(s.c2) + ")";
                   },
                   [](const ThreefoldData& t) {
                       return "threefold(c1^3=" + to_display_string(t.c1cube) + ", c1c2=" +
                              to_display_string(t.c1c2) + ")";
                   }},
        data);
}

GrassmannianSpec GrassmannianSpec::make(int k, int n)
{
    if (k < 1 || n < 2 * k)
        throw InputError("Grassmannian G(" + std::to_string(k) + "," + std::to_string(n) + ") needs N >= 2k >= 2");
    return GrassmannianSpec{k, n};
}

Polynomial hilbert_curve(std::int64_t genus)
{
    if (genus < 0) throw InputError("curve genus must be >= 0");
    if (genus == 1)
        throw InputError("genus 1 gives the zero polynomial; use an embedded section (e.g. projective:2 with s=1)");
    const Rational lead(2 - 2 * genus);
    return Polynomial({lead / 2, lead});
}

Polynomial hilbert_surface(const SurfaceData& c)
{
    if (c.c1sq == 0) throw InputError("surface Hilbert polynomial needs c1^2 != 0");
    return Polynomial({(c.c1sq + c.c2) / 12, c.c1sq / 2, c.c1sq / 2});
}

Polynomial hilbert_threefold(const ThreefoldData& c)
{
    if (c.c1cube == 0) throw InputError("threefold Hilbert polynomial needs c1^3 != 0");
    return Polynomial({c.c1c2 / 24, (c.c1cube + c.c1c2) / 12, c.c1cube / 4, c.c1cube / 6});
}

Polynomial hilbert_from_chern(const ChernData& c)
{
    return std::visit(overloaded{[](const CurveData& d) { return hilbert_curve(d.genus); },
                                 [](const SurfaceData& d) { return hilbert_surface(d); },
                                 [](const ThreefoldData& d) { return hilbert_threefold(d); }},
                      c);
}

Polynomial hilbert_projective(int n)
{
    if (n < 1) throw InputError("projective space needs n >= 1");
    Polynomial p = Polynomial::constant(1);
    for (int i = 1; i <= n; ++i) p *= Polynomial({make_rational(1), make_rational(n + 1, i)});
    return p;
}

Polynomial hilbert_grassmannian(const GrassmannianSpec& spec)
{
    const GrassmannianSpec g = GrassmannianSpec::make(spec.k, spec.n);
    Polynomial p = Polynomial::constant(1);
    for (int i = 1; i < g.n; ++i) {
        const int mult = std::min({g.k, i, g.n - i});
        p *= power(Polynomial({make_rational(i, g.n), Rational(1)}), static_cast<unsigned>(mult));
    }
    return scale(p, 1 / p.evaluate(Rational(0)));
}

ClosedFormRoots closed_form_roots(const ChernData& c)
{
    const Rational half = make_rational(-1, 2);
    ClosedFormRoots out;
    std::visit(overloaded{[&](const CurveData& d) {
                              hilbert_curve(d.genus);
                              out.isolated.push_back(half);
                          },
                          [&](const SurfaceData& d) {
                              if (d.c1sq == 0) throw InputError("surface roots need c1^2 != 0");
                              out.pairs.push_back({half, (d.c1sq - 2 * d.c2) / (3 * d.c1sq)});
                          },
                          [&](const ThreefoldData& d) {
                              if (d.c1cube == 0) throw InputError("threefold roots need c1^3 != 0");
                              out.isolated.push_back(half);
                              out.pairs.push_back({half, (d.c1cube - 2 * d.c1c2) / d.c1cube});
                          }},
               c);
    return out;
}

bool serre_check(const Polynomial& p, int n)
{
    const Polynomial r = reflect(p);
    return n % 2 == 0 ? r == p : r == -p;
}

IntRange IntRange::parse(const std::string& text)
{
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw InputError("malformed range '" + text + "'");
        }
        if (used != s.size()) throw InputError("malformed range '" + text + "'");
        return v;
    };
    IntRange r;
    if (auto pos = text.find(".."); pos != std::string::npos) {
        r.lo = to_int(text.substr(0, pos));
        r.hi = to_int(text.substr(pos + 2));
    } else {
        r.lo = r.hi = to_int(text);
    }
    if (r.empty()) throw InputError("empty range '" + text + "'");
    return r;
}

ScanRequest default_scan(ScanFamily family)
{
    switch (family) {
    case ScanFamily::DelPezzo: return {family, {1, 9}, {0, 0}};
    case ScanFamily::FanoThreefold: return {family, {2, 64}, {24, 24}};
    case ScanFamily::Surface: return {family, {1, 10}, {-12, 12}};
    case ScanFamily::Threefold: return {family, {1, 64}, {-24, 24}};
    }
    throw InputError("unknown scan family");
}

ScanFamily parse_family(const std::string& name)
{
    if (name == "dp") return ScanFamily::DelPezzo;
    if (name == "fano3") return ScanFamily::FanoThreefold;
    if (name == "surface") return ScanFamily::Surface;
    if (name == "threefold") return ScanFamily::Threefold;
    throw InputError("unknown scan family '" + name + "' (expected dp, fano3, surface, threefold)");
}

std::string family_name(ScanFamily family)
{
    switch (family) {
    case ScanFamily::DelPezzo: return "dp";
    case ScanFamily::FanoThreefold: return "fano3";
    case ScanFamily::Surface: return "surface";
    case ScanFamily::Threefold: return "threefold";
    }
    return "?";
}

ScanResult scan(const ScanRequest& request)
{
    if (request.first.empty()) throw InputError("scan: empty range for the first Chern number");
    const bool two_dimensional = request.family == ScanFamily::Surface || request.family == ScanFamily::Threefold;
    if (two_dimensional && request.second.empty()) throw InputError("scan: empty range for the second Chern number");

    const std::int64_t inner = two_dimensional ? request.second.hi - request.second.lo + 1 : 1;
    const std::int64_t outer = request.first.hi - request.first.lo + 1;
    if (outer > kMaxScanRows || inner > kMaxScanRows / outer)
        throw InputError("scan: range exceeds " + std::to_string(kMaxScanRows) + " rows");

    std::vector<ChernData> data;
    data.reserve(static_cast<std::size_t>(outer * inner));
    for (std::int64_t a = request.first.lo; a <= request.first.hi; ++a) {
        const Rational ra(static_cast<long>(a));
        switch (request.family) {
        case ScanFamily::DelPezzo: data.emplace_back(SurfaceData{ra, 12 - ra}); break;
        case ScanFamily::FanoThreefold: data.emplace_back(ThreefoldData{ra, Rational(24)}); break;
        case ScanFamily::Surface:
        case ScanFamily::Threefold:
            for (std::int64_t b = request.second.lo; b <= request.second.hi; ++b) {
                const Rational rb(static_cast<long>(b));
                if (request.family == ScanFamily::Surface)
                    data.emplace_back(SurfaceData{ra, rb});
                else
                    data.emplace_back(ThreefoldData{ra, rb});
            }
            break;
        }
    }

    ScanResult result;
    for (const auto& d : data) {
        Polynomial h;
        try {
            h = hilbert_from_chern(d);
        } catch (const InputError&) {
            ++result.summary.skipped;
            continue;
        }
        ScanRow row{d, classify_strip(h, dimension_of(d), false), Rational(0)};
        if (const auto* s = std::get_if<SurfaceData>(&d))
            row.ratio = 3 - 6 * s->c2 / s->c1sq;
        else if (const auto* t = std::get_if<ThreefoldData>(&d))
            row.ratio = -2 * t->c1c2 / t->c1cube;
        result.summary.rows++;
        result.summary.cs += row.verdict.cs;
        result.summary.ncs += row.verdict.ncs;
        result.summary.cl += row.verdict.cl;
        result.rows.push_back(std::move(row));
    }
    return result;
}

} // namespace canon
