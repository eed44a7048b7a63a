#include "canon/ehrhart.hpp"

#include "catalog_data.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace canon {

namespace {

std::string point_string(const LatticePoint& v)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::int64_t dot(const LatticePoint& a, const LatticePoint& b)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Rank of a list of integer row vectors (exact elimination over Q).
int rank_of(const std::vector<LatticePoint>& rows, int cols)
{
    std::vector<std::vector<Rational>> m;
    m.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (auto x : r) row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        auto pivot = std::find_if(m.begin() + rank, m.end(), [c](const auto& row) { return row[c] != 0; });
        if (pivot == m.end()) continue;
        std::iter_swap(m.begin() + rank, pivot);
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rank][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Determinant of a square integer matrix (Bareiss, exact).
Integer determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

/// Generalised cross product of the rows (d-1 rows of length d).
LatticePoint normal_of(const std::vector<LatticePoint>& rows, int d)
{
    LatticePoint n(static_cast<std::size_t>(d), 0);
    for (int c = 0; c < d; ++c) {
        std::vector<std::vector<Integer>> minor;
        for (const auto& r : rows) {
            std::vector<Integer> mr;
            for (int j = 0; j < d; ++j) {
                if (j != c) mr.emplace_back(static_cast<long>(r[static_cast<std::size_t>(j)]));
            }
            minor.push_back(std::move(mr));
        }
        Integer det = determinant(std::move(minor));
        if (c % 2 == 1) det = -det;
        n[static_cast<std::size_t>(c)] = det.get_si();
    }
    return n;
}

void validate_points(int dim, const std::vector<LatticePoint>& points)
{
    if (dim < 1) throw InputError("polytope dimension must be >= 1");
    if (points.size() < static_cast<std::size_t>(dim) + 1)
        throw InputError("a " + std::to_string(dim) + "-dimensional polytope needs at least " +
                         std::to_string(dim + 1) + " vertices");
    for (const auto& v : points) {
        if (v.size() != static_cast<std::size_t>(dim))
            throw InputError("vertex " + point_string(v) + " does not have " + std::to_string(dim) + " coordinates");
    }
    std::set<LatticePoint> seen;
    for (const auto& v : points) {
        if (!seen.insert(v).second) throw InputError("repeated vertex " + point_string(v));
    }
    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        LatticePoint d(points[i]);
        for (std::size_t j = 0; j < d.size(); ++j) d[j] -= points[0][j];
        diffs.push_back(std::move(d));
    }
    if (rank_of(diffs, dim) != dim) throw InputError("polytope is not full-dimensional");
}

FacetRep enumerate_facets(int dim, const std::vector<LatticePoint>& points)
{
    const std::size_t nv = points.size();
    const auto d = static_cast<std::size_t>(dim);
    if (binomial_u64(nv, d) > kMaxFacetSubsets)
        throw InputError("facet enumeration would visit more than " + std::to_string(kMaxFacetSubsets) +
                         " vertex subsets");

    std::set<Facet> found;
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<LatticePoint> rows;
        for (std::size_t j = 1; j < d; ++j) {
            LatticePoint r(points[idx[j]]);
            for (std::size_t c = 0; c < d; ++c) r[c] -= points[idx[0]][c];
            rows.push_back(std::move(r));
        }
        LatticePoint n = normal_of(rows, dim);
        if (std::any_of(n.begin(), n.end(), [](std::int64_t x) { return x != 0; })) {
            const std::int64_t off = dot(n, points[idx[0]]);
            bool below = true, above = true;
            for (const auto& v : points) {
                const std::int64_t s = dot(n, v) - off;
                below = below && s <= 0;
                above = above && s >= 0;
            }
            if (below || above) {
                std::int64_t g = 0;
                for (auto x : n) g = std::gcd(g, x);
                const std::int64_t f = below ? g : -g;
                for (auto& x : n) x /= f;
                found.insert(Facet{n, off / f});
            }
        }

        // next d-subset in lexicographic order
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == nv - d + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return FacetRep{std::vector<Facet>(found.begin(), found.end())};
}

void check_all_vertices(int dim, const std::vector<LatticePoint>& points, const FacetRep& rep)
{
    for (const auto& v : points) {
        std::vector<LatticePoint> tight;
        for (const auto& f : rep.facets) {
            if (dot(f.normal, v) == f.offset) tight.push_back(f.normal);
        }
        if (rank_of(tight, dim) != dim) throw InputError("point " + point_string(v) + " is not a vertex");
    }
}

template <class Pred>
std::uint64_t scan_box(const LatticePolytope& p, std::int64_t t, Pred inside)
{
    const auto d = static_cast<std::size_t>(p.dim());
    LatticePoint lo(d), hi(d);
    for (std::size_t c = 0; c < d; ++c) {
        std::int64_t mn = p.vertices()[0][c], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[c]);
            mx = std::max(mx, v[c]);
        }
        lo[c] = t * mn;
        hi[c] = t * mx;
    }
    std::uint64_t count = 0;
    LatticePoint x = lo;
    while (true) {
        if (inside(x)) ++count;
        std::size_t c = 0;
        while (c < d && x[c] == hi[c]) {
            x[c] = lo[c];
            ++c;
        }
        if (c == d) break;
        ++x[c];
    }
    return count;
}

} // namespace

LatticePolytope::LatticePolytope(int dim, std::vector<LatticePoint> vertices)
    : dim_(dim), vertices_(std::move(vertices))
{
    facet_representation(dim_, vertices_);
}

FacetRep facet_representation(int dim, const std::vector<LatticePoint>& points)
{
    validate_points(dim, points);
    FacetRep rep = enumerate_facets(dim, points);
    check_all_vertices(dim, points, rep);
    return rep;
}

FacetRep facet_representation(const LatticePolytope& p) { return facet_representation(p.dim(), p.vertices()); }

std::uint64_t count_points(const LatticePolytope& p, const FacetRep& rep, std::int64_t t)
{
    if (t < 0) throw InputError("dilation factor must be >= 0");
    return scan_box(p, t, [&](const LatticePoint& x) {
        return std::all_of(rep.facets.begin(), rep.facets.end(),
                           [&](const Facet& f) { return dot(f.normal, x) <= t * f.offset; });
    });
}

std::uint64_t count_interior_points(const LatticePolytope& p, const FacetRep& rep, std::int64_t t)
{
    if (t < 0) throw InputError("dilation factor must be >= 0");
    return scan_box(p, t, [&](const LatticePoint& x) {
        return std::all_of(rep.facets.begin(), rep.facets.end(),
                           [&](const Facet& f) { return dot(f.normal, x) < t * f.offset; });
    });
}

EhrhartResult ehrhart_polynomial(const LatticePolytope& p) { return ehrhart_polynomial(p, facet_representation(p)); }

EhrhartResult ehrhart_polynomial(const LatticePolytope& p, const FacetRep& rep)
{
    const int d = p.dim();
    EhrhartResult out;
    std::vector<Rational> diffs;
    for (int t = 0; t <= d; ++t) {
        const std::uint64_t n = count_points(p, rep, t);
        out.counts.emplace_back(t, n);
        diffs.emplace_back(static_cast<unsigned long>(n));
    }
    // Newton forward differences: L(t) = sum_k Delta^k L(0) * binom(t, k)
    for (int k = 1; k <= d; ++k) {
        for (int i = d; i >= k; --i) diffs[static_cast<std::size_t>(i)] -= diffs[static_cast<std::size_t>(i - 1)];
    }
    Polynomial binom = Polynomial::constant(1);
    for (int k = 0; k <= d; ++k) {
        out.polynomial += scale(binom, diffs[static_cast<std::size_t>(k)]);
        binom = scale(binom * Polynomial::linear_root(Rational(k)), make_rational(1, k + 1));
    }

    for (int t = d + 1; t <= d + 2; ++t) {
        const std::uint64_t n = count_points(p, rep, t);
        out.counts.emplace_back(t, n);
        if (out.polynomial.evaluate(Rational(t)) != Rational(static_cast<unsigned long>(n)))
            throw ConsistencyError("Ehrhart interpolation disagrees with the lattice count at t = " +
                                   std::to_string(t));
    }
    out.at_half = line_split(out.polynomial, make_rational(-1, 2));
    out.cl = out.at_half.on_count == static_cast<std::size_t>(out.polynomial.degree());
    return out;
}

bool is_reflexive(const FacetRep& rep)
{
    return std::all_of(rep.facets.begin(), rep.facets.end(), [](const Facet& f) { return f.offset == 1; });
}

bool is_reflexive(const LatticePolytope& p) { return is_reflexive(facet_representation(p)); }

bool is_smooth_fan_polytope(const LatticePolytope& p, const FacetRep& rep)
{
    const auto d = static_cast<std::size_t>(p.dim());
    for (const auto& f : rep.facets) {
        std::vector<std::vector<Integer>> m;
        for (const auto& v : p.vertices()) {
            if (dot(f.normal, v) != f.offset) continue;
            std::vector<Integer> row;
            for (auto x : v) row.emplace_back(static_cast<long>(x));
            m.push_back(std::move(row));
        }
        if (m.size() != d) return false;
        if (abs(determinant(std::move(m))) != 1) return false;
    }
    return true;
}

bool is_smooth_fan_polytope(const LatticePolytope& p) { return is_smooth_fan_polytope(p, facet_representation(p)); }

bool is_terminal(const LatticePolytope& p, const FacetRep& rep)
{
    const bool origin_interior =
        std::all_of(rep.facets.begin(), rep.facets.end(), [](const Facet& f) { return f.offset > 0; });
    return origin_interior && count_points(p, rep, 1) == p.vertices().size() + 1;
}

std::string probe_name(ConjectureProbe probe)
{
    switch (probe) {
    case ConjectureProbe::SmoothFano: return "smooth-toric-fano";
    case ConjectureProbe::TerminalGorenstein3: return "terminal-gorenstein-dim3";
    case ConjectureProbe::None: return "none";
    }
    return "none";
}

ConjectureReport conjecture_verdict(const LatticePolytope& p)
{
    const FacetRep rep = facet_representation(p);
    ConjectureReport r;
    r.reflexive = is_reflexive(rep);
    r.smooth = is_smooth_fan_polytope(p, rep);
    r.terminal = is_terminal(p, rep);
    if (r.smooth && r.reflexive)
        r.probe = ConjectureProbe::SmoothFano;
    else if (p.dim() == 3 && r.reflexive && r.terminal)
        r.probe = ConjectureProbe::TerminalGorenstein3;
    r.ehrhart = ehrhart_polynomial(p, rep);
    return r;
}

namespace {

LatticePolytope polytope_from_json(const nlohmann::json& j, const std::string& where)
{
    if (!j.is_object()) throw InputError(where + ": expected an object with \"dim\" and \"vertices\"");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw InputError(where + ": missing integer \"dim\"");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw InputError(where + ": missing \"vertices\" array");
    const int dim = j["dim"].get<int>();
    std::vector<LatticePoint> verts;
    std::size_t i = 0;
    for (const auto& v : j["vertices"]) {
        if (!v.is_array()) throw InputError(where + ": vertex " + std::to_string(i) + " is not an array");
        LatticePoint pt;
        for (const auto& x : v) {
            if (!x.is_number_integer())
                throw InputError(where + ": vertex " + std::to_string(i) + " has a non-integer coordinate");
            pt.push_back(x.get<std::int64_t>());
        }
        verts.push_back(std::move(pt));
        ++i;
    }
    try {
        return LatticePolytope(dim, std::move(verts));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

nlohmann::json parse_json(const std::string& text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

LatticePolytope parse_polytope(const std::string& json_text)
{
    return polytope_from_json(parse_json(json_text), "polytope");
}

LatticePolytope load_polytope(const std::filesystem::path& path)
{
    try {
        return parse_polytope(read_file(path));
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::vector<NamedPolytope> parse_catalog(const std::string& json_text)
{
    const nlohmann::json j = parse_json(json_text);
    std::vector<NamedPolytope> out;
    if (j.is_object()) {
        out.push_back({j.value("name", std::string("polytope")), polytope_from_json(j, "polytope")});
        return out;
    }
    if (!j.is_array()) throw InputError("catalog must be a JSON list or a single polytope object");
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        std::string name = e.is_object() && e.contains("name") && e["name"].is_string()
                               ? e["name"].get<std::string>()
                               : "entry-" + std::to_string(i);
        out.push_back({name, polytope_from_json(e, "entry " + std::to_string(i) + " (" + name + ")")});
    }
    return out;
}

std::vector<NamedPolytope> load_polytope_file(const std::filesystem::path& path)
{
    try {
        return parse_catalog(read_file(path));
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::vector<NamedPolytope> load_catalog(const std::string& name)
{
    const std::string_view source = detail::catalog_source(name);
    if (source.empty()) throw InputError("unknown catalog '" + name + "'");
    return parse_catalog(std::string(source));
}

std::vector<std::string> catalog_names() { return {"smooth-dim1", "smooth-dim2", "smooth-dim3"}; }

} // namespace canon
