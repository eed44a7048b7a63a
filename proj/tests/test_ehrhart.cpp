#include "doctest.h"
#include "support.hpp"

#include "canon/ehrhart.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

using namespace canon;
using testsupport::R;

namespace {

LatticePolytope triangle() { return LatticePolytope(2, {{1, 0}, {0, 1}, {-1, -1}}); }
LatticePolytope diamond() { return LatticePolytope(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}); }
LatticePolytope segment() { return LatticePolytope(1, {{-1}, {1}}); }

std::vector<Facet> facets(std::initializer_list<Facet> list)
{
    std::vector<Facet> out(list);
    std::sort(out.begin(), out.end());
    return out;
}

// |tP cap Z^2| for the diamond, straight from |x| + |y| <= t.
std::uint64_t count_diamond(std::int64_t t)
{
    std::uint64_t n = 0;
    for (std::int64_t x = -t; x <= t; ++x)
        for (std::int64_t y = -t; y <= t; ++y)
            if (std::abs(x) + std::abs(y) <= t) ++n;
    return n;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents)
{
    const auto path = std::filesystem::temp_directory_path() / ("canon-test-" + name);
    std::ofstream(path) << contents;
    return path;
}

} // namespace

TEST_CASE("facet representation examples")
{
    CHECK(facet_representation(triangle()).facets == facets({{{-2, 1}, 1}, {{1, -2}, 1}, {{1, 1}, 1}}));
    CHECK(facet_representation(diamond()).facets ==
          facets({{{1, 1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}, {{-1, -1}, 1}}));
    CHECK(facet_representation(segment()).facets == facets({{{1}, 1}, {{-1}, 1}}));
}

TEST_CASE("polytope validation")
{
    CHECK_THROWS_AS(LatticePolytope(2, {{1, 0}, {1, 0}, {0, 1}}), InputError);
    CHECK_THROWS_AS(LatticePolytope(2, {{0, 0}, {1, 1}, {2, 2}}), InputError);
    CHECK_THROWS_AS(LatticePolytope(2, {{1, 0}, {0, 1}, {-1, -1}, {0, 0}}), InputError);
    CHECK_THROWS_AS(LatticePolytope(2, {{1, 0}, {0, 1, 2}, {-1, -1}}), InputError);
    CHECK_THROWS_AS(LatticePolytope(0, {}), InputError);
    CHECK_NOTHROW(LatticePolytope(2, {{0, 0}, {1, 0}, {0, 1}}));
}

TEST_CASE("count examples")
{
    const auto t = triangle();
    const auto rep = facet_representation(t);
    CHECK(count_points(t, rep, 1) == 4);
    CHECK(count_points(t, rep, 0) == 1);
    const auto d = diamond();
    CHECK(count_points(d, facet_representation(d), 2) == 13);
    for (int k = 0; k < 8; ++k) CHECK(count_points(d, facet_representation(d), k) == count_diamond(k));
}

TEST_CASE("Ehrhart polynomial examples")
{
    const EhrhartResult s = ehrhart_polynomial(segment());
    CHECK(s.polynomial == Polynomial{1, 2});
    CHECK(s.cl);

    const EhrhartResult t = ehrhart_polynomial(triangle());
    CHECK(t.polynomial == Polynomial{1, R(3, 2), R(3, 2)});
    CHECK(t.cl);
    CHECK(t.at_half.on_count == 2);

    const EhrhartResult d = ehrhart_polynomial(diamond());
    CHECK(d.polynomial == Polynomial{1, 2, 2});
    CHECK(d.cl);

    const LatticePolytope square(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    const EhrhartResult q = ehrhart_polynomial(square);
    CHECK(q.polynomial == Polynomial{1, 4, 4});
    CHECK(q.cl);
    CHECK(is_reflexive(square));
    CHECK_FALSE(is_smooth_fan_polytope(square));

    // Recorded nodes cover t = 0..d+2.
    CHECK(t.counts.size() == 5);
}

TEST_CASE("reflexive and smooth examples")
{
    CHECK(is_reflexive(triangle()));
    CHECK(is_reflexive(segment()));
    CHECK_FALSE(is_reflexive(LatticePolytope(2, {{2, 0}, {0, 1}, {-2, -1}})));
    CHECK(is_smooth_fan_polytope(triangle()));
    CHECK(is_smooth_fan_polytope(diamond()));
    CHECK_FALSE(is_smooth_fan_polytope(LatticePolytope(2, {{1, 0}, {0, 1}, {-1, -2}})));

    const LatticePolytope corner(2, {{0, 0}, {1, 0}, {0, 1}});
    const ConjectureReport r = conjecture_verdict(corner);
    CHECK_FALSE(r.reflexive);
    CHECK(r.probe == ConjectureProbe::None);
    CHECK(r.ehrhart.polynomial == Polynomial{1, R(3, 2), R(1, 2)});
}

TEST_CASE("conjecture probes")
{
    CHECK(conjecture_verdict(triangle()).probe == ConjectureProbe::SmoothFano);
    CHECK(probe_name(ConjectureProbe::SmoothFano) == "smooth-toric-fano");

    // P1 x P1 x P1.
    const LatticePolytope oct(3, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    const ConjectureReport o = conjecture_verdict(oct);
    CHECK(o.reflexive);
    CHECK(o.smooth);
    CHECK(o.terminal);
    CHECK(o.probe == ConjectureProbe::SmoothFano);
    CHECK(o.ehrhart.cl);

    // Reflexive and terminal but not smooth: only vertices and the origin at t = 1.
    const LatticePolytope skew(3, {{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {1, 1, -1}});
    const ConjectureReport s = conjecture_verdict(skew);
    CHECK(s.reflexive);
    CHECK(s.terminal);
    CHECK_FALSE(s.smooth);
    CHECK(s.probe == ConjectureProbe::TerminalGorenstein3);
    CHECK(s.ehrhart.polynomial.evaluate(R(1)) == 6);
    CHECK(probe_name(s.probe) == "terminal-gorenstein-dim3");

    const LatticePolytope square(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(conjecture_verdict(square).probe == ConjectureProbe::None);
}

TEST_CASE("catalogs")
{
    CHECK(catalog_names() == std::vector<std::string>{"smooth-dim1", "smooth-dim2", "smooth-dim3"});
    CHECK(load_catalog("smooth-dim1").size() == 1);
    const auto dim2 = load_catalog("smooth-dim2");
    REQUIRE(dim2.size() == 5);
    for (const auto& [name, p] : dim2) {
        INFO(name);
        CHECK(is_reflexive(p));
        CHECK(is_smooth_fan_polytope(p));
        CHECK(ehrhart_polynomial(p).cl);
    }
    const auto hexagon = std::find_if(dim2.begin(), dim2.end(), [](const auto& e) { return e.polytope.vertices().size() == 6; });
    REQUIRE(hexagon != dim2.end());
    CHECK(ehrhart_polynomial(hexagon->polytope).polynomial == Polynomial{1, 3, 3});

    const auto dim3 = load_catalog("smooth-dim3");
    CHECK(dim3.size() == 18);
    CHECK_THROWS_AS(load_catalog("smooth-dim9"), InputError);
}

TEST_CASE("property: catalog invariants")
{
    std::mt19937_64 rng(8);
    for (const auto& name : catalog_names()) {
        for (const auto& [label, p] : load_catalog(name)) {
            INFO(name << "/" << label);
            const FacetRep rep = facet_representation(p);
            const EhrhartResult e = ehrhart_polynomial(p, rep);
            const int d = p.dim();
            const Polynomial& L = e.polynomial;

            CHECK(L.degree() == d);
            CHECK(L.evaluate(R(0)) == 1);

            // d! * leading coefficient is the normalized volume; for a smooth
            // fan polytope every facet cone is unimodular, so it equals the
            // number of facets.
            Rational factorial = 1;
            for (int k = 2; k <= d; ++k) factorial *= k;
            CHECK(factorial * L.leading() == Rational(static_cast<long>(rep.facets.size())));

            // d! L has integer coefficients.
            for (const auto& c : L.coeffs()) CHECK(Rational(factorial * c).get_den() == 1);

            // Fresh counts at larger dilations.
            for (int k = 0; k < 3; ++k) {
                const std::int64_t t = std::uniform_int_distribution<std::int64_t>(d + 3, d + 6)(rng);
                CHECK(L.evaluate(R(t)) == Rational(static_cast<unsigned long>(count_points(p, rep, t))));
            }

            // Reciprocity and interior counts.
            REQUIRE(is_reflexive(rep));
            const Polynomial lhs = negate_argument(L);
            const Polynomial rhs = scale(shift(L, R(-1)), R(d % 2 == 0 ? 1 : -1));
            CHECK(lhs == rhs);
            for (std::int64_t t = 2; t <= 3; ++t)
                CHECK(Rational(static_cast<unsigned long>(count_interior_points(p, rep, t))) == L.evaluate(R(t - 1)));

            // Monotone dilations.
            for (std::size_t k = 2; k < e.counts.size(); ++k) CHECK(e.counts[k].second > e.counts[k - 1].second);

            // Exact CL.
            CHECK(e.at_half.on_count == static_cast<std::size_t>(d));
            CHECK(is_smooth_fan_polytope(p, rep));
        }
    }
}

TEST_CASE("loaders")
{
    const auto ok = temp_file("p2.json", R"({"dim": 2, "vertices": [[1,0],[0,1],[-1,-1]]})");
    const LatticePolytope p = load_polytope(ok);
    CHECK(p.vertices() == triangle().vertices());

    const auto list = temp_file("list.json", R"([{"name":"a","dim":1,"vertices":[[-1],[1]]},
                                                 {"name":"b","dim":2,"vertices":[[1,0],[0,1],[-1,-1]]}])");
    const auto entries = load_polytope_file(list);
    REQUIRE(entries.size() == 2);
    CHECK(entries[1].name == "b");

    CHECK_THROWS_AS(load_polytope(temp_file("bad1.json", "{\"dim\": 2}")), InputError);
    CHECK_THROWS_AS(load_polytope(temp_file("bad2.json", "[1,2")), InputError);
    CHECK_THROWS_AS(load_polytope(temp_file("bad3.json", R"({"dim":2,"vertices":[[1,0],[1,0],[0,1]]})")), InputError);
    CHECK_THROWS_AS(load_polytope(temp_file("bad4.json", R"({"dim":2,"vertices":[[1.5,0],[1,0],[0,1]]})")), InputError);
    CHECK_THROWS_AS(load_polytope("/nonexistent/canon.json"), IoError);
}
