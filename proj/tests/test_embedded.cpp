#include "doctest.h"
#include "support.hpp"

#include "canon/embedded.hpp"
#include "canon/hilbert.hpp"

using namespace canon;
using testsupport::R;

TEST_CASE("SplitMix64 reference values")
{
    // First outputs for seed 0 from the published reference implementation.
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);

    SplitMix64 a(123), b(123);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.uniform(-5, 5);
        CHECK(x == b.uniform(-5, 5));
        CHECK(x >= -5);
        CHECK(x <= 5);
    }
    CHECK(derive_seed(7, 0) != derive_seed(7, 1));
    CHECK(derive_seed(7, 3) == derive_seed(7, 3));
}

TEST_CASE("restricted_hilbert examples")
{
    const EmbeddedSection cubic = restricted_hilbert(hilbert_projective(2), R(1));
    CHECK(cubic.restricted == Polynomial{0, 9});
    CHECK(cubic.line() == 0);
    const CanonicalLineCheck c = verify_canonical_line(cubic);
    CHECK(c.holds);
    CHECK(c.report.on_count == 1);

    const EmbeddedSection k3 = restricted_hilbert(hilbert_projective(3), R(1));
    CHECK(k3.restricted == Polynomial{2, 0, 32});
    CHECK(verify_canonical_line(k3).report.on_count == 2);

    const EmbeddedSection s2 = restricted_hilbert(hilbert_projective(3), R(2));
    CHECK(s2.restricted.degree() == 2);
    CHECK(s2.line() == R(1, 2));
    CHECK(verify_canonical_line(s2).holds);

    CHECK_THROWS_AS(restricted_hilbert(hilbert_projective(3), R(1, 2)), InputError);
    CHECK_THROWS_AS(restricted_hilbert(Polynomial{5}, R(1)), InputError);
}

TEST_CASE("Grassmannian sections satisfy the canonical line")
{
    const Polynomial h = hilbert_grassmannian(GrassmannianSpec::make(2, 4));
    const Rational lines[] = {R(0), R(1, 2), R(1)};
    for (int m = 1; m <= 3; ++m) {
        const EmbeddedSection sec = restricted_hilbert(h, R(m));
        CHECK(sec.line() == lines[m - 1]);
        const CanonicalLineCheck c = verify_canonical_line(sec);
        CHECK(c.holds);
        CHECK(c.report.on_count == 3);
    }
}

TEST_CASE("sections of non-strip ambients")
{
    // (z-1)(z+2) - (z-2)(z+1) = 2z happens to land on the line.
    const Polynomial a = Polynomial{-1, 1} * Polynomial{2, 1};
    const EmbeddedSection sa = restricted_hilbert(a, R(1));
    CHECK(sa.restricted == Polynomial{0, 2});
    CHECK(verify_canonical_line(sa).holds);

    // Adding a root at -1/2 breaks it: 3z^2 - 2 has two real roots
    // of opposite sign.
    const Polynomial b = a * Polynomial{R(1, 2), 1};
    const CanonicalLineCheck cb = verify_canonical_line(restricted_hilbert(b, R(1)));
    CHECK_FALSE(cb.holds);
    CHECK(cb.report.left_count == 1);
    CHECK(cb.report.right_count == 1);
}

TEST_CASE("random_strip_symmetric examples")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Polynomial one = random_strip_symmetric(1, seed);
        CHECK(make_monic(one) == Polynomial{R(1, 2), 1});
    }
    for (int degree = 1; degree <= 10; ++degree) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Polynomial p = random_strip_symmetric(degree, seed * 31 + static_cast<std::uint64_t>(degree));
            CHECK(p.degree() == degree);
            CHECK(serre_check(p, degree));
            const StripVerdict v = classify_strip(p, degree, false);
            CHECK(v.cs);
            // No root touches the strip boundary.
            CHECK(v.at_minus_one.on_count == 0);
            CHECK(v.at_zero.on_count == 0);
        }
    }
    CHECK(random_strip_symmetric(4, 9) == random_strip_symmetric(4, 9));
}

TEST_CASE("small restricted polynomials")
{
    const EmbeddedSection lin = restricted_hilbert(Polynomial{R(1, 2), 1}, R(1));
    CHECK(lin.restricted == Polynomial{1});
    CHECK(verify_canonical_line(lin).holds);

    const EmbeddedSection sq = restricted_hilbert(power(Polynomial{R(1, 2), 1}, 2), R(3));
    CHECK(sq.restricted == Polynomial{-6, 6});
    CHECK(verify_canonical_line(sq).report.on_count == 1);
}

TEST_CASE("property: randomized canonical-line suite")
{
    const LemmaSummary s = lemma_property_suite(200, 10, {R(1), R(2), R(3), R(4)}, 7);
    CHECK(s.ok());
    CHECK(s.checks == 800);
    CHECK(s.passed == 800);

    const LemmaSummary r = lemma_property_suite(50, 6, {R(3, 2)}, 2);
    CHECK(r.ok());
    CHECK(r.checks == 50);

    const LemmaSummary trivial = lemma_property_suite(1, 1, {R(1)}, 1);
    CHECK(trivial.ok());

    CHECK_THROWS_AS(lemma_property_suite(5, 3, {R(1, 2)}, 1), InputError);
}

TEST_CASE("property: degree drop and shifted symmetry")
{
    testsupport::ConstellationGen gen(77);
    for (int i = 0; i < 200; ++i) {
        const int degree = static_cast<int>(gen.pick(1, 9));
        const Polynomial h = random_strip_symmetric(degree, static_cast<std::uint64_t>(i));
        const Rational s = make_rational(gen.pick(2, 16), 2);
        const EmbeddedSection sec = restricted_hilbert(h, s);
        CHECK(sec.restricted.degree() == degree - 1);
        // r(s-1-z) = +-r(z)
        const Polynomial mirrored = shift(negate_argument(sec.restricted), 1 - s);
        CHECK((mirrored == sec.restricted || mirrored == -sec.restricted));
    }
}

TEST_CASE("property: strip-satisfying constructors give canonical-line sections")
{
    std::vector<std::pair<Polynomial, int>> ambients;
    for (int n = 1; n <= 6; ++n) ambients.emplace_back(hilbert_projective(n), n);
    for (int n = 4; n <= 7; ++n)
        for (int k = 2; 2 * k <= n; ++k) {
            const GrassmannianSpec g = GrassmannianSpec::make(k, n);
            ambients.emplace_back(hilbert_grassmannian(g), g.dimension());
        }
    for (int c1sq = 1; c1sq <= 9; ++c1sq) ambients.emplace_back(hilbert_surface({R(c1sq), R(12 - c1sq)}), 2);
    for (int c1cube = 2; c1cube <= 64; c1cube += 6) ambients.emplace_back(hilbert_threefold({R(c1cube), R(24)}), 3);

    const Rational s_values[] = {R(1), R(3, 2), R(2), R(5, 2), R(3), R(7)};
    for (const auto& [h, dim] : ambients) {
        REQUIRE(classify_strip(h, dim, false).cs);
        REQUIRE(serre_check(h, dim));
        for (const auto& s : s_values) CHECK(verify_canonical_line(restricted_hilbert(h, s)).holds);
    }
}
