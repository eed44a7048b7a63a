#include "doctest.h"
#include "support.hpp"

#include "canon/ratpoly.hpp"

#include <algorithm>
#include <random>

using namespace canon;
using testsupport::R;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<std::int64_t> num(-20, 20);
    std::uniform_int_distribution<std::int64_t> den(1, 7);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return Polynomial(std::move(c));
}

Rational random_rational(std::mt19937_64& rng)
{
    return make_rational(std::uniform_int_distribution<std::int64_t>(-30, 30)(rng),
                         std::uniform_int_distribution<std::int64_t>(1, 9)(rng));
}

} // namespace

TEST_CASE("rational parsing and formatting")
{
    CHECK(parse_rational("3/6") == R(1, 2));
    CHECK(parse_rational("-4") == R(-4));
    CHECK(parse_rational("0.25") == R(1, 4));
    CHECK(to_fraction_string(R(6, 3)) == "2/1");
    CHECK(to_display_string(R(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
}

TEST_CASE("arithmetic examples")
{
    const Polynomial z = Polynomial::monomial(1, 1);
    CHECK(sub(z * z + z, z * z) == z);
    CHECK(scale(Polynomial{1, 2}, R(1, 2)) == Polynomial{R(1, 2), 1});
    CHECK(mul(Polynomial{1, 3}, Polynomial{2, 3}) == Polynomial{2, 9, 9});
    CHECK(Polynomial{0, 0, 0}.is_zero());
    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{1, 2, 0}.degree() == 1);
}

TEST_CASE("evaluate examples")
{
    const Polynomial p2 = scale(Polynomial{2, 9, 9}, R(1, 2));
    CHECK(evaluate(p2, R(1)) == 10);
    CHECK(evaluate(p2, R(0)) == 1);
    CHECK(evaluate(Polynomial{0, 9}, R(1, 3)) == 3);
}

TEST_CASE("shift and reflect examples")
{
    CHECK(shift(Polynomial{0, 0, 1}, R(1)) == Polynomial{1, 2, 1});
    CHECK(shift(Polynomial{2, 9, 9}, R(-1)) == Polynomial{2, -9, 9});
    const Polynomial p2 = scale(Polynomial{2, 9, 9}, R(1, 2));
    CHECK(reflect(p2) == p2);
    CHECK(reflect(Polynomial{R(1, 2), 1}) == Polynomial{R(-1, 2), -1});
}

TEST_CASE("derivative, gcd and squarefree examples")
{
    CHECK(gcd(Polynomial{-1, 0, 1}, Polynomial{-1, 1}) == Polynomial{-1, 1});
    CHECK(squarefree_part(power(Polynomial{R(1, 2), 1}, 2)) == Polynomial{R(1, 2), 1});
    CHECK(derivative(Polynomial{2, 9, 9}) == Polynomial{9, 18});

    const Polynomial p = power(Polynomial{1, 1}, 3) * power(Polynomial{-2, 1}, 2) * Polynomial{5, 0, 1};
    const auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[0].factor == Polynomial{5, 0, 1});
    CHECK(parts[1].multiplicity == 2);
    CHECK(parts[1].factor == Polynomial{-2, 1});
    CHECK(parts[2].multiplicity == 3);
    CHECK(parts[2].factor == Polynomial{1, 1});
}

TEST_CASE("division")
{
    const auto [q, r] = divmod(Polynomial{1, 0, 0, 1}, Polynomial{1, 1});
    CHECK(q == Polynomial{1, -1, 1});
    CHECK(r.is_zero());
    CHECK_THROWS(divmod(Polynomial{1, 1}, Polynomial{}));
    CHECK_THROWS(divide_exact(Polynomial{1, 0, 1}, Polynomial{1, 1}));
}

TEST_CASE("real root counting examples")
{
    CHECK(count_real_roots(Polynomial{2, 9, 9}, Interval::open(R(-1), R(0))) == 2);
    CHECK(count_real_roots(Polynomial{1, 0, 1}) == 0);
    CHECK(count_real_roots(Polynomial{R(1, 2), 1}, Interval::closed(R(-1, 2), R(-1, 2))) == 1);
    CHECK(count_real_roots(Polynomial{R(1, 2), 1}, Interval::open(R(-1, 2), R(0))) == 0);
    CHECK(count_real_roots(Polynomial{2, 9, 9}, Interval::make(R(-2, 3), R(-1, 3), false, true)) == 1);
    CHECK(count_real_roots(Polynomial{2, 9, 9}, Interval::make(R(-2, 3), R(-1, 3), true, false)) == 1);
}

TEST_CASE("cauchy index")
{
    // 1/z jumps from -inf to +inf at 0.
    CHECK(cauchy_index(Polynomial{1}, Polynomial{0, 1}) == 1);
    CHECK(cauchy_index(Polynomial{-1}, Polynomial{0, 1}) == -1);
    CHECK(cauchy_index(Polynomial{1}, Polynomial{0, 0, 1}) == 0);
}

TEST_CASE("property: ring laws and shift round trips")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        const Polynomial a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Polynomial{});
        const Rational t = random_rational(rng);
        CHECK(shift(shift(a, t), -t) == a);
        const Rational x = random_rational(rng);
        CHECK(evaluate(shift(a, t), x) == evaluate(a, x + t));
        CHECK(reflect(reflect(a)) == a);
        CHECK(shift(a, t).degree() == a.degree());
        CHECK(reflect(a).degree() == a.degree());
    }
}

TEST_CASE("property: gcd divides both inputs")
{
    std::mt19937_64 rng(202);
    for (int i = 0; i < 200; ++i) {
        const Polynomial common = random_poly(rng, 3);
        const Polynomial a = random_poly(rng, 4) * common;
        const Polynomial b = random_poly(rng, 4) * common;
        const Polynomial g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) continue;
        CHECK(divmod(a, g).remainder.is_zero());
        CHECK(divmod(b, g).remainder.is_zero());
        if (!common.is_zero() && common.degree() > 0) CHECK(divmod(g, make_monic(common)).remainder.is_zero());
    }
}

TEST_CASE("property: Sturm counts match a grid sign-change oracle")
{
    // Distinct rational roots from a grid of spacing 1/12; sign changes on the
    // grid of spacing 1/24 isolate them.
    std::mt19937_64 rng(303);
    for (int i = 0; i < 150; ++i) {
        std::vector<std::int64_t> ticks;
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        while (static_cast<int>(ticks.size()) < n) {
            const std::int64_t t = std::uniform_int_distribution<std::int64_t>(-36, 36)(rng);
            if (std::find(ticks.begin(), ticks.end(), t) == ticks.end()) ticks.push_back(t);
        }
        std::vector<Rational> roots;
        for (auto t : ticks) roots.push_back(make_rational(t, 12));
        Polynomial p = Polynomial::from_roots(roots);
        // Positive-definite quadratic factors and a repeated root add no new
        // real roots.
        const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int k = 0; k < extra; ++k) p *= Polynomial{make_rational(1 + k, 3), 0, 1};
        p *= Polynomial::linear_root(roots.front());

        const Rational start = make_rational(-7, 1) + make_rational(1, 48);
        std::size_t grid_changes = 0;
        int prev = sgn(p.evaluate(start));
        for (int k = 1; k <= 14 * 24; ++k) {
            const int v = sgn(p.evaluate(start + make_rational(k, 24)));
            if (v != prev && v != 0) ++grid_changes;
            prev = v;
        }
        const std::size_t sturm = count_real_roots(p);
        CHECK(sturm == roots.size());
        // The repeated root does not change sign; every other root does.
        CHECK(grid_changes == roots.size() - 1);
        CHECK(count_real_roots(p, Interval::open(R(-7), R(7))) == roots.size());
    }
}
