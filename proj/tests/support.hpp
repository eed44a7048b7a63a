// Independent oracles and generators shared by the unit and acceptance tests.
#ifndef CANON_TESTS_SUPPORT_HPP
#define CANON_TESTS_SUPPORT_HPP

#include "canon/ratpoly.hpp"
#include "canon/rootloc.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace testsupport {

inline canon::Rational R(std::string_view text) { return canon::parse_rational(text); }
inline canon::Rational R(std::int64_t n, std::int64_t d = 1) { return canon::make_rational(n, d); }

// Weyl dimension formula for the GL_N irreducible with highest weight
// (N m, ..., N m, 0, ..., 0) (k copies of N m). By Borel-Weil this is
// h^0(G(k,N), O(m)) for the Plucker bundle raised to the index, i.e. the
// anticanonical Hilbert function of the Grassmannian.
inline mpz_class weyl_grassmannian(int k, int n, int m)
{
    std::vector<long> lambda(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) lambda[static_cast<std::size_t>(i)] = static_cast<long>(n) * m;
    mpq_class prod = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod *= mpq_class(lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i, j - i);
    prod.canonicalize();
    return prod.get_num();
}

// Anticanonical Hilbert function of P^n: binomial((n+1) m + n, n).
inline mpz_class binomial_projective(int n, int m)
{
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>((n + 1) * m + n), static_cast<unsigned long>(n));
    return out;
}

// A root placed by construction: either a real root r or a conjugate pair
// re +- i im (im > 0).
struct PlacedRoot {
    canon::Rational re;
    canon::Rational im;  // zero for a real root
    unsigned multiplicity = 1;
};

struct Constellation {
    std::vector<PlacedRoot> roots;
    canon::Polynomial poly;
};

// Real parts are drawn from a small grid of denominators so that a good share
// of the test lines hit roots exactly.
class ConstellationGen {
public:
    explicit ConstellationGen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t pick(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    canon::Rational small_rational()
    {
        static const std::int64_t dens[] = {1, 2, 3, 4, 6};
        const std::int64_t den = dens[pick(0, 4)];
        return canon::make_rational(pick(-3 * den, 3 * den), den);
    }

    Constellation next(int max_degree)
    {
        Constellation c;
        c.poly = canon::Polynomial::constant(canon::make_rational(pick(1, 9) * (pick(0, 1) ? 1 : -1), pick(1, 5)));
        int degree = 0;
        const int target = static_cast<int>(pick(1, max_degree));
        while (degree < target) {
            PlacedRoot r;
            r.re = small_rational();
            r.multiplicity = static_cast<unsigned>(pick(0, 5) == 0 ? 2 : 1);
            const bool pair = degree + 2 * static_cast<int>(r.multiplicity) <= target && pick(0, 1) == 1;
            canon::Polynomial factor;
            if (pair) {
                r.im = canon::make_rational(pick(1, 8), pick(1, 4));
                // (z - re)^2 + im^2
                factor = canon::Polynomial{r.re * r.re + r.im * r.im, -2 * r.re, 1};
            } else {
                r.im = 0;
                factor = canon::Polynomial::linear_root(r.re);
            }
            if (degree + (pair ? 2 : 1) * static_cast<int>(r.multiplicity) > target) r.multiplicity = 1;
            c.poly *= canon::power(factor, r.multiplicity);
            degree += (pair ? 2 : 1) * static_cast<int>(r.multiplicity);
            c.roots.push_back(r);
        }
        return c;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// Counts relative to Re z = a read off the construction.
inline canon::RootReport expected_split(const Constellation& c, const canon::Rational& a)
{
    canon::RootReport r;
    r.line = a;
    for (const auto& root : c.roots) {
        const std::size_t n = root.multiplicity * (root.im == 0 ? 1u : 2u);
        const int cmp = sgn(root.re - a);
        if (cmp < 0) r.left_count += n;
        else if (cmp == 0) r.on_count += n;
        else r.right_count += n;
    }
    return r;
}

} // namespace testsupport

#endif
