#include "canon/embedded.hpp"

namespace canon {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
    SplitMix64 g(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return g.next();
}

EmbeddedSection restricted_hilbert(const Polynomial& ambient, const Rational& s)
{
    if (ambient.degree() < 1) throw InputError("embedded section needs an ambient polynomial of degree >= 1");
    if (s < 1) throw InputError("embedded section needs s >= 1");
    EmbeddedSection out{ambient, s, ambient - shift(ambient, -s)};
    if (out.restricted.degree() != ambient.degree() - 1)
        throw ConsistencyError("restricted polynomial did not drop exactly one degree");
    return out;
}

CanonicalLineCheck verify_canonical_line(const EmbeddedSection& section)
{
    CanonicalLineCheck out;
    out.report = line_split(section.restricted, section.line());
    out.holds = out.report.on_count == static_cast<std::size_t>(section.restricted.degree());
    return out;
}

namespace {

Rational draw_inner_real(SplitMix64& rng)
{
    // -1/2 < a < 0
    const std::int64_t den = rng.uniform(3, 24);
    const std::int64_t num = rng.uniform(1, (den - 1) / 2);
    return make_rational(-num, den);
}

Rational draw_imaginary(SplitMix64& rng)
{
    return make_rational(rng.uniform(1, 12), rng.uniform(1, 8));
}

/// z^2 - 2 re z + re^2 + im^2
Polynomial conjugate_pair(const Rational& re, const Rational& im)
{
    return Polynomial({re * re + im * im, -2 * re, Rational(1)});
}

} // namespace

Polynomial random_strip_symmetric(int degree, std::uint64_t seed)
{
    if (degree < 1) throw InputError("random_strip_symmetric needs degree >= 1");
    SplitMix64 rng(seed);
    const Rational half = make_rational(-1, 2);
    Polynomial p = Polynomial::constant(1);
    int remaining = degree;
    while (remaining > 0) {
        const int kinds = remaining >= 4 ? 4 : (remaining >= 2 ? 3 : 1);
        switch (rng.uniform(0, kinds - 1)) {
        case 0:  // the self-symmetric real root
            p *= Polynomial::linear_root(half);
            remaining -= 1;
            break;
        case 1: {  // real pair {a, -1-a}
            const Rational a = draw_inner_real(rng);
            p *= Polynomial::linear_root(a) * Polynomial::linear_root(-1 - a);
            remaining -= 2;
            break;
        }
        case 2:  // -1/2 +- bi
            p *= conjugate_pair(half, draw_imaginary(rng));
            remaining -= 2;
            break;
        default: {  // {a +- bi, -1-a +- bi}
            const Rational a = draw_inner_real(rng);
            const Rational b = draw_imaginary(rng);
            p *= conjugate_pair(a, b) * conjugate_pair(-1 - a, b);
            remaining -= 4;
            break;
        }
        }
    }
    std::int64_t num = rng.uniform(1, 9);
    if (rng.uniform(0, 1) == 1) num = -num;
    return scale(p, make_rational(num, rng.uniform(1, 9)));
}

LemmaSummary lemma_property_suite(std::size_t cases, int max_degree, const std::vector<Rational>& s_values,
                                  std::uint64_t seed)
{
    if (cases == 0 || max_degree < 1 || s_values.empty())
        throw InputError("lemma suite needs cases >= 1, max_degree >= 1 and at least one s");
    for (const auto& s : s_values) {
        if (s < 1) throw InputError("lemma suite needs every s >= 1");
    }

    LemmaSummary summary;
    summary.cases = cases;
    for (std::size_t i = 0; i < cases; ++i) {
        const std::uint64_t case_seed = derive_seed(seed, i);
        SplitMix64 rng(case_seed);
        const int degree = static_cast<int>(rng.uniform(1, max_degree));
        const Polynomial h = random_strip_symmetric(degree, derive_seed(case_seed, 0));
        for (const auto& s : s_values) {
            ++summary.checks;
            const EmbeddedSection section = restricted_hilbert(h, s);
            const CanonicalLineCheck check = verify_canonical_line(section);
            if (check.holds)
                ++summary.passed;
            else
                summary.failures.push_back({case_seed, s, h, section.restricted, check.report});
        }
    }
    return summary;
}

} // namespace canon
