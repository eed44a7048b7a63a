#ifndef CANON_EMBEDDED_HPP
#define CANON_EMBEDDED_HPP

#include "canon/ratpoly.hpp"
#include "canon/rootloc.hpp"

#include <cstdint>
#include <vector>

namespace canon {

/**
 * SplitMix64: state += 0x9E3779B97F4A7C15, then the output is mixed by
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   z ^= z >> 31
 * Used for every randomized construction so failures reproduce from a seed
 * on any platform.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform integer in [lo, hi] by rejection (no modulo bias).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

/// Seed for case `index` of a suite driven by `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Hilbert polynomial of a section in |s * (-K_F)| restricted from the ambient.
struct EmbeddedSection {
    Polynomial ambient;
    Rational multiple;
    Polynomial restricted;  // ambient(z) - ambient(z - s)

    /// The line Re z = (s - 1) / 2 the restricted zeros should sit on.
    [[nodiscard]] Rational line() const { return (multiple - 1) / 2; }
};

/// Throws InputError for a constant ambient or s < 1.
EmbeddedSection restricted_hilbert(const Polynomial& ambient, const Rational& s);

struct CanonicalLineCheck {
    bool holds = false;
    RootReport report;
};

/// Exact: every zero of the restricted polynomial lies on Re z = (s-1)/2.
CanonicalLineCheck verify_canonical_line(const EmbeddedSection& section);

/// Real polynomial of the given degree whose roots lie strictly inside
/// -1 < Re z < 0 and are closed under conjugation and z -> -1 - z.
Polynomial random_strip_symmetric(int degree, std::uint64_t seed);

struct LemmaFailure {
    std::uint64_t seed;
    Rational s;
    Polynomial ambient;
    Polynomial restricted;
    RootReport report;
};

struct LemmaSummary {
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::size_t passed = 0;
    std::vector<LemmaFailure> failures;

    [[nodiscard]] bool ok() const { return failures.empty() && passed == checks; }
};

/// Draws `cases` polynomials (degree uniform in 1..max_degree, each from
/// derive_seed(seed, case)) and checks the canonical-line conclusion for every
/// s in s_values.
LemmaSummary lemma_property_suite(std::size_t cases, int max_degree, const std::vector<Rational>& s_values,
                                  std::uint64_t seed);

} // namespace canon

#endif
