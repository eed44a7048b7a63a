#ifndef CANON_ROOTLOC_HPP
#define CANON_ROOTLOC_HPP

#include "canon/ratpoly.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace canon {

/// Root counts, with multiplicity, relative to the vertical line Re z = line.
struct RootReport {
    Rational line;
    std::size_t left_count = 0;
    std::size_t on_count = 0;
    std::size_t right_count = 0;

    [[nodiscard]] std::size_t total() const { return left_count + on_count + right_count; }
    friend bool operator==(const RootReport&, const RootReport&) = default;
};

struct ApproxRoot {
    std::complex<double> value;
    /// |p(z)| / (max_k |c_k| * sum_k |z|^k) at the returned approximation.
    double residual;
};

/**
 * Exact verdicts on the canonical strip (-1 < Re z < 0), the narrowed strip
 * [-1 + 1/(dim+1), -1/(dim+1)], and the canonical line Re z = -1/2.
 *
 * Flags are derived from the exact reports only; approx_roots is for display.
 */
struct StripVerdict {
    bool cs = false;
    bool ncs = false;
    bool cl = false;
    int dim = 1;
    int degree = 0;
    RootReport at_minus_one;
    RootReport at_zero;
    RootReport at_narrow_low;
    RootReport at_narrow_high;
    RootReport at_half;
    std::vector<ApproxRoot> approx_roots;
};

/**
 * Counts roots of p left of, on, and right of Re z = a.
 *
 * On-line roots are the common real roots of A and B where
 * p(a + iy) = A(y) + i B(y). Per squarefree factor, roots mirrored across the
 * line (including those on it) are split off through gcd(q(w), q(-w)) with
 * q(w) = p(w + a); the remainder has no such pairs and its half-plane split
 * comes from the Cauchy index of A/B plus the boundary behaviour at infinity.
 */
RootReport line_split(const Polynomial& p, const Rational& a);

/// Every root strictly in Re z < 0.
bool hurwitz_stable(const Polynomial& p);

StripVerdict classify_strip(const Polynomial& p, int dim, bool with_approx = true);

/// Simultaneous (Aberth) iteration seeded on a circle of radius
/// 1 + max |c_k / c_n|. Exact zero roots are split off first. Throws ConsistencyError naming the cap when the
/// scaled residual does not reach tol within max_iterations.
std::vector<ApproxRoot> approx_roots(const Polynomial& p, double tol = 1e-12, int max_iterations = 1000);

/// Real/imaginary split of p(a + iy): returns {A, B}.
std::pair<Polynomial, Polynomial> line_restriction(const Polynomial& p, const Rational& a);

} // namespace canon

#endif
