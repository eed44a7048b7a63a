#include "canon/rootloc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace canon {

namespace {

/// {A, B} with g(iy) = A(y) + i B(y).
std::pair<Polynomial, Polynomial> axis_restriction(const Polynomial& g)
{
    const auto& c = g.coeffs();
    std::vector<Rational> re(c.size(), Rational(0)), im(c.size(), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) {
        switch (k % 4) {
        case 0: re[k] = c[k]; break;
        case 1: im[k] = c[k]; break;
        case 2: re[k] = -c[k]; break;
        default: im[k] = -c[k]; break;
        }
    }
    return {Polynomial(std::move(re)), Polynomial(std::move(im))};
}

struct HalfPlaneCounts {
    std::size_t left = 0;
    std::size_t right = 0;
};

/// Left/right split for g with no pair of roots symmetric about the origin
/// (hence none on the imaginary axis). The continuous change of arg g(iy)
/// over the real line equals pi * (left - right); it is the Cauchy index of
/// A/B plus the difference of arccot(A/B) in (0, pi) at the two ends.
HalfPlaneCounts half_plane_split(const Polynomial& g)
{
    const int n = g.degree();
    if (n <= 0) return {};
    auto [A, B] = axis_restriction(g);
    if (A.is_zero() || B.is_zero())
        throw ConsistencyError("half-plane split reached a polynomial with symmetric roots");

    int d = cauchy_index(A, B);
    if (A.degree() > B.degree()) {
        const int s_pos = sgn(A.leading()) * sgn(B.leading());
        const int s_neg = ((A.degree() - B.degree()) % 2 == 0) ? s_pos : -s_pos;
        // arccot -> 0 at +inf ratio, -> pi at -inf ratio (in units of pi)
        const int phi_pos = s_pos > 0 ? 0 : 1;
        const int phi_neg = s_neg > 0 ? 0 : 1;
        d += phi_pos - phi_neg;
    }
    if ((n + d) % 2 != 0 || d > n || d < -n)
        throw ConsistencyError("argument-principle count is inconsistent with the degree");
    return {static_cast<std::size_t>((n + d) / 2), static_cast<std::size_t>((n - d) / 2)};
}

} // namespace

std::pair<Polynomial, Polynomial> line_restriction(const Polynomial& p, const Rational& a)
{
    return axis_restriction(shift(p, a));
}

RootReport line_split(const Polynomial& p, const Rational& a)
{
    if (p.is_zero()) throw InputError("line_split of the zero polynomial");
    RootReport report{a};
    const Polynomial q = shift(p, a);

    for (const auto& [f, mult] : squarefree_decomposition(q)) {
        auto [A, B] = axis_restriction(f);
        const Polynomial common = gcd(A, B);
        const std::size_t on = common.degree() > 0 ? count_real_roots(common) : 0;

        // Roots r with -conj(r) also a root: the on-line ones and mirror pairs.
        const Polynomial mirrored = gcd(f, negate_argument(f));
        const auto sym = static_cast<std::size_t>(std::max(mirrored.degree(), 0));
        if (on > sym || (sym - on) % 2 != 0)
            throw ConsistencyError("on-line root count disagrees with the mirror factor");
        const std::size_t pairs = (sym - on) / 2;

        const HalfPlaneCounts rest = half_plane_split(divide_exact(f, mirrored));
        report.on_count += mult * on;
        report.left_count += mult * (pairs + rest.left);
        report.right_count += mult * (pairs + rest.right);
    }

    if (report.total() != static_cast<std::size_t>(p.degree()))
        throw ConsistencyError("root counts do not sum to the degree");
    return report;
}

bool hurwitz_stable(const Polynomial& p)
{
    const RootReport r = line_split(p, Rational(0));
    return r.on_count == 0 && r.right_count == 0;
}

StripVerdict classify_strip(const Polynomial& p, int dim, bool with_approx)
{
    if (p.is_zero()) throw InputError("classify_strip of the zero polynomial");
    if (dim < 1) throw InputError("classify_strip needs dim >= 1");

    StripVerdict v;
    v.dim = dim;
    v.degree = p.degree();
    const auto n = static_cast<std::size_t>(v.degree);
    const Rational narrow_low = Rational(-1) + make_rational(1, dim + 1);
    const Rational narrow_high = -make_rational(1, dim + 1);

    v.at_minus_one = line_split(p, Rational(-1));
    v.at_zero = line_split(p, Rational(0));
    v.at_narrow_low = line_split(p, narrow_low);
    v.at_narrow_high = line_split(p, narrow_high);
    v.at_half = line_split(p, make_rational(-1, 2));

    v.cs = v.at_minus_one.right_count == n && v.at_zero.left_count == n;
    v.ncs = v.at_narrow_low.left_count == 0 && v.at_narrow_high.right_count == 0;
    v.cl = v.at_half.on_count == n;

    if (v.cl && !v.ncs) throw ConsistencyError("CL verdict without NCS");
    if (v.ncs && !v.cs) throw ConsistencyError("NCS verdict without CS");

    if (with_approx) v.approx_roots = approx_roots(p);
    return v;
}

std::vector<ApproxRoot> approx_roots(const Polynomial& p, double tol, int max_iterations)
{
    using cplx = std::complex<long double>;
    if (p.is_zero()) throw InputError("approx_roots of the zero polynomial");
    if (!(tol > 0)) throw InputError("approx_roots needs tol > 0");
    if (p.degree() <= 0) return {};

    std::size_t zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    const int n = p.degree() - static_cast<int>(zeros);

    std::vector<long double> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(zeros + static_cast<std::size_t>(k)).get_d();
    long double max_c = 0;
    for (const auto x : c) max_c = std::max(max_c, std::fabs(x));

    long double radius = 0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::fabs(c[static_cast<std::size_t>(k)] / c.back()));
    radius += 1;

    auto eval = [&](cplx z, cplx& value, cplx& deriv) {
        value = 0;
        deriv = 0;
        for (std::size_t k = c.size(); k-- > 0;) {
            deriv = deriv * z + value;
            value = value * z + c[k];
        }
    };
    auto scaled_residual = [&](cplx z) {
        cplx value = 0;
        long double scale = 0;
        const long double m = std::abs(z);
        for (std::size_t k = c.size(); k-- > 0;) {
            value = value * z + c[k];
            scale = scale * m + 1;
        }
        return static_cast<double>(std::abs(value) / (max_c * scale));
    };

    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const long double theta = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
    }

    const long double stall = 64 * std::numeric_limits<long double>::epsilon();
    bool settled = false;
    for (int iter = 0; iter < max_iterations && !settled; ++iter) {
        long double worst_step = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            cplx value, deriv;
            eval(z[k], value, deriv);
            if (value == cplx(0)) continue;
            cplx step;
            if (deriv == cplx(0)) {
                step = cplx(1e-3L * (1 + std::abs(z[k])), 1e-3L);
            } else {
                const cplx ratio = value / deriv;
                cplx repulsion = 0;
                for (std::size_t j = 0; j < z.size(); ++j) {
                    if (j != k) repulsion += 1.0L / (z[k] - z[j]);
                }
                step = ratio / (1.0L - ratio * repulsion);
            }
            z[k] -= step;
            worst_step = std::max(worst_step, std::abs(step) / std::max(1.0L, std::abs(z[k])));
        }
        settled = worst_step <= stall;
    }

    std::vector<ApproxRoot> out(zeros, ApproxRoot{{0.0, 0.0}, 0.0});
    out.reserve(zeros + z.size());
    for (const auto& r : z) {
        const double res = scaled_residual(r);
        if (!(res < tol))
            throw ConsistencyError("root approximation did not reach tolerance within " +
                                   std::to_string(max_iterations) + " iterations");
        std::complex<double> v(static_cast<double>(r.real()), static_cast<double>(r.imag()));
        if (std::fabs(v.imag()) < 1e-15 * std::max(1.0, std::abs(v))) v.imag(0.0);
        out.push_back({v, res});
    }
    std::sort(out.begin(), out.end(), [](const ApproxRoot& a, const ApproxRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

} // namespace canon
