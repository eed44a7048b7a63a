#ifndef CANON_RATPOLY_HPP
#define CANON_RATPOLY_HPP

#include "canon/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace canon {

/**
 * Univariate polynomial with exact rational coefficients, stored in
 * ascending degree order.
 *
 * The coefficient vector never carries trailing (leading-degree) zeros, so the
 * zero polynomial is the empty vector and degree() == size() - 1 == -1.
 * Equality is therefore plain coefficient-wise comparison.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// The monomial c * z^k.
    static Polynomial monomial(const Rational& c, std::size_t k);
    /// (z - r)
    static Polynomial linear_root(const Rational& r);
    /// Monic polynomial with the given roots (with repetition).
    static Polynomial from_roots(const std::vector<Rational>& roots);

    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Coefficient of z^k; zero past the degree.
    [[nodiscard]] Rational coeff(std::size_t k) const;
    [[nodiscard]] const Rational& leading() const;

    [[nodiscard]] Rational evaluate(const Rational& x) const;
    /// Sign of p(x) without materialising the full value when cheap.
    [[nodiscard]] int sign_at(const Rational& x) const;
    /// Sign as x -> +inf (positive == true) or -inf.
    [[nodiscard]] int sign_at_infinity(bool positive) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(Polynomial p, const Polynomial& q) { return p *= q; }
    friend Polynomial operator-(const Polynomial& p);

    /// Human-readable form in z, e.g. "9/2 z^2 + 9/2 z + 1".
    [[nodiscard]] std::string to_string(const char* var = "z") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Rational& c);
Polynomial power(const Polynomial& p, unsigned k);

Rational evaluate(const Polynomial& p, const Rational& x);

/// result(z) = p(z + a); shift(p, -n) gives p(z - n).
Polynomial shift(const Polynomial& p, const Rational& a);
/// result(z) = p(-1 - z).
Polynomial reflect(const Polynomial& p);
/// result(z) = p(-z).
Polynomial negate_argument(const Polynomial& p);
/// result(z) = p(c * z).
Polynomial rescale_argument(const Polynomial& p, const Rational& c);

Polynomial derivative(const Polynomial& p);

struct DivResult {
    Polynomial quotient;
    Polynomial remainder;
};
/// Euclidean division; throws InputError on a zero divisor.
DivResult divmod(const Polynomial& p, const Polynomial& d);
/// Exact division; throws ConsistencyError when the remainder is nonzero.
Polynomial divide_exact(const Polynomial& p, const Polynomial& d);

/// Monic greatest common divisor. Throws InputError when both are zero.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
Polynomial make_monic(const Polynomial& p);
/// Positive rational multiple with coprime integer coefficients; sign of the
/// leading coefficient is preserved.
Polynomial primitive_part(const Polynomial& p);

/// p / gcd(p, p'): same distinct roots, each simple. Monic.
Polynomial squarefree_part(const Polynomial& p);

struct SquarefreeFactor {
    Polynomial factor;  // monic, squarefree, pairwise coprime
    unsigned multiplicity;
};
/// Yun's decomposition p = lc * prod factor_k^k. Requires p nonzero.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p);

/// Real interval with independently open/closed ends; low <= high.
struct Interval {
    Rational low;
    Rational high;
    bool low_closed = false;
    bool high_closed = false;

    static Interval open(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), false, false); }
    static Interval closed(Rational lo, Rational hi) { return make(std::move(lo), std::move(hi), true, true); }
    static Interval make(Rational lo, Rational hi, bool lo_closed, bool hi_closed);
};

/// Sturm chain of the squarefree part of p, with integer content removed at
/// every step (signs only matter).
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Generalised Sturm remainder sequence f0, f1, f_{k+1} = -rem(f_{k-1}, f_k).
std::vector<Polynomial> signed_remainder_sequence(const Polynomial& f0, const Polynomial& f1);

/// Sign changes of a chain at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<Polynomial>& chain, bool positive);

/// Distinct real roots on the whole line. Throws InputError for p == 0.
std::size_t count_real_roots(const Polynomial& p);
/// Distinct real roots inside the interval, honoring endpoint flags.
std::size_t count_real_roots(const Polynomial& p, const Interval& range);

/// Cauchy index of num/den over the whole real line (jumps -inf -> +inf count +1).
int cauchy_index(const Polynomial& num, const Polynomial& den);

} // namespace canon

#endif
