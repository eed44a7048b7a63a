#include "canon/ratpoly.hpp"

#include <algorithm>
#include <sstream>

namespace canon {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear_root(const Rational& r) { return Polynomial({Rational(-r), Rational(1)}); }

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots)
{
    Polynomial p = constant(1);
    for (const auto& r : roots) p *= linear_root(r);
    return p;
}

void Polynomial::normalize()
{
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Polynomial::leading() const
{
    if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

int Polynomial::sign_at_infinity(bool positive) const
{
    if (coeffs_.empty()) return 0;
    int s = sgn(coeffs_.back());
    if (!positive && degree() % 2 == 1) s = -s;
    return s;
}

Polynomial& Polynomial::operator+=(const Polynomial& q)
{
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] += q.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q)
{
    if (q.coeffs_.size() > coeffs_.size()) coeffs_.resize(q.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) coeffs_[i] -= q.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q)
{
    if (coeffs_.empty() || q.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * q.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Polynomial operator-(const Polynomial& p)
{
    std::vector<Rational> v = p.coeffs();
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string(const char* var) const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1 && k > 0;
        if (!unit) os << to_display_string(mag);
        if (k > 0) {
            if (!unit) os << " ";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial sub(const Polynomial& p, const Polynomial& q) { return p - q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial scale(const Polynomial& p, const Rational& c)
{
    std::vector<Rational> v = p.coeffs();
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial power(const Polynomial& p, unsigned k)
{
    Polynomial out = Polynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) out *= p;
    return out;
}

Rational evaluate(const Polynomial& p, const Rational& x) { return p.evaluate(x); }

Polynomial shift(const Polynomial& p, const Rational& a)
{
    // Horner in the ring: acc = acc * (z + a) + c_k
    const auto& c = p.coeffs();
    std::vector<Rational> acc;
    for (std::size_t k = c.size(); k-- > 0;) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i];
            next[i] += acc[i] * a;
        }
        next[0] += c[k];
        acc = std::move(next);
    }
    return Polynomial(std::move(acc));
}

Polynomial negate_argument(const Polynomial& p)
{
    std::vector<Rational> v = p.coeffs();
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return Polynomial(std::move(v));
}

Polynomial reflect(const Polynomial& p)
{
    // p(-1 - z) = p(-(z + 1))
    return shift(negate_argument(p), Rational(1));
}

Polynomial rescale_argument(const Polynomial& p, const Rational& c)
{
    std::vector<Rational> v = p.coeffs();
    Rational f(1);
    for (auto& x : v) {
        x *= f;
        f *= c;
    }
    return Polynomial(std::move(v));
}

Polynomial derivative(const Polynomial& p)
{
    const auto& c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rational> v(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) v[k - 1] = c[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(v));
}

DivResult divmod(const Polynomial& p, const Polynomial& d)
{
    if (d.is_zero()) throw InputError("polynomial division by zero");
    std::vector<Rational> rem = p.coeffs();
    const auto& dc = d.coeffs();
    const int dd = d.degree();
    if (p.degree() < dd) return {Polynomial(), p};
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - dd + 1), Rational(0));
    const Rational& lead = dc.back();
    for (int k = p.degree(); k >= dd; --k) {
        const Rational& top = rem[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        Rational f = top / lead;
        quo[static_cast<std::size_t>(k - dd)] = f;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * dc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& d)
{
    auto [q, r] = divmod(p, d);
    if (!r.is_zero()) throw ConsistencyError("inexact polynomial division");
    return q;
}

Polynomial make_monic(const Polynomial& p)
{
    if (p.is_zero()) return p;
    return scale(p, 1 / p.leading());
}

Polynomial primitive_part(const Polynomial& p)
{
    if (p.is_zero()) return p;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : p.coeffs()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    return scale(p, make_rational(den_lcm, num_gcd));
}

Polynomial gcd(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() && q.is_zero()) throw InputError("gcd of two zero polynomials");
    Polynomial a = primitive_part(p), b = primitive_part(q);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = primitive_part(divmod(a, b).remainder);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(1);
    return make_monic(divide_exact(p, gcd(p, derivative(p))));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p)
{
    if (p.is_zero()) throw InputError("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.degree() == 0) return out;

    const Polynomial dp = derivative(p);
    const Polynomial a0 = gcd(p, dp);
    Polynomial b = divide_exact(p, a0);
    Polynomial c = divide_exact(dp, a0);
    Polynomial d = c - derivative(b);
    unsigned mult = 1;
    while (b.degree() > 0) {
        Polynomial a = gcd(b, d);
        if (a.degree() > 0) out.push_back({make_monic(a), mult});
        b = divide_exact(b, a);
        c = divide_exact(d, a);
        d = c - derivative(b);
        ++mult;
    }
    return out;
}

Interval Interval::make(Rational lo, Rational hi, bool lo_closed, bool hi_closed)
{
    if (lo > hi) throw InputError("interval with low > high");
    return Interval{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

std::vector<Polynomial> signed_remainder_sequence(const Polynomial& f0, const Polynomial& f1)
{
    std::vector<Polynomial> chain;
    if (f0.is_zero()) return chain;
    chain.push_back(primitive_part(f0));
    if (f1.is_zero()) return chain;
    chain.push_back(primitive_part(f1));
    while (true) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        Polynomial r = divmod(a, b).remainder;
        if (r.is_zero()) break;
        chain.push_back(primitive_part(-r));
    }
    return chain;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p)
{
    Polynomial sq = squarefree_part(p);
    return signed_remainder_sequence(sq, derivative(sq));
}

namespace {

int count_variations(const std::vector<int>& signs)
{
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x)
{
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& f : chain) s.push_back(f.sign_at(x));
    return count_variations(s);
}

int sign_variations_at_infinity(const std::vector<Polynomial>& chain, bool positive)
{
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& f : chain) s.push_back(f.sign_at_infinity(positive));
    return count_variations(s);
}

std::size_t count_real_roots(const Polynomial& p)
{
    if (p.is_zero()) throw InputError("real-root count of the zero polynomial");
    auto chain = sturm_chain(p);
    return static_cast<std::size_t>(sign_variations_at_infinity(chain, false) -
                                    sign_variations_at_infinity(chain, true));
}

std::size_t count_real_roots(const Polynomial& p, const Interval& range)
{
    if (p.is_zero()) throw InputError("real-root count of the zero polynomial");
    if (range.low == range.high) {
        return (range.low_closed && range.high_closed && p.sign_at(range.low) == 0) ? 1 : 0;
    }
    auto chain = sturm_chain(p);
    // Sturm counts roots in the half-open (low, high].
    long n = sign_variations(chain, range.low) - sign_variations(chain, range.high);
    if (range.low_closed && p.sign_at(range.low) == 0) ++n;
    if (!range.high_closed && p.sign_at(range.high) == 0) --n;
    return static_cast<std::size_t>(n);
}

int cauchy_index(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero()) throw InputError("Cauchy index with zero denominator");
    if (num.is_zero()) return 0;
    auto chain = signed_remainder_sequence(den, num);
    return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

} // namespace canon
