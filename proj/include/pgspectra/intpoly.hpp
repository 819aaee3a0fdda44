#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgspectra {

/// Dense univariate polynomial over arbitrary-precision integers.
/// Coefficients ascending by degree, highest coefficient nonzero;
/// the zero polynomial stores no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long v) { if (v) c_.emplace_back(v); }
    explicit IntPoly(mpz_class v) { if (v != 0) c_.push_back(std::move(v)); }
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly x() { return IntPoly(std::vector<mpz_class>{0, 1}); }
    /// c0 + c1*x
    static IntPoly linear(mpz_class c0, mpz_class c1) {
        return IntPoly(std::vector<mpz_class>{std::move(c0), std::move(c1)});
    }
    /// (x + c)^e via binomial coefficients.
    static IntPoly binomial_power(const mpz_class& c, unsigned e);

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const mpz_class& leading() const { return c_.back(); }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const std::vector<mpz_class>& coefficients() const { return c_; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    IntPoly operator*(const mpz_class& s) const;
    bool operator==(const IntPoly&) const = default;

    IntPoly pow(unsigned e) const;
    IntPoly derivative() const;
    /// gcd of coefficients, nonnegative; 0 for the zero polynomial.
    mpz_class content() const;
    IntPoly primitive_part() const;

    /// Exact quotient; throws std::domain_error when *this != q*d for integer q.
    IntPoly divexact(const IntPoly& d) const;
    std::optional<IntPoly> try_divexact(const IntPoly& d) const;

    mpz_class eval(const mpz_class& t) const;
    /// Sign of the value at a rational point: -1, 0 or +1.
    int sign_at(const mpq_class& t) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

/// Largest k with (x - r)^k dividing f (f nonzero).
unsigned root_multiplicity(const IntPoly& f, const mpz_class& r);
/// Largest k with g^k dividing f (deg g >= 1, f nonzero).
unsigned factor_multiplicity(const IntPoly& f, const IntPoly& g);

/// Primitive gcd with positive leading coefficient (subresultant remainder sequence).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// f = constant * product factors[i].first ^ factors[i].second, the factors
/// primitive, square-free, pairwise coprime, multiplicities strictly increasing.
struct SquarefreeDecomposition {
    mpz_class constant = 1;
    std::vector<std::pair<IntPoly, unsigned>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const IntPoly& f);

/// Dense polynomial with rational coefficients; support for exact elimination
/// and interpolation intermediates.
class QPoly {
public:
    QPoly() = default;
    QPoly(long v) { if (v) c_.emplace_back(v); }
    explicit QPoly(mpq_class v) { if (v != 0) c_.push_back(std::move(v)); }
    explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit QPoly(const IntPoly& p);

    static QPoly x() { return QPoly(std::vector<mpq_class>{0, 1}); }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpq_class& operator[](std::size_t i) const { return c_[i]; }
    const std::vector<mpq_class>& coefficients() const { return c_; }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator*(const mpq_class& s) const;
    bool operator==(const QPoly&) const = default;

    /// Integer polynomial equal to this; throws std::domain_error if any
    /// coefficient has a nontrivial denominator.
    IntPoly to_intpoly() const;
    /// Scale by the lcm of denominators: returns (integer polynomial, scale).
    std::pair<IntPoly, mpz_class> clear_denominators() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

} // namespace pgspectra
