#ifndef DWSTAR_GAUSSIAN_RATIONAL_HPP
#define DWSTAR_GAUSSIAN_RATIONAL_HPP

#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace dwstar
{

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer &num, const Integer &den);

// "n" or "n/d".
std::string to_string(const Rational &q);

// Exact complex number re + im*i over the rationals. Both parts are always
// canonical (lowest terms, positive denominator).
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re, Rational im = Rational(0));

    static GaussianRational i();

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    // re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }
    // Throws std::domain_error for zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational &operator+=(const GaussianRational &o);
    GaussianRational &operator-=(const GaussianRational &o);
    GaussianRational &operator*=(const GaussianRational &o);
    GaussianRational &operator/=(const GaussianRational &o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }

    friend bool operator==(const GaussianRational &a, const GaussianRational &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // (-i)^n and i^n without repeated multiplication.
    static GaussianRational i_pow(long n);

    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream &operator<<(std::ostream &os, const GaussianRational &z);

// Binomial coefficient C(n, k) for n, k >= 0 (zero when k > n).
Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

} // namespace dwstar

#endif
