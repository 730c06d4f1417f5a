#include <dwstar/gaussian_rational.hpp>

#include <ostream>
#include <stdexcept>

namespace dwstar
{

Rational make_rational(const Integer &num, const Integer &den)
{
    if (sgn(den) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::i()
{
    return {Rational(0), Rational(1)};
}

GaussianRational GaussianRational::i_pow(long n)
{
    switch (((n % 4) + 4) % 4) {
        case 0:
            return {Rational(1)};
        case 1:
            return {Rational(0), Rational(1)};
        case 2:
            return {Rational(-1)};
        default:
            return {Rational(0), Rational(-1)};
    }
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    const Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o)
{
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0) {
        return dwstar::to_string(re_);
    }
    if (sgn(re_) == 0) {
        return dwstar::to_string(im_) + "*i";
    }
    return "(" + dwstar::to_string(re_) + (sgn(im_) > 0 ? " + " : " - ") + dwstar::to_string(abs(im_)) + "*i)";
}

std::ostream &operator<<(std::ostream &os, const GaussianRational &z)
{
    return os << z.to_string();
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace dwstar
