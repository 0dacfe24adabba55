#include "waringlab/scalar.hpp"

#include <cctype>

namespace waringlab {

std::string to_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw Error("malformed rational: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0) throw Error("zero denominator in rational: '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Scalar Scalar::inverse() const
{
    Rational n = norm2();
    if (sgn(n) == 0) throw std::domain_error("division by zero scalar");
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_real()) {
        if (sgn(o.re_) == 0) throw std::domain_error("division by zero scalar");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b)
{
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const
{
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return im_.get_str() + "i";
    std::string im = im_.get_str();
    return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im + "i";
}

Scalar pow(Scalar base, unsigned e)
{
    Scalar result(1);
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace waringlab
