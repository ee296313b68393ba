#include "cliffq/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cliffq {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) { v_ += o.v_; return *this; }
Rational& Rational::operator-=(const Rational& o) { v_ -= o.v_; return *this; }
Rational& Rational::operator*=(const Rational& o) { v_ *= o.v_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

std::string Rational::to_string() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational reduce(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::invalid_argument("reduce: zero denominator");
    mpq_class v(n, d);
    v.canonicalize();
    return Rational(v);
}

Rational reduce(long n, long d) { return reduce(mpz_class(n), mpz_class(d)); }

Rational measure_ratio(long stick_count_ab, long stick_count_cd) {
    if (stick_count_ab < 1) throw std::invalid_argument("measure_ratio: stick count must be >= 1");
    long q = stick_count_cd < 0 ? -stick_count_cd : stick_count_cd;
    return reduce(q, stick_count_ab);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r.is_negative()) throw std::invalid_argument("exact_sqrt: negative input");
    const mpz_class& n = r.num();
    const mpz_class& d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return reduce(rn, rd);
}

}  // namespace cliffq
