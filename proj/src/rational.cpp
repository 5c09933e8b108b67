#include "abelrat/rational.hpp"

#include "abelrat/errors.hpp"

#include <cctype>

namespace abelrat {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    auto slash = s.find('/');
    std::size_t num_end = slash == std::string::npos ? s.size() : slash;
    if (!all_digits(s, start, num_end))
        throw ParseError("malformed rational '" + s + "'", 1, 1);
    Integer num(s.substr(start, num_end - start));
    if (s[0] == '-') num = -num;
    Integer den = 1;
    if (slash != std::string::npos) {
        if (!all_digits(s, slash + 1, s.size()))
            throw ParseError("malformed rational '" + s + "'", 1, static_cast<int>(slash) + 2);
        den = Integer(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'", 1, static_cast<int>(slash) + 2);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

int sign(const Rational& q) { return sgn(q); }

Rational frac(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroInverse();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow_int(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0) throw ZeroInverse();
        return pow_int(Rational(1 / q), -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (lo > hi) return simplest_between(hi, lo);
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return Rational(-simplest_between(Rational(-hi), Rational(-lo)));
    Integer fl = floor_of(lo);
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational inner = simplest_between(Rational(1 / (hi - fl)), Rational(1 / (lo - fl)));
    return Rational(fl + 1 / inner);
}

double approx(const Rational& q) { return q.get_d(); }

}  // namespace abelrat
