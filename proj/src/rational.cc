#include <wred/error.hh>
#include <wred/rational.hh>

using namespace wred;

using std::string;

auto wred::make_rational(long num, unsigned long den) -> Rational
{
    if (den == 0)
        throw InputError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

auto wred::pow2_inverse(unsigned long e) -> Rational
{
    mpz_class den = 1;
    den <<= e;
    return Rational(mpz_class(1), den);
}

auto wred::parse_rational(const string & s) -> Rational
{
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw InputError("not a rational: '" + s + "'");
    if (r.get_den() == 0)
        throw InputError("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

auto wred::to_string(const Rational & r) -> string
{
    return r.get_str();
}
