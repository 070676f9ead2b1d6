#ifndef WRED_RATIONAL_HH
#define WRED_RATIONAL_HH 1

#include <gmpxx.h>

#include <string>

namespace wred
{
    using Rational = mpq_class;

    auto make_rational(long num, unsigned long den) -> Rational;
    auto pow2_inverse(unsigned long e) -> Rational;
    auto parse_rational(const std::string & s) -> Rational;
    auto to_string(const Rational & r) -> std::string;
}

#endif
