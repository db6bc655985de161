#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "quasitoric/error.hpp"

namespace quasitoric {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Parses "p", "-p" or "p/q" (optional surrounding spaces). The result is
/// canonicalized, so "4/6" reads as 2/3.
inline Rational parse_rational(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        raise(ErrorKind::ParseError, "empty rational literal");
    if (s.front() == '+')
        s.erase(s.begin());
    auto slash = s.find('/');
    auto valid_int = [](std::string_view t) {
        if (t.empty())
            return false;
        std::size_t i = (t.front() == '-') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-')
        raise(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
    Rational r{Integer(num), Integer(den)};
    if (r.get_den() == 0)
        raise(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer floor_of(const Rational& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Integer lcm_of(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd_of(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace quasitoric
