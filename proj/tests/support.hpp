#pragma once

#include <random>
#include <vector>

#include "quasitoric/field.hpp"

namespace quasitoric::testing {

inline constexpr std::uint64_t kSeed = 20240517;

inline Field sqrt_field(long n, long lo, long hi)
{
    return RealAlgebraicField::create({Rational(-n), Rational(0), Rational(1)}, Rational(lo), Rational(hi));
}

inline Rational random_rational(std::mt19937_64& rng, int span = 9, int max_den = 6)
{
    std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline FieldElement random_element(std::mt19937_64& rng, const Field& f, int span = 9)
{
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f->degree(); ++i)
        c.push_back(random_rational(rng, span));
    return FieldElement(f, c);
}

inline long random_int(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

} // namespace quasitoric::testing
