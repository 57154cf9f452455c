#pragma once

#include <random>
#include <vector>

#include "fibstab/fibstab.hpp"

namespace testutil {

using namespace fibstab;

inline Rational rand_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 8) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational rand_positive_rational(std::mt19937_64& rng, long max_num = 20, long max_den = 8) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline ContractedClass rand_class(std::mt19937_64& rng, long max_num = 10, long max_den = 4) {
    return ContractedClass{rand_rational(rng, max_num, max_den), rand_rational(rng, max_num, max_den),
                           rand_rational(rng, max_num, max_den), rand_rational(rng, max_num, max_den),
                           rand_rational(rng, max_num, max_den), rand_rational(rng, max_num, max_den)};
}

// A class in the integral lattice Z^3 + (1/2)Z^2 + (1/6)Z.
inline ContractedClass rand_integral_class(std::mt19937_64& rng, long bound = 6) {
    std::uniform_int_distribution<long> z(-bound, bound);
    return ContractedClass{Rational(z(rng)),    Rational(z(rng)),    Rational(z(rng)),
                           Rational(z(rng), 2), Rational(z(rng), 2), Rational(z(rng), 6)};
}

inline FibredGeometry rand_projective_bundle(std::mt19937_64& rng, long min_e = -3, long max_e = 3) {
    std::uniform_int_distribution<long> g(0, 3);
    std::uniform_int_distribution<long> e(min_e, max_e);
    return FibredGeometry::projective_bundle(g(rng), e(rng));
}

inline FibredGeometry rand_geometry(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 1);
    if (pick(rng) == 0) return rand_projective_bundle(rng);
    std::uniform_int_distribution<long> g(0, 3);
    return FibredGeometry::generic(g(rng), rand_rational(rng, 6, 3),
                                   rand_positive_rational(rng, 6, 3));
}

inline ContractedClass oh_class(const FibredGeometry& geom) {
    return line_bundle_class(Rational(1), Rational(0), geom);
}

} // namespace testutil
