#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace ihss {

// All arithmetic in this library is exact. Coordinates and pairings are
// small rationals; dimensions are unbounded integers.
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigRat to_bigrat(const Rat& r) {
    return BigRat(BigInt(r.numerator()), BigInt(r.denominator()));
}

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BigInt binomial(long long n, long long k);

}  // namespace ihss
