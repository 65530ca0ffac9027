#ifndef ARBOR_RATIONAL_HPP
#define ARBOR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

namespace arbor {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

inline Integer factorial(int n) {
    Integer out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer out = 1;
    for (int i = 0; i < k; ++i) {
        out *= (n - i);
        out /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
    }
    return out;
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Deterministic 64-bit generator for the randomized suites. The standard
// distributions are implementation-defined, so draws are done by hand to keep
// output byte-identical across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform draw in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // small signed rational with numerator in [-max_num, max_num] \ {0}
    Rational small_rational(int max_num, int max_den) {
        long long num = static_cast<long long>(below(2 * max_num)) - max_num;
        if (num >= 0) ++num;
        long long den = static_cast<long long>(below(max_den)) + 1;
        return rat(num, den);
    }
};

}  // namespace arbor

#endif
