#ifndef DIARYEMBED_RATIONAL_HPP
#define DIARYEMBED_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace diaryembed {

using Rational = boost::rational<std::int64_t>;

// Smallest integer >= q.
inline std::int64_t ceil_at_least(const Rational& q) {
    std::int64_t d = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() > 0) ++d;
    return d;
}

// Smallest integer strictly greater than q.
inline std::int64_t ceil_strict(const Rational& q) {
    std::int64_t c = ceil_at_least(q);
    return (Rational(c) == q) ? c + 1 : c;
}

inline std::int64_t floor_of(const Rational& q) {
    std::int64_t d = q.numerator() / q.denominator();
    if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --d;
    return d;
}

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace diaryembed

#endif
