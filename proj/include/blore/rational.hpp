#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "blore/errors.hpp"

namespace blore {

/// Positive rational, kept in lowest terms.
struct Rational {
    long long num = 1;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (n <= 0 || d <= 0) throw std::invalid_argument("Rational: numerator and denominator must be positive");
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }

    bool operator==(const Rational&) const = default;
};

inline std::string to_string(const Rational& r) {
    return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        long long num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) throw parse_error("trailing junk in rational: " + text);
        long long den = 1;
        if (slash != std::string::npos) {
            den = std::stoll(text.substr(slash + 1), &used);
            if (used != text.size() - slash - 1) throw parse_error("trailing junk in rational: " + text);
        }
        if (num <= 0 || den <= 0) throw parse_error("rational must be positive: " + text);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational: " + text);
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range: " + text);
    }
}

}  // namespace blore
