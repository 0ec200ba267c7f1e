// Exact rational arithmetic for thresholds, supports and bounds.
//
// Every comparison in this library is an integer cross-multiplication;
// nothing is ever converted to floating point except for display.

#ifndef RULEBASIS_RATIONAL_HPP
#define RULEBASIS_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rulebasis {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Non-negative rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    // Accepts "3/20", "0.15", "1", "0.1%", "5%". Decimal and percent forms
    // are converted exactly (0.15 -> 15/100, 0.1% -> 1/1000), then reduced.
    static Rational parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    std::string str() const;  // "num/den", or "num" when den == 1

    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    std::int64_t num_, den_;
};

// A support count over a fixed transaction total. Deliberately kept
// unreduced: equality and ordering between supports of one dataset are
// plain integer comparisons on `count`.
struct Support {
    std::uint32_t count = 0;
    std::uint32_t n = 0;

    std::string str() const;  // "count/n"

    friend bool operator==(const Support& a, const Support& b) {
        return a.count == b.count && a.n == b.n;
    }
    friend bool operator!=(const Support& a, const Support& b) { return !(a == b); }
};

// sign of (a.count/a.n - r), exact.
int compare(const Support& a, const Rational& r);

// sign of (a/n - b/n) for two supports over possibly different totals.
int compare(const Support& a, const Support& b);

// sign of (g * a - b) where a and b are counts over the same total.
int compare_scaled(const Rational& g, std::uint64_t a, std::uint64_t b);

// One of 0, a support fraction, or infinity. The sentinels are kept out of
// the fraction domain so that they can never collide with a real support.
class Bound {
public:
    enum class Kind { zero, finite, infinite };

    static Bound zero() { return Bound(Kind::zero, 0); }
    static Bound finite(std::uint32_t count) { return Bound(Kind::finite, count); }
    static Bound infinite() { return Bound(Kind::infinite, 0); }

    Bound() : kind_(Kind::zero), count_(0) {}

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::zero; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_infinite() const { return kind_ == Kind::infinite; }

    // Count of the finite fraction; calling it on 0/infinity is a logic error.
    std::uint32_t count() const;

    std::string str(std::uint32_t n) const;  // "0", "count/n" or "inf"

    friend bool operator==(const Bound& a, const Bound& b) {
        return a.kind_ == b.kind_ && a.count_ == b.count_;
    }
    friend bool operator!=(const Bound& a, const Bound& b) { return !(a == b); }

private:
    Bound(Kind k, std::uint32_t c) : kind_(k), count_(c) {}
    Kind kind_;
    std::uint32_t count_;
};

// Comparisons between bounds over the same transaction total.
// Zero is below every fraction, infinity above every fraction.
int compare(const Bound& a, const Bound& b);

// sign of (g * a - b) for bounds over the same total. g > 0 is required, so
// g * zero = zero and g * infinity = infinity.
int compare_scaled(const Rational& g, const Bound& a, const Bound& b);

// sign of (g * a - b) where b is a plain count over the same total.
int compare_scaled(const Rational& g, const Bound& a, std::uint64_t b);

}  // namespace rulebasis

#endif
