#include "rulebasis/rational.hpp"

#include <cctype>
#include <numeric>

namespace rulebasis {

namespace {

using i128 = __int128;

[[noreturn]] void bad(std::string_view text, const char* why) {
    throw ParseError("invalid rational '" + std::string(text) + "': " + why);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    if (num < 0) throw std::invalid_argument("rational must be non-negative");
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    bool percent = false;
    if (!s.empty() && s.back() == '%') {
        percent = true;
        s.remove_suffix(1);
    }
    if (s.empty()) bad(text, "empty");

    const auto digits = [&](std::string_view d) -> std::int64_t {
        if (d.empty()) bad(text, "missing digits");
        if (d.size() > 18) bad(text, "too many digits");
        std::int64_t v = 0;
        for (char c : d) {
            if (!std::isdigit(static_cast<unsigned char>(c))) bad(text, "not a number");
            v = v * 10 + (c - '0');
        }
        return v;
    };

    std::int64_t num, den;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = digits(s.substr(0, slash));
        den = digits(s.substr(slash + 1));
        if (den == 0) bad(text, "zero denominator");
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view intpart = s.substr(0, dot);
        const std::string_view frac = s.substr(dot + 1);
        if (intpart.empty() && frac.empty()) bad(text, "missing digits");
        if (frac.size() > 15) bad(text, "too many decimal places");
        den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        num = (intpart.empty() ? 0 : digits(intpart)) * den + (frac.empty() ? 0 : digits(frac));
    } else {
        num = digits(s);
        den = 1;
    }
    if (percent) den *= 100;
    return Rational(num, den);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator*(const Rational& o) const {
    // cross-reduce first so int64 stays comfortable for every input we accept
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    return Rational((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("division by zero rational");
    const std::int64_t g1 = std::gcd(num_, o.num_);
    const std::int64_t g2 = std::gcd(o.den_, den_);
    return Rational((num_ / g1) * (o.den_ / g2), (den_ / g2) * (o.num_ / g1));
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

std::string Support::str() const {
    return std::to_string(count) + "/" + std::to_string(n);
}

int compare(const Support& a, const Rational& r) {
    const i128 lhs = static_cast<i128>(a.count) * r.den();
    const i128 rhs = static_cast<i128>(r.num()) * a.n;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

int compare(const Support& a, const Support& b) {
    const i128 lhs = static_cast<i128>(a.count) * b.n;
    const i128 rhs = static_cast<i128>(b.count) * a.n;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

int compare_scaled(const Rational& g, std::uint64_t a, std::uint64_t b) {
    const i128 lhs = static_cast<i128>(g.num()) * a;
    const i128 rhs = static_cast<i128>(g.den()) * b;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

std::uint32_t Bound::count() const {
    if (kind_ != Kind::finite) throw std::logic_error("count() on a non-finite bound");
    return count_;
}

std::string Bound::str(std::uint32_t n) const {
    switch (kind_) {
        case Kind::zero: return "0";
        case Kind::infinite: return "inf";
        case Kind::finite: return std::to_string(count_) + "/" + std::to_string(n);
    }
    return "?";
}

int compare(const Bound& a, const Bound& b) {
    const auto rank = [](const Bound& x) {
        return x.is_zero() ? 0 : x.is_finite() ? 1 : 2;
    };
    if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
    if (!a.is_finite()) return 0;
    return a.count() < b.count() ? -1 : a.count() > b.count() ? 1 : 0;
}

int compare_scaled(const Rational& g, const Bound& a, const Bound& b) {
    if (a.is_infinite()) return b.is_infinite() ? 0 : 1;
    if (b.is_infinite()) return -1;
    const std::uint64_t ac = a.is_zero() ? 0 : a.count();
    const std::uint64_t bc = b.is_zero() ? 0 : b.count();
    // g * zero compares as zero: g > 0 throughout this library
    const i128 lhs = static_cast<i128>(g.num()) * ac;
    const i128 rhs = static_cast<i128>(g.den()) * bc;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

int compare_scaled(const Rational& g, const Bound& a, std::uint64_t b) {
    if (a.is_infinite()) return 1;
    const std::uint64_t ac = a.is_zero() ? 0 : a.count();
    const i128 lhs = static_cast<i128>(g.num()) * ac;
    const i128 rhs = static_cast<i128>(g.den()) * b;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

}  // namespace rulebasis
