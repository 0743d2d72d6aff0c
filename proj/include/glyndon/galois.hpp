#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "compare.hpp"
#include "errors.hpp"
#include "eventually_periodic.hpp"

namespace glyndon {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A closed interval with exact rational endpoints. No floating point.
struct RationalInterval {
    BigRational lo;
    BigRational hi;

    RationalInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw invariant_violation("interval endpoints out of order");
    }

    BigRational width() const { return hi - lo; }
    bool contains(const RationalInterval& inner) const {
        return lo <= inner.lo && inner.hi <= hi;
    }
    bool strictly_contains(const RationalInterval& inner) const {
        return lo < inner.lo && inner.hi < hi;
    }
};

/// An eventually periodic word over an alphabet of positive-integer tokens.
/// Such words are continued fractions: letter n is the n-th partial
/// quotient, so every letter must be >= 1.
class DigitWord {
public:
    explicit DigitWord(EventuallyPeriodicWord word) : word_(std::move(word)) {
        const auto& ab = *word_.alphabet();
        values_.reserve(ab.size());
        for (symbol_id id = 0; id < ab.size(); ++id)
            values_.push_back(parse_digit(ab.symbol(id)));
    }

    const EventuallyPeriodicWord& word() const { return word_; }
    const AlphabetPtr& alphabet() const { return word_.alphabet(); }

    std::uint64_t digit_at(std::size_t n) const { return values_[word_.letter_at(n)]; }

    std::vector<std::uint64_t> digits_prefix(std::size_t k) const {
        std::vector<std::uint64_t> out;
        out.reserve(k);
        for (std::size_t n = 1; n <= k; ++n) out.push_back(digit_at(n));
        return out;
    }

private:
    static std::uint64_t parse_digit(const std::string& token) {
        if (token.empty()) throw domain_error("digit token must be nonempty");
        std::uint64_t value = 0;
        for (char c : token) {
            if (c < '0' || c > '9')
                throw domain_error("digit alphabet token is not a number: '" + token + "'");
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
            if (value > (std::uint64_t{1} << 32))
                throw domain_error("digit token too large: '" + token + "'");
        }
        if (value == 0)
            throw domain_error("continued fraction letters must be >= 1, got '" + token + "'");
        return value;
    }

    EventuallyPeriodicWord word_;
    std::vector<std::uint64_t> values_;
};

/// The exact hull of the continued-fraction values of all infinite positive
/// continuations of the prefix. Writing the value as a Moebius map of the
/// tail z = x_n + 1/(x_{n+1} + ...), z ranges over the open interval
/// (x_n, x_n + 1), so the endpoints are the finite continued fractions with
/// last term x_n and x_n + 1; which one is the lower end depends on the
/// parity of the depth. Actual word values lie strictly inside.
inline RationalInterval phi_interval(const std::vector<std::uint64_t>& prefix) {
    if (prefix.empty()) throw domain_error("phi interval requires a nonempty prefix");
    for (std::uint64_t d : prefix)
        if (d == 0) throw domain_error("continued fraction letters must be >= 1");
    BigInt p1 = 1, p2 = 0;  // numerator convergents h_{k-1}, h_{k-2}
    BigInt q1 = 0, q2 = 1;  // denominator convergents
    for (std::size_t t = 0; t + 1 < prefix.size(); ++t) {
        BigInt a = prefix[t];
        BigInt p = a * p1 + p2;
        BigInt q = a * q1 + q2;
        p2 = std::move(p1);
        q2 = std::move(q1);
        p1 = std::move(p);
        q1 = std::move(q);
    }
    auto value = [&](BigInt t) {
        BigInt num = t * p1 + p2;
        BigInt den = t * q1 + q2;
        return BigRational(num, den);
    };
    BigRational a = value(BigInt(prefix.back()));
    BigRational b = value(BigInt(prefix.back()) + 1);
    return a <= b ? RationalInterval(std::move(a), std::move(b))
                  : RationalInterval(std::move(b), std::move(a));
}

/// Order two digit words by their continued-fraction values. Equality is
/// letterwise (decided on the finite equality bound); distinct words deepen
/// both prefix intervals, one letter past the first mismatch and on, until
/// the intervals separate. Hulls may share a rational endpoint, but word
/// values are irrational and interior, so touching hulls still decide.
inline Ordering compare_via_phi(const DigitWord& a, const DigitWord& b) {
    require_same_alphabet(a.alphabet(), b.alphabet());
    const std::size_t bound = detail::equality_bound(a.word(), b.word());
    std::size_t mismatch = 0;
    for (std::size_t i = 1; i <= bound; ++i) {
        if (a.word().letter_at(i) != b.word().letter_at(i)) {
            mismatch = i;
            break;
        }
    }
    if (mismatch == 0) return Ordering::EQ;
    for (std::size_t depth = mismatch + 1; depth <= mismatch + 8; ++depth) {
        RationalInterval ia = phi_interval(a.digits_prefix(depth));
        RationalInterval ib = phi_interval(b.digits_prefix(depth));
        if (ia.hi <= ib.lo) return Ordering::LT;
        if (ib.hi <= ia.lo) return Ordering::GT;
    }
    throw invariant_violation("phi intervals failed to separate distinct words; this is a bug");
}

}  // namespace glyndon
