#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qfib/errors.hpp"

namespace qfib {

using BigInt = mpz_class;

/// Dense univariate polynomial in q over arbitrary-precision integers.
///
/// Coefficients are stored in ascending degree; the representation is kept
/// normalized (no trailing zeros), so the zero polynomial is the empty
/// coefficient vector and equality is plain vector equality. Values are
/// immutable after construction; all operations return fresh polynomials.
class IntPoly {
  public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    IntPoly(std::initializer_list<long> coeffs) {
        coeffs_.reserve(coeffs.size());
        for (long c : coeffs) coeffs_.emplace_back(c);
        normalize();
    }

    static IntPoly constant(BigInt c) {
        std::vector<BigInt> v;
        if (c != 0) v.push_back(std::move(c));
        return IntPoly(std::move(v), already_normalized{});
    }

    static IntPoly monomial(BigInt coeff, std::size_t exponent) {
        if (coeff == 0) return IntPoly{};
        std::vector<BigInt> v(exponent + 1);
        v.back() = std::move(coeff);
        return IntPoly(std::move(v), already_normalized{});
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    std::span<const BigInt> coeffs() const { return coeffs_; }

    /// Coefficient of q^i; zero beyond the stored range.
    const BigInt& coeff(std::size_t i) const {
        static const BigInt zero{0};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const BigInt& leading() const {
        if (coeffs_.empty()) throw ZeroPolynomial{};
        return coeffs_.back();
    }

    bool operator==(const IntPoly& o) const = default;

    IntPoly operator-() const {
        std::vector<BigInt> v(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
        return IntPoly(std::move(v), already_normalized{});
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(v));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(v));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                           b.coeffs_[j].get_mpz_t());
        }
        return IntPoly(std::move(v), already_normalized{});
    }

    friend IntPoly operator*(const BigInt& c, const IntPoly& p) {
        if (c == 0) return IntPoly{};
        std::vector<BigInt> v(p.coeffs_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs_[i];
        return IntPoly(std::move(v), already_normalized{});
    }

    /// this * q^e.
    IntPoly shifted(std::size_t e) const {
        if (is_zero()) return IntPoly{};
        std::vector<BigInt> v(coeffs_.size() + e);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[e + i] = coeffs_[i];
        return IntPoly(std::move(v), already_normalized{});
    }

    struct DivRem;

    /// Euclidean division by a divisor with leading coefficient +1 or -1.
    /// Exact over the integers: *this = d * quotient + remainder with
    /// deg(remainder) < deg(d).
    DivRem divrem(const IntPoly& d) const;
    bool divisible_by(const IntPoly& d) const;

    /// Horner evaluation at an integer point.
    BigInt evaluate_int(const BigInt& x) const {
        BigInt acc{0};
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc *= x;
            acc += coeffs_[i];
        }
        return acc;
    }

    /// Coefficient-wise least nonnegative residue mod m (m >= 2).
    IntPoly reduce_coeffs_mod(unsigned long m) const {
        if (m < 2) throw DomainError("coefficient modulus must be >= 2");
        std::vector<BigInt> v(coeffs_.size());
        const BigInt mod{m};
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            mpz_mod(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), mod.get_mpz_t());
        return IntPoly(std::move(v));
    }

    bool all_coeffs_even() const {
        for (const auto& c : coeffs_)
            if (mpz_odd_p(c.get_mpz_t())) return false;
        return true;
    }

    /// JSON-array text form: ascending coefficients, bare integers when they
    /// fit in 64 bits, decimal strings otherwise. The zero polynomial is "[]".
    std::string serialize() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ',';
            if (coeffs_[i].fits_slong_p()) {
                out += coeffs_[i].get_str();
            } else {
                out += '"';
                out += coeffs_[i].get_str();
                out += '"';
            }
        }
        out += ']';
        return out;
    }

    /// Inverse of serialize; also accepts whitespace and quoted entries for
    /// small values. Throws ParseError with the offending position.
    static IntPoly parse(std::string_view text) {
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto expect = [&](char c) {
            if (pos >= text.size() || text[pos] != c)
                throw ParseError(std::string("expected '") + c + "'", pos);
            ++pos;
        };
        auto read_integer = [&]() -> BigInt {
            std::size_t start = pos;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
            std::size_t digits_start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == digits_start) throw ParseError("expected integer", start);
            return BigInt(std::string(text.substr(start, pos - start)), 10);
        };

        skip_ws();
        expect('[');
        std::vector<BigInt> coeffs;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                skip_ws();
                if (pos < text.size() && text[pos] == '"') {
                    ++pos;
                    coeffs.push_back(read_integer());
                    expect('"');
                } else {
                    coeffs.push_back(read_integer());
                }
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                expect(']');
                break;
            }
        }
        skip_ws();
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        return IntPoly(std::move(coeffs));
    }

    /// Human-readable form: "1 + q^2", terms ascending, explicit coefficients
    /// only when != 1.
    std::string pretty() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            const bool neg = c < 0;
            BigInt a = abs(c);
            if (first) {
                if (neg) out += '-';
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            if (a != 1 || i == 0) out += a.get_str();
            if (i >= 1) {
                out += 'q';
                if (i >= 2) out += '^' + std::to_string(i);
            }
        }
        return out;
    }

  private:
    struct already_normalized {};
    IntPoly(std::vector<BigInt> coeffs, already_normalized) : coeffs_(std::move(coeffs)) {}

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// a + b * q^e in one pass; the workhorse of the recurrence loops.
inline IntPoly add_shifted(const IntPoly& a, const IntPoly& b, std::size_t e) {
    if (b.is_zero()) return a;
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<BigInt> v(std::max(ac.size(), bc.size() + e));
    for (std::size_t i = 0; i < ac.size(); ++i) v[i] = ac[i];
    for (std::size_t i = 0; i < bc.size(); ++i)
        mpz_add(v[e + i].get_mpz_t(), v[e + i].get_mpz_t(), bc[i].get_mpz_t());
    return IntPoly(std::move(v));
}

struct IntPoly::DivRem {
    IntPoly quotient;
    IntPoly remainder;
};

inline IntPoly::DivRem IntPoly::divrem(const IntPoly& d) const {
    if (d.is_zero()) throw DivisionByZero{};
    const BigInt& lead = d.coeffs_.back();
    if (lead != 1 && lead != -1) throw NonUnitLeadingCoefficient{};
    const bool lead_pos = lead == 1;
    const std::size_t dd = d.coeffs_.size() - 1;
    if (coeffs_.size() <= dd) return {IntPoly{}, *this};

    std::vector<BigInt> rem = coeffs_;
    std::vector<BigInt> quo(coeffs_.size() - dd);
    for (std::size_t i = quo.size(); i-- > 0;) {
        BigInt t = lead_pos ? rem[i + dd] : -rem[i + dd];
        if (t != 0) {
            for (std::size_t j = 0; j < dd; ++j)
                mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), d.coeffs_[j].get_mpz_t());
        }
        rem[i + dd] = 0;
        quo[i] = std::move(t);
    }
    rem.resize(dd);
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

inline bool IntPoly::divisible_by(const IntPoly& d) const {
    return divrem(d).remainder.is_zero();
}

}  // namespace qfib
