#pragma once

// Exact scalar arithmetic over the two supported ground fields: the rationals
// and prime fields F_p. Everything downstream is templated on one of the two
// field types; FieldSpec is the runtime descriptor used by file formats.

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "zadkit/error.hpp"

namespace zadkit {

using Rational = boost::multiprecision::mpq_rational;

struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    std::int64_t p = 0; // prime, PrimeField only

    bool operator==(const FieldSpec&) const = default;

    std::string describe() const {
        return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p);
    }
};

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Field of rational numbers with arbitrary-precision entries.
class Rationals {
  public:
    using Elem = Rational;

    static constexpr bool is_finite = false;

    std::int64_t characteristic() const { return 0; }
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(std::int64_t v) const { return Elem(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) fail(Errc::InvalidArgument, "division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string to_string(const Elem& a) const { return a.str(); }

    Elem parse(const std::string& s) const {
        try {
            using boost::multiprecision::mpz_int;
            auto slash = s.find('/');
            mpz_int num(slash == std::string::npos ? s : s.substr(0, slash));
            mpz_int den(slash == std::string::npos ? "1" : s.substr(slash + 1));
            if (den == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
            return Elem(num) / Elem(den); // division canonicalizes
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(Errc::ParseError, "bad rational scalar '" + s + "'");
        }
    }

    FieldSpec spec() const { return {FieldSpec::Kind::Rationals, 0}; }
    bool operator==(const Rationals&) const { return true; }
};

// Prime field F_p with canonical residues in [0, p). p is capped so that
// products of residues fit in a signed 64-bit intermediate.
class PrimeField {
  public:
    using Elem = std::int64_t;

    static constexpr bool is_finite = true;
    static constexpr std::int64_t max_p = (std::int64_t{1} << 31) - 1;

    PrimeField() : p_(2) {}

    explicit PrimeField(std::int64_t p) : p_(p) {
        if (!is_prime(p)) fail(Errc::InvalidArgument, "field modulus " + std::to_string(p) + " is not prime");
        if (p > max_p) fail(Errc::InvalidArgument, "field modulus too large");
    }

    std::int64_t characteristic() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(std::int64_t v) const {
        Elem r = v % p_;
        return r < 0 ? r + p_ : r;
    }
    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) fail(Errc::InvalidArgument, "division by zero");
        return pow(a, static_cast<std::uint64_t>(p_ - 2));
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string to_string(Elem a) const { return std::to_string(a); }

    Elem parse(const std::string& s) const {
        std::size_t i = 0;
        bool negative = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            negative = s[i] == '-';
            ++i;
        }
        if (i == s.size()) fail(Errc::ParseError, "bad prime-field scalar '" + s + "'");
        Elem r = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') fail(Errc::ParseError, "bad prime-field scalar '" + s + "'");
            r = (r * 10 + (s[i] - '0')) % p_;
        }
        return negative ? neg(r) : r;
    }

    FieldSpec spec() const { return {FieldSpec::Kind::PrimeField, p_}; }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    std::int64_t p_;
};

template <class F>
concept FieldType = requires(const F f, const typename F::Elem a, const typename F::Elem b) {
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.add(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.mul(a, b) } -> std::convertible_to<typename F::Elem>;
    { f.inv(a) } -> std::convertible_to<typename F::Elem>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.characteristic() } -> std::convertible_to<std::int64_t>;
};

template <FieldType F>
void require_same_field(const F& a, const F& b) {
    if (!(a == b)) fail(Errc::FieldMismatch, "mixed field specifications");
}

// Coordinate vector over F.
template <FieldType F>
using Vec = std::vector<typename F::Elem>;

} // namespace zadkit
