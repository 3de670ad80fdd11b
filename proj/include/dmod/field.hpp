#pragma once

// Exact coefficient domains: prime fields Z/pZ and the rationals.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest modulus accepted; keeps residue products inside 64 bits.
inline constexpr std::uint64_t max_modulus = (std::uint64_t{1} << 32) - 1;

bool is_prime(std::uint64_t n) noexcept;

/// Either Z/pZ for a validated prime p, or Q (characteristic 0).
class Domain {
   public:
    /// Q.
    Domain() noexcept = default;

    /// Throws NotPrime unless p is prime (deterministic trial division).
    static Domain prime(std::uint64_t p);
    static Domain rationals() noexcept { return Domain{}; }

    bool is_prime_field() const noexcept { return p_ != 0; }
    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }

    /// "F_7" or "Q".
    std::string name() const;

    friend bool operator==(const Domain&, const Domain&) = default;

   private:
    explicit Domain(std::uint64_t p) noexcept : p_(p) {}
    std::uint64_t p_ = 0;
};

/// Throws DomainMismatch when a and b differ.
void require_same_domain(const Domain& a, const Domain& b);

class FieldElem {
   public:
    /// Zero of Q.
    FieldElem() = default;
    FieldElem(Domain d, std::int64_t value);
    FieldElem(Domain d, const BigInt& value);

    /// Over F_p the denominator is inverted; ZeroInverse if p divides it.
    FieldElem(Domain d, const Rational& value);

    static FieldElem zero(Domain d) { return FieldElem(d, std::int64_t{0}); }
    static FieldElem one(Domain d) { return FieldElem(d, std::int64_t{1}); }

    const Domain& domain() const noexcept { return dom_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p); only meaningful over a prime field.
    std::uint64_t residue() const noexcept { return res_; }
    /// Lowest-terms value; only meaningful over Q.
    const Rational& rational() const noexcept { return q_; }

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

    /// Multiplicative inverse; ZeroInverse on zero.
    FieldElem inv() const;
    FieldElem pow(std::uint64_t e) const;

    /// True for negative rationals; never for residues.
    bool is_negative() const noexcept;

    /// "3", "-4/3". Residues print in [0, p).
    std::string to_string() const;

    friend bool operator==(const FieldElem& a, const FieldElem& b) noexcept;

   private:
    Domain dom_;
    std::uint64_t res_ = 0;
    Rational q_;
};

FieldElem field_inv(const FieldElem& a);

/// Parses an integer or integer/integer literal into the domain.
FieldElem parse_coefficient(const std::string& text, Domain d);

}  // namespace dmod
