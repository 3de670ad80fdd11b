#include "dmod/field.hpp"

#include "dmod/error.hpp"

namespace dmod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept { return a * b % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) noexcept {
    std::uint64_t result = 1 % p;
    base %= p;
    while (e != 0) {
        if (e & 1U) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        e >>= 1U;
    }
    return result;
}

std::uint64_t reduce_big(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Domain Domain::prime(std::uint64_t p) {
    if (p > max_modulus) throw Error(ErrorCode::not_prime, "modulus " + std::to_string(p) + " exceeds 2^32-1");
    if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
    return Domain(p);
}

std::string Domain::name() const { return is_rational() ? "Q" : "F_" + std::to_string(p_); }

void require_same_domain(const Domain& a, const Domain& b) {
    if (!(a == b)) throw Error(ErrorCode::domain_mismatch, a.name() + " vs " + b.name());
}

FieldElem::FieldElem(Domain d, std::int64_t value) : dom_(d) {
    if (d.is_prime_field()) {
        const auto p = static_cast<std::int64_t>(d.characteristic());
        std::int64_t r = value % p;
        if (r < 0) r += p;
        res_ = static_cast<std::uint64_t>(r);
    } else {
        q_ = value;
    }
}

FieldElem::FieldElem(Domain d, const BigInt& value) : dom_(d) {
    if (d.is_prime_field())
        res_ = reduce_big(value, d.characteristic());
    else
        q_ = Rational(value);
}

FieldElem::FieldElem(Domain d, const Rational& value) : dom_(d) {
    if (d.is_rational()) {
        q_ = value;
        return;
    }
    const std::uint64_t p = d.characteristic();
    const std::uint64_t den = reduce_big(boost::multiprecision::denominator(value), p);
    if (den == 0) throw Error(ErrorCode::zero_inverse, "denominator divisible by " + std::to_string(p));
    res_ = mulmod(reduce_big(boost::multiprecision::numerator(value), p), powmod(den, p - 2, p), p);
}

bool FieldElem::is_zero() const noexcept { return dom_.is_prime_field() ? res_ == 0 : q_ == 0; }

bool FieldElem::is_one() const noexcept {
    return dom_.is_prime_field() ? res_ == 1 % dom_.characteristic() : q_ == 1;
}

bool FieldElem::is_negative() const noexcept { return dom_.is_rational() && q_ < 0; }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    if (dom_.is_prime_field())
        r.res_ = res_ == 0 ? 0 : dom_.characteristic() - res_;
    else
        r.q_ = -q_;
    return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    require_same_domain(dom_, rhs.dom_);
    if (dom_.is_prime_field()) {
        res_ += rhs.res_;
        if (res_ >= dom_.characteristic()) res_ -= dom_.characteristic();
    } else {
        q_ += rhs.q_;
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    require_same_domain(dom_, rhs.dom_);
    if (dom_.is_prime_field())
        res_ = res_ >= rhs.res_ ? res_ - rhs.res_ : res_ + dom_.characteristic() - rhs.res_;
    else
        q_ -= rhs.q_;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
    require_same_domain(dom_, rhs.dom_);
    if (dom_.is_prime_field())
        res_ = mulmod(res_, rhs.res_, dom_.characteristic());
    else
        q_ *= rhs.q_;
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) { return *this *= rhs.inv(); }

FieldElem FieldElem::inv() const {
    if (is_zero()) throw Error(ErrorCode::zero_inverse, "inverse of zero in " + dom_.name());
    FieldElem r = *this;
    if (dom_.is_prime_field())
        r.res_ = powmod(res_, dom_.characteristic() - 2, dom_.characteristic());
    else
        r.q_ = 1 / q_;
    return r;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    FieldElem result = one(dom_);
    FieldElem base = *this;
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

std::string FieldElem::to_string() const {
    if (dom_.is_prime_field()) return std::to_string(res_);
    return q_.str();
}

bool operator==(const FieldElem& a, const FieldElem& b) noexcept {
    if (!(a.dom_ == b.dom_)) return false;
    return a.dom_.is_prime_field() ? a.res_ == b.res_ : a.q_ == b.q_;
}

FieldElem field_inv(const FieldElem& a) { return a.inv(); }

FieldElem parse_coefficient(const std::string& text, Domain d) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return FieldElem(d, BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorCode::zero_inverse, "zero denominator in '" + text + "'");
        return FieldElem(d, Rational(num, den));
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e) != nullptr) throw;
        throw ParseError(0, "bad coefficient '" + text + "'");
    }
}

}  // namespace dmod
