#pragma once

// Sparse multivariate polynomials over a coefficient Domain.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmod/field.hpp"
#include "json.hpp"

namespace dmod {

using Exponent = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponent& e) noexcept;
/// a | b as monomials.
bool divides(const Exponent& a, const Exponent& b) noexcept;
Exponent exponent_lcm(const Exponent& a, const Exponent& b);
Exponent exponent_add(const Exponent& a, const Exponent& b);
/// b - a; requires divides(a, b).
Exponent exponent_sub(const Exponent& b, const Exponent& a);
bool coprime(const Exponent& a, const Exponent& b) noexcept;

/// Canonical storage order: graded reverse lexicographic, descending.
struct GrevlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

enum class OrderKind { grevlex, lex, local_degree_anti };

/// A multiplicative total order on exponent vectors. The priority list names
/// variables from most to least significant; empty means natural order.
class MonomialOrder {
   public:
    explicit MonomialOrder(OrderKind kind = OrderKind::grevlex, std::vector<std::size_t> priority = {});

    /// "grevlex", "lex" or "local"; InvalidArgument otherwise.
    static MonomialOrder from_name(std::string_view name, std::vector<std::size_t> priority = {});

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<std::size_t>& priority() const noexcept { return priority_; }
    std::string name() const;

    /// InvalidArgument unless the priority list is empty or a permutation of 0..nvars-1.
    void validate(std::size_t nvars) const;

    /// Well-ordering (1 is the smallest monomial).
    bool is_global() const noexcept { return kind_ != OrderKind::local_degree_anti; }

    /// Negative, zero or positive as a <, =, > b.
    int compare(const Exponent& a, const Exponent& b) const noexcept;
    bool less(const Exponent& a, const Exponent& b) const noexcept { return compare(a, b) < 0; }

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    std::size_t var(std::size_t rank) const noexcept { return priority_.empty() ? rank : priority_[rank]; }
    int compare_grevlex(const Exponent& a, const Exponent& b) const noexcept;

    OrderKind kind_;
    std::vector<std::size_t> priority_;
};

class MPoly {
   public:
    using TermMap = std::map<Exponent, FieldElem, GrevlexDescending>;

    MPoly(std::size_t nvars, Domain d) : nvars_(nvars), dom_(d) {}

    static MPoly constant(std::size_t nvars, const FieldElem& c);
    static MPoly variable(std::size_t nvars, std::size_t index, Domain d);
    static MPoly monomial(Exponent e, const FieldElem& c);

    std::size_t nvars() const noexcept { return nvars_; }
    const Domain& domain() const noexcept { return dom_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    /// Coefficient of x^e (zero when absent).
    FieldElem coefficient(const Exponent& e) const;

    /// Adds c*x^e, dropping the term if it cancels.
    void add_term(const Exponent& e, const FieldElem& c);

    /// this -= c * x^shift * g, in place.
    void sub_scaled_shift(const FieldElem& c, const Exponent& shift, const MPoly& g);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly scaled(const FieldElem& c) const;
    MPoly shifted(const Exponent& e) const;
    MPoly pow(unsigned e) const;

    /// Formal partial derivative in variable i (coefficients in the domain,
    /// so exponents divisible by p vanish). IndexOutOfRange if i >= nvars.
    MPoly derivative(std::size_t i) const;

    /// DomainMismatch on a point from another domain, InvalidArgument on length.
    FieldElem eval(std::span<const FieldElem> point) const;

    /// Leading monomial and coefficient; requires a nonzero polynomial.
    std::pair<Exponent, FieldElem> leading_term(const MonomialOrder& order) const;
    /// Maximal total degree; 0 for the zero polynomial.
    std::uint64_t total_degree() const noexcept;

    /// Drops every term of total degree >= m.
    MPoly truncated(std::uint64_t m) const;

    /// Reinterprets coefficients in another domain: Q -> F_p reduces (ZeroInverse if
    /// a denominator vanishes), F_p -> Q lifts residues to [0, p).
    MPoly in_domain(Domain d) const;

    /// Canonical text form, terms in grevlex-descending order.
    std::string to_string(const std::vector<std::string>& vars) const;

    friend bool operator==(const MPoly& a, const MPoly& b) noexcept;

   private:
    void check_compatible(const MPoly& rhs) const;

    std::size_t nvars_;
    Domain dom_;
    TermMap terms_;
};

MPoly poly_derivative(const MPoly& f, std::size_t i);
FieldElem poly_eval(const MPoly& f, std::span<const FieldElem> point);

// ---- text form -------------------------------------------------------------

struct RawFactor {
    std::string name;
    std::uint32_t power = 1;
    std::size_t position = 0;
};

struct RawTerm {
    bool negative = false;
    std::string coefficient;  // empty for an implicit 1
    std::vector<RawFactor> factors;
};

/// Tokenizes and checks the shared term grammar:
///   sum := ['+'|'-'] term (('+'|'-') term)*
///   term := coeff ('*' factor)* | factor ('*' factor)*
///   factor := name ('^' nat)?      coeff := integer | integer '/' integer
/// Throws ParseError with the offending position.
std::vector<RawTerm> parse_terms(std::string_view text);

/// Parses a polynomial in the given variables. UnknownVariable for a name
/// not in vars; ParseError on malformed text.
MPoly poly_parse(std::string_view text, const std::vector<std::string>& vars, Domain d);

/// Splits "a; b; c" and parses each piece.
std::vector<MPoly> poly_parse_list(std::string_view text, const std::vector<std::string>& vars, Domain d,
                                   char separator = ';');

/// Distinct identifiers in the text, in natural order (x < y, x2 < x10).
std::vector<std::string> collect_identifiers(std::string_view text);

/// Natural-order comparison used for variable inference.
bool natural_less(const std::string& a, const std::string& b);

// ---- JSON form -------------------------------------------------------------

/// {"vars": [...], "terms": [{"c": "coeff", "e": [..]}]}
nlohmann::json poly_to_json(const MPoly& f, const std::vector<std::string>& vars);
MPoly poly_from_json(const nlohmann::json& j, Domain d);

}  // namespace dmod
