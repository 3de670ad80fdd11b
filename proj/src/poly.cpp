#include "dmod/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dmod/error.hpp"

namespace dmod {

std::uint64_t total_degree(const Exponent& e) noexcept {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool divides(const Exponent& a, const Exponent& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponent exponent_add(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponent exponent_sub(const Exponent& b, const Exponent& a) {
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

bool coprime(const Exponent& a, const Exponent& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

bool GrevlexDescending::operator()(const Exponent& a, const Exponent& b) const noexcept {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// ---- MonomialOrder ---------------------------------------------------------

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {}

MonomialOrder MonomialOrder::from_name(std::string_view name, std::vector<std::size_t> priority) {
    if (name == "grevlex") return MonomialOrder(OrderKind::grevlex, std::move(priority));
    if (name == "lex") return MonomialOrder(OrderKind::lex, std::move(priority));
    if (name == "local" || name == "local-degree-anti")
        return MonomialOrder(OrderKind::local_degree_anti, std::move(priority));
    throw Error(ErrorCode::invalid_argument, "unknown monomial order '" + std::string(name) + "'");
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::local_degree_anti: return "local-degree-anti";
    }
    return "?";
}

void MonomialOrder::validate(std::size_t nvars) const {
    if (priority_.empty()) return;
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(nvars);
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    if (sorted != expected) throw Error(ErrorCode::invalid_argument, "variable priority is not a permutation");
}

int MonomialOrder::compare_grevlex(const Exponent& a, const Exponent& b) const noexcept {
    for (std::size_t r = a.size(); r-- > 0;) {
        const auto v = var(r);
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const noexcept {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    switch (kind_) {
        case OrderKind::grevlex:
            if (da != db) return da < db ? -1 : 1;
            return compare_grevlex(a, b);
        case OrderKind::lex:
            for (std::size_t r = 0; r < a.size(); ++r) {
                const auto v = var(r);
                if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
            }
            return 0;
        case OrderKind::local_degree_anti:
            if (da != db) return da < db ? 1 : -1;
            return compare_grevlex(a, b);
    }
    return 0;
}

// ---- MPoly -----------------------------------------------------------------

MPoly MPoly::constant(std::size_t nvars, const FieldElem& c) {
    MPoly r(nvars, c.domain());
    r.add_term(Exponent(nvars, 0), c);
    return r;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index, Domain d) {
    if (index >= nvars) throw Error(ErrorCode::index_out_of_range, "variable index " + std::to_string(index));
    Exponent e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), FieldElem::one(d));
}

MPoly MPoly::monomial(Exponent e, const FieldElem& c) {
    MPoly r(e.size(), c.domain());
    r.add_term(e, c);
    return r;
}

bool MPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && dmod::total_degree(terms_.begin()->first) == 0);
}

FieldElem MPoly::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem::zero(dom_) : it->second;
}

void MPoly::check_compatible(const MPoly& rhs) const {
    require_same_domain(dom_, rhs.dom_);
    if (nvars_ != rhs.nvars_)
        throw Error(ErrorCode::domain_mismatch,
                    "variable counts differ: " + std::to_string(nvars_) + " vs " + std::to_string(rhs.nvars_));
}

void MPoly::add_term(const Exponent& e, const FieldElem& c) {
    if (e.size() != nvars_) throw Error(ErrorCode::invalid_argument, "exponent length does not match nvars");
    require_same_domain(dom_, c.domain());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MPoly::sub_scaled_shift(const FieldElem& c, const Exponent& shift, const MPoly& g) {
    check_compatible(g);
    const FieldElem neg = -c;
    for (const auto& [e, coef] : g.terms_) add_term(exponent_add(e, shift), neg * coef);
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_compatible(b);
    MPoly r(a.nvars_, a.dom_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(exponent_add(ea, eb), ca * cb);
    return r;
}

MPoly MPoly::scaled(const FieldElem& c) const {
    require_same_domain(dom_, c.domain());
    MPoly r(nvars_, dom_);
    if (c.is_zero()) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, coef * c);
    return r;
}

MPoly MPoly::shifted(const Exponent& shift) const {
    MPoly r(nvars_, dom_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(exponent_add(e, shift), c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = constant(nvars_, FieldElem::one(dom_));
    MPoly base = *this;
    while (e != 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

MPoly MPoly::derivative(std::size_t i) const {
    if (i >= nvars_)
        throw Error(ErrorCode::index_out_of_range,
                    "derivative index " + std::to_string(i) + " with " + std::to_string(nvars_) + " variables");
    MPoly r(nvars_, dom_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponent d = e;
        --d[i];
        r.add_term(d, c * FieldElem(dom_, static_cast<std::int64_t>(e[i])));
    }
    return r;
}

FieldElem MPoly::eval(std::span<const FieldElem> point) const {
    if (point.size() != nvars_) throw Error(ErrorCode::invalid_argument, "point length does not match nvars");
    for (const auto& x : point) require_same_domain(dom_, x.domain());
    FieldElem sum = FieldElem::zero(dom_);
    for (const auto& [e, c] : terms_) {
        FieldElem t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0) t *= point[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

std::pair<Exponent, FieldElem> MPoly::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "leading term of the zero polynomial");
    if (order.kind() == OrderKind::grevlex && order.priority().empty()) return *terms_.begin();
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (order.less(best->first, it->first)) best = it;
    return *best;
}

std::uint64_t MPoly::total_degree() const noexcept {
    // grevlex-descending storage puts a top-degree term first
    return terms_.empty() ? 0 : dmod::total_degree(terms_.begin()->first);
}

MPoly MPoly::truncated(std::uint64_t m) const {
    MPoly r(nvars_, dom_);
    for (const auto& [e, c] : terms_)
        if (dmod::total_degree(e) < m) r.terms_.emplace_hint(r.terms_.end(), e, c);
    return r;
}

MPoly MPoly::in_domain(Domain d) const {
    MPoly r(nvars_, d);
    for (const auto& [e, c] : terms_) {
        if (dom_.is_rational())
            r.add_term(e, FieldElem(d, c.rational()));
        else
            r.add_term(e, FieldElem(d, BigInt(c.residue())));
    }
    return r;
}

std::string MPoly::to_string(const std::vector<std::string>& vars) const {
    if (vars.size() != nvars_) throw Error(ErrorCode::invalid_argument, "variable names do not match nvars");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.is_negative();
        const std::string mag = negative ? (-c).to_string() : c.to_string();
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars[i];
            if (e[i] > 1) mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag;
        else if (mag == "1")
            out += mono;
        else
            out += mag + '*' + mono;
    }
    return out;
}

bool operator==(const MPoly& a, const MPoly& b) noexcept {
    return a.nvars_ == b.nvars_ && a.dom_ == b.dom_ && a.terms_ == b.terms_;
}

MPoly poly_derivative(const MPoly& f, std::size_t i) { return f.derivative(i); }

FieldElem poly_eval(const MPoly& f, std::span<const FieldElem> point) { return f.eval(point); }

// ---- text form -------------------------------------------------------------

namespace {

class TermLexer {
   public:
    explicit TermLexer(std::string_view text) : text_(text) {}

    std::vector<RawTerm> run() {
        std::vector<RawTerm> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
        }
        terms.push_back(term(negative));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail("expected '+', '-' or '*'");
            get();
            terms.push_back(term(c == '-'));
        }
        return terms;
    }

   private:
    RawTerm term(bool negative) {
        RawTerm t;
        t.negative = negative;
        skip_ws();
        if (at_end()) fail("expected a term");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coefficient = digits();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                t.coefficient += '/' + digits();
            }
        } else {
            t.factors.push_back(factor());
        }
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            get();
            t.factors.push_back(factor());
        }
        return t;
    }

    RawFactor factor() {
        skip_ws();
        RawFactor f;
        f.position = pos_;
        const char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a variable name");
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) f.name += get();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
            const std::size_t at = pos_;
            const std::string d = digits();
            if (d.size() > 9) throw ParseError(at, "exponent too large");
            f.power = static_cast<std::uint32_t>(std::stoul(d));
        }
        return f;
    }

    std::string digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        return d;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    char get() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        const std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
        throw ParseError(pos_, what + ", found " + found);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::pair<std::string, std::uint64_t> split_name(const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    if (k == s.size() || s.size() - k > 18) return {s, 0};
    return {s.substr(0, k), std::stoull(s.substr(k)) + 1};
}

}  // namespace

std::vector<RawTerm> parse_terms(std::string_view text) { return TermLexer(text).run(); }

MPoly poly_parse(std::string_view text, const std::vector<std::string>& vars, Domain d) {
    const std::size_t n = vars.size();
    MPoly result(n, d);
    for (const RawTerm& t : parse_terms(text)) {
        FieldElem c = t.coefficient.empty() ? FieldElem::one(d) : parse_coefficient(t.coefficient, d);
        if (t.negative) c = -c;
        Exponent e(n, 0);
        for (const RawFactor& f : t.factors) {
            const auto it = std::find(vars.begin(), vars.end(), f.name);
            if (it == vars.end())
                throw Error(ErrorCode::unknown_variable,
                            "'" + f.name + "' at position " + std::to_string(f.position));
            e[static_cast<std::size_t>(it - vars.begin())] += f.power;
        }
        result.add_term(e, c);
    }
    return result;
}

std::vector<MPoly> poly_parse_list(std::string_view text, const std::vector<std::string>& vars, Domain d,
                                   char separator) {
    std::vector<MPoly> out;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(separator, start);
        const auto piece = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        try {
            out.push_back(poly_parse(piece, vars, d));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), e.detail());
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

bool natural_less(const std::string& a, const std::string& b) {
    const auto [sa, na] = split_name(a);
    const auto [sb, nb] = split_name(b);
    if (sa != sb) return sa < sb;
    if (na != nb) return na < nb;
    return a < b;
}

std::vector<std::string> collect_identifiers(std::string_view text) {
    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
            std::string name;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                name += text[i++];
            if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
        } else {
            ++i;
        }
    }
    std::sort(names.begin(), names.end(), natural_less);
    return names;
}

// ---- JSON form -------------------------------------------------------------

nlohmann::json poly_to_json(const MPoly& f, const std::vector<std::string>& vars) {
    if (vars.size() != f.nvars()) throw Error(ErrorCode::invalid_argument, "variable names do not match nvars");
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({{"c", c.to_string()}, {"e", e}});
    return {{"vars", vars}, {"terms", terms}};
}

MPoly poly_from_json(const nlohmann::json& j, Domain d) {
    try {
        const auto vars = j.at("vars").get<std::vector<std::string>>();
        MPoly f(vars.size(), d);
        for (const auto& t : j.at("terms")) {
            auto e = t.at("e").get<Exponent>();
            if (e.size() != vars.size()) throw Error(ErrorCode::invalid_argument, "exponent length mismatch");
            f.add_term(e, parse_coefficient(t.at("c").get<std::string>(), d));
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::invalid_argument, std::string("malformed polynomial JSON: ") + e.what());
    }
}

}  // namespace dmod
