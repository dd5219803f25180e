#include "ormod/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ormod {

namespace {

void require_same_space(const Poly& a, const Poly& b) {
    if (!same_space(a.space(), b.space()))
        fail(Errc::VarSpaceMismatch, "operands live in different variable spaces");
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    require_same_space(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_space(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_space(a, b);
    Poly r(a.vs_);
    const std::size_t n = a.vs_->size();
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Poly operator*(const Rat& c, const Poly& p) {
    Poly r(p.vs_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }

Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

Poly poly_pow(const Poly& a, std::int64_t s) {
    if (s < 0) fail(Errc::InvalidArgument, "negative polynomial power");
    Poly result = Poly::constant(a.space(), Rat(1));
    Poly base = a;
    while (s > 0) {
        if (s & 1) result = result * base;
        s >>= 1;
        if (s) base = base * base;
    }
    return result;
}

std::int64_t weighted_degree(const Poly& p) {
    if (p.is_zero()) fail(Errc::ZeroPolynomial, "degree of the zero polynomial");
    const VarSpace& vs = *p.space();
    auto it = p.terms().begin();
    std::int64_t d = it->first.weighted(vs);
    for (++it; it != p.terms().end(); ++it) {
        if (it->first.weighted(vs) != d)
            fail(Errc::NonHomogeneous, "polynomial is not homogeneous");
    }
    return d;
}

std::optional<std::int64_t> try_weighted_degree(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    const VarSpace& vs = *p.space();
    auto it = p.terms().begin();
    std::int64_t d = it->first.weighted(vs);
    for (++it; it != p.terms().end(); ++it) {
        if (it->first.weighted(vs) != d) return std::nullopt;
    }
    return d;
}

bool is_homogeneous(const Poly& p) {
    return p.is_zero() || try_weighted_degree(p).has_value();
}

Poly substitute_linear(const Poly& q, const QMatrix& A) {
    std::vector<std::size_t> vars(q.space()->size());
    for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
    if (A.n() != vars.size())
        fail(Errc::DimensionMismatch, "matrix size does not match variable count");
    return substitute_linear(q, A, vars);
}

Poly substitute_linear(const Poly& q, const QMatrix& A, const std::vector<std::size_t>& vars) {
    const VarSpacePtr& vs = q.space();
    const std::size_t n = vars.size();
    if (A.n() != n) fail(Errc::DimensionMismatch, "matrix size does not match substituted variables");
    std::vector<bool> touched(vs->size(), false);
    for (std::size_t i = 0; i < n; ++i) {
        if (vars[i] >= vs->size()) fail(Errc::DimensionMismatch, "substituted variable out of range");
        if (touched[vars[i]]) fail(Errc::DimensionMismatch, "substituted variable listed twice");
        touched[vars[i]] = true;
        if (vs->weight(vars[i]) != vs->weight(vars[0]))
            fail(Errc::DimensionMismatch, "substituted variables must share one weight");
    }

    // Images of the substituted variables.
    std::vector<Poly> image;
    image.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Poly img(vs);
        for (std::size_t j = 0; j < n; ++j) {
            if (A.at(i, j).is_zero()) continue;
            Monomial m(vs->size());
            m.exps[vars[j]] = 1;
            img.add_term(std::move(m), A.at(i, j));
        }
        image.push_back(std::move(img));
    }

    // Power cache shared across the terms of q: (variable slot, exponent) -> image^exponent.
    std::map<std::pair<std::size_t, std::int32_t>, Poly> powers;
    auto image_power = [&](std::size_t slot, std::int32_t e) -> const Poly& {
        auto key = std::make_pair(slot, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, poly_pow(image[slot], e)).first->second;
    };

    Poly result(vs);
    for (const auto& [m, c] : q.terms()) {
        Monomial fixed(vs->size());
        for (std::size_t i = 0; i < vs->size(); ++i)
            if (!touched[i]) fixed.exps[i] = m.exps[i];
        Poly term = Poly::monomial(vs, std::move(fixed), c);
        for (std::size_t slot = 0; slot < n; ++slot) {
            std::int32_t e = m.exps[vars[slot]];
            if (e == 0) continue;
            term = term * image_power(slot, e);
            if (term.is_zero()) break;
        }
        result += term;
    }
    return result;
}

Poly transport(const Poly& p, VarSpacePtr target) {
    const VarSpace& src = *p.space();
    if (target->size() != src.size()) fail(Errc::VarSpaceMismatch, "transport size mismatch");
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (target->weight(i) != src.weight(i))
            fail(Errc::VarSpaceMismatch, "transport weight mismatch");
    }
    Poly r(std::move(target));
    for (const auto& [m, c] : p.terms()) r.add_term(m, c);
    return r;
}

namespace detail {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::SyntaxError, what + " at position " + std::to_string(pos));
    }
};

std::string read_number(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
    if (c.pos == start) c.error("expected a number");
    return std::string(c.text.substr(start, c.pos - start));
}

Rat read_rational(Cursor& c) {
    bool neg = false;
    if (c.peek() == '-') {
        neg = true;
        ++c.pos;
    } else if (c.peek() == '+') {
        ++c.pos;
    }
    BigInt num(read_number(c));
    BigInt den(1);
    if (c.peek() == '/') {
        ++c.pos;
        den = BigInt(read_number(c));
        if (den == 0) c.error("zero denominator");
    }
    Rat r(num, den);
    return neg ? -r : r;
}

std::string read_name(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    if (c.pos >= c.text.size() || !std::isalpha(static_cast<unsigned char>(c.text[c.pos])))
        c.error("expected a variable name");
    ++c.pos;
    while (c.pos < c.text.size() &&
           (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) || c.text[c.pos] == '_'))
        ++c.pos;
    return std::string(c.text.substr(start, c.pos - start));
}

ParsedTerm read_term(Cursor& c) {
    ParsedTerm term;
    term.coeff = Rat(1);
    bool any_factor = false;
    while (true) {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            term.coeff *= read_rational(c);
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name = read_name(c);
            std::int64_t exp = 1;
            if (c.peek() == '^') {
                ++c.pos;
                if (c.peek() == '-') c.error("negative exponent");
                exp = std::stoll(read_number(c));
            }
            term.powers.emplace_back(std::move(name), exp);
        } else {
            c.error("expected a factor");
        }
        any_factor = true;
        if (c.peek() == '*') {
            ++c.pos;
            continue;
        }
        break;
    }
    if (!any_factor) c.error("empty term");
    return term;
}

}  // namespace

std::vector<ParsedTerm> parse_sum(std::string_view text) {
    Cursor c{text};
    std::vector<ParsedTerm> terms;
    if (c.done()) c.error("empty expression");
    bool negate = false;
    if (c.peek() == '-') {
        negate = true;
        ++c.pos;
    } else if (c.peek() == '+') {
        ++c.pos;
    }
    while (true) {
        ParsedTerm t = read_term(c);
        if (negate) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        if (c.done()) break;
        char ch = c.peek();
        if (ch == '+') {
            negate = false;
            ++c.pos;
        } else if (ch == '-') {
            negate = true;
            ++c.pos;
        } else {
            c.error("expected '+' or '-'");
        }
    }
    return terms;
}

std::string format_coeff_prefix(const Rat& c, bool has_factors, bool first) {
    std::string out;
    Rat a = c;
    bool neg = a.sign() < 0;
    if (neg) a = -a;
    if (first) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (!has_factors) {
        out += a.str();
    } else if (!a.is_one()) {
        out += a.str() + "*";
    }
    return out;
}

}  // namespace detail

Poly parse_poly(std::string_view text, VarSpacePtr vs) {
    Poly p(vs);
    for (const auto& term : detail::parse_sum(text)) {
        Monomial m(vs->size());
        for (const auto& [name, exp] : term.powers) {
            auto idx = vs->find(name);
            if (!idx) fail(Errc::UnknownVariable, "unknown variable '" + name + "'");
            m.exps[*idx] += static_cast<std::int32_t>(exp);
        }
        p.add_term(std::move(m), term.coeff);
    }
    return p;
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const VarSpace& vs = *p.space();
    std::string out;
    bool first = true;
    // Leading (graded-lex largest) term first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        bool has_factors = m.total() > 0;
        out += detail::format_coeff_prefix(it->second, has_factors, first);
        bool first_factor = true;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (!first_factor) out += "*";
            out += vs.name(i);
            if (m.exps[i] != 1) out += "^" + std::to_string(m.exps[i]);
            first_factor = false;
        }
        first = false;
    }
    return out;
}

}  // namespace ormod
