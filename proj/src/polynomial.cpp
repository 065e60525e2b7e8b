#include "mcperm/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mcperm {

// ---------------------------------------------------------------- variables

std::string VariableId::str() const {
    switch (space) {
        case VarSpace::X: return "x" + std::to_string(index);
        case VarSpace::Y: return "y" + std::to_string(index);
        case VarSpace::Z: return "z" + std::to_string(index);
        case VarSpace::T: return index == 0 ? "t" : "t" + std::to_string(index);
        case VarSpace::Alpha: return index == 0 ? "alpha" : "alpha" + std::to_string(index);
    }
    return "?";
}

std::optional<VariableId> VariableId::parse(std::string_view s) {
    size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    const std::string_view name = s.substr(0, i);
    const std::string_view digits = s.substr(i);
    uint32_t index = 0;
    if (!digits.empty()) {
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            index = index * 10 + static_cast<uint32_t>(c - '0');
        }
    }
    VarSpace space;
    if (name == "x") space = VarSpace::X;
    else if (name == "y") space = VarSpace::Y;
    else if (name == "z") space = VarSpace::Z;
    else if (name == "t") space = VarSpace::T;
    else if (name == "alpha") space = VarSpace::Alpha;
    else return std::nullopt;
    if ((space == VarSpace::X || space == VarSpace::Y || space == VarSpace::Z) && digits.empty())
        return std::nullopt;
    return VariableId{space, index};
}

// ---------------------------------------------------------------- monomials

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : entries_) d += e;
    return d;
}

uint32_t Monomial::exponent(VariableId v) const {
    for (const auto& [w, e] : entries_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto ia = entries_.begin(), ib = o.entries_.begin();
    while (ia != entries_.end() && ib != o.entries_.end()) {
        if (ia->first < ib->first) r.entries_.push_back(*ia++);
        else if (ib->first < ia->first) r.entries_.push_back(*ib++);
        else {
            r.entries_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    r.entries_.insert(r.entries_.end(), ia, entries_.end());
    r.entries_.insert(r.entries_.end(), ib, o.entries_.end());
    return r;
}

Monomial Monomial::without(VariableId v) const {
    Monomial r;
    for (const auto& e : entries_)
        if (e.first != v) r.entries_.push_back(e);
    return r;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    // Equal prefixes with equal total degree force equal monomials.
    return 0;
}

std::string Monomial::str() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : entries_) {
        if (!s.empty()) s += "*";
        s += v.str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// -------------------------------------------------------------- polynomials

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    p.add_term(Monomial(), c);
    return p;
}

Polynomial Polynomial::variable(VariableId v) {
    Polynomial p;
    p.add_term(Monomial::var(v), Rational(1));
    return p;
}

Polynomial Polynomial::term(Rational c, Monomial m) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    for (const auto& [m, c] : terms_)
        if (m.is_one()) return c;
    return Rational(0);
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned Polynomial::degree_in(VariableId v) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
    return d;
}

bool Polynomial::is_multiaffine() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries())
            if (e > 1) return false;
    return true;
}

std::vector<VariableId> Polynomial::variables() const {
    std::set<VariableId> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries()) seen.insert(v);
    return {seen.begin(), seen.end()};
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(Rational(1));
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r *= b;
        if (e >>= 1u) b *= b;
    }
    return r;
}

Polynomial Polynomial::derivative(VariableId v) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        const uint32_t e = m.exponent(v);
        if (e == 0) continue;
        Monomial reduced = m.without(v);
        if (e > 1) reduced = reduced * Monomial::var(v, e - 1);
        r.add_term(reduced, c * Rational(static_cast<long>(e)));
    }
    return r;
}

Polynomial Polynomial::substitute(const std::map<VariableId, Polynomial>& bindings) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial untouched;
        Polynomial bound = Polynomial::constant(Rational(1));
        bool any_bound = false;
        for (const auto& [v, e] : m.entries()) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                untouched = untouched * Monomial::var(v, e);
            } else {
                bound *= it->second.pow(e);
                any_bound = true;
            }
        }
        if (!any_bound) {
            r.add_term(m, c);
        } else {
            r += Polynomial::term(c, untouched) * bound;
        }
    }
    return r;
}

Polynomial Polynomial::substitute(VariableId v, const Polynomial& image) const {
    return substitute(std::map<VariableId, Polynomial>{{v, image}});
}

Rational Polynomial::evaluate(const std::map<VariableId, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.entries()) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("evaluate: unbound variable " + v.str());
            t *= mcperm::pow(it->second, e);
        }
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::diagonalize(const std::set<VariableId>& vars, VariableId target) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial out;
        uint32_t onto_target = 0;
        for (const auto& [v, e] : m.entries()) {
            if (vars.count(v) || v == target) onto_target += e;
            else out = out * Monomial::var(v, e);
        }
        if (onto_target > 0) out = out * Monomial::var(target, onto_target);
        r.add_term(out, c);
    }
    return r;
}

Polynomial Polynomial::diagonalize_all(VariableId target) const {
    const auto vars = variables();
    return diagonalize(std::set<VariableId>(vars.begin(), vars.end()), target);
}

Polynomial Polynomial::coefficient_in(VariableId v, uint32_t power) const {
    Polynomial r;
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) == power) r.add_term(m.without(v), c);
    return r;
}

UnivariatePolynomial Polynomial::restrict_line(const std::vector<Rational>& base,
                                               const std::vector<Rational>& dir) const {
    const auto vars = variables();
    if (base.size() != vars.size() || dir.size() != vars.size())
        throw std::invalid_argument("restrict_line: dimension mismatch");
    for (const auto& b : dir)
        if (sgn(b) <= 0) throw std::invalid_argument("restrict_line: direction must be positive");
    std::vector<UnivariatePolynomial> lines;
    lines.reserve(vars.size());
    for (size_t i = 0; i < vars.size(); ++i)
        lines.push_back(UnivariatePolynomial({base[i], dir[i]}));
    UnivariatePolynomial acc;
    for (const auto& [m, c] : terms_) {
        UnivariatePolynomial term = UnivariatePolynomial::constant(c);
        for (const auto& [v, e] : m.entries()) {
            const size_t pos = static_cast<size_t>(
                std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
            for (uint32_t k = 0; k < e; ++k) term = term * lines[pos];
        }
        acc = acc + term;
    }
    return acc;
}

Polynomial Polynomial::apply_recurrence_operator(const Rational& c, VariableId multiplier,
                                                 const std::set<VariableId>& diff_vars) const {
    if (diff_vars.count(multiplier))
        throw std::invalid_argument("recurrence operator: multiplier inside diff_vars");
    Polynomial sum;
    for (const auto& v : diff_vars) sum += derivative(v);
    Polynomial r = *this * c;
    r += Polynomial::variable(multiplier) * sum;
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = sgn(c) < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (m.is_one()) {
            s += mag.get_str();
        } else if (mag == 1) {
            s += m.str();
        } else {
            s += mag.get_str() + "*" + m.str();
        }
    }
    return s;
}

// ------------------------------------------------------------------ parsing

namespace {

struct Lexer {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("polynomial parse: expected digits");
        return std::string(s.substr(start, i - start));
    }
    std::string word() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
        return std::string(s.substr(start, i - start));
    }
};

// factor := integer [/ integer] | var [^ integer]
// term   := factor (* factor)*
// poly   := [-] term ((+|-) term)*
void parse_factor(Lexer& lx, Rational& coeff, Monomial& mono) {
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        std::string num = lx.number();
        if (lx.consume('/')) {
            std::string den = lx.number();
            coeff *= rational_from_string(num + "/" + den);
        } else {
            coeff *= rational_from_string(num);
        }
        return;
    }
    std::string w = lx.word();
    auto v = VariableId::parse(w);
    if (!v) throw std::invalid_argument("polynomial parse: bad variable '" + w + "'");
    uint32_t e = 1;
    if (lx.consume('^')) e = static_cast<uint32_t>(std::stoul(lx.number()));
    mono = mono * Monomial::var(*v, e);
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
    Lexer lx{text};
    Polynomial out;
    bool expect_term = true;
    int sign_next = 1;
    if (lx.consume('-')) sign_next = -1;
    while (!lx.done()) {
        if (!expect_term) {
            if (lx.consume('+')) sign_next = 1;
            else if (lx.consume('-')) sign_next = -1;
            else throw std::invalid_argument("polynomial parse: expected + or -");
            expect_term = true;
            continue;
        }
        Rational coeff(sign_next);
        Monomial mono;
        parse_factor(lx, coeff, mono);
        while (lx.consume('*')) parse_factor(lx, coeff, mono);
        out.add_term(mono, coeff);
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("polynomial parse: dangling sign or empty input");
    return out;
}

// -------------------------------------------------------------- conversions

UnivariatePolynomial to_univariate(const Polynomial& p, VariableId v) {
    std::vector<Rational> c(p.degree_in(v) + 1, Rational(0));
    for (const auto& [m, coeff] : p.terms()) {
        const uint32_t e = m.exponent(v);
        if (!m.without(v).is_one())
            throw std::invalid_argument("to_univariate: polynomial has extra variables");
        c[e] += coeff;
    }
    return UnivariatePolynomial(std::move(c));
}

Polynomial from_univariate(const UnivariatePolynomial& u, VariableId v) {
    Polynomial p;
    for (size_t k = 0; k < u.coeffs().size(); ++k)
        p += Polynomial::term(u.coeffs()[k], Monomial::var(v, static_cast<uint32_t>(k)));
    return p;
}

// ------------------------------------------------------------ fast evaluator

PointEvaluator::PointEvaluator(const Polynomial& p, const std::vector<VariableId>& order)
    : arity_(order.size()) {
    terms_.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) {
        Term t;
        t.coeff = c;
        for (const auto& [v, e] : m.entries()) {
            auto it = std::lower_bound(order.begin(), order.end(), v);
            if (it == order.end() || *it != v)
                throw std::invalid_argument("PointEvaluator: variable missing from order");
            t.factors.emplace_back(static_cast<size_t>(it - order.begin()), e);
        }
        terms_.push_back(std::move(t));
    }
}

Rational PointEvaluator::eval(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("PointEvaluator: bad point size");
    Rational acc(0);
    Rational tmp;
    for (const auto& t : terms_) {
        tmp = t.coeff;
        for (const auto& [pos, e] : t.factors) {
            if (e == 1) tmp *= point[pos];
            else tmp *= pow(point[pos], e);
        }
        acc += tmp;
    }
    return acc;
}

}  // namespace mcperm
