#include "artin/ring.hpp"

#include <algorithm>
#include <map>

#include "artin/errors.hpp"

namespace artin {

bool mono_is_one(const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

WeightedRing::WeightedRing(std::vector<std::string> names, std::vector<std::int32_t> weights,
                           FieldSpec field)
    : names_(std::move(names)), weights_(std::move(weights)), field_(field) {
    if (names_.empty()) throw semantic_error("ring needs at least one variable");
    if (names_.size() != weights_.size())
        throw semantic_error("one weight per variable required");
    for (auto w : weights_)
        if (w < 1) throw semantic_error("variable weights must be positive");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw semantic_error("duplicate variable name: " + names_[i]);
}

std::optional<std::size_t> WeightedRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

Monomial WeightedRing::var(std::size_t i) const {
    Monomial m(nvars(), 0);
    m[i] = 1;
    return m;
}

long WeightedRing::wdeg(const Monomial& m) const {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * weights_[i];
    return d;
}

int WeightedRing::cmp(const Monomial& a, const Monomial& b) const {
    long da = wdeg(a), db = wdeg(b);
    if (da != db) return da < db ? -1 : 1;
    // grevlex tie-break: larger monomial has the negative last nonzero entry of a-b
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

std::string WeightedRing::mono_to_string(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names_[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coef == b.coef; }

Polynomial Polynomial::constant(const WeightedRing& r, const Rational& c) {
    return term(r, r.one(), c);
}

Polynomial Polynomial::term(const WeightedRing& r, Monomial m, const Rational& c) {
    Polynomial p;
    Rational cr = r.field().reduce(c);
    if (cr != 0) p.terms_.push_back(Term{std::move(m), cr});
    return p;
}

Polynomial Polynomial::variable(const WeightedRing& r, std::size_t i) {
    return term(r, r.var(i), 1);
}

Polynomial Polynomial::from_terms(const WeightedRing& r, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return r.cmp(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef = r.field().add(p.terms_.back().coef, t.coef);
        } else {
            t.coef = r.field().reduce(t.coef);
            p.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
    return p;
}

Rational Polynomial::constant_coef(const WeightedRing&) const {
    if (!terms_.empty() && mono_is_one(terms_.back().mono)) return terms_.back().coef;
    return 0;
}

long Polynomial::wdeg(const WeightedRing& r) const {
    return terms_.empty() ? -1 : r.wdeg(terms_.front().mono);
}

bool Polynomial::is_homogeneous(const WeightedRing& r) const {
    if (terms_.empty()) return true;
    long d = r.wdeg(terms_.front().mono);
    for (const auto& t : terms_)
        if (r.wdeg(t.mono) != d) return false;
    return true;
}

std::optional<long> Polynomial::homogeneous_degree(const WeightedRing& r) const {
    if (terms_.empty() || !is_homogeneous(r)) return std::nullopt;
    return wdeg(r);
}

bool Polynomial::operator==(const Polynomial& o) const { return terms_ == o.terms_; }

std::string Polynomial::to_string(const WeightedRing& r) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coef;
        bool negative = c < 0;
        if (negative) c = -c;
        if (i == 0)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        bool unit_mono = mono_is_one(t.mono);
        if (c != 1 || unit_mono) {
            s += c.get_str();
            if (!unit_mono) s += "*";
        }
        if (!unit_mono) s += r.mono_to_string(t.mono);
    }
    return s;
}

Polynomial add(const WeightedRing& r, const Polynomial& a, const Polynomial& b) {
    Polynomial p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = r.cmp(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            p.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            p.terms_.push_back(b.terms_[j++]);
        } else {
            Rational s = r.field().add(a.terms_[i].coef, b.terms_[j].coef);
            if (s != 0) p.terms_.push_back(Term{a.terms_[i].mono, s});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) p.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) p.terms_.push_back(b.terms_[j]);
    return p;
}

Polynomial neg(const WeightedRing& r, const Polynomial& a) {
    Polynomial p = a;
    for (auto& t : p.terms_) t.coef = r.field().neg(t.coef);
    return p;
}

Polynomial sub(const WeightedRing& r, const Polynomial& a, const Polynomial& b) {
    return add(r, a, neg(r, b));
}

Polynomial scale(const WeightedRing& r, const Polynomial& a, const Rational& c) {
    Rational cr = r.field().reduce(c);
    if (cr == 0) return {};
    Polynomial p = a;
    for (auto& t : p.terms_) t.coef = r.field().mul(t.coef, cr);
    std::erase_if(p.terms_, [](const Term& t) { return t.coef == 0; });
    return p;
}

Polynomial term_mul(const WeightedRing& r, const Polynomial& a, const Monomial& m,
                    const Rational& c) {
    Rational cr = r.field().reduce(c);
    if (cr == 0) return {};
    Polynomial p;
    p.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
        Rational pc = r.field().mul(t.coef, cr);
        if (pc != 0) p.terms_.push_back(Term{mono_mul(t.mono, m), pc});
    }
    return p;
}

Polynomial mul(const WeightedRing& r, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Accumulate via map keyed by the ring order.
    auto cmp = [&](const Monomial& x, const Monomial& y) { return r.cmp(x, y) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            Monomial m = mono_mul(ta.mono, tb.mono);
            auto [it, fresh] = acc.try_emplace(std::move(m), 0);
            it->second = r.field().add(it->second, ta.coef * tb.coef);
        }
    // The map is already sorted descending; reduce and keep nonzeros.
    Polynomial q;
    for (auto& [m, c] : acc) {
        Rational cr = r.field().reduce(c);
        if (cr != 0) q.terms_.push_back(Term{m, cr});
    }
    return q;
}

Polynomial pow(const WeightedRing& r, const Polynomial& a, long e) {
    Polynomial result = Polynomial::constant(r, 1);
    Polynomial base = a;
    while (e > 0) {
        if (e & 1) result = mul(r, result, base);
        e >>= 1;
        if (e) base = mul(r, base, base);
    }
    return result;
}

Polynomial monic(const WeightedRing& r, const Polynomial& a) {
    if (a.is_zero()) return a;
    return scale(r, a, r.field().inv(a.leading().coef));
}

Polynomial substitute(const WeightedRing& from, const Polynomial& a,
                      const WeightedRing& to, const std::vector<Polynomial>& images) {
    if (images.size() != from.nvars())
        throw semantic_error("substitute: one image per variable required");
    Polynomial result;
    for (const auto& t : a.terms()) {
        Polynomial prod = Polynomial::constant(to, t.coef);
        for (std::size_t i = 0; i < from.nvars(); ++i)
            if (t.mono[i] > 0) prod = mul(to, prod, pow(to, images[i], t.mono[i]));
        result = add(to, result, prod);
    }
    return result;
}

Polynomial permute_variables(const WeightedRing& r, const Polynomial& a,
                             const std::vector<std::size_t>& pi) {
    std::vector<Term> terms;
    terms.reserve(a.terms().size());
    for (const auto& t : a.terms()) {
        Monomial m(t.mono.size(), 0);
        for (std::size_t i = 0; i < t.mono.size(); ++i) m[pi[i]] = t.mono[i];
        terms.push_back(Term{std::move(m), t.coef});
    }
    return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace artin
