#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/field.hpp"

namespace artin {

// Exponent vector; the owning ring fixes the number of variables.
using Monomial = std::vector<std::int32_t>;

bool mono_is_one(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, assumes a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

// Polynomial ring over an exact field with a positive integer weight per
// variable. Monomials are compared by weighted degree, ties broken by
// reverse-lexicographic order on the fixed variable order; this order
// refines the grading, so leading-term counting gives the graded Hilbert
// function directly.
class WeightedRing {
  public:
    WeightedRing(std::vector<std::string> names, std::vector<std::int32_t> weights,
                 FieldSpec field = FieldSpec::rationals());

    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::int32_t>& weights() const { return weights_; }
    const FieldSpec& field() const { return field_; }

    std::optional<std::size_t> var_index(const std::string& name) const;
    Monomial var(std::size_t i) const;
    Monomial one() const { return Monomial(nvars(), 0); }

    long wdeg(const Monomial& m) const;

    // +1 if a > b, 0 if equal, -1 if a < b in the monomial order.
    int cmp(const Monomial& a, const Monomial& b) const;

    std::string mono_to_string(const Monomial& m) const;

    bool operator==(const WeightedRing&) const = default;

  private:
    std::vector<std::string> names_;
    std::vector<std::int32_t> weights_;
    FieldSpec field_;
};

struct Term {
    Monomial mono;
    Rational coef;
};

// Sparse polynomial: terms sorted strictly descending in the ring order, no
// zero coefficients. Operations take the owning ring explicitly; mixing
// rings is the caller's bug.
class Polynomial {
  public:
    Polynomial() = default;  // zero

    static Polynomial zero() { return {}; }
    static Polynomial constant(const WeightedRing& r, const Rational& c);
    static Polynomial term(const WeightedRing& r, Monomial m, const Rational& c);
    static Polynomial variable(const WeightedRing& r, std::size_t i);
    // Normalizes an arbitrary term list: sorts, merges, drops zeros.
    static Polynomial from_terms(const WeightedRing& r, std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }

    Rational constant_coef(const WeightedRing& r) const;

    // Weighted degree of the leading term (== of every term when homogeneous);
    // -1 for the zero polynomial.
    long wdeg(const WeightedRing& r) const;
    bool is_homogeneous(const WeightedRing& r) const;
    // Degree when homogeneous and nonzero, else nullopt.
    std::optional<long> homogeneous_degree(const WeightedRing& r) const;

    bool operator==(const Polynomial&) const;

    std::string to_string(const WeightedRing& r) const;

  private:
    std::vector<Term> terms_;
    friend Polynomial add(const WeightedRing&, const Polynomial&, const Polynomial&);
    friend Polynomial sub(const WeightedRing&, const Polynomial&, const Polynomial&);
    friend Polynomial mul(const WeightedRing&, const Polynomial&, const Polynomial&);
    friend Polynomial scale(const WeightedRing&, const Polynomial&, const Rational&);
    friend Polynomial neg(const WeightedRing&, const Polynomial&);
    friend Polynomial term_mul(const WeightedRing&, const Polynomial&, const Monomial&,
                               const Rational&);
};

bool operator==(const Term& a, const Term& b);

Polynomial add(const WeightedRing& r, const Polynomial& a, const Polynomial& b);
Polynomial sub(const WeightedRing& r, const Polynomial& a, const Polynomial& b);
Polynomial mul(const WeightedRing& r, const Polynomial& a, const Polynomial& b);
Polynomial scale(const WeightedRing& r, const Polynomial& a, const Rational& c);
Polynomial neg(const WeightedRing& r, const Polynomial& a);
Polynomial term_mul(const WeightedRing& r, const Polynomial& a, const Monomial& m,
                    const Rational& c);
Polynomial pow(const WeightedRing& r, const Polynomial& a, long e);
Polynomial monic(const WeightedRing& r, const Polynomial& a);

// Image of `a` (over `from`) under x_i -> images[i] (over `to`).
Polynomial substitute(const WeightedRing& from, const Polynomial& a,
                      const WeightedRing& to, const std::vector<Polynomial>& images);

// Permutation of the variables of `a` (pi acts by x_i -> x_{pi[i]}).
Polynomial permute_variables(const WeightedRing& r, const Polynomial& a,
                             const std::vector<std::size_t>& pi);

}  // namespace artin
