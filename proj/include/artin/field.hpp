#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace artin {

using Rational = mpq_class;

// Exact coefficient field: the rationals (characteristic 0) or a prime field
// Z/p. Elements are carried as Rational everywhere; in the prime case the
// canonical representative is an integer in [0, p). All coefficient
// arithmetic in the library goes through these methods so that mod-p
// reduction cannot be skipped.
class FieldSpec {
  public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint64_t p);  // throws semantic_error unless p is prime

    std::uint64_t characteristic() const { return char_; }
    bool is_rational() const { return char_ == 0; }

    // Canonical representative (identity for char 0, num*den^{-1} mod p otherwise).
    Rational reduce(const Rational& v) const;

    Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
    Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
    Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
    Rational neg(const Rational& a) const { return reduce(-a); }
    Rational inv(const Rational& a) const;  // throws on zero
    Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

    bool is_zero(const Rational& a) const { return reduce(a) == 0; }

    // The non-modular hypothesis "char k = 0 or char k > j" fails.
    bool modular_warning(long socle_degree) const {
        return char_ != 0 && char_ <= static_cast<std::uint64_t>(socle_degree);
    }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;

  private:
    std::uint64_t char_ = 0;
};

}  // namespace artin
