#include "artin/field.hpp"

#include "artin/errors.hpp"

namespace artin {

FieldSpec FieldSpec::prime(std::uint64_t p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw semantic_error("field characteristic must be 0 or a prime, got " + std::to_string(p));
    if (p > (1ull << 31))
        throw semantic_error("prime characteristic larger than 2^31 is not supported");
    FieldSpec f;
    f.char_ = p;
    return f;
}

Rational FieldSpec::reduce(const Rational& v) const {
    if (char_ == 0) return v;
    mpz_class p(static_cast<unsigned long>(char_));
    mpz_class den = v.get_den();
    mpz_class dmod = den % p;
    if (dmod == 0) throw semantic_error("denominator not invertible mod " + std::to_string(char_));
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (v.get_num() % p) * dinv % p;
    if (r < 0) r += p;
    return Rational(r);
}

Rational FieldSpec::inv(const Rational& a) const {
    Rational r = reduce(a);
    if (r == 0) throw semantic_error("division by zero in coefficient field");
    if (char_ == 0) return 1 / r;
    mpz_class p(static_cast<unsigned long>(char_));
    mpz_class x = r.get_num();
    mpz_class xinv;
    mpz_invert(xinv.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    return Rational(xinv);
}

std::string FieldSpec::to_string() const {
    return char_ == 0 ? "QQ" : "GF(" + std::to_string(char_) + ")";
}

}  // namespace artin
