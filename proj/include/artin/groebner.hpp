#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artin/partition.hpp"
#include "artin/ring.hpp"

namespace artin {

// Reduced Groebner basis under the ring's weighted-degree / grevlex order:
// monic generators, no leading monomial divides another, every generator
// fully reduced against the rest.
struct GroebnerBasis {
    std::vector<Polynomial> gens;  // sorted ascending by leading monomial
    std::string order_descriptor;  // e.g. "wdegrevlex(1,2)"
};

// Buchberger with the coprime-LT and chain criteria, normal (smallest lcm
// degree first) pair selection, then interreduction. The zero ideal yields
// an empty basis. Non-homogeneous input is fine.
GroebnerBasis buchberger(const WeightedRing& ring, std::vector<Polynomial> gens);

// Unique remainder supported on standard monomials.
Polynomial normal_form(const WeightedRing& ring, const Polynomial& p,
                       const GroebnerBasis& gb);

bool ideal_contains(const WeightedRing& ring, const GroebnerBasis& gb, const Polynomial& p);

struct QuotientBasis {
    std::vector<Monomial> monomials;  // sorted by (weighted degree, ring order)
    std::vector<long> degrees;        // weighted degree per monomial
    std::size_t dim() const { return monomials.size(); }
};

// Monomials outside the leading-term ideal. Throws not_artinian (naming a
// variable with no pure power among the leading terms) when infinite, and
// resource_cap when the count exceeds `dim_cap`.
QuotientBasis quotient_monomial_basis(const WeightedRing& ring, const GroebnerBasis& gb,
                                      std::size_t dim_cap = 0);

// Graded Hilbert function of the Artinian quotient. Requires every generator
// homogeneous for the ring's weights (not_homogeneous names the offender).
HilbertFunction hilbert_function(const WeightedRing& ring, const GroebnerBasis& gb,
                                 std::size_t dim_cap = 0);

}  // namespace artin
