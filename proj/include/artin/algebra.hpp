#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/groebner.hpp"
#include "artin/matrix.hpp"
#include "artin/partition.hpp"
#include "artin/ring.hpp"

namespace artin {

struct BuildOptions {
    std::size_t dim_cap = 5000;
};

// Graded Artinian quotient ring: weighted polynomial ring modulo a
// homogeneous ideal with finite-dimensional quotient. The standard-monomial
// basis fixes coordinates for all the linear algebra downstream.
class ArtinianAlgebra {
  public:
    static ArtinianAlgebra build(WeightedRing ring, std::vector<Polynomial> gens,
                                 BuildOptions opts = {});

    const WeightedRing& ring() const { return ring_; }
    const std::vector<Polynomial>& ideal_gens() const { return gens_; }
    const GroebnerBasis& gb() const { return gb_; }
    const QuotientBasis& basis() const { return basis_; }
    const HilbertFunction& hilbert() const { return hilbert_; }
    long socle_degree() const { return hilbert_.socle_degree(); }
    std::size_t dim() const { return basis_.dim(); }
    // Set when the field characteristic is positive and <= socle degree.
    bool char_warning() const { return char_warning_; }

    Polynomial reduce(const Polynomial& p) const;  // normal form
    Vec coords(const Polynomial& normal_form) const;
    Polynomial from_coords(const Vec& v) const;
    std::size_t basis_index(const Monomial& m) const;
    // Basis indices of weighted degree d, ascending.
    std::vector<std::size_t> degree_indices(long d) const;

  private:
    WeightedRing ring_;
    std::vector<Polynomial> gens_;
    GroebnerBasis gb_;
    QuotientBasis basis_;
    HilbertFunction hilbert_;
    std::map<Monomial, std::size_t> index_;
    bool char_warning_ = false;

    ArtinianAlgebra(WeightedRing ring) : ring_(std::move(ring)) {}
};

// An element of the quotient: its normal-form representative plus grading
// facts. Jordan operations require membership in the maximal ideal.
struct AlgebraElement {
    Polynomial rep;                      // its own normal form
    std::optional<long> degree;          // homogeneous degree, when defined
    bool in_max_ideal = true;            // zero constant term
    bool is_zero() const { return rep.is_zero(); }
};

AlgebraElement make_element(const ArtinianAlgebra& A, const Polynomial& p);

// Matrix of multiplication by l on the quotient basis (column b -> l*b).
Mat mult_operator(const ArtinianAlgebra& A, const AlgebraElement& l);

// Ranks of L^1, L^2, ... down to the first zero power.
std::vector<std::size_t> rank_sequence(const ArtinianAlgebra& A, const Mat& L);

Partition partition_from_ranks(std::size_t dim, const std::vector<std::size_t>& ranks);

Partition jordan_type(const ArtinianAlgebra& A, const AlgebraElement& l);

struct JordanString {
    Vec generator;                 // coordinates on the quotient basis
    Polynomial generator_poly;
    long length = 0;
    std::optional<long> degree;    // set when the generator is homogeneous
};

// Kernel-chain extraction, greedy in fixed basis order; for homogeneous l
// the generators come out homogeneous so string degrees are defined.
std::vector<JordanString> jordan_strings(const ArtinianAlgebra& A, const AlgebraElement& l);

// Hilbert function of the associated graded algebra of the underlying local
// ring, by iterated span growth of powers of the maximal ideal.
HilbertFunction assoc_graded_hilbert(const ArtinianAlgebra& A);

struct SlCheck {
    bool ok = false;
    long i = -1, k = -1;  // first failing block when !ok and a block failed
};

// Maximal rank of x l^k : A_i -> A_{i+k} for all (i,k); false immediately
// unless l is homogeneous of degree 1 (or zero in a 1-dimensional algebra).
// Cross-asserts the rank condition against jordan_type == H(A)^v.
SlCheck is_sl_element(const ArtinianAlgebra& A, const AlgebraElement& l);

// Jordan type equals the conjugate Hilbert-function partition; homogeneity
// is not required.
bool has_sljt(const ArtinianAlgebra& A, const AlgebraElement& l);

enum class VerdictStatus { yes, no, probably_no };
enum class Obstruction { none, empty_degree_one, non_unimodal_hilbert, gr_dominance, rank_deficit };

std::string to_string(VerdictStatus s);
std::string to_string(Obstruction o);

struct LefschetzVerdict {
    VerdictStatus status = VerdictStatus::probably_no;
    Obstruction obstruction = Obstruction::none;
    std::optional<AlgebraElement> witness;  // recheckable, for yes
    std::string detail;                     // printable certificate
    long trials_used = 0;
};

// Obstruction checks (empty degree one, non-unimodal Hilbert function,
// Gr-conjugate dominance), then seeded random search over degree-1 elements.
// Trial 0 is the all-ones combination; exhaustion gives probably_no.
LefschetzVerdict sl_verdict(const ArtinianAlgebra& A, long trials, std::uint64_t seed);

// Same shape for strong Lefschetz Jordan type; the search mixes all positive
// degrees and homogeneity is not required.
LefschetzVerdict sljt_verdict(const ArtinianAlgebra& A, long trials, std::uint64_t seed);

// Dominance-maximal Jordan types observed among sampled elements of the
// maximal ideal. A lower-bound certificate for the generic Jordan type only.
std::vector<Partition> generic_jordan_type_lower_bound(const ArtinianAlgebra& A, long trials,
                                                       std::uint64_t seed);

struct DominanceAudit {
    Partition jordan;
    Partition hilbert_conj;
    Partition gr_conj;
    Dominance vs_hilbert = Dominance::incomparable;
    Dominance vs_gr = Dominance::incomparable;
    bool element_homogeneous = false;
    // A non-homogeneous element with P > H(A)^v would answer a question no
    // known example answers; flagged loudly instead of erroring.
    bool counterexample_flag = false;
};

DominanceAudit dominance_audit(const ArtinianAlgebra& A, const AlgebraElement& l);

// Every Jordan string satisfies 2 a_i + p_i - 1 = socle degree. Requires a
// symmetric Hilbert function and l homogeneous linear; must agree with
// is_sl_element, which is cross-asserted.
bool centered_check(const ArtinianAlgebra& A, const AlgebraElement& l);

struct HeightTwoReport {
    bool conjugates_equal = false;   // ground truth, computed from the algebra
    bool divisor_criterion = false;  // n | m and (a-1)*m == b*n
    bool agreement = false;          // criterion == ground truth
    Partition hilbert_conj;
    Partition gr_conj;
};

// For k[x,y]/(x^a - y^b, xy) with weights (m, n): does H(A)^v equal
// H(Gr)^v? Requires a <= b and a*m == b*n.
HeightTwoReport height_two_sljt_predictor(long a, long b, long m, long n);

// Internal helpers reused by verdicts and tests.
std::vector<std::size_t> positive_degree_basis_indices(const ArtinianAlgebra& A,
                                                       bool degree_one_only);
// Deterministic first candidate of every search: the sum of the variables
// (restricted to weight 1 when only linear forms qualify).
AlgebraElement variable_sum(const ArtinianAlgebra& A, bool degree_one_only);
AlgebraElement sample_element(const ArtinianAlgebra& A, const std::vector<std::size_t>& pool,
                              long trial, class Rng& rng, long bound = 100);

}  // namespace artin
