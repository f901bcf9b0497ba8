#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "artin/algebra.hpp"
#include "artin/tensor.hpp"

namespace artin {

// The monomial reflection group G(m,p,n): n x n permutation matrices whose
// nonzero entries are m-th roots of unity with product an (m/p)-th root of
// unity. Requires p | m.
struct GroupSpec {
    long m = 1, p = 1, n = 1;
    GroupSpec(long m_, long p_, long n_);
    mpz_class order() const;  // m^n * n! / p
    std::string to_string() const;
};

enum class PairTag { amn, ampn, gmmn_chain };

// A supported nested pair K < W of reflection groups:
//   amn         S_n < G(m,1,n)
//   ampn        G(p,p,n) < G(m,p,n)
//   gmmn_chain  G(m,m,n-1) < G(m,m,n)
struct RelativePair {
    PairTag tag = PairTag::amn;
    long m = 1, p = 1, n = 1;

    static RelativePair amn(long m, long n);
    static RelativePair ampn(long m, long p, long n);
    static RelativePair gmmn(long m, long n);

    mpz_class quotient_dim() const;  // m^n, (m/p)^n, or m*n
    std::string to_string() const;
};

// k[x1..xn] with all weights 1.
WeightedRing symmetric_ring(long n, FieldSpec field = FieldSpec::rationals());

// k[e1..en] with weights (1, 2, ..., n).
WeightedRing elementary_ring(long n, FieldSpec field = FieldSpec::rationals());

// e_i of all the ring's variables; e_0 = 1. Throws index_out_of_range.
Polynomial elementary_symmetric(const WeightedRing& ring, long i);

// e_i evaluated at the m-th powers of the variables.
Polynomial e_hat(const WeightedRing& ring, long i, long m);

// e_i evaluated at the m-th powers of the first k variables only.
Polynomial e_hat_prefix(const WeightedRing& ring, long i, long m, long k);

bool is_symmetric_polynomial(const WeightedRing& ring, const Polynomial& p);

// Unique q with q(e_1,...,e_n) = p, by leading-term subtraction in lex
// order. Throws not_symmetric when p is not symmetric.
Polynomial symmetrize_in_elementary(const WeightedRing& xring, const Polynomial& p,
                                    const WeightedRing& ering);

struct PlethysmReport {
    Polynomial rewritten;       // e_i(x^2) rewritten in the e_j
    Polynomial convolution;     // (-1)^i * sum_k (-1)^k e_k e_{2i-k}
    bool pass = false;          // rewritten == convolution
    bool raw_sign_agrees = false;  // the sum without the (-1)^i factor already matched
};

// Checks the square-plethysm expansion of e_i over n variables; both sides
// live in elementary_ring(n).
PlethysmReport plethysm_p2_identity(long i, long n);

// Coinvariant ring R_{G(m,p,n)}: k[x1..xn] modulo
// (e_1(x^m), ..., e_{n-1}(x^m), (x1...xn)^{m/p}); dim = |G|.
ArtinianAlgebra coinvariant_ring(const GroupSpec& g, BuildOptions opts = {});

// Closed-form Hilbert function of the coinvariant ring (complete
// intersection of generator degrees (m, 2m, ..., (n-1)m, nm/p)).
HilbertFunction coinvariant_hilbert_closed(const GroupSpec& g);

// Relative coinvariant ring for a supported pair, presented per tag:
//   amn    k[e1..en] / (rewritten e_i(x^m)), weights (1..n)
//   gmmn   k[a,b] / (a^m - b^{m(n-1)}, a b), weights (n-1, 1)
//   ampn   k[u1..un] / (rewritten e_i(y^{m/p}) with e_n(y) -> un^p; un^{m/p}),
//          weights (p, 2p, ..., (n-1)p, n)
ArtinianAlgebra relative_coinvariant(const RelativePair& pair, BuildOptions opts = {});

// Closed-form Hilbert function of the relative coinvariant ring.
HilbertFunction hilbert_poly_closed(const RelativePair& pair);

// Number of partitions of j with parts of size <= n, each size used at most
// m-1 times: the t^j coefficient of prod_{i=1..n}(1 + t^i + ... + t^{i(m-1)}).
long restricted_partition_count(long j, long m, long n);

struct AlmkvistRow {
    long n = 0;
    bool unimodal = true;
    long a = -1, b = -1, c = -1;  // first violation witness
    long degree = 0;              // top degree N of the closed form
};

struct AlmkvistScan {
    long m = 0;
    std::vector<AlmkvistRow> rows;
    // Least scanned n such that no n' >= n in the range violates; -1 if the
    // last scanned n still violates.
    long stable_from = -1;
    long largest_violation = -1;
};

AlmkvistScan almkvist_scan(long m, long n_lo, long n_hi);

struct GrScanRow {
    std::string label;
    HilbertFunction hilbert, gr;
    Partition hilbert_conj, gr_conj;
    bool conjugates_equal = false;
    LefschetzVerdict sljt;
};

GrScanRow gr_scan_algebra(std::string label, const ArtinianAlgebra& A, long trials,
                          std::uint64_t seed);

std::vector<GrScanRow> gr_conjugate_scan(const std::vector<RelativePair>& pairs, long trials,
                                         std::uint64_t seed, BuildOptions opts = {});

// The coexact chain realizing R_W as a free extension with base the
// relative coinvariant ring and fiber R_K, ready for verify_free_extension.
ExtensionSpec pair_free_extension(const RelativePair& pair, BuildOptions opts = {});

}  // namespace artin
