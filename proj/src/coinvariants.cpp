#include "artin/coinvariants.hpp"

#include <algorithm>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

GroupSpec::GroupSpec(long m_, long p_, long n_) : m(m_), p(p_), n(n_) {
    if (m < 1 || p < 1 || n < 1) throw semantic_error("group parameters must be positive");
    if (m % p != 0) throw semantic_error("G(m,p,n) requires p | m");
}

mpz_class GroupSpec::order() const {
    mpz_class o;
    mpz_ui_pow_ui(o.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    for (long i = 2; i <= n; ++i) o *= i;
    return o / p;
}

std::string GroupSpec::to_string() const {
    return "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
}

RelativePair RelativePair::amn(long m, long n) {
    if (m < 1 || n < 1) throw unsupported_pair("amn requires m, n >= 1");
    return RelativePair{PairTag::amn, m, 1, n};
}

RelativePair RelativePair::ampn(long m, long p, long n) {
    if (m < 1 || p < 1 || n < 1 || m % p != 0)
        throw unsupported_pair("ampn requires p | m and positive parameters");
    return RelativePair{PairTag::ampn, m, p, n};
}

RelativePair RelativePair::gmmn(long m, long n) {
    if (m < 1 || n < 2) throw unsupported_pair("gmmn chain requires m >= 1 and n >= 2");
    return RelativePair{PairTag::gmmn_chain, m, m, n};
}

mpz_class RelativePair::quotient_dim() const {
    mpz_class d;
    switch (tag) {
        case PairTag::amn:
            mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(m),
                          static_cast<unsigned long>(n));
            return d;
        case PairTag::ampn:
            mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(m / p),
                          static_cast<unsigned long>(n));
            return d;
        case PairTag::gmmn_chain:
            return mpz_class(m) * n;
    }
    return 0;
}

std::string RelativePair::to_string() const {
    switch (tag) {
        case PairTag::amn:
            return "amn:" + std::to_string(m) + "," + std::to_string(n);
        case PairTag::ampn:
            return "ampn:" + std::to_string(m) + "," + std::to_string(p) + "," +
                   std::to_string(n);
        case PairTag::gmmn_chain:
            return "gmmn:" + std::to_string(m) + "," + std::to_string(n);
    }
    return "?";
}

WeightedRing symmetric_ring(long n, FieldSpec field) {
    std::vector<std::string> names;
    for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return WeightedRing(std::move(names), std::vector<std::int32_t>(n, 1), field);
}

WeightedRing elementary_ring(long n, FieldSpec field) {
    std::vector<std::string> names;
    std::vector<std::int32_t> weights;
    for (long i = 1; i <= n; ++i) {
        names.push_back("e" + std::to_string(i));
        weights.push_back(static_cast<std::int32_t>(i));
    }
    return WeightedRing(std::move(names), std::move(weights), field);
}

Polynomial e_hat_prefix(const WeightedRing& ring, long i, long m, long k) {
    if (k < 0 || k > static_cast<long>(ring.nvars()))
        throw index_out_of_range("variable prefix length out of range");
    if (i < 0 || i > k)
        throw index_out_of_range("elementary symmetric index " + std::to_string(i) +
                                 " out of range 0.." + std::to_string(k));
    if (i == 0) return Polynomial::constant(ring, 1);
    // Sum over i-subsets of the first k variables, each raised to the m-th power.
    std::vector<Term> terms;
    std::vector<long> idx(i);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Monomial mono(ring.nvars(), 0);
        for (long q : idx) mono[static_cast<std::size_t>(q)] = static_cast<std::int32_t>(m);
        terms.push_back(Term{std::move(mono), Rational(1)});
        long pos = i - 1;
        while (pos >= 0 && idx[pos] == k - i + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (long q = pos + 1; q < i; ++q) idx[q] = idx[q - 1] + 1;
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial e_hat(const WeightedRing& ring, long i, long m) {
    return e_hat_prefix(ring, i, m, static_cast<long>(ring.nvars()));
}

Polynomial elementary_symmetric(const WeightedRing& ring, long i) { return e_hat(ring, i, 1); }

bool is_symmetric_polynomial(const WeightedRing& ring, const Polynomial& p) {
    for (std::size_t k = 0; k + 1 < ring.nvars(); ++k) {
        std::vector<std::size_t> pi(ring.nvars());
        std::iota(pi.begin(), pi.end(), std::size_t{0});
        std::swap(pi[k], pi[k + 1]);
        if (!(permute_variables(ring, p, pi) == p)) return false;
    }
    return true;
}

namespace {

// Largest term in plain lexicographic order (x1 > x2 > ...).
const Term& lex_leading(const Polynomial& p) {
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms()) {
        const Monomial& a = t.mono;
        const Monomial& b = best->mono;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) {
                if (a[i] > b[i]) best = &t;
                break;
            }
        }
    }
    return *best;
}

}  // namespace

Polynomial symmetrize_in_elementary(const WeightedRing& xring, const Polynomial& p,
                                    const WeightedRing& ering) {
    if (ering.nvars() != xring.nvars())
        throw semantic_error("need one elementary variable per symmetric variable");
    if (!is_symmetric_polynomial(xring, p))
        throw not_symmetric("polynomial is not symmetric: " + p.to_string(xring));

    std::vector<Polynomial> elem;  // e_1..e_n over the x-ring
    for (long i = 1; i <= static_cast<long>(xring.nvars()); ++i)
        elem.push_back(elementary_symmetric(xring, i));

    Polynomial rest = p;
    std::vector<Term> result;
    while (!rest.is_zero()) {
        const Term& lead = lex_leading(rest);
        Monomial alpha = lead.mono;
        for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
            if (alpha[i] < alpha[i + 1])
                throw std::logic_error("lex-leading exponent of a symmetric polynomial "
                                       "must be weakly decreasing");
        Monomial beta(alpha.size(), 0);
        for (std::size_t i = 0; i < alpha.size(); ++i)
            beta[i] = alpha[i] - (i + 1 < alpha.size() ? alpha[i + 1] : 0);
        result.push_back(Term{beta, lead.coef});
        Polynomial prod = Polynomial::constant(xring, lead.coef);
        for (std::size_t i = 0; i < beta.size(); ++i)
            if (beta[i] > 0) prod = mul(xring, prod, pow(xring, elem[i], beta[i]));
        rest = sub(xring, rest, prod);
    }
    return Polynomial::from_terms(ering, std::move(result));
}

PlethysmReport plethysm_p2_identity(long i, long n) {
    if (i < 1 || i > n)
        throw index_out_of_range("plethysm index must satisfy 1 <= i <= n");
    WeightedRing xr = symmetric_ring(n);
    WeightedRing er = elementary_ring(n);
    PlethysmReport rep;
    rep.rewritten = symmetrize_in_elementary(xr, e_hat(xr, i, 2), er);

    auto e_var = [&](long k) -> Polynomial {
        if (k == 0) return Polynomial::constant(er, 1);
        if (k > n) return Polynomial::zero();
        return Polynomial::variable(er, static_cast<std::size_t>(k - 1));
    };
    Polynomial raw;
    for (long k = 0; k <= 2 * i; ++k) {
        Polynomial piece = mul(er, e_var(k), e_var(2 * i - k));
        raw = (k % 2 == 0) ? add(er, raw, piece) : sub(er, raw, piece);
    }
    rep.raw_sign_agrees = rep.rewritten == raw;
    rep.convolution = (i % 2 == 0) ? raw : neg(er, raw);
    rep.pass = rep.rewritten == rep.convolution;
    return rep;
}

namespace {

void check_dim_cap(const mpz_class& dim, const BuildOptions& opts) {
    if (opts.dim_cap && dim > static_cast<long>(opts.dim_cap))
        throw resource_cap("requested quotient has dimension " + dim.get_str() +
                           " > cap " + std::to_string(opts.dim_cap));
}

// (1 + t^step + t^{2 step} + ... + t^{(count-1) step}) as a coefficient vector
// convolved onto h.
std::vector<long> convolve_geometric(const std::vector<long>& h, long step, long count) {
    std::vector<long> out(h.size() + static_cast<std::size_t>(step) * (count - 1), 0);
    for (std::size_t i = 0; i < h.size(); ++i)
        for (long k = 0; k < count; ++k) out[i + static_cast<std::size_t>(step) * k] += h[i];
    return out;
}

}  // namespace

ArtinianAlgebra coinvariant_ring(const GroupSpec& g, BuildOptions opts) {
    check_dim_cap(g.order(), opts);
    WeightedRing ring = symmetric_ring(g.n);
    std::vector<Polynomial> gens;
    for (long i = 1; i < g.n; ++i) gens.push_back(e_hat(ring, i, g.m));
    // (x1...xn)^{m/p}; for p = 1 this is e_n at the m-th powers.
    Monomial prod(ring.nvars(), static_cast<std::int32_t>(g.m / g.p));
    gens.push_back(Polynomial::term(ring, std::move(prod), 1));
    ArtinianAlgebra A = ArtinianAlgebra::build(std::move(ring), std::move(gens), opts);
    if (mpz_class(static_cast<long>(A.dim())) != g.order())
        throw std::logic_error("coinvariant ring dimension disagrees with the group order");
    return A;
}

HilbertFunction coinvariant_hilbert_closed(const GroupSpec& g) {
    std::vector<long> h{1};
    for (long i = 1; i < g.n; ++i) h = convolve_geometric(h, 1, i * g.m);
    h = convolve_geometric(h, 1, g.n * g.m / g.p);
    return HilbertFunction(std::move(h));
}

ArtinianAlgebra relative_coinvariant(const RelativePair& pair, BuildOptions opts) {
    check_dim_cap(pair.quotient_dim(), opts);
    switch (pair.tag) {
        case PairTag::amn: {
            WeightedRing xr = symmetric_ring(pair.n);
            WeightedRing er = elementary_ring(pair.n);
            std::vector<Polynomial> gens;
            for (long i = 1; i <= pair.n; ++i)
                gens.push_back(symmetrize_in_elementary(xr, e_hat(xr, i, pair.m), er));
            for (const auto& gpoly : gens)
                if (!gpoly.is_homogeneous(er))
                    throw std::logic_error("rewritten relation not homogeneous for (1..n)");
            return ArtinianAlgebra::build(std::move(er), std::move(gens), opts);
        }
        case PairTag::gmmn_chain: {
            WeightedRing ring({"a", "b"},
                              {static_cast<std::int32_t>(pair.n - 1), 1});
            Polynomial rel = sub(
                ring,
                Polynomial::term(ring, Monomial{static_cast<std::int32_t>(pair.m), 0}, 1),
                Polynomial::term(ring,
                                 Monomial{0, static_cast<std::int32_t>(pair.m * (pair.n - 1))},
                                 1));
            Polynomial ab = Polynomial::term(ring, Monomial{1, 1}, 1);
            return ArtinianAlgebra::build(std::move(ring), {rel, ab}, opts);
        }
        case PairTag::ampn: {
            long k = pair.m / pair.p;
            // Ring of the K = G(p,p,n) basic invariants: u_i = e_i(x^p) for
            // i < n with weight i*p, and u_n = x1...xn with weight n.
            std::vector<std::string> names;
            std::vector<std::int32_t> weights;
            for (long i = 1; i < pair.n; ++i) {
                names.push_back("u" + std::to_string(i));
                weights.push_back(static_cast<std::int32_t>(i * pair.p));
            }
            names.push_back("u" + std::to_string(pair.n));
            weights.push_back(static_cast<std::int32_t>(pair.n));
            WeightedRing ur(std::move(names), std::move(weights));

            // Rewrite e_i(y^k) (y_j = x_j^p) in the e_j(y), then substitute
            // e_j(y) -> u_j for j < n and e_n(y) = (x1..xn)^p -> u_n^p.
            WeightedRing yr = symmetric_ring(pair.n);
            WeightedRing er = elementary_ring(pair.n);
            std::vector<Polynomial> images;
            for (long j = 1; j < pair.n; ++j)
                images.push_back(Polynomial::variable(ur, static_cast<std::size_t>(j - 1)));
            images.push_back(pow(ur, Polynomial::variable(ur, ur.nvars() - 1), pair.p));

            std::vector<Polynomial> gens;
            for (long i = 1; i < pair.n; ++i) {
                Polynomial q = symmetrize_in_elementary(yr, e_hat(yr, i, k), er);
                gens.push_back(substitute(er, q, ur, images));
            }
            gens.push_back(pow(ur, Polynomial::variable(ur, ur.nvars() - 1), k));
            for (const auto& gpoly : gens)
                if (!gpoly.is_homogeneous(ur))
                    throw std::logic_error("rewritten relation not homogeneous for the "
                                           "invariant weights");
            return ArtinianAlgebra::build(std::move(ur), std::move(gens), opts);
        }
    }
    throw unsupported_pair("unknown pair tag");
}

HilbertFunction hilbert_poly_closed(const RelativePair& pair) {
    switch (pair.tag) {
        case PairTag::amn: {
            std::vector<long> h{1};
            for (long i = 1; i <= pair.n; ++i) h = convolve_geometric(h, i, pair.m);
            return HilbertFunction(std::move(h));
        }
        case PairTag::gmmn_chain: {
            std::vector<long> h(static_cast<std::size_t>(pair.m * (pair.n - 1)) + 1, 1);
            for (long i = 1; i <= pair.m - 1; ++i)
                h[static_cast<std::size_t>(i * (pair.n - 1))] += 1;
            return HilbertFunction(std::move(h));
        }
        case PairTag::ampn: {
            long k = pair.m / pair.p;
            std::vector<long> h{1};
            for (long i = 1; i < pair.n; ++i) h = convolve_geometric(h, i * pair.p, k);
            h = convolve_geometric(h, pair.n, k);
            return HilbertFunction(std::move(h));
        }
    }
    throw unsupported_pair("unknown pair tag");
}

long restricted_partition_count(long j, long m, long n) {
    if (j < 0) throw precondition_violated("partition size must be non-negative");
    HilbertFunction h = hilbert_poly_closed(RelativePair::amn(m, n));
    return h[static_cast<std::size_t>(j)];
}

AlmkvistScan almkvist_scan(long m, long n_lo, long n_hi) {
    if (m < 2) throw precondition_violated("scan requires m >= 2");
    if (n_lo < 1 || n_hi < n_lo) throw precondition_violated("bad n range");
    AlmkvistScan scan;
    scan.m = m;
    for (long n = n_lo; n <= n_hi; ++n) {
        HilbertFunction h = hilbert_poly_closed(RelativePair::amn(m, n));
        UnimodalReport u = is_unimodal(h);
        AlmkvistRow row;
        row.n = n;
        row.unimodal = u.unimodal;
        row.a = u.a;
        row.b = u.b;
        row.c = u.c;
        row.degree = h.socle_degree();
        if (!u.unimodal) scan.largest_violation = n;
        scan.rows.push_back(row);
    }
    if (scan.largest_violation < 0)
        scan.stable_from = n_lo;
    else if (scan.largest_violation < n_hi)
        scan.stable_from = scan.largest_violation + 1;
    return scan;
}

GrScanRow gr_scan_algebra(std::string label, const ArtinianAlgebra& A, long trials,
                          std::uint64_t seed) {
    GrScanRow row;
    row.label = std::move(label);
    row.hilbert = A.hilbert();
    row.gr = assoc_graded_hilbert(A);
    row.hilbert_conj = conjugate(row.hilbert);
    row.gr_conj = conjugate(row.gr);
    row.conjugates_equal = row.hilbert_conj == row.gr_conj;
    row.sljt = sljt_verdict(A, trials, seed);
    return row;
}

std::vector<GrScanRow> gr_conjugate_scan(const std::vector<RelativePair>& pairs, long trials,
                                         std::uint64_t seed, BuildOptions opts) {
    std::vector<GrScanRow> rows;
    for (const auto& pr : pairs) {
        ArtinianAlgebra A = relative_coinvariant(pr, opts);
        rows.push_back(gr_scan_algebra(pr.to_string(), A, trials, seed));
    }
    return rows;
}

ExtensionSpec pair_free_extension(const RelativePair& pair, BuildOptions opts) {
    switch (pair.tag) {
        case PairTag::amn: {
            ArtinianAlgebra C = coinvariant_ring(GroupSpec(pair.m, 1, pair.n), opts);
            std::vector<Polynomial> elems;
            for (long i = 1; i <= pair.n; ++i)
                elems.push_back(elementary_symmetric(C.ring(), i));
            return ExtensionSpec{C, elems, elems, relative_coinvariant(pair, opts)};
        }
        case PairTag::ampn: {
            ArtinianAlgebra C = coinvariant_ring(GroupSpec(pair.m, pair.p, pair.n), opts);
            // K = G(p,p,n) basic invariants: e_i(x^p) for i < n, then x1...xn.
            std::vector<Polynomial> extra;
            for (long i = 1; i < pair.n; ++i) extra.push_back(e_hat(C.ring(), i, pair.p));
            extra.push_back(Polynomial::term(C.ring(), Monomial(C.ring().nvars(), 1), 1));
            return ExtensionSpec{C, extra, extra, relative_coinvariant(pair, opts)};
        }
        case PairTag::gmmn_chain: {
            ArtinianAlgebra C = coinvariant_ring(GroupSpec(pair.m, pair.m, pair.n), opts);
            // K = G(m,m,n-1) fixes the last coordinate; its invariants are
            // e_i(x^m) in the first n-1 variables for i <= n-2, then
            // e_{n-1}(first n-1 variables) and x_n itself.
            std::vector<Polynomial> extra;
            for (long i = 1; i <= pair.n - 2; ++i)
                extra.push_back(e_hat_prefix(C.ring(), i, pair.m, pair.n - 1));
            Polynomial a_img = e_hat_prefix(C.ring(), pair.n - 1, 1, pair.n - 1);
            Polynomial b_img = Polynomial::variable(C.ring(), C.ring().nvars() - 1);
            extra.push_back(a_img);
            extra.push_back(b_img);
            std::vector<Polynomial> iota{a_img, b_img};
            return ExtensionSpec{C, std::move(extra), std::move(iota),
                                 relative_coinvariant(pair, opts)};
        }
    }
    throw unsupported_pair("unknown pair tag");
}

}  // namespace artin
