#include "artin/algebra.hpp"

#include <algorithm>

#include "artin/errors.hpp"
#include "artin/rng.hpp"

namespace artin {

ArtinianAlgebra ArtinianAlgebra::build(WeightedRing ring, std::vector<Polynomial> gens,
                                       BuildOptions opts) {
    ArtinianAlgebra A(std::move(ring));
    for (const auto& g : gens) {
        if (!g.is_homogeneous(A.ring_))
            throw not_homogeneous("generator not homogeneous for the weights: " +
                                  g.to_string(A.ring_));
        if (!g.is_zero() && g.wdeg(A.ring_) == 0)
            throw not_connected("ideal contains the constant " + g.to_string(A.ring_));
    }
    A.gens_ = std::move(gens);
    A.gb_ = buchberger(A.ring_, A.gens_);
    for (const auto& g : A.gb_.gens)
        if (mono_is_one(g.leading().mono)) throw not_connected("ideal contains a unit");
    A.basis_ = quotient_monomial_basis(A.ring_, A.gb_, opts.dim_cap);
    A.hilbert_ = hilbert_function(A.ring_, A.gb_, opts.dim_cap);
    for (std::size_t i = 0; i < A.basis_.dim(); ++i) A.index_[A.basis_.monomials[i]] = i;
    A.char_warning_ = A.ring_.field().modular_warning(A.socle_degree());
    return A;
}

Polynomial ArtinianAlgebra::reduce(const Polynomial& p) const {
    return normal_form(ring_, p, gb_);
}

Vec ArtinianAlgebra::coords(const Polynomial& nf) const {
    Vec v(dim(), Rational(0));
    for (const auto& t : nf.terms()) v[basis_index(t.mono)] = t.coef;
    return v;
}

Polynomial ArtinianAlgebra::from_coords(const Vec& v) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) terms.push_back(Term{basis_.monomials[i], v[i]});
    return Polynomial::from_terms(ring_, std::move(terms));
}

std::size_t ArtinianAlgebra::basis_index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw semantic_error("monomial " + ring_.mono_to_string(m) +
                             " is not a standard monomial");
    return it->second;
}

std::vector<std::size_t> ArtinianAlgebra::degree_indices(long d) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis_.dim(); ++i)
        if (basis_.degrees[i] == d) idx.push_back(i);
    return idx;
}

AlgebraElement make_element(const ArtinianAlgebra& A, const Polynomial& p) {
    AlgebraElement e;
    e.rep = A.reduce(p);
    e.degree = e.rep.homogeneous_degree(A.ring());
    e.in_max_ideal = A.ring().field().is_zero(e.rep.constant_coef(A.ring()));
    return e;
}

namespace {
void require_max_ideal(const AlgebraElement& l) {
    if (!l.in_max_ideal)
        throw not_in_maximal_ideal("element has a nonzero constant term");
}
}  // namespace

Mat mult_operator(const ArtinianAlgebra& A, const AlgebraElement& l) {
    require_max_ideal(l);
    const std::size_t n = A.dim();
    Mat L(n, n, A.ring().field());
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial prod = A.reduce(term_mul(A.ring(), l.rep, A.basis().monomials[j], 1));
        for (const auto& t : prod.terms()) L.at(A.basis_index(t.mono), j) = t.coef;
    }
    return L;
}

std::vector<std::size_t> rank_sequence(const ArtinianAlgebra& A, const Mat& L) {
    std::vector<std::size_t> ranks;
    Mat P = L;
    while (true) {
        std::size_t r = P.rank();
        ranks.push_back(r);
        if (r == 0) break;
        if (ranks.size() > A.dim())
            throw semantic_error("multiplication operator is not nilpotent");
        P = P.mul(L);
    }
    return ranks;
}

Partition partition_from_ranks(std::size_t dim, const std::vector<std::size_t>& ranks) {
    // (#parts >= k) = rank(L^{k-1}) - rank(L^k); that sequence is the conjugate.
    std::vector<long> conj;
    std::size_t prev = dim;
    for (std::size_t r : ranks) {
        if (prev == r) break;
        conj.push_back(static_cast<long>(prev - r));
        prev = r;
    }
    return conjugate(Partition(std::move(conj)));
}

Partition jordan_type(const ArtinianAlgebra& A, const AlgebraElement& l) {
    require_max_ideal(l);
    Mat L = mult_operator(A, l);
    return partition_from_ranks(A.dim(), rank_sequence(A, L));
}

namespace {

// Kernel basis of P (a power of the multiplication operator). For graded
// operators the kernel splits over the grading, so compute it degree by
// degree; the resulting vectors are homogeneous, which keeps Jordan string
// generators graded.
std::vector<Vec> kernel_of_power(const ArtinianAlgebra& A, const Mat& P,
                                 std::optional<long> op_degree, long power) {
    const std::size_t n = A.dim();
    if (!op_degree) return P.kernel_basis();
    std::vector<Vec> out;
    long shift = *op_degree * power;
    for (long d = 0; d <= A.socle_degree(); ++d) {
        auto cols = A.degree_indices(d);
        if (cols.empty()) continue;
        auto rows = A.degree_indices(d + shift);
        if (rows.empty()) {
            for (auto c : cols) {
                Vec v(n, Rational(0));
                v[c] = 1;
                out.push_back(std::move(v));
            }
            continue;
        }
        Mat block = P.submatrix(rows, cols);
        for (const auto& kv : block.kernel_basis()) {
            Vec v(n, Rational(0));
            for (std::size_t t = 0; t < cols.size(); ++t) v[cols[t]] = kv[t];
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace

std::vector<JordanString> jordan_strings(const ArtinianAlgebra& A, const AlgebraElement& l) {
    require_max_ideal(l);
    const std::size_t n = A.dim();
    const FieldSpec& field = A.ring().field();
    Mat L = mult_operator(A, l);

    std::vector<Mat> powers;  // powers[k] = L^k
    powers.push_back(Mat::identity(n, field));
    while (!powers.back().is_zero()) {
        powers.push_back(powers.back().mul(L));
        if (powers.size() > n + 1) throw semantic_error("operator is not nilpotent");
    }
    const std::size_t s = powers.size() - 1;  // L^s == 0, L^{s-1} != 0

    std::optional<long> ldeg = l.is_zero() ? std::optional<long>(0) : l.degree;
    std::vector<std::vector<Vec>> kernels(s + 1);  // kernels[k] = basis of ker L^k
    for (std::size_t k = 1; k <= s; ++k) kernels[k] = kernel_of_power(A, powers[k], ldeg, k);

    struct Picked {
        Vec z;
        std::size_t level;
    };
    std::vector<Picked> picked;
    for (std::size_t i = s; i >= 1; --i) {
        RowSpace T(n, field);
        if (i >= 2)
            for (const auto& v : kernels[i - 1]) T.add(v);
        for (const auto& pk : picked)
            T.add(powers[pk.level - i].apply(pk.z));
        for (const auto& v : kernels[i]) {
            if (T.add(v)) picked.push_back(Picked{v, i});
        }
        if (i == 1) break;
    }

    std::sort(picked.begin(), picked.end(),
              [](const Picked& a, const Picked& b) { return a.level > b.level; });

    // The union of all strings must be a basis of A.
    RowSpace all(n, field);
    std::vector<JordanString> strings;
    for (const auto& pk : picked) {
        JordanString js;
        js.generator = pk.z;
        js.generator_poly = A.from_coords(pk.z);
        js.length = static_cast<long>(pk.level);
        js.degree = js.generator_poly.homogeneous_degree(A.ring());
        for (std::size_t k = 0; k < pk.level; ++k)
            if (!all.add(powers[k].apply(pk.z)))
                throw std::logic_error("Jordan strings failed to form a basis");
        strings.push_back(std::move(js));
    }
    if (all.dim() != n) throw std::logic_error("Jordan strings do not span");

    // Lengths must realize the rank-sequence partition.
    std::vector<std::size_t> ranks;
    for (std::size_t k = 1; k <= s; ++k) ranks.push_back(powers[k].rank());
    Partition from_ranks = partition_from_ranks(n, ranks);
    std::vector<long> lens;
    for (const auto& st : strings) lens.push_back(st.length);
    if (Partition(lens) != from_ranks)
        throw std::logic_error("string lengths disagree with the rank sequence");
    return strings;
}

HilbertFunction assoc_graded_hilbert(const ArtinianAlgebra& A) {
    const std::size_t n = A.dim();
    const FieldSpec& field = A.ring().field();
    // Multiplication matrices of the variables.
    std::vector<Mat> X;
    for (std::size_t v = 0; v < A.ring().nvars(); ++v)
        X.push_back(mult_operator(A, make_element(A, Polynomial::variable(A.ring(), v))));

    std::vector<long> power_dims;  // dim m^i
    power_dims.push_back(static_cast<long>(n));
    // m^1 = span of the positive-degree standard monomials.
    RowSpace cur(n, field);
    for (std::size_t i = 0; i < n; ++i) {
        if (A.basis().degrees[i] > 0) {
            Vec v(n, Rational(0));
            v[i] = 1;
            cur.add(std::move(v));
        }
    }
    while (cur.dim() > 0) {
        power_dims.push_back(static_cast<long>(cur.dim()));
        RowSpace next(n, field);
        for (const auto& row : cur.rows())
            for (const auto& Xi : X) next.add(Xi.apply(row));
        cur = std::move(next);
    }
    power_dims.push_back(0);
    std::vector<long> values;
    for (std::size_t i = 0; i + 1 < power_dims.size(); ++i)
        values.push_back(power_dims[i] - power_dims[i + 1]);
    return HilbertFunction(std::move(values));
}

SlCheck is_sl_element(const ArtinianAlgebra& A, const AlgebraElement& l) {
    if (l.is_zero()) return SlCheck{A.dim() == 1, -1, -1};
    if (!l.degree || *l.degree != 1) return SlCheck{false, -1, -1};

    const long j = A.socle_degree();
    Mat L = mult_operator(A, l);
    Mat P = L;
    bool ok = true;
    long fail_i = -1, fail_k = -1;
    for (long k = 1; k <= j && ok; ++k) {
        if (k > 1) P = P.mul(L);
        for (long i = 0; i + k <= j && ok; ++i) {
            auto cols = A.degree_indices(i);
            auto rows = A.degree_indices(i + k);
            std::size_t want = std::min(cols.size(), rows.size());
            if (want == 0) continue;
            if (P.submatrix(rows, cols).rank() != want) {
                ok = false;
                fail_i = i;
                fail_k = k;
            }
        }
    }
    bool via_jordan = jordan_type(A, l) == conjugate(A.hilbert());
    if (ok != via_jordan)
        throw std::logic_error("rank criterion and Jordan-type criterion disagree");
    return SlCheck{ok, fail_i, fail_k};
}

bool has_sljt(const ArtinianAlgebra& A, const AlgebraElement& l) {
    require_max_ideal(l);
    return jordan_type(A, l) == conjugate(A.hilbert());
}

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::yes: return "yes";
        case VerdictStatus::no: return "no";
        case VerdictStatus::probably_no: return "probably_no";
    }
    return "?";
}

std::string to_string(Obstruction o) {
    switch (o) {
        case Obstruction::none: return "none";
        case Obstruction::empty_degree_one: return "EmptyDegreeOne";
        case Obstruction::non_unimodal_hilbert: return "NonUnimodalHilbert";
        case Obstruction::gr_dominance: return "GrDominanceObstruction";
        case Obstruction::rank_deficit: return "RankDeficit";
    }
    return "?";
}

std::vector<std::size_t> positive_degree_basis_indices(const ArtinianAlgebra& A,
                                                       bool degree_one_only) {
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        long d = A.basis().degrees[i];
        if (degree_one_only ? d == 1 : d >= 1) pool.push_back(i);
    }
    return pool;
}

AlgebraElement variable_sum(const ArtinianAlgebra& A, bool degree_one_only) {
    Polynomial sum;
    for (std::size_t v = 0; v < A.ring().nvars(); ++v) {
        if (degree_one_only && A.ring().weights()[v] != 1) continue;
        sum = add(A.ring(), sum, Polynomial::variable(A.ring(), v));
    }
    return make_element(A, sum);
}

AlgebraElement sample_element(const ArtinianAlgebra& A, const std::vector<std::size_t>& pool,
                              long trial, Rng& rng, long bound) {
    if (trial == 0) return variable_sum(A, false);
    std::vector<Term> terms;
    for (std::size_t idx : pool) {
        Rational c(rng.uniform(-bound, bound));
        if (c != 0) terms.push_back(Term{A.basis().monomials[idx], c});
    }
    return make_element(A, Polynomial::from_terms(A.ring(), std::move(terms)));
}

namespace {

// Shared scaffolding for the two verdicts: obstructions, then seeded search.
LefschetzVerdict verdict_search(const ArtinianAlgebra& A, long trials, std::uint64_t seed,
                                bool degree_one_only) {
    if (trials < 1) throw precondition_violated("trials must be >= 1");
    LefschetzVerdict v;

    if (A.dim() == 1) {
        v.status = VerdictStatus::yes;
        v.witness = make_element(A, Polynomial::zero());
        v.detail = "trivial one-dimensional algebra, witness 0";
        return v;
    }

    Partition h_conj = conjugate(A.hilbert());

    if (degree_one_only) {
        if (A.hilbert()[1] == 0 && A.socle_degree() > 0) {
            v.status = VerdictStatus::no;
            v.obstruction = Obstruction::empty_degree_one;
            v.detail = "no linear forms: Hilbert function " + A.hilbert().to_string() +
                       " has h_1 = 0";
            return v;
        }
        UnimodalReport u = is_unimodal(A.hilbert());
        if (!u.unimodal) {
            v.status = VerdictStatus::no;
            v.obstruction = Obstruction::non_unimodal_hilbert;
            v.detail = "Hilbert function " + A.hilbert().to_string() +
                       " fails unimodality at indices (" + std::to_string(u.a) + "," +
                       std::to_string(u.b) + "," + std::to_string(u.c) + ")";
            return v;
        }
    }

    Partition gr_conj = conjugate(assoc_graded_hilbert(A));
    if (!dominated_by(h_conj, gr_conj)) {
        v.status = VerdictStatus::no;
        v.obstruction = Obstruction::gr_dominance;
        v.detail = "H(A)^v = (" + h_conj.to_string() + ") exceeds H(Gr)^v = (" +
                   gr_conj.to_string() + ") in the dominance order";
        return v;
    }

    auto pool = positive_degree_basis_indices(A, degree_one_only);
    Rng rng(seed);
    for (long t = 0; t < trials; ++t) {
        AlgebraElement cand =
            t == 0 ? variable_sum(A, degree_one_only) : sample_element(A, pool, t, rng);
        if (cand.is_zero()) continue;
        bool hit = degree_one_only ? is_sl_element(A, cand).ok : has_sljt(A, cand);
        if (hit) {
            v.status = VerdictStatus::yes;
            v.witness = cand;
            v.detail = "witness " + cand.rep.to_string(A.ring());
            v.trials_used = t + 1;
            return v;
        }
    }
    v.status = VerdictStatus::probably_no;
    v.trials_used = trials;
    v.detail = "no witness in " + std::to_string(trials) + " seeded trials";
    return v;
}

}  // namespace

LefschetzVerdict sl_verdict(const ArtinianAlgebra& A, long trials, std::uint64_t seed) {
    return verdict_search(A, trials, seed, true);
}

LefschetzVerdict sljt_verdict(const ArtinianAlgebra& A, long trials, std::uint64_t seed) {
    return verdict_search(A, trials, seed, false);
}

std::vector<Partition> generic_jordan_type_lower_bound(const ArtinianAlgebra& A, long trials,
                                                       std::uint64_t seed) {
    if (trials < 1) throw precondition_violated("trials must be >= 1");
    auto pool = positive_degree_basis_indices(A, false);
    Rng rng(seed);
    std::vector<Partition> maximal;
    for (long t = 0; t < trials; ++t) {
        Partition p = jordan_type(A, sample_element(A, pool, t, rng));
        bool dominated = false;
        for (const auto& q : maximal) {
            Dominance d = dominates(p, q);
            if (d == Dominance::less || d == Dominance::equal) { dominated = true; break; }
        }
        if (dominated) continue;
        std::erase_if(maximal, [&](const Partition& q) {
            return dominates(q, p) == Dominance::less;
        });
        maximal.push_back(std::move(p));
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
    return maximal;
}

DominanceAudit dominance_audit(const ArtinianAlgebra& A, const AlgebraElement& l) {
    require_max_ideal(l);
    DominanceAudit audit;
    audit.jordan = jordan_type(A, l);
    audit.hilbert_conj = conjugate(A.hilbert());
    audit.gr_conj = conjugate(assoc_graded_hilbert(A));
    audit.vs_hilbert = dominates(audit.jordan, audit.hilbert_conj);
    audit.vs_gr = dominates(audit.jordan, audit.gr_conj);
    audit.element_homogeneous = l.degree.has_value() || l.is_zero();
    if (audit.vs_gr != Dominance::less && audit.vs_gr != Dominance::equal)
        throw std::logic_error("Jordan type exceeds the associated-graded bound");
    if (audit.element_homogeneous) {
        if (audit.vs_hilbert != Dominance::less && audit.vs_hilbert != Dominance::equal)
            throw std::logic_error("homogeneous Jordan type exceeds the Hilbert bound");
    } else if (audit.vs_hilbert == Dominance::greater) {
        audit.counterexample_flag = true;
    }
    return audit;
}

bool centered_check(const ArtinianAlgebra& A, const AlgebraElement& l) {
    if (!is_symmetric(A.hilbert()))
        throw hypothesis_violation("centered check requires a symmetric Hilbert function");
    if (l.is_zero() ? A.dim() != 1 : (!l.degree || *l.degree != 1))
        throw hypothesis_violation("centered check requires a linear form");
    const long j = A.socle_degree();
    bool centered = true;
    for (const auto& st : jordan_strings(A, l)) {
        if (!st.degree) throw std::logic_error("graded string without a degree");
        if (2 * *st.degree + st.length - 1 != j) { centered = false; break; }
    }
    if (centered != is_sl_element(A, l).ok)
        throw std::logic_error("centered criterion disagrees with the rank criterion");
    return centered;
}

HeightTwoReport height_two_sljt_predictor(long a, long b, long m, long n) {
    if (a < 1 || b < 1 || m < 1 || n < 1 || a > b || a * m != b * n)
        throw precondition_violated("need 1 <= a <= b and a*m == b*n");
    WeightedRing ring({"x", "y"}, {static_cast<std::int32_t>(m), static_cast<std::int32_t>(n)});
    Polynomial rel = sub(ring, Polynomial::term(ring, Monomial{static_cast<std::int32_t>(a), 0}, 1),
                         Polynomial::term(ring, Monomial{0, static_cast<std::int32_t>(b)}, 1));
    Polynomial xy = Polynomial::term(ring, Monomial{1, 1}, 1);
    ArtinianAlgebra A = ArtinianAlgebra::build(ring, {rel, xy});
    HeightTwoReport rep;
    rep.hilbert_conj = conjugate(A.hilbert());
    rep.gr_conj = conjugate(assoc_graded_hilbert(A));
    rep.conjugates_equal = rep.hilbert_conj == rep.gr_conj;
    rep.divisor_criterion = (m % n == 0) && ((a - 1) * m == b * n);
    rep.agreement = rep.conjugates_equal == rep.divisor_criterion;
    return rep;
}

}  // namespace artin
