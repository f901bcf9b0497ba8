#include "artin/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "artin/errors.hpp"

namespace artin {

namespace {

// Divide p by the current basis until no term is divisible by any leading
// monomial; full (multi-term) reduction so the remainder is canonical.
Polynomial reduce_full(const WeightedRing& ring, Polynomial p,
                       const std::vector<Polynomial>& basis) {
    Polynomial remainder;
    while (!p.is_zero()) {
        const Term& lt = p.leading();
        bool reduced = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            if (mono_divides(g.leading().mono, lt.mono)) {
                Rational factor = ring.field().div(lt.coef, g.leading().coef);
                p = sub(ring, p, term_mul(ring, g, mono_div(lt.mono, g.leading().mono), factor));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            remainder = add(ring, remainder, Polynomial::term(ring, lt.mono, lt.coef));
            p = sub(ring, p, Polynomial::term(ring, lt.mono, lt.coef));
        }
    }
    return remainder;
}

struct Pair {
    long lcm_deg;
    std::size_t i, j;
    Monomial lcm;
    bool operator<(const Pair& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace

GroebnerBasis buchberger(const WeightedRing& ring, std::vector<Polynomial> gens) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(monic(ring, g));

    // Seed pairs; alive[] tracks generators not yet discarded as redundant.
    std::set<Pair> pairs;
    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (basis[i].is_zero()) continue;
            Monomial l = mono_lcm(basis[i].leading().mono, basis[k].leading().mono);
            pairs.insert(Pair{ring.wdeg(l), i, k, std::move(l)});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    auto chain_criterion = [&](const Pair& pr) {
        // Skip (i,j) when some other basis element's LT divides lcm(i,j) and
        // both crossing pairs are gone from the queue.
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (k == pr.i || k == pr.j || basis[k].is_zero()) continue;
            if (!mono_divides(basis[k].leading().mono, pr.lcm)) continue;
            auto in_queue = [&](std::size_t a, std::size_t b) {
                if (a > b) std::swap(a, b);
                Monomial l = mono_lcm(basis[a].leading().mono, basis[b].leading().mono);
                return pairs.count(Pair{ring.wdeg(l), a, b, l}) > 0;
            };
            if (!in_queue(pr.i, k) && !in_queue(pr.j, k)) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        if (f.is_zero() || g.is_zero()) continue;
        if (mono_coprime(f.leading().mono, g.leading().mono)) continue;
        if (chain_criterion(pr)) continue;
        Polynomial spoly =
            sub(ring, term_mul(ring, f, mono_div(pr.lcm, f.leading().mono), 1),
                term_mul(ring, g, mono_div(pr.lcm, g.leading().mono), 1));
        Polynomial r = reduce_full(ring, spoly, basis);
        if (r.is_zero()) continue;
        r = monic(ring, r);
        basis.push_back(r);
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop generators whose LT is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero()) continue;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].is_zero()) continue;
            const Monomial& a = basis[j].leading().mono;
            const Monomial& b = basis[i].leading().mono;
            if (mono_divides(a, b) && (a != b || j < i)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Interreduce to the unique reduced basis.
    std::vector<Polynomial> reduced(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = monic(ring, reduce_full(ring, minimal[i], others));
    }
    std::erase_if(reduced, [](const Polynomial& p) { return p.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring.cmp(a.leading().mono, b.leading().mono) < 0;
    });

    std::string order = "wdegrevlex(";
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
        if (i) order += ',';
        order += std::to_string(ring.weights()[i]);
    }
    order += ")";
    return GroebnerBasis{std::move(reduced), std::move(order)};
}

Polynomial normal_form(const WeightedRing& ring, const Polynomial& p,
                       const GroebnerBasis& gb) {
    return reduce_full(ring, p, gb.gens);
}

bool ideal_contains(const WeightedRing& ring, const GroebnerBasis& gb, const Polynomial& p) {
    return normal_form(ring, p, gb).is_zero();
}

namespace {

void enumerate_standard(const WeightedRing& ring, const std::vector<Monomial>& lts,
                        const std::vector<std::int32_t>& bound, Monomial& cur,
                        std::size_t var, std::size_t dim_cap,
                        std::vector<Monomial>& out) {
    if (var == ring.nvars()) {
        for (const auto& lt : lts)
            if (mono_divides(lt, cur)) return;
        if (dim_cap && out.size() >= dim_cap)
            throw resource_cap("quotient dimension exceeds cap " + std::to_string(dim_cap));
        out.push_back(cur);
        return;
    }
    for (std::int32_t e = 0; e < bound[var]; ++e) {
        cur[var] = e;
        enumerate_standard(ring, lts, bound, cur, var + 1, dim_cap, out);
    }
    cur[var] = 0;
}

}  // namespace

QuotientBasis quotient_monomial_basis(const WeightedRing& ring, const GroebnerBasis& gb,
                                      std::size_t dim_cap) {
    std::vector<Monomial> lts;
    for (const auto& g : gb.gens) {
        if (mono_is_one(g.leading().mono))
            throw not_connected("ideal contains a unit");
        lts.push_back(g.leading().mono);
    }
    // Artinian iff every variable has a pure power among the leading terms.
    std::vector<std::int32_t> bound(ring.nvars(), 0);
    for (std::size_t v = 0; v < ring.nvars(); ++v) {
        std::int32_t best = 0;
        for (const auto& lt : lts) {
            bool pure = lt[v] > 0;
            for (std::size_t u = 0; pure && u < ring.nvars(); ++u)
                if (u != v && lt[u] > 0) pure = false;
            if (pure && (best == 0 || lt[v] < best)) best = lt[v];
        }
        if (best == 0)
            throw not_artinian("no pure power of variable '" + ring.names()[v] +
                               "' in the leading-term ideal; quotient is infinite");
        bound[v] = best;
    }
    QuotientBasis qb;
    Monomial cur(ring.nvars(), 0);
    enumerate_standard(ring, lts, bound, cur, 0, dim_cap, qb.monomials);
    std::sort(qb.monomials.begin(), qb.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return ring.cmp(a, b) < 0; });
    qb.degrees.reserve(qb.monomials.size());
    for (const auto& m : qb.monomials) qb.degrees.push_back(ring.wdeg(m));
    return qb;
}

HilbertFunction hilbert_function(const WeightedRing& ring, const GroebnerBasis& gb,
                                 std::size_t dim_cap) {
    for (const auto& g : gb.gens)
        if (!g.is_homogeneous(ring))
            throw not_homogeneous("generator not homogeneous for the weights: " +
                                  g.to_string(ring));
    QuotientBasis qb = quotient_monomial_basis(ring, gb, dim_cap);
    long socle = 0;
    for (long d : qb.degrees) socle = std::max(socle, d);
    std::vector<long> values(static_cast<std::size_t>(socle) + 1, 0);
    for (long d : qb.degrees) values[static_cast<std::size_t>(d)]++;
    return HilbertFunction(std::move(values));
}

}  // namespace artin
