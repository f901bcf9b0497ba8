#include "artin/tensor.hpp"

#include <algorithm>

#include "artin/errors.hpp"

namespace artin {

Polynomial lift_to_tensor(const WeightedRing& factor, const Polynomial& p,
                          const WeightedRing& combined, std::size_t offset) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(combined.nvars(), 0);
        for (std::size_t i = 0; i < factor.nvars(); ++i) m[offset + i] = t.mono[i];
        terms.push_back(Term{std::move(m), t.coef});
    }
    return Polynomial::from_terms(combined, std::move(terms));
}

namespace {

WeightedRing combined_ring(const ArtinianAlgebra& A, const ArtinianAlgebra& B) {
    if (A.ring().field() != B.ring().field())
        throw semantic_error("tensor factors must share a coefficient field");
    std::vector<std::string> names = A.ring().names();
    for (const auto& nm : B.ring().names()) {
        if (std::find(names.begin(), names.end(), nm) != names.end())
            throw semantic_error("tensor factors share the variable name '" + nm +
                                 "'; rename first");
        names.push_back(nm);
    }
    std::vector<std::int32_t> weights = A.ring().weights();
    weights.insert(weights.end(), B.ring().weights().begin(), B.ring().weights().end());
    return WeightedRing(std::move(names), std::move(weights), A.ring().field());
}

}  // namespace

ArtinianAlgebra tensor_algebra(const ArtinianAlgebra& A, const ArtinianAlgebra& B,
                               BuildOptions opts) {
    WeightedRing ring = combined_ring(A, B);
    std::vector<Polynomial> gens;
    for (const auto& g : A.ideal_gens()) gens.push_back(lift_to_tensor(A.ring(), g, ring, 0));
    for (const auto& g : B.ideal_gens())
        gens.push_back(lift_to_tensor(B.ring(), g, ring, A.ring().nvars()));
    ArtinianAlgebra C = ArtinianAlgebra::build(ring, std::move(gens), opts);
    if (C.hilbert() != hilbert_tensor(A.hilbert(), B.hilbert()))
        throw std::logic_error("tensor Hilbert function disagrees with the factor product");
    return C;
}

FreeExtensionReport verify_free_extension(const ExtensionSpec& spec, BuildOptions opts) {
    const WeightedRing& ring = spec.C.ring();
    FreeExtensionReport rep;

    for (const auto& im : spec.iota_images)
        if (!ring.field().is_zero(im.constant_coef(ring)))
            throw presentation_mismatch("iota image " + im.to_string(ring) +
                                        " lies outside the maximal ideal of C");
    if (spec.iota_images.size() != spec.A.ring().nvars())
        throw presentation_mismatch("need one iota image per base-algebra variable");

    // Fiber B = C-ring / (I_C + extra).
    std::vector<Polynomial> b_gens = spec.C.ideal_gens();
    for (const auto& g : spec.b_extra_gens) b_gens.push_back(g);
    ArtinianAlgebra B = ArtinianAlgebra::build(ring, std::move(b_gens), opts);

    rep.dim_C = spec.C.dim();
    rep.dim_A = spec.A.dim();
    rep.dim_B = B.dim();
    rep.hilbert_B = B.hilbert();
    rep.dim_product_ok = rep.dim_C == rep.dim_A * rep.dim_B;

    // ker(pi) == iota(m_A)*C, as ideals of the ambient ring containing I_C.
    std::vector<Polynomial> iota_side = spec.C.ideal_gens();
    for (const auto& g : spec.iota_images) iota_side.push_back(g);
    GroebnerBasis gb_iota = buchberger(ring, iota_side);
    const GroebnerBasis& gb_b = B.gb();
    rep.kernel_ok = true;
    for (const auto& g : spec.b_extra_gens)
        if (!ideal_contains(ring, gb_iota, g)) rep.kernel_ok = false;
    for (const auto& g : spec.iota_images)
        if (!ideal_contains(ring, gb_b, g)) rep.kernel_ok = false;

    rep.iota_welldefined_ok = true;
    for (const auto& g : spec.A.ideal_gens()) {
        Polynomial image = substitute(spec.A.ring(), g, ring, spec.iota_images);
        if (!spec.C.reduce(image).is_zero()) rep.iota_welldefined_ok = false;
    }

    rep.verdict = rep.dim_product_ok && rep.kernel_ok;
    return rep;
}

TensorLefschetzReport tensor_lefschetz_report(const ArtinianAlgebra& A,
                                              const ArtinianAlgebra& B,
                                              const AlgebraElement& l_A,
                                              const AlgebraElement& l_B,
                                              BuildOptions opts) {
    auto require_linear = [](const AlgebraElement& l, const char* which) {
        if (!l.is_zero() && (!l.degree || *l.degree != 1))
            throw precondition_violated(std::string(which) + " must be a linear form");
    };
    require_linear(l_A, "l_A");
    require_linear(l_B, "l_B");

    TensorLefschetzReport rep;
    rep.jordan_A = jordan_type(A, l_A);
    rep.jordan_B = jordan_type(B, l_B);
    rep.predicted = tensor_jordan_type(rep.jordan_A, rep.jordan_B);

    ArtinianAlgebra C = tensor_algebra(A, B, opts);
    Polynomial sum = add(C.ring(), lift_to_tensor(A.ring(), l_A.rep, C.ring(), 0),
                         lift_to_tensor(B.ring(), l_B.rep, C.ring(), A.ring().nvars()));
    AlgebraElement l_C = make_element(C, sum);
    rep.actual = jordan_type(C, l_C);
    rep.match = rep.predicted == rep.actual;

    rep.hilbert_C = C.hilbert();
    rep.hilbert_C_conj = conjugate(C.hilbert());
    rep.sl_A = is_sl_element(A, l_A).ok;
    rep.sl_B = is_sl_element(B, l_B).ok;
    rep.sl_C = is_sl_element(C, l_C).ok;

    if (!is_symmetric(A.hilbert()))
        rep.hypothesis_notes.push_back("H(A) = " + A.hilbert().to_string() +
                                       " is not symmetric");
    if (!is_symmetric(B.hilbert()))
        rep.hypothesis_notes.push_back("H(B) = " + B.hilbert().to_string() +
                                       " is not symmetric");
    bool small_char = C.ring().field().modular_warning(A.socle_degree() + B.socle_degree());
    if (small_char)
        rep.hypothesis_notes.push_back("characteristic " +
                                       std::to_string(C.ring().field().characteristic()) +
                                       " <= socle degree sum " +
                                       std::to_string(A.socle_degree() + B.socle_degree()));
    if (!rep.match && !small_char)
        throw std::logic_error("tensor Jordan type disagrees with the Clebsch-Gordan expansion");
    return rep;
}

}  // namespace artin
