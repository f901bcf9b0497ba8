#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/errors.hpp"
#include "artin/parse.hpp"
#include "artin/tensor.hpp"

using namespace artin;

namespace {

ArtinianAlgebra build(std::initializer_list<const char*> vars,
                      std::initializer_list<std::int32_t> weights,
                      std::initializer_list<const char*> gens) {
    WeightedRing r(std::vector<std::string>(vars.begin(), vars.end()),
                   std::vector<std::int32_t>(weights));
    std::vector<Polynomial> ps;
    for (const char* s : gens) ps.push_back(parse_polynomial(r, s));
    return ArtinianAlgebra::build(std::move(r), std::move(ps));
}

AlgebraElement el(const ArtinianAlgebra& A, const char* text) {
    return make_element(A, parse_polynomial(A.ring(), text));
}

ArtinianAlgebra truncation(const char* var, long power) {
    WeightedRing r({var}, {1});
    return ArtinianAlgebra::build(r, {pow(r, Polynomial::variable(r, 0), power)});
}

}  // namespace

TEST_CASE("tensor of two truncations is the two-variable monomial quotient") {
    ArtinianAlgebra C = tensor_algebra(truncation("x", 2), truncation("y", 3));
    CHECK(C.dim() == 6);
    CHECK(C.hilbert() == HilbertFunction({1, 2, 2, 1}));
    CHECK(C.ring().names() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("tensor Hilbert function is the product") {
    ArtinianAlgebra A = build({"x", "y"}, {1, 1}, {"x^2", "x*y", "y^4"});
    ArtinianAlgebra B = build({"w", "z"}, {2, 1}, {"w^2", "w*z", "z^4"});
    CHECK(A.hilbert() == HilbertFunction({1, 2, 1, 1}));
    CHECK(B.hilbert() == HilbertFunction({1, 1, 2, 1}));
    ArtinianAlgebra C = tensor_algebra(A, B);
    CHECK(C.dim() == 25);
    CHECK(C.hilbert() == HilbertFunction({1, 3, 5, 7, 5, 3, 1}));
}

TEST_CASE("tensor with the one-dimensional algebra changes nothing") {
    ArtinianAlgebra A = build({"x", "y"}, {1, 1}, {"x^2", "y^3"});
    ArtinianAlgebra K = truncation("t", 1);
    ArtinianAlgebra C = tensor_algebra(A, K);
    CHECK(C.dim() == A.dim());
    CHECK(C.hilbert() == A.hilbert());
}

TEST_CASE("tensor rejects clashing names") {
    ArtinianAlgebra A = truncation("x", 2);
    CHECK_THROWS_AS(tensor_algebra(A, A), semantic_error);
}

TEST_CASE("tensor lefschetz report on the 25-dimensional product") {
    ArtinianAlgebra A = build({"x", "y"}, {1, 1}, {"x^2", "x*y", "y^4"});
    ArtinianAlgebra B = build({"w", "z"}, {2, 1}, {"w^2", "w*z", "z^4"});
    TensorLefschetzReport rep =
        tensor_lefschetz_report(A, B, el(A, "x + y"), el(B, "z"));
    CHECK(rep.jordan_A == Partition({4, 1}));
    CHECK(rep.jordan_B == Partition({4, 1}));
    CHECK(rep.predicted == Partition({7, 5, 4, 4, 3, 1, 1}));
    CHECK(rep.actual == rep.predicted);
    CHECK(rep.match);
    CHECK(rep.hilbert_C_conj == Partition({7, 5, 5, 3, 3, 1, 1}));
    CHECK_FALSE(rep.actual == rep.hilbert_C_conj);
    CHECK(rep.sl_A);
    CHECK(rep.sl_B);
    CHECK_FALSE(rep.sl_C);
    // Both factors have asymmetric Hilbert functions; the notes say so.
    CHECK(rep.hypothesis_notes.size() == 2);
}

TEST_CASE("tensor lefschetz transfer on truncations") {
    ArtinianAlgebra A = truncation("x", 2);
    ArtinianAlgebra B = truncation("y", 3);
    TensorLefschetzReport rep = tensor_lefschetz_report(A, B, el(A, "x"), el(B, "y"));
    CHECK(rep.predicted == Partition({4, 2}));
    CHECK(rep.actual == Partition({4, 2}));
    CHECK(rep.sl_A);
    CHECK(rep.sl_B);
    CHECK(rep.sl_C);
    CHECK(rep.hypothesis_notes.empty());
}

TEST_CASE("tensor with a trivial fiber keeps the jordan type") {
    ArtinianAlgebra A = build({"x", "y"}, {1, 1}, {"x^2", "y^3"});
    ArtinianAlgebra K = truncation("t", 1);
    TensorLefschetzReport rep = tensor_lefschetz_report(A, K, el(A, "x + y"), el(K, "0"));
    CHECK(rep.predicted == Partition({4, 2}));
    CHECK(rep.actual == Partition({4, 2}));
}

TEST_CASE("verify_free_extension on a nested coinvariant presentation") {
    // C = k[x1,x2,x3]/(e1(x^3), e2(x^3), e3) and its chain down to the
    // symmetric-group coinvariants; base in new weighted variables.
    WeightedRing r({"x1", "x2", "x3"}, {1, 1, 1});
    auto P = [&](const char* s) { return parse_polynomial(r, s); };
    Polynomial e1 = P("x1 + x2 + x3");
    Polynomial e2 = P("x1*x2 + x1*x3 + x2*x3");
    Polynomial e3 = P("x1*x2*x3");
    Polynomial ehat1 = P("x1^3 + x2^3 + x3^3");
    Polynomial ehat2 = P("x1^3*x2^3 + x1^3*x3^3 + x2^3*x3^3");
    ArtinianAlgebra C = ArtinianAlgebra::build(r, {ehat1, ehat2, e3});
    CHECK(C.dim() == 54);
    CHECK(C.hilbert() == HilbertFunction({1, 3, 6, 8, 9, 9, 8, 6, 3, 1}));

    WeightedRing ar({"z1", "z2"}, {1, 2});
    ArtinianAlgebra A = ArtinianAlgebra::build(
        ar, {parse_polynomial(ar, "z1^3 - 3*z1*z2"), parse_polynomial(ar, "z2^3")});
    CHECK(A.dim() == 9);

    ExtensionSpec spec{C, {e1, e2, e3}, {e1, e2}, A};
    FreeExtensionReport rep = verify_free_extension(spec);
    CHECK(rep.dim_C == 54);
    CHECK(rep.dim_A == 9);
    CHECK(rep.dim_B == 6);
    CHECK(rep.hilbert_B == HilbertFunction({1, 2, 2, 1}));
    CHECK(rep.dim_product_ok);
    CHECK(rep.kernel_ok);
    CHECK(rep.iota_welldefined_ok);
    CHECK(rep.verdict);
}

TEST_CASE("verify_free_extension detects a wrong base") {
    WeightedRing r({"x", "y"}, {1, 1});
    auto P = [&](const char* s) { return parse_polynomial(r, s); };
    ArtinianAlgebra C = ArtinianAlgebra::build(r, {P("x^2"), P("y^3")});
    // Base k[t]/(t^4) has dimension 4, but the fiber C/(x) has dimension 3:
    // 4 * 3 != 6.
    WeightedRing tr({"t"}, {1});
    ArtinianAlgebra A4 =
        ArtinianAlgebra::build(tr, {pow(tr, Polynomial::variable(tr, 0), 4)});
    ExtensionSpec spec{C, {P("x")}, {P("x")}, A4};
    FreeExtensionReport rep = verify_free_extension(spec);
    CHECK_FALSE(rep.dim_product_ok);
    CHECK_FALSE(rep.verdict);
    CHECK(rep.kernel_ok);              // the two ideals still agree
    CHECK(rep.iota_welldefined_ok);    // t^4 -> x^4 = 0 in C
}

TEST_CASE("verify_free_extension with trivial base: verdict holds only when B == C") {
    WeightedRing r({"x"}, {1});
    ArtinianAlgebra C = ArtinianAlgebra::build(r, {parse_polynomial(r, "x^2")});
    WeightedRing tr({"t"}, {1});
    ArtinianAlgebra K = ArtinianAlgebra::build(tr, {parse_polynomial(tr, "t")});

    // No extra fiber relations: B == C and the chain verifies.
    ExtensionSpec same{C, {}, {parse_polynomial(r, "0")}, K};
    FreeExtensionReport rep = verify_free_extension(same);
    CHECK(rep.dim_B == C.dim());
    CHECK(rep.dim_product_ok);
    CHECK(rep.kernel_ok);
    CHECK(rep.verdict);

    // Killing the whole maximal ideal makes B = k, and the dimensions no
    // longer multiply (kernel equality fails too: (x) != (0) mod I_C).
    ExtensionSpec collapsed{C, {parse_polynomial(r, "x")}, {parse_polynomial(r, "0")}, K};
    FreeExtensionReport rep2 = verify_free_extension(collapsed);
    CHECK(rep2.dim_B == 1);
    CHECK_FALSE(rep2.dim_product_ok);
    CHECK_FALSE(rep2.kernel_ok);
    CHECK_FALSE(rep2.verdict);
}

TEST_CASE("verify_free_extension rejects iota images outside the maximal ideal") {
    WeightedRing r({"x"}, {1});
    ArtinianAlgebra C = ArtinianAlgebra::build(r, {parse_polynomial(r, "x^2")});
    ExtensionSpec spec{C, {}, {parse_polynomial(r, "1 + x")}, C};
    CHECK_THROWS_AS(verify_free_extension(spec), presentation_mismatch);
}
