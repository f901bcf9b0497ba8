#pragma once

#include <string>
#include <vector>

#include "artin/algebra.hpp"

namespace artin {

// Quotient by the union of both ideals in the combined ring. Variable sets
// must already be disjoint (rename first); fields must agree.
ArtinianAlgebra tensor_algebra(const ArtinianAlgebra& A, const ArtinianAlgebra& B,
                               BuildOptions opts = {});

// Lift a polynomial over one tensor factor into the combined ring;
// `offset` is the index of the factor's first variable there.
Polynomial lift_to_tensor(const WeightedRing& factor, const Polynomial& p,
                          const WeightedRing& combined, std::size_t offset);

// Nested-presentation free-extension data: C and B live over the same ring
// with I_B = I_C + (b_extra_gens); iota sends A's i-th variable to
// iota_images[i] in C.
struct ExtensionSpec {
    ArtinianAlgebra C;
    std::vector<Polynomial> b_extra_gens;
    std::vector<Polynomial> iota_images;
    ArtinianAlgebra A;
};

struct FreeExtensionReport {
    bool dim_product_ok = false;   // dim C == dim A * dim B
    bool kernel_ok = false;        // <b_extra> + I_C == <iota images> + I_C
    bool iota_welldefined_ok = false;  // generators of I_A map to 0 in C
    bool verdict = false;          // dim_product_ok && kernel_ok
    std::size_t dim_C = 0, dim_A = 0, dim_B = 0;
    HilbertFunction hilbert_B;
};

FreeExtensionReport verify_free_extension(const ExtensionSpec& spec, BuildOptions opts = {});

struct TensorLefschetzReport {
    Partition jordan_A, jordan_B;
    Partition predicted;  // Clebsch-Gordan expansion of the factor types
    Partition actual;     // Jordan type of l_A (x) 1 + 1 (x) l_B in the tensor
    bool match = false;
    HilbertFunction hilbert_C;
    Partition hilbert_C_conj;
    bool sl_A = false, sl_B = false, sl_C = false;
    std::vector<std::string> hypothesis_notes;  // non-symmetric H, small characteristic
};

// Predicted vs directly computed Jordan type for the sum of two linear
// forms in the tensor. A mismatch with clean hypotheses is an engine bug
// and throws; with a small characteristic it is only recorded.
TensorLefschetzReport tensor_lefschetz_report(const ArtinianAlgebra& A,
                                              const ArtinianAlgebra& B,
                                              const AlgebraElement& l_A,
                                              const AlgebraElement& l_B,
                                              BuildOptions opts = {});

}  // namespace artin
