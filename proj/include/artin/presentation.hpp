#pragma once

#include <string>
#include <vector>

#include "artin/ring.hpp"

namespace artin {

// Algebra presentation file:
//
//   # comment
//   ring: x, y
//   weights: 1, 2          (optional, default all 1)
//   char: 0                (optional, default 0)
//   ideal: x^2; y^3
//
// The ideal block may span several lines; polynomials are separated by ';'.
struct PresentationFile {
    WeightedRing ring;
    std::vector<Polynomial> ideal;
};

PresentationFile parse_presentation(const std::string& text);
PresentationFile load_presentation(const std::string& path);

// Extension spec file: the same ring/weights/char/ideal blocks present C,
// plus bextra: (fiber relations added to I_C), iota: (one image per base
// variable), and the base algebra's own aring/aweights/aideal blocks.
struct ExtensionFile {
    WeightedRing ring;  // ambient ring of C (and B)
    std::vector<Polynomial> c_ideal;
    std::vector<Polynomial> b_extra;
    std::vector<Polynomial> iota;
    WeightedRing a_ring;
    std::vector<Polynomial> a_ideal;
};

ExtensionFile parse_extension(const std::string& text);
ExtensionFile load_extension(const std::string& path);

}  // namespace artin
