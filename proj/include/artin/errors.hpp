#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Base class for everything the library throws on bad mathematical input.
// The CLI maps these to exit code 3 (semantic error).
struct semantic_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct mismatched_weight : semantic_error {
    using semantic_error::semantic_error;
};
struct not_artinian : semantic_error {
    using semantic_error::semantic_error;
};
struct not_homogeneous : semantic_error {
    using semantic_error::semantic_error;
};
struct not_connected : semantic_error {
    using semantic_error::semantic_error;
};
struct not_in_maximal_ideal : semantic_error {
    using semantic_error::semantic_error;
};
struct not_symmetric : semantic_error {
    using semantic_error::semantic_error;
};
struct hypothesis_violation : semantic_error {
    using semantic_error::semantic_error;
};
struct precondition_violated : semantic_error {
    using semantic_error::semantic_error;
};
struct unsupported_pair : semantic_error {
    using semantic_error::semantic_error;
};
struct index_out_of_range : semantic_error {
    using semantic_error::semantic_error;
};
struct presentation_mismatch : semantic_error {
    using semantic_error::semantic_error;
};

// Exceeding a configured dimension cap; CLI exit code 4.
struct resource_cap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input that does not lex/parse; carries 1-based position. CLI exit code 2.
struct parse_error : std::runtime_error {
    int line;
    int column;
    parse_error(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg) + " (line " + std::to_string(line_) +
                             ", column " + std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

}  // namespace artin
