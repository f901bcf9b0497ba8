#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace artin {

// Weakly decreasing sequence of positive integers. The common currency for
// Jordan types and conjugated Hilbert functions.
class Partition {
  public:
    Partition() = default;                              // empty partition of 0
    explicit Partition(std::vector<long> parts);        // throws on invalid input

    const std::vector<long>& parts() const { return parts_; }
    long sum() const { return sum_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long operator[](std::size_t i) const { return parts_[i]; }

    bool operator==(const Partition&) const = default;

    // Comma-separated descending integers, e.g. "7,5,3,3". Empty partition -> "".
    std::string to_string() const;

  private:
    std::vector<long> parts_;
    long sum_ = 0;
};

enum class Dominance { less, greater, equal, incomparable };

std::string to_string(Dominance d);

// Conjugate (transpose of the Ferrers diagram); an involution.
Partition conjugate(const Partition& p);

// Dominance comparison by prefix sums; throws mismatched_weight when the
// partitions have different totals.
Dominance dominates(const Partition& p, const Partition& q);

// Convenience: p <= q in the dominance order.
bool dominated_by(const Partition& p, const Partition& q);

// Jordan type of x+y on k[x,y]/(x^m, y^n): (n+m-1, n+m-3, ..., |n-m|+1),
// min(m,n) parts summing to m*n.
Partition clebsch_gordan(long m, long n);

// Multiset union of clebsch_gordan(p_i, q_j) over all part pairs.
Partition tensor_jordan_type(const Partition& p, const Partition& q);

// Coefficient sequence of a graded vector space, indexed from degree 0.
// Internal zeros are kept (non-standard gradings produce them); trailing
// zeros are trimmed on construction.
class HilbertFunction {
  public:
    HilbertFunction() = default;  // the zero algebra; values() empty
    explicit HilbertFunction(std::vector<long> values);

    const std::vector<long>& values() const { return values_; }
    long operator[](std::size_t i) const { return i < values_.size() ? values_[i] : 0; }
    std::size_t size() const { return values_.size(); }
    long socle_degree() const { return static_cast<long>(values_.size()) - 1; }
    long total() const;

    // Drops zeros, sorts descending. Explicit and lossy.
    Partition as_partition() const;

    bool operator==(const HilbertFunction&) const = default;

    // Bracketed coefficient list from degree 0, e.g. "[1,2,2,1]".
    std::string to_string() const;

  private:
    std::vector<long> values_;
};

// Conjugate of the Hilbert function viewed as a partition (H^v in reports).
Partition conjugate(const HilbertFunction& h);

// Coefficient-wise product of the generating polynomials.
HilbertFunction hilbert_tensor(const HilbertFunction& a, const HilbertFunction& b);

struct UnimodalReport {
    bool unimodal = true;
    // A witness h[a] > h[b] < h[c] with a < b < c when not unimodal.
    long a = -1, b = -1, c = -1;
};

UnimodalReport is_unimodal(const HilbertFunction& h);

bool is_symmetric(const HilbertFunction& h);

// All partitions of n (n <= ~60), for exhaustive property checks.
std::vector<Partition> all_partitions(long n);

Partition parse_partition(const std::string& text);  // "7,5,3,3"

}  // namespace artin
