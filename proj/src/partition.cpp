#include "artin/partition.hpp"

#include <algorithm>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw semantic_error("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw semantic_error("partition parts must be weakly decreasing");
    }
    sum_ = std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::string to_string(Dominance d) {
    switch (d) {
        case Dominance::less: return "less";
        case Dominance::greater: return "greater";
        case Dominance::equal: return "equal";
        case Dominance::incomparable: return "incomparable";
    }
    return "?";
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<long> m(static_cast<std::size_t>(p[0]), 0);
    for (long part : p.parts())
        for (long i = 0; i < part; ++i) m[static_cast<std::size_t>(i)]++;
    return Partition(std::move(m));
}

Dominance dominates(const Partition& p, const Partition& q) {
    if (p.sum() != q.sum())
        throw mismatched_weight("dominance requires partitions of the same number: " +
                                std::to_string(p.sum()) + " vs " + std::to_string(q.sum()));
    bool p_ge = true, q_ge = true;
    long sp = 0, sq = 0;
    std::size_t n = std::max(p.size(), q.size());
    for (std::size_t i = 0; i < n; ++i) {
        sp += i < p.size() ? p[i] : 0;
        sq += i < q.size() ? q[i] : 0;
        if (sp < sq) p_ge = false;
        if (sq < sp) q_ge = false;
    }
    if (p_ge && q_ge) return Dominance::equal;
    if (p_ge) return Dominance::greater;
    if (q_ge) return Dominance::less;
    return Dominance::incomparable;
}

bool dominated_by(const Partition& p, const Partition& q) {
    Dominance d = dominates(p, q);
    return d == Dominance::less || d == Dominance::equal;
}

Partition clebsch_gordan(long m, long n) {
    if (m < 1 || n < 1) throw semantic_error("clebsch_gordan requires positive block sizes");
    std::vector<long> parts;
    long lo = std::min(m, n);
    for (long k = 1; k <= lo; ++k) parts.push_back(n + m - 2 * k + 1);
    return Partition(std::move(parts));
}

Partition tensor_jordan_type(const Partition& p, const Partition& q) {
    std::vector<long> parts;
    for (long pi : p.parts())
        for (long qj : q.parts()) {
            Partition cg = clebsch_gordan(pi, qj);
            parts.insert(parts.end(), cg.parts().begin(), cg.parts().end());
        }
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return Partition(std::move(parts));
}

HilbertFunction::HilbertFunction(std::vector<long> values) : values_(std::move(values)) {
    for (long v : values_)
        if (v < 0) throw semantic_error("Hilbert function values must be non-negative");
    while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

long HilbertFunction::total() const {
    return std::accumulate(values_.begin(), values_.end(), 0L);
}

Partition HilbertFunction::as_partition() const {
    std::vector<long> parts;
    for (long v : values_)
        if (v > 0) parts.push_back(v);
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    return Partition(std::move(parts));
}

std::string HilbertFunction::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values_[i]);
    }
    return s + "]";
}

Partition conjugate(const HilbertFunction& h) { return conjugate(h.as_partition()); }

HilbertFunction hilbert_tensor(const HilbertFunction& a, const HilbertFunction& b) {
    if (a.size() == 0 || b.size() == 0) return HilbertFunction{};
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return HilbertFunction(std::move(c));
}

UnimodalReport is_unimodal(const HilbertFunction& h) {
    const auto& v = h.values();
    long n = static_cast<long>(v.size());
    // First valley b flanked by larger values; a = last earlier index above
    // h[b], c = first later index above h[b].
    for (long b = 1; b + 1 < n; ++b) {
        long a = -1, c = -1;
        for (long i = b - 1; i >= 0; --i)
            if (v[i] > v[b]) { a = i; break; }
        if (a < 0) continue;
        for (long i = b + 1; i < n; ++i)
            if (v[i] > v[b]) { c = i; break; }
        if (c < 0) continue;
        return UnimodalReport{false, a, b, c};
    }
    return UnimodalReport{};
}

bool is_symmetric(const HilbertFunction& h) {
    const auto& v = h.values();
    std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] != v[n - 1 - i]) return false;
    return true;
}

namespace {
void partitions_rec(long n, long max_part, std::vector<long>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> all_partitions(long n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    std::vector<long> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<long> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && text[j] != ',' && text[j] != ' ') ++j;
        parts.push_back(std::stol(text.substr(i, j - i)));
        i = j;
    }
    return Partition(std::move(parts));
}

}  // namespace artin
