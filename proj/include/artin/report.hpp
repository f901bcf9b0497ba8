#pragma once

#include <json.hpp>

#include "artin/algebra.hpp"
#include "artin/coinvariants.hpp"
#include "artin/tensor.hpp"

namespace artin {

using Json = nlohmann::ordered_json;

Json partition_json(const Partition& p);
Json hilbert_json(const HilbertFunction& h);
Json algebra_json(const ArtinianAlgebra& A);
Json verdict_json(const LefschetzVerdict& v, const WeightedRing& ring);

// The full per-element report: algebra block, element, jordan_type,
// rank_sequence, strings, verdicts (optional), comparisons.
Json jordan_report_json(const ArtinianAlgebra& A, const AlgebraElement& l,
                        bool include_strings, bool include_verdicts, long trials,
                        std::uint64_t seed);

Json audit_json(const DominanceAudit& audit);
Json freeext_json(const FreeExtensionReport& rep);
Json tensor_report_json(const TensorLefschetzReport& rep);
Json gr_scan_json(const std::vector<GrScanRow>& rows);
Json almkvist_json(const AlmkvistScan& scan);

}  // namespace artin
