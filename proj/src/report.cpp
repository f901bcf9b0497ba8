#include "artin/report.hpp"

namespace artin {

Json partition_json(const Partition& p) {
    Json arr = Json::array();
    for (long part : p.parts()) arr.push_back(part);
    return arr;
}

Json hilbert_json(const HilbertFunction& h) {
    Json arr = Json::array();
    for (long v : h.values()) arr.push_back(v);
    return arr;
}

Json algebra_json(const ArtinianAlgebra& A) {
    Json j;
    j["vars"] = A.ring().names();
    j["weights"] = A.ring().weights();
    j["char"] = A.ring().field().characteristic();
    Json ideal = Json::array();
    for (const auto& g : A.ideal_gens()) ideal.push_back(g.to_string(A.ring()));
    j["ideal"] = ideal;
    j["dim"] = A.dim();
    j["hilbert"] = hilbert_json(A.hilbert());
    j["socle"] = A.socle_degree();
    if (A.char_warning()) j["char_warning"] = true;
    return j;
}

Json verdict_json(const LefschetzVerdict& v, const WeightedRing& ring) {
    Json j;
    j["status"] = to_string(v.status);
    if (v.obstruction != Obstruction::none) j["obstruction"] = to_string(v.obstruction);
    if (v.witness) j["witness"] = v.witness->rep.to_string(ring);
    j["detail"] = v.detail;
    if (v.trials_used > 0) j["trials"] = v.trials_used;
    return j;
}

Json jordan_report_json(const ArtinianAlgebra& A, const AlgebraElement& l,
                        bool include_strings, bool include_verdicts, long trials,
                        std::uint64_t seed) {
    Json j;
    j["algebra"] = algebra_json(A);
    j["element"] = l.rep.to_string(A.ring());

    Mat L = mult_operator(A, l);
    auto ranks = rank_sequence(A, L);
    Partition jt = partition_from_ranks(A.dim(), ranks);
    j["jordan_type"] = partition_json(jt);
    Json rj = Json::array();
    for (auto r : ranks) rj.push_back(r);
    j["rank_sequence"] = rj;

    if (include_strings) {
        Json arr = Json::array();
        for (const auto& st : jordan_strings(A, l)) {
            Json sj;
            sj["generator"] = st.generator_poly.to_string(A.ring());
            sj["length"] = st.length;
            if (st.degree) sj["degree"] = *st.degree;
            arr.push_back(sj);
        }
        j["strings"] = arr;
    }

    if (include_verdicts) {
        Json vj;
        vj["sl"] = verdict_json(sl_verdict(A, trials, seed), A.ring());
        vj["sljt"] = verdict_json(sljt_verdict(A, trials, seed), A.ring());
        j["verdicts"] = vj;
    }

    DominanceAudit audit = dominance_audit(A, l);
    j["comparisons"] = audit_json(audit);
    j["is_sl_element"] = is_sl_element(A, l).ok;
    j["has_sljt"] = has_sljt(A, l);
    return j;
}

Json audit_json(const DominanceAudit& audit) {
    Json j;
    j["jordan_type"] = partition_json(audit.jordan);
    j["hilbert_conjugate"] = partition_json(audit.hilbert_conj);
    j["gr_conjugate"] = partition_json(audit.gr_conj);
    j["vs_hilbert"] = to_string(audit.vs_hilbert);
    j["vs_gr"] = to_string(audit.vs_gr);
    j["element_homogeneous"] = audit.element_homogeneous;
    if (audit.counterexample_flag) j["COUNTEREXAMPLE_TO_DOMINANCE_QUESTION"] = true;
    return j;
}

Json freeext_json(const FreeExtensionReport& rep) {
    Json j;
    j["dim_C"] = rep.dim_C;
    j["dim_A"] = rep.dim_A;
    j["dim_B"] = rep.dim_B;
    j["hilbert_B"] = hilbert_json(rep.hilbert_B);
    j["dim_product_ok"] = rep.dim_product_ok;
    j["kernel_ok"] = rep.kernel_ok;
    j["iota_welldefined_ok"] = rep.iota_welldefined_ok;
    j["verdict"] = rep.verdict;
    return j;
}

Json tensor_report_json(const TensorLefschetzReport& rep) {
    Json j;
    j["jordan_A"] = partition_json(rep.jordan_A);
    j["jordan_B"] = partition_json(rep.jordan_B);
    j["predicted"] = partition_json(rep.predicted);
    j["actual"] = partition_json(rep.actual);
    j["match"] = rep.match;
    j["hilbert_C"] = hilbert_json(rep.hilbert_C);
    j["hilbert_C_conjugate"] = partition_json(rep.hilbert_C_conj);
    j["sl_A"] = rep.sl_A;
    j["sl_B"] = rep.sl_B;
    j["sl_C"] = rep.sl_C;
    j["hypothesis_notes"] = rep.hypothesis_notes;
    return j;
}

Json gr_scan_json(const std::vector<GrScanRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json j;
        j["label"] = row.label;
        j["hilbert"] = hilbert_json(row.hilbert);
        j["gr"] = hilbert_json(row.gr);
        j["hilbert_conjugate"] = partition_json(row.hilbert_conj);
        j["gr_conjugate"] = partition_json(row.gr_conj);
        j["conjugates_equal"] = row.conjugates_equal;
        j["sljt_status"] = to_string(row.sljt.status);
        if (row.sljt.witness) j["sljt_detail"] = row.sljt.detail;
        arr.push_back(j);
    }
    return arr;
}

Json almkvist_json(const AlmkvistScan& scan) {
    Json j;
    j["m"] = scan.m;
    Json rows = Json::array();
    for (const auto& row : scan.rows) {
        Json r;
        r["n"] = row.n;
        r["unimodal"] = row.unimodal;
        r["degree"] = row.degree;
        if (!row.unimodal) {
            r["violation"] = Json::array({row.a, row.b, row.c});
        }
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["largest_violation"] = scan.largest_violation;
    j["stable_from"] = scan.stable_from;
    return j;
}

}  // namespace artin
