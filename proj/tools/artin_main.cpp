#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "artin/algebra.hpp"
#include "artin/coinvariants.hpp"
#include "artin/errors.hpp"
#include "artin/parse.hpp"
#include "artin/presentation.hpp"
#include "artin/report.hpp"
#include "artin/rng.hpp"
#include "artin/tensor.hpp"

using namespace artin;

namespace {

struct Common {
    bool json = false;
    bool csv = false;
    long dim_cap = 5000;
    long trials = 60;
    std::uint64_t seed = 1;
};

BuildOptions opts_of(const Common& c) {
    BuildOptions o;
    o.dim_cap = static_cast<std::size_t>(c.dim_cap);
    return o;
}

void warn_modular(const ArtinianAlgebra& A) {
    if (A.char_warning())
        std::cerr << "warning: characteristic " << A.ring().field().characteristic()
                  << " <= socle degree " << A.socle_degree()
                  << "; rank statements may fail the non-modular hypotheses\n";
}

void print_algebra_header(const ArtinianAlgebra& A) {
    std::cout << "ring:    ";
    for (std::size_t i = 0; i < A.ring().nvars(); ++i) {
        if (i) std::cout << ", ";
        std::cout << A.ring().names()[i];
    }
    std::cout << "  (weights ";
    for (std::size_t i = 0; i < A.ring().nvars(); ++i) {
        if (i) std::cout << ",";
        std::cout << A.ring().weights()[i];
    }
    std::cout << "; " << A.ring().field().to_string() << ")\n";
    std::cout << "ideal:   ";
    for (std::size_t i = 0; i < A.ideal_gens().size(); ++i) {
        if (i) std::cout << "; ";
        std::cout << A.ideal_gens()[i].to_string(A.ring());
    }
    std::cout << "\n";
    std::cout << "dim:     " << A.dim() << "\n";
    std::cout << "socle:   " << A.socle_degree() << "\n";
}

int cmd_hilbert(const std::string& path, const Common& c) {
    PresentationFile pf = load_presentation(path);
    ArtinianAlgebra A = ArtinianAlgebra::build(pf.ring, pf.ideal, opts_of(c));
    warn_modular(A);
    HilbertFunction gr = assoc_graded_hilbert(A);
    if (c.json) {
        Json j;
        j["algebra"] = algebra_json(A);
        j["hilbert"] = hilbert_json(A.hilbert());
        j["hilbert_conjugate"] = partition_json(conjugate(A.hilbert()));
        j["gr"] = hilbert_json(gr);
        j["gr_conjugate"] = partition_json(conjugate(gr));
        std::cout << j.dump(2) << "\n";
    } else {
        print_algebra_header(A);
        std::cout << "H(A):    " << A.hilbert().to_string() << "\n";
        std::cout << "H(A)^v:  " << conjugate(A.hilbert()).to_string() << "\n";
        std::cout << "H(Gr):   " << gr.to_string() << "\n";
        std::cout << "H(Gr)^v: " << conjugate(gr).to_string() << "\n";
    }
    return 0;
}

int cmd_jordan(const std::string& path, const std::string& element, long random_trials,
               bool strings, const Common& c) {
    PresentationFile pf = load_presentation(path);
    ArtinianAlgebra A = ArtinianAlgebra::build(pf.ring, pf.ideal, opts_of(c));
    warn_modular(A);

    AlgebraElement l;
    if (random_trials > 0) {
        // Report the first element realizing a dominance-maximal sampled type.
        auto pool = positive_degree_basis_indices(A, false);
        Rng rng(c.seed);
        std::vector<AlgebraElement> cands;
        std::vector<Partition> types;
        for (long t = 0; t < random_trials; ++t) {
            AlgebraElement cand = sample_element(A, pool, t, rng);
            types.push_back(jordan_type(A, cand));
            cands.push_back(std::move(cand));
        }
        std::size_t best = 0;
        for (std::size_t i = 1; i < cands.size(); ++i)
            if (dominates(types[i], types[best]) == Dominance::greater) best = i;
        l = cands[best];
    } else {
        l = make_element(A, parse_polynomial(A.ring(), element));
    }

    Json j = jordan_report_json(A, l, strings, c.json, c.trials, c.seed);
    if (c.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        print_algebra_header(A);
        std::cout << "element: " << l.rep.to_string(A.ring()) << "\n";
        std::cout << "jordan:  " << j["jordan_type"].dump() << "\n";
        std::cout << "ranks:   " << j["rank_sequence"].dump() << "\n";
        if (strings) {
            std::cout << "strings:\n";
            for (const auto& sj : j["strings"]) {
                std::cout << "  length " << sj["length"] << ": generator "
                          << sj["generator"].get<std::string>();
                if (sj.contains("degree")) std::cout << " (degree " << sj["degree"] << ")";
                std::cout << "\n";
            }
        }
        std::cout << "H(A)^v:  " << j["comparisons"]["hilbert_conjugate"].dump() << "  ("
                  << j["comparisons"]["vs_hilbert"].get<std::string>() << ")\n";
        std::cout << "H(Gr)^v: " << j["comparisons"]["gr_conjugate"].dump() << "  ("
                  << j["comparisons"]["vs_gr"].get<std::string>() << ")\n";
        std::cout << "sl: " << (j["is_sl_element"].get<bool>() ? "yes" : "no")
                  << "   sljt: " << (j["has_sljt"].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
}

void print_verdict(const char* name, const LefschetzVerdict& v, const WeightedRing& ring) {
    std::cout << name << ": " << to_string(v.status);
    if (v.obstruction != Obstruction::none) std::cout << " [" << to_string(v.obstruction) << "]";
    if (v.witness)
        std::cout << "  witness " << v.witness->rep.to_string(ring);
    else
        std::cout << "  -- " << v.detail;
    std::cout << "\n";
}

int cmd_verdicts(const std::string& path, const Common& c) {
    PresentationFile pf = load_presentation(path);
    ArtinianAlgebra A = ArtinianAlgebra::build(pf.ring, pf.ideal, opts_of(c));
    warn_modular(A);
    LefschetzVerdict sl = sl_verdict(A, c.trials, c.seed);
    LefschetzVerdict sljt = sljt_verdict(A, c.trials, c.seed);
    if (c.json) {
        Json j;
        j["algebra"] = algebra_json(A);
        j["sl"] = verdict_json(sl, A.ring());
        j["sljt"] = verdict_json(sljt, A.ring());
        std::cout << j.dump(2) << "\n";
    } else {
        print_algebra_header(A);
        print_verdict("sl", sl, A.ring());
        print_verdict("sljt", sljt, A.ring());
    }
    return 0;
}

RelativePair parse_pair_flag(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw parse_error("expected amn:m,n | ampn:m,p,n | gmmn:m,n", 1, 1);
    std::string kind = s.substr(0, colon);
    std::vector<long> nums;
    std::string rest = s.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        std::string piece = rest.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        if (!piece.empty()) nums.push_back(std::stol(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (kind == "amn" && nums.size() == 2) return RelativePair::amn(nums[0], nums[1]);
    if (kind == "ampn" && nums.size() == 3)
        return RelativePair::ampn(nums[0], nums[1], nums[2]);
    if (kind == "gmmn" && nums.size() == 2) return RelativePair::gmmn(nums[0], nums[1]);
    throw parse_error("expected amn:m,n | ampn:m,p,n | gmmn:m,n", 1, 1);
}

GroupSpec parse_group_flag(const std::string& s) {
    std::vector<long> nums;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string piece =
            s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!piece.empty()) nums.push_back(std::stol(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (nums.size() != 3) throw parse_error("expected --group m,p,n", 1, 1);
    return GroupSpec(nums[0], nums[1], nums[2]);
}

int cmd_coinv(const std::string& group_flag, const std::string& pair_flag,
              const std::string& action, const Common& c) {
    BuildOptions opts = opts_of(c);
    bool have_pair = !pair_flag.empty();
    bool have_group = !group_flag.empty();
    if (have_pair == have_group)
        throw parse_error("exactly one of --group / --pair is required", 1, 1);

    if (action == "hilbert") {
        HilbertFunction h = have_pair ? hilbert_poly_closed(parse_pair_flag(pair_flag))
                                      : coinvariant_hilbert_closed(parse_group_flag(group_flag));
        if (c.csv) {
            std::cout << "degree,coefficient\n";
            for (std::size_t i = 0; i < h.size(); ++i)
                std::cout << i << "," << h[i] << "\n";
            return 0;
        }
        if (c.json) {
            Json j;
            j["label"] = have_pair ? parse_pair_flag(pair_flag).to_string()
                                   : parse_group_flag(group_flag).to_string();
            j["hilbert"] = hilbert_json(h);
            j["hilbert_conjugate"] = partition_json(conjugate(h));
            j["dim"] = h.total();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "H:   " << h.to_string() << "\n";
            std::cout << "H^v: " << conjugate(h).to_string() << "\n";
            std::cout << "dim: " << h.total() << "\n";
        }
        return 0;
    }

    if (action == "freeext") {
        if (!have_pair) throw parse_error("freeext needs --pair", 1, 1);
        ExtensionSpec spec = pair_free_extension(parse_pair_flag(pair_flag), opts);
        FreeExtensionReport rep = verify_free_extension(spec, opts);
        if (c.json) {
            std::cout << freeext_json(rep).dump(2) << "\n";
        } else {
            std::cout << "dim C = " << rep.dim_C << ", dim A = " << rep.dim_A
                      << ", dim B = " << rep.dim_B << "\n";
            std::cout << "dim product ok: " << (rep.dim_product_ok ? "yes" : "no") << "\n";
            std::cout << "kernel ok:      " << (rep.kernel_ok ? "yes" : "no") << "\n";
            std::cout << "iota defined:   " << (rep.iota_welldefined_ok ? "yes" : "no") << "\n";
            std::cout << "free extension: " << (rep.verdict ? "yes" : "no") << "\n";
        }
        return 0;
    }

    // Remaining actions need the algebra built.
    ArtinianAlgebra A = have_pair ? relative_coinvariant(parse_pair_flag(pair_flag), opts)
                                  : coinvariant_ring(parse_group_flag(group_flag), opts);
    warn_modular(A);

    if (action == "build") {
        HilbertFunction closed = have_pair
                                     ? hilbert_poly_closed(parse_pair_flag(pair_flag))
                                     : coinvariant_hilbert_closed(parse_group_flag(group_flag));
        bool agree = closed == A.hilbert();
        if (c.json) {
            Json j;
            j["algebra"] = algebra_json(A);
            j["closed_form"] = hilbert_json(closed);
            j["closed_form_agrees"] = agree;
            std::cout << j.dump(2) << "\n";
        } else {
            print_algebra_header(A);
            std::cout << "H(A):        " << A.hilbert().to_string() << "\n";
            std::cout << "closed form: " << closed.to_string() << "  ("
                      << (agree ? "agrees" : "DISAGREES") << ")\n";
        }
        if (!agree) return 1;
        return 0;
    }

    if (action == "verdicts") {
        LefschetzVerdict sl = sl_verdict(A, c.trials, c.seed);
        LefschetzVerdict sljt = sljt_verdict(A, c.trials, c.seed);
        if (c.json) {
            Json j;
            j["algebra"] = algebra_json(A);
            j["sl"] = verdict_json(sl, A.ring());
            j["sljt"] = verdict_json(sljt, A.ring());
            std::cout << j.dump(2) << "\n";
        } else {
            print_algebra_header(A);
            print_verdict("sl", sl, A.ring());
            print_verdict("sljt", sljt, A.ring());
        }
        return 0;
    }

    if (action == "scan") {
        std::string label =
            have_pair ? parse_pair_flag(pair_flag).to_string() : parse_group_flag(group_flag).to_string();
        GrScanRow row = gr_scan_algebra(label, A, c.trials, c.seed);
        if (c.json) {
            std::cout << gr_scan_json({row}).dump(2) << "\n";
        } else {
            std::cout << row.label << ": H=" << row.hilbert.to_string()
                      << " Gr=" << row.gr.to_string() << " H^v=" << row.hilbert_conj.to_string()
                      << " Gr^v=" << row.gr_conj.to_string()
                      << (row.conjugates_equal ? "  (equal)" : "  (NOT equal)")
                      << "  sljt: " << to_string(row.sljt.status) << "\n";
        }
        return 0;
    }

    throw parse_error("unknown coinv action '" + action + "'", 1, 1);
}

int cmd_almkvist(long m, const std::string& range, const Common& c) {
    long lo = 0, hi = 0;
    auto dots = range.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stol(range);
    } else {
        lo = std::stol(range.substr(0, dots));
        hi = std::stol(range.substr(dots + 2));
    }
    AlmkvistScan scan = almkvist_scan(m, lo, hi);
    if (c.csv) {
        // Long-format coefficient table, one row per (n, degree).
        std::cout << "m,n,degree,coefficient\n";
        for (const auto& row : scan.rows) {
            HilbertFunction h = hilbert_poly_closed(RelativePair::amn(m, row.n));
            for (std::size_t i = 0; i < h.size(); ++i)
                std::cout << m << "," << row.n << "," << i << "," << h[i] << "\n";
        }
        return 0;
    }
    if (c.json) {
        std::cout << almkvist_json(scan).dump(2) << "\n";
    } else {
        std::cout << "m = " << scan.m << "\n";
        for (const auto& row : scan.rows) {
            std::cout << "n = " << row.n << "  degree " << row.degree << "  "
                      << (row.unimodal ? "unimodal" : "NOT unimodal");
            if (!row.unimodal)
                std::cout << "  violation at (" << row.a << "," << row.b << "," << row.c << ")";
            std::cout << "\n";
        }
        if (scan.largest_violation >= 0)
            std::cout << "largest scanned non-unimodal n: " << scan.largest_violation << "\n";
        else
            std::cout << "all scanned n unimodal\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Jordan-type / Lefschetz toolkit for graded Artinian algebras"};
    app.require_subcommand(1);
    Common common;

    std::string file, element;
    long random_trials = 0;
    bool strings = false;
    std::string group_flag, pair_flag, action, range;
    long alm_m = 2;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", common.json, "machine-readable output");
        sub->add_flag("--csv", common.csv, "coefficient table output (where applicable)");
        sub->add_option("--dim-cap", common.dim_cap, "refuse quotients larger than this");
        sub->add_option("--trials", common.trials, "random trials for witness search");
        sub->add_option("--seed", common.seed, "random seed");
    };

    CLI::App* hilb = app.add_subcommand("hilbert", "Hilbert function report for a presentation");
    hilb->add_option("file", file)->required();
    add_common(hilb);

    CLI::App* jord = app.add_subcommand("jordan", "Jordan type of an element");
    jord->add_option("file", file)->required();
    jord->add_option("--element", element, "element of the maximal ideal");
    jord->add_option("--random", random_trials, "sample this many elements, report the best");
    jord->add_flag("--strings", strings, "include Jordan strings");
    add_common(jord);

    CLI::App* verd = app.add_subcommand("verdicts", "strong Lefschetz / SLJT verdicts");
    verd->add_option("file", file)->required();
    add_common(verd);

    CLI::App* coin = app.add_subcommand("coinv", "coinvariant and relative coinvariant rings");
    coin->add_option("--group", group_flag, "m,p,n");
    coin->add_option("--pair", pair_flag, "amn:m,n | ampn:m,p,n | gmmn:m,n");
    coin->add_option("action", action, "build | hilbert | verdicts | scan | freeext")
        ->required();
    add_common(coin);

    CLI::App* alm = app.add_subcommand("almkvist", "unimodality scan of the closed forms");
    alm->add_option("--m", alm_m)->required();
    alm->add_option("--n", range, "single n or lo..hi")->required();
    add_common(alm);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hilb->parsed()) return cmd_hilbert(file, common);
        if (jord->parsed()) {
            if (element.empty() && random_trials <= 0) {
                std::cerr << "error: one of --element / --random is required\n";
                return 2;
            }
            return cmd_jordan(file, element, random_trials, strings, common);
        }
        if (verd->parsed()) return cmd_verdicts(file, common);
        if (coin->parsed()) return cmd_coinv(group_flag, pair_flag, action, common);
        if (alm->parsed()) return cmd_almkvist(alm_m, range, common);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const resource_cap& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 4;
    } catch (const semantic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
