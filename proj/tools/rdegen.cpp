// Command-line front end: weight matrices, monomial-freeness
// classification, restricted generating sets, tableau enumeration, the
// exact three-space comparison, and bulk surveys.
//
// Exit codes: 0 success, 1 usage/parameter/capability error,
// 2 falsification (a computed witness contradicts a closed-form claim).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdegen/rdegen.hpp"

using nlohmann::ordered_json;
using namespace rdegen;

namespace {

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw parameter_error("unknown format: " + s);
}

/// Machine-wide oracle degree cap from RDEGEN_DEG_MAX, else the hard
/// library limit.
int env_degree_cap() {
    const char* raw = std::getenv("RDEGEN_DEG_MAX");
    if (!raw) return kOracleDegreeMax;
    try {
        int v = std::stoi(raw);
        if (v < 0) throw parameter_error("RDEGEN_DEG_MAX must be >= 0");
        return v < kOracleDegreeMax ? v : kOracleDegreeMax;
    } catch (const std::exception&) {
        throw parameter_error("RDEGEN_DEG_MAX is not an integer");
    }
}

std::vector<int> parse_ells(const std::string& spec, int n) {
    std::vector<int> out;
    if (spec == "all") {
        for (int ell = 0; ell <= n; ++ell) out.push_back(ell);
        return out;
    }
    auto parse_one = [&](const std::string& tok) {
        std::size_t dots = tok.find("..");
        if (dots != std::string::npos) {
            int a = std::stoi(tok.substr(0, dots));
            int b = std::stoi(tok.substr(dots + 2));
            for (int ell = a; ell <= b; ++ell) out.push_back(ell);
        } else {
            out.push_back(std::stoi(tok));
        }
    };
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw parameter_error("bad --ell spec");
        parse_one(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    for (int ell : out)
        if (ell < 0 || ell > n) throw parameter_error("--ell out of range 0..n");
    return out;
}

ordered_json subset_pair_json(const QuadMonomial& m) {
    return ordered_json::array({m.a.str(), m.b.str()});
}

int cmd_weights(int k, int n, int ell, Format format) {
    WeightMatrix M = weight_matrix(k, n, ell);
    PluckerWeightVector wv = weight_vector(k, n, ell);
    if (format == Format::json) {
        ordered_json out{{"k", k}, {"n", n}, {"ell", ell}};
        out["matrix"] = M.rows();
        ordered_json weights = ordered_json::array();
        for (const auto& [J, w] : wv.weights)
            weights.push_back(ordered_json{{"subset", J.str()}, {"w", w}});
        out["weights"] = weights;
        std::cout << out.dump() << "\n";
    } else if (format == Format::csv) {
        std::cout << "subset,w\n";
        for (const auto& [J, w] : wv.weights)
            std::cout << '"' << J.str() << "\"," << w << "\n";
    } else {
        std::cout << "weight matrix M_" << ell << " for k=" << k << ", n=" << n << ":\n";
        for (const auto& row : M.rows()) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? " " : "  ") << row[j];
            std::cout << "\n";
        }
        std::cout << "induced weights (lex subset order):\n";
        for (const auto& [J, w] : wv.weights)
            std::cout << "  P_{" << J.str() << "} -> " << w << "\n";
    }
    return 0;
}

int cmd_classify(int k, int n, int ell, const std::string& vtext, const std::string& wtext,
                 bool all, bool cross_check, Format format) {
    std::vector<std::pair<KSubset, KSubset>> pairs;
    if (all) {
        std::vector<KSubset> subsets = enumerate_subsets(k, n);
        for (const KSubset& v : subsets)
            for (const KSubset& w : subsets)
                if (leq(v, w)) pairs.emplace_back(v, w);
    } else {
        KSubset v = vtext.empty() ? enumerate_subsets(k, n).front() : KSubset::parse(vtext, n);
        KSubset w = wtext.empty() ? w0_act(enumerate_subsets(k, n).front()) : KSubset::parse(wtext, n);
        if (v.k() != k || w.k() != k) throw parameter_error("classify: subset size != k");
        pairs.emplace_back(v, w);
    }
    std::vector<QuadClass> classes = kernel_deg2_classes(k, n, ell);
    if (format == Format::csv) std::cout << "v,w,ell,classifier,class_test,witness\n";
    bool mismatch = false;
    std::string mismatch_info;
    for (const auto& [v, w] : pairs) {
        bool verdict = classify_richardson(v, w, ell);
        FreenessResult scan = monomial_freeness(classes, interval(v, w));
        if (verdict != scan.monomial_free && mismatch_info.empty()) {
            mismatch = true;
            mismatch_info = "v=[" + v.str() + "] w=[" + w.str() + "] ell=" + std::to_string(ell);
        }
        std::string witness = scan.witness ? scan.witness->str() : "";
        if (format == Format::json) {
            ordered_json rec{{"v", v.str()}, {"w", w.str()}, {"ell", ell}, {"classifier", verdict}};
            if (cross_check) rec["class_test"] = scan.monomial_free;
            rec["witness"] = scan.witness ? ordered_json(witness) : ordered_json(nullptr);
            std::cout << rec.dump() << "\n";
        } else if (format == Format::csv) {
            std::cout << '"' << v.str() << "\",\"" << w.str() << "\"," << ell << ","
                      << bool_str(verdict) << "," << bool_str(scan.monomial_free) << "," << witness
                      << "\n";
        } else {
            std::cout << "v=[" << v.str() << "] w=[" << w.str() << "] ell=" << ell << ": "
                      << (verdict ? "monomial-free" : "not monomial-free");
            if (cross_check)
                std::cout << " (scan " << (scan.monomial_free == verdict ? "agrees" : "DISAGREES")
                          << ")";
            if (scan.witness) std::cout << "  witness " << witness;
            std::cout << "\n";
        }
    }
    if (mismatch) {
        std::cerr << "FALSIFICATION: classifier disagrees with the fiber scan at " << mismatch_info
                  << "\n";
        return 2;
    }
    return 0;
}

int cmd_generators(int k, int n, int ell, const std::string& vtext, const std::string& wtext,
                   Format format) {
    std::vector<QuadClass> classes = kernel_deg2_classes(k, n, ell);
    std::vector<QuadBinomial> gens = quadratic_generators(classes);
    bool restricted = !vtext.empty() || !wtext.empty();
    std::vector<QuadBinomial> binomials = gens;
    std::vector<QuadMonomial> monomials;
    std::string vstr, wstr;
    if (restricted) {
        KSubset v = vtext.empty() ? enumerate_subsets(k, n).front() : KSubset::parse(vtext, n);
        KSubset w = wtext.empty() ? w0_act(enumerate_subsets(k, n).front()) : KSubset::parse(wtext, n);
        RestrictedGenSet R = restrict_generators(gens, classes, interval(v, w));
        binomials = R.binomials;
        monomials = R.monomials;
        vstr = v.str();
        wstr = w.str();
    }
    if (format == Format::json) {
        ordered_json out{{"k", k}, {"n", n}, {"ell", ell}};
        out["v"] = restricted ? ordered_json(vstr) : ordered_json(nullptr);
        out["w"] = restricted ? ordered_json(wstr) : ordered_json(nullptr);
        ordered_json bj = ordered_json::array();
        for (const QuadBinomial& g : binomials)
            bj.push_back(ordered_json{{"plus", subset_pair_json(g.plus)},
                                      {"minus", subset_pair_json(g.minus)}});
        out["binomials"] = bj;
        ordered_json mj = ordered_json::array();
        for (const QuadMonomial& m : monomials) mj.push_back(subset_pair_json(m));
        out["monomials"] = mj;
        std::cout << out.dump() << "\n";
    } else if (format == Format::csv) {
        std::cout << "kind,plus,minus\n";
        for (const QuadBinomial& g : binomials)
            std::cout << "binomial,\"" << g.plus.a.str() << "|" << g.plus.b.str() << "\",\""
                      << g.minus.a.str() << "|" << g.minus.b.str() << "\"\n";
        for (const QuadMonomial& m : monomials)
            std::cout << "monomial,\"" << m.a.str() << "|" << m.b.str() << "\",\n";
    } else {
        for (const QuadBinomial& g : binomials) std::cout << g.str() << "\n";
        for (const QuadMonomial& m : monomials) std::cout << m.str() << "\n";
        if (binomials.empty() && monomials.empty()) std::cout << "(no generators)\n";
    }
    return 0;
}

int cmd_ssyt(int k, int n, const std::string& vtext, const std::string& wtext, int d, bool print,
             Format format) {
    KSubset v = vtext.empty() ? enumerate_subsets(k, n).front() : KSubset::parse(vtext, n);
    KSubset w = wtext.empty() ? w0_act(enumerate_subsets(k, n).front()) : KSubset::parse(wtext, n);
    std::vector<Tableau> tabs = enumerate_ssyt(v, w, d);
    if (format == Format::json) {
        ordered_json out{{"k", k}, {"n", n}, {"v", v.str()}, {"w", w.str()}, {"d", d},
                         {"count", tabs.size()}};
        if (print) {
            ordered_json tj = ordered_json::array();
            for (const Tableau& T : tabs) tj.push_back(T.str());
            out["tableaux"] = tj;
        }
        std::cout << out.dump() << "\n";
    } else if (format == Format::csv) {
        std::cout << "tableau\n";
        if (print)
            for (const Tableau& T : tabs) std::cout << '"' << T.str() << "\"\n";
        else
            std::cout << "\"count=" << tabs.size() << "\"\n";
    } else {
        std::cout << tabs.size() << " tableaux\n";
        if (print)
            for (const Tableau& T : tabs) std::cout << "  " << T.str() << "\n";
    }
    return 0;
}

ordered_json verify_report_json(const VerifyReport& rep) {
    ordered_json dims = ordered_json::object();
    for (const auto& [d, cmp] : rep.degrees)
        dims[std::to_string(d)] = ordered_json{{"gens", cmp.gens},
                                               {"kernel", cmp.kernel},
                                               {"initial", cmp.initial},
                                               {"gens_in_kernel", cmp.gens_in_kernel},
                                               {"kernel_in_initial", cmp.kernel_in_initial},
                                               {"equal", cmp.equal}};
    ordered_json out{{"k", rep.k}, {"n", rep.n}, {"ell", rep.ell},
                     {"v", rep.v.str()}, {"w", rep.w.str()},
                     {"monomial_free", rep.monomial_free}};
    out["witness"] = rep.witness ? ordered_json(rep.witness->str()) : ordered_json(nullptr);
    out["witness_in_initial"] =
        rep.witness_in_initial ? ordered_json(*rep.witness_in_initial) : ordered_json(nullptr);
    out["dims"] = dims;
    out["equal"] = rep.equal;
    out["quad_gen"] = rep.quad_gen ? ordered_json(*rep.quad_gen) : ordered_json(nullptr);
    return out;
}

int cmd_verify(int k, int n, int ell, const std::string& vtext, const std::string& wtext, int deg,
               bool deg4, Format format) {
    int cap = deg4 ? 4 : 3;
    if (env_degree_cap() < cap) cap = env_degree_cap();
    if (deg > cap)
        throw capability_error("verify: degree " + std::to_string(deg) +
                               " exceeds the allowed bound " + std::to_string(cap) +
                               (deg == 4 && !deg4 ? " (use --deg4)" : ""));
    KSubset v = KSubset::parse(vtext, n);
    KSubset w = KSubset::parse(wtext, n);
    if (v.k() != k || w.k() != k) throw parameter_error("verify: subset size != k");
    VerifyReport rep = verify_theorem_main(v, w, ell, deg);
    if (format == Format::json) {
        std::cout << verify_report_json(rep).dump() << "\n";
    } else if (format == Format::csv) {
        std::cout << "degree,gens,kernel,initial,equal\n";
        for (const auto& [d, cmp] : rep.degrees)
            std::cout << d << "," << cmp.gens << "," << cmp.kernel << "," << cmp.initial << ","
                      << bool_str(cmp.equal) << "\n";
    } else {
        std::cout << "interval [" << v.str() << ", " << w.str() << "], ell=" << ell << ": "
                  << (rep.monomial_free ? "monomial-free" : "not monomial-free") << "\n";
        if (rep.witness)
            std::cout << "  witness " << rep.witness->str() << " (in initial space: "
                      << (rep.witness_in_initial && *rep.witness_in_initial ? "yes" : "no")
                      << ")\n";
        for (const auto& [d, cmp] : rep.degrees)
            std::cout << "  degree " << d << ": gens " << cmp.gens << ", kernel " << cmp.kernel
                      << ", initial " << cmp.initial << " -> "
                      << (cmp.equal ? "equal" : "NOT equal") << "\n";
        std::cout << "  equal: " << bool_str(rep.equal) << ", quad_gen: "
                  << (rep.quad_gen ? bool_str(*rep.quad_gen) : std::string("skipped")) << "\n";
    }
    return 0;
}

int cmd_survey(int k, int n, const std::string& ellspec, int deg, bool deg4, bool verify, int jobs,
               const std::string& timings_path, Format format) {
    int cap = deg4 ? 4 : 3;
    if (env_degree_cap() < cap) cap = env_degree_cap();
    SurveyOptions opts;
    opts.degree_bound = deg <= cap ? deg : cap;
    if (opts.degree_bound < deg)
        std::cerr << "note: degree bound reduced to " << opts.degree_bound
                  << " by RDEGEN_DEG_MAX\n";
    opts.verify = verify && opts.degree_bound >= 2;
    if (verify && !opts.verify) std::cerr << "note: verification skipped (degree cap < 2)\n";
    opts.jobs = jobs;
    std::vector<int> ells = parse_ells(ellspec, n);
    std::vector<SurveyRecord> records = run_survey(k, n, ells, opts);
    if (format == Format::csv) std::cout << csv_header(opts.degree_bound) << "\n";
    for (const SurveyRecord& r : records) {
        if (format == Format::json) std::cout << to_json_line(r) << "\n";
        else if (format == Format::csv) std::cout << to_csv_row(r, opts.degree_bound) << "\n";
        else std::cout << to_text_line(r) << "\n";
    }
    if (!timings_path.empty()) {
        std::ofstream timings(timings_path);
        if (!timings) throw parameter_error("survey: cannot open timings file");
        for (std::size_t i = 0; i < records.size(); ++i)
            timings << "{\"index\":" << i << ",\"ell\":" << records[i].ell << ",\"v\":\""
                    << records[i].v << "\",\"w\":\"" << records[i].w
                    << "\",\"runtime_ms\":" << records[i].runtime_ms << "}\n";
    }
    SurveySummary s = summarize(records);
    std::cerr << "survey: " << s.total << " tuples, " << s.monomial_free << " monomial-free";
    if (s.verified)
        std::cerr << "; " << s.toric_all_equal << "/" << s.verified
                  << " verified equal, quad_gen true/false: " << s.quad_gen_true << "/"
                  << s.quad_gen_false;
    std::cerr << "\n";
    return falsification_exit(records, std::cerr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-diagonal matching field degenerations of Richardson varieties"};
    app.require_subcommand(1);
    std::string format_name = "text";

    int k = 0, n = 0, ell = 0, deg = 3, d = 2, jobs = 1;
    std::string vtext, wtext, ellspec = "all", timings_path;
    bool all = false, cross_check = false, print = false, deg4 = false, verify = false;

    auto add_knl = [&](CLI::App* sub, bool with_ell) {
        sub->add_option("k", k, "number of rows")->required();
        sub->add_option("n", n, "number of columns")->required();
        if (with_ell) sub->add_option("ell", ell, "block split position")->required();
        sub->add_option("--format", format_name, "output format: text|json|csv");
    };

    CLI::App* weights = app.add_subcommand("weights", "weight matrix and induced weight vector");
    add_knl(weights, true);

    CLI::App* classify = app.add_subcommand("classify", "monomial-freeness classification");
    add_knl(classify, true);
    classify->add_option("--v", vtext, "lower interval bound, e.g. 1,3");
    classify->add_option("--w", wtext, "upper interval bound");
    classify->add_flag("--all", all, "every pair v <= w");
    classify->add_flag("--cross-check", cross_check, "print the fiber-scan verdict too");

    CLI::App* generators = app.add_subcommand("generators", "degree-2 generating set");
    add_knl(generators, true);
    generators->add_option("--v", vtext, "restricting lower bound");
    generators->add_option("--w", wtext, "restricting upper bound");

    CLI::App* ssyt = app.add_subcommand("ssyt", "semistandard tableaux with columns in [v, w]");
    add_knl(ssyt, false);
    ssyt->add_option("--v", vtext, "lower bound (default identity)");
    ssyt->add_option("--w", wtext, "upper bound (default longest element)");
    ssyt->add_option("--d", d, "number of columns");
    ssyt->add_flag("--print", print, "print the tableaux, not just the count");

    CLI::App* verify_cmd = app.add_subcommand("verify", "exact three-space comparison");
    add_knl(verify_cmd, true);
    verify_cmd->add_option("--v", vtext, "lower interval bound")->required();
    verify_cmd->add_option("--w", wtext, "upper interval bound")->required();
    verify_cmd->add_option("--deg", deg, "top degree (default 3)");
    verify_cmd->add_flag("--deg4", deg4, "allow degree 4 (small intervals only)");

    CLI::App* survey = app.add_subcommand("survey", "sweep all (v, w, ell) tuples");
    add_knl(survey, false);
    survey->add_option("--ell", ellspec, "ell values: all, a..b, or comma list");
    survey->add_option("--deg", deg, "verification degree bound");
    survey->add_flag("--deg4", deg4, "allow degree 4");
    survey->add_flag("--verify", verify, "run the oracle comparison per tuple");
    survey->add_option("--jobs", jobs, "worker threads");
    survey->add_option("--timings", timings_path, "write per-record runtimes to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        Format format = parse_format(format_name);
        if (weights->parsed()) return cmd_weights(k, n, ell, format);
        if (classify->parsed())
            return cmd_classify(k, n, ell, vtext, wtext, all, cross_check, format);
        if (generators->parsed()) return cmd_generators(k, n, ell, vtext, wtext, format);
        if (ssyt->parsed()) return cmd_ssyt(k, n, vtext, wtext, d, print, format);
        if (verify_cmd->parsed()) return cmd_verify(k, n, ell, vtext, wtext, deg, deg4, format);
        if (survey->parsed())
            return cmd_survey(k, n, ellspec, deg, deg4, verify, jobs, timings_path, format);
    } catch (const uniqueness_failure& e) {
        std::cerr << "FALSIFICATION: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
