#pragma once

#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "rdegen/errors.hpp"
#include "rdegen/ideal.hpp"
#include "rdegen/oracle.hpp"
#include "rdegen/subsets.hpp"

namespace rdegen {

/// One survey row.  runtime_ms is measurement metadata, not data: the
/// serializers below leave it out so reruns are byte-identical, and the
/// CLI ships it separately.
struct SurveyRecord {
    int k = 0, n = 0, ell = 0;
    std::string v, w;                    // textual subset encodings
    bool classifier = false;             // closed-form verdict
    bool class_test = false;             // semantic fiber-scan verdict
    std::map<int, bool> toric_equal;     // degree -> three spaces agree
    std::optional<bool> quad_gen;        // nullopt = skipped
    long long runtime_ms = 0;
};

struct SurveyOptions {
    int degree_bound = 3;
    bool verify = false;
    int jobs = 1;
};

/// All (v, w, ell) tuples with v <= w, ell in `ells` (outer loop), v and
/// w in lexicographic order; classifier and fiber scan on every tuple,
/// oracle comparison when verify is set.  Worker threads pull tuples off
/// a shared counter; results land in canonical order regardless of jobs.
inline std::vector<SurveyRecord> run_survey(int k, int n, const std::vector<int>& ells,
                                            const SurveyOptions& opts = {}) {
    if (k < 1 || n < 1 || k > n) throw parameter_error("run_survey: need 1 <= k <= n");
    for (int ell : ells)
        if (ell < 0 || ell > n) throw parameter_error("run_survey: need 0 <= ell <= n");
    if (opts.jobs < 1) throw parameter_error("run_survey: need jobs >= 1");

    std::vector<KSubset> subsets = enumerate_subsets(k, n);
    struct Task { int ell_index; const KSubset* v; const KSubset* w; };
    std::vector<Task> tasks;
    for (std::size_t e = 0; e < ells.size(); ++e)
        for (const KSubset& v : subsets)
            for (const KSubset& w : subsets)
                if (leq(v, w)) tasks.push_back(Task{static_cast<int>(e), &v, &w});

    // Immutable per-ell fiber tables, shared across workers.
    std::vector<std::vector<QuadClass>> classes;
    classes.reserve(ells.size());
    for (int ell : ells) classes.push_back(kernel_deg2_classes(k, n, ell));

    std::vector<SurveyRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            const int ell = ells[static_cast<std::size_t>(task.ell_index)];
            auto start = std::chrono::steady_clock::now();
            SurveyRecord rec;
            rec.k = k; rec.n = n; rec.ell = ell;
            rec.v = task.v->str(); rec.w = task.w->str();
            rec.classifier = classify_richardson(*task.v, *task.w, ell);
            Interval T = interval(*task.v, *task.w);
            rec.class_test =
                monomial_freeness(classes[static_cast<std::size_t>(task.ell_index)], T)
                    .monomial_free;
            if (opts.verify) {
                VerifyReport rep = verify_theorem_main(*task.v, *task.w, ell, opts.degree_bound);
                for (const auto& [d, cmp] : rep.degrees) rec.toric_equal[d] = cmp.equal;
                rec.quad_gen = rep.quad_gen;
            }
            rec.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            records[i] = std::move(rec);
        }
    };
    if (opts.jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < opts.jobs; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    return records;
}

struct SurveySummary {
    long long total = 0;
    long long monomial_free = 0;
    long long verified = 0;        // records whose toric_equal map is nonempty
    long long toric_all_equal = 0; // verified records with every degree equal
    long long quad_gen_true = 0;
    long long quad_gen_false = 0;
};

inline SurveySummary summarize(const std::vector<SurveyRecord>& records) {
    SurveySummary s;
    s.total = static_cast<long long>(records.size());
    for (const SurveyRecord& r : records) {
        if (r.class_test) ++s.monomial_free;
        if (!r.toric_equal.empty()) {
            ++s.verified;
            bool all = true;
            for (const auto& [d, eq] : r.toric_equal) all = all && eq;
            if (all) ++s.toric_all_equal;
        }
        if (r.quad_gen.has_value()) (*r.quad_gen ? ++s.quad_gen_true : ++s.quad_gen_false);
    }
    return s;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

/// Data row as one JSON object per line.  Keys in fixed order, no
/// whitespace variance, runtime_ms omitted: reruns are byte-identical.
inline std::string to_json_line(const SurveyRecord& r) {
    std::string out = "{\"k\":" + std::to_string(r.k) + ",\"n\":" + std::to_string(r.n) +
                      ",\"ell\":" + std::to_string(r.ell) + ",\"v\":\"" + r.v + "\",\"w\":\"" +
                      r.w + "\",\"classifier\":" + bool_str(r.classifier) +
                      ",\"class_test\":" + bool_str(r.class_test) + ",\"toric_equal\":{";
    bool first = true;
    for (const auto& [d, eq] : r.toric_equal) {
        if (!first) out += ',';
        first = false;
        out += "\"" + std::to_string(d) + "\":" + bool_str(eq);
    }
    out += "},\"quad_gen\":";
    out += r.quad_gen.has_value() ? bool_str(*r.quad_gen) : std::string("\"skipped\"");
    out += "}";
    return out;
}

inline std::string csv_header(int degree_bound) {
    std::string out = "k,n,ell,v,w,classifier,class_test";
    for (int d = 2; d <= degree_bound; ++d) out += ",toric_equal_" + std::to_string(d);
    out += ",quad_gen";
    return out;
}

inline std::string to_csv_row(const SurveyRecord& r, int degree_bound) {
    std::string out = std::to_string(r.k) + "," + std::to_string(r.n) + "," +
                      std::to_string(r.ell) + ",\"" + r.v + "\",\"" + r.w + "\"," +
                      bool_str(r.classifier) + "," + bool_str(r.class_test);
    for (int d = 2; d <= degree_bound; ++d) {
        out += ',';
        auto it = r.toric_equal.find(d);
        if (it != r.toric_equal.end()) out += bool_str(it->second);
    }
    out += ',';
    out += r.quad_gen.has_value() ? bool_str(*r.quad_gen) : std::string("skipped");
    return out;
}

inline std::string to_text_line(const SurveyRecord& r) {
    std::string out = "ell=" + std::to_string(r.ell) + " v=[" + r.v + "] w=[" + r.w +
                      "] classifier=" + (r.classifier ? "free" : "not-free") +
                      " scan=" + (r.class_test ? "free" : "not-free");
    if (!r.toric_equal.empty()) {
        out += " toric=";
        bool first = true;
        for (const auto& [d, eq] : r.toric_equal) {
            if (!first) out += ',';
            first = false;
            out += std::to_string(d) + (eq ? ":equal" : ":UNEQUAL");
        }
    }
    if (r.quad_gen.has_value()) out += std::string(" quad_gen=") + bool_str(*r.quad_gen);
    return out;
}

struct Falsification {
    std::size_t index = 0;
    SurveyRecord record;
    std::string reason;
};

/// First record that falsifies a claim: closed-form classifier
/// disagreeing with the fiber scan, or an oracle inequality on a tuple
/// where the hypotheses (monomial-free, degree-2 generation) hold.
inline std::optional<Falsification> find_falsification(const std::vector<SurveyRecord>& records) {
    for (std::size_t i = 0; i < records.size(); ++i) {
        const SurveyRecord& r = records[i];
        if (r.classifier != r.class_test)
            return Falsification{i, r, "classifier disagrees with the fiber scan"};
        if (r.class_test && r.quad_gen.has_value() && *r.quad_gen)
            for (const auto& [d, eq] : r.toric_equal)
                if (!eq)
                    return Falsification{
                        i, r, "three-space comparison failed at degree " + std::to_string(d) +
                                  " despite the hypotheses holding"};
    }
    return std::nullopt;
}

/// Exit status for a finished survey: 0 healthy, 2 with the failing
/// record printed when a falsification was found.
inline int falsification_exit(const std::vector<SurveyRecord>& records, std::ostream& diag) {
    std::optional<Falsification> f = find_falsification(records);
    if (!f) return 0;
    diag << "FALSIFICATION at record " << f->index << ": " << f->reason << "\n"
         << to_json_line(f->record) << "\n";
    return 2;
}

} // namespace rdegen
