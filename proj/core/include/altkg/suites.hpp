#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace altkg {

enum class SuiteStatus { PASS, FAIL, SKIPPED_CAPACITY };

const char* suite_status_name(SuiteStatus s);  // PASS / FAIL / SKIPPED-capacity

struct InstanceResult {
    std::string id;           // canonical instance identifier, report sort key
    std::string description;
    std::string expected;
    std::string computed;     // on FAIL both expected and computed are filled
    SuiteStatus status = SuiteStatus::PASS;
    std::int64_t runtime_ms = 0;  // volatile; serialized under the timing subtree
};

struct SuiteReport {
    std::string suite;
    std::string scale;        // tiny | desk
    std::uint64_t seed = 0;
    int threads = 1;          // volatile
    bool timed_out = false;   // volatile
    std::int64_t total_ms = 0;  // volatile
    std::vector<InstanceResult> instances;  // sorted by id

    int passed() const;
    int failed() const;
    int skipped() const;
    bool all_passed() const { return failed() == 0; }
};

struct SuiteOptions {
    std::string scale = "desk";
    std::uint64_t seed = 42;
    int threads = 1;
    /// Cooperative deadline: instances not yet started when it passes are
    /// reported SKIPPED-capacity ("not run: suite deadline").  < 0 disables.
    std::int64_t timeout_ms = -1;
    /// Override the hemisphere-sampling trial count (< 0: per-scale default).
    std::int64_t gale_trials = -1;
};

/// soundness, schrijver, mycielski, hedetniemi, stahl-chen, gale, all.
std::vector<std::string> suite_names();

/// Run one suite.  Individual instances are independent pure computations;
/// they are dispatched to `threads` workers but written back by index, and
/// every seeded instance derives its stream from (seed, instance counter),
/// so the report content is identical for any worker count.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opts);

/// JSON rendering.  All volatile fields (runtimes, thread count, timestamp)
/// live under the single top-level "timing" key; the rest of the document is
/// byte-identical across reruns with the same inputs and seed.
std::string suite_report_json(const SuiteReport& r);

/// CSV and Markdown renderings omit timing entirely.
std::string suite_report_csv(const SuiteReport& r);
std::string suite_report_markdown(const SuiteReport& r);

} // namespace altkg
