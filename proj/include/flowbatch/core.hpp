// Core domain types for batched flow-time scheduling, plus the independent
// schedule validator that re-scores every solver's output.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flowbatch {

using Time = std::int64_t;
using Flow = std::int64_t;

// Distinguished infeasibility sentinel. Never used in arithmetic; additions
// must short-circuit on it (see add_flow).
inline constexpr Flow kInfeasible = std::numeric_limits<Flow>::max();

inline Flow add_flow(Flow a, Flow b) {
    return (a == kInfeasible || b == kInfeasible) ? kInfeasible : a + b;
}

// One job: schedulable anywhere in [release, deadline - p].
struct Job {
    int id = 0;          // stable 0-based id, assigned at ingestion
    Time release = 0;    // r_j >= 0
    Time deadline = 0;   // d_j >= r_j + p
};

// A solver input. Jobs are held sorted by (release, deadline, id); every
// solver sees the identical ordering.
class Instance {
public:
    Instance() = default;

    // Validates and canonicalizes. Throws std::invalid_argument on a
    // malformed instance (the CLI maps this to a parse diagnostic).
    static Instance create(Time p, int capacity, int budget,
                           std::vector<Job> jobs,
                           std::optional<int> subset_size = std::nullopt) {
        if (p < 1) throw std::invalid_argument("job length p must be >= 1");
        if (capacity < 1) throw std::invalid_argument("batch capacity B must be >= 1");
        if (budget < 0) throw std::invalid_argument("batch budget k must be >= 0");
        std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
            return std::tie(a.release, a.deadline, a.id) <
                   std::tie(b.release, b.deadline, b.id);
        });
        Instance inst;
        inst.p_ = p;
        inst.capacity_ = capacity;
        inst.budget_ = budget;
        inst.jobs_ = std::move(jobs);
        inst.subset_size_ = subset_size;
        const int n = static_cast<int>(inst.jobs_.size());
        if (subset_size && (*subset_size < 0 || *subset_size > n))
            throw std::invalid_argument("subset size m must lie in [0, n]");
        inst.index_by_id_.reserve(inst.jobs_.size());
        for (int i = 0; i < n; ++i) {
            const Job& j = inst.jobs_[i];
            if (j.release < 0)
                throw std::invalid_argument("job " + std::to_string(j.id) +
                                            ": negative release time");
            if (j.deadline < j.release + p)
                throw std::invalid_argument(
                    "job " + std::to_string(j.id) + ": deadline " +
                    std::to_string(j.deadline) + " < release + p = " +
                    std::to_string(j.release + p));
            if (!inst.index_by_id_.emplace(j.id, i).second)
                throw std::invalid_argument("duplicate job id " + std::to_string(j.id));
        }
        return inst;
    }

    Time p() const { return p_; }
    int capacity() const { return capacity_; }
    int budget() const { return budget_; }
    const std::vector<Job>& jobs() const { return jobs_; }
    int n() const { return static_cast<int>(jobs_.size()); }

    std::optional<int> subset_size() const { return subset_size_; }
    // Effective number of jobs that must be completed (m = n when absent).
    int m() const { return subset_size_ ? *subset_size_ : n(); }
    bool is_subset() const { return m() != n(); }

    // Sorted position of a job id; the original id order is recoverable from
    // the ids themselves.
    int sorted_index_of(int id) const {
        auto it = index_by_id_.find(id);
        if (it == index_by_id_.end())
            throw std::invalid_argument("unknown job id " + std::to_string(id));
        return it->second;
    }
    bool has_job(int id) const { return index_by_id_.count(id) != 0; }

    // Same jobs/limits, different budget (used by Pareto sweeps).
    Instance with_budget(int budget) const {
        return create(p_, capacity_, budget, jobs_, subset_size_);
    }
    Instance with_subset_size(std::optional<int> m) const {
        return create(p_, capacity_, budget_, jobs_, m);
    }

private:
    Time p_ = 1;
    int capacity_ = 1;
    int budget_ = 0;
    std::vector<Job> jobs_;
    std::optional<int> subset_size_;
    std::unordered_map<int, int> index_by_id_;
};

// A batch occupies [start, start + p) and runs up to B jobs together.
struct Batch {
    Time start = 0;
    std::vector<int> job_ids;  // sorted, non-empty, size <= B
};

struct Schedule {
    std::vector<Batch> batches;  // sorted by start, pairwise >= p apart
    Flow total_flow = 0;         // against original releases
    int batches_used = 0;        // == batches.size(); unused budget = k - this
};

enum class Algorithm {
    kUnitDp,
    kUniformDp,
    kArbitraryDp,
    kLazy,
    kLazyReverse,
    kOracle,
};

inline const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::kUnitDp: return "unit-dp";
        case Algorithm::kUniformDp: return "uniform-dp";
        case Algorithm::kArbitraryDp: return "arbitrary-dp";
        case Algorithm::kLazy: return "lazy";
        case Algorithm::kLazyReverse: return "lazy-reverse";
        case Algorithm::kOracle: return "oracle";
    }
    return "?";
}

inline std::optional<Algorithm> algorithm_from_name(const std::string& s) {
    for (Algorithm a : {Algorithm::kUnitDp, Algorithm::kUniformDp,
                        Algorithm::kArbitraryDp, Algorithm::kLazy,
                        Algorithm::kLazyReverse, Algorithm::kOracle})
        if (s == algorithm_name(a)) return a;
    return std::nullopt;
}

struct SolveStats {
    std::uint64_t table_entries = 0;   // DP cells allocated
    std::uint64_t transitions = 0;     // inner-loop relaxations performed
    std::uint64_t states_reached = 0;  // memoized states actually visited
    std::int64_t wall_us = 0;
};

// Either a schedule or an infeasibility certificate. opt_value is the
// solver's own objective (shifted-release accounting where preprocessing was
// applied); Schedule::total_flow is always the original-release figure.
struct SolveOutcome {
    Algorithm algorithm = Algorithm::kOracle;
    std::optional<Schedule> schedule;
    Flow opt_value = kInfeasible;
    Flow shift_total = 0;  // release-shift offset when preprocessing ran
    SolveStats stats;

    bool feasible() const { return opt_value != kInfeasible; }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    Flow recomputed_flow = 0;

    void fail(std::string what) {
        ok = false;
        violations.push_back(std::move(what));
    }
};

// Checks every model constraint of a schedule against an instance and
// recomputes the flow from scratch. Violations are data, never exceptions.
inline ValidationReport validate_schedule(const Instance& inst, const Schedule& sched) {
    ValidationReport report;
    const Time p = inst.p();

    if (sched.batches_used != static_cast<int>(sched.batches.size()))
        report.fail("batches_used " + std::to_string(sched.batches_used) +
                    " != batch count " + std::to_string(sched.batches.size()));
    if (static_cast<int>(sched.batches.size()) > inst.budget())
        report.fail("uses " + std::to_string(sched.batches.size()) +
                    " batches, budget k = " + std::to_string(inst.budget()));

    Flow flow = 0;
    int scheduled = 0;
    std::unordered_map<int, bool> seen;
    const Batch* prev = nullptr;
    for (const Batch& batch : sched.batches) {
        if (batch.job_ids.empty())
            report.fail("empty batch at slot " + std::to_string(batch.start));
        if (static_cast<int>(batch.job_ids.size()) > inst.capacity())
            report.fail("capacity exceeded: batch at slot " + std::to_string(batch.start) +
                        " holds " + std::to_string(batch.job_ids.size()) + " > B = " +
                        std::to_string(inst.capacity()));
        if (batch.start < 0)
            report.fail("negative batch start " + std::to_string(batch.start));
        if (prev && batch.start - prev->start < p)
            report.fail("overlapping/unsynchronized batches: starts " +
                        std::to_string(prev->start) + " and " +
                        std::to_string(batch.start) + " differ by < p = " +
                        std::to_string(p));
        if (prev && batch.start < prev->start)
            report.fail("batches not sorted by start");
        prev = &batch;

        for (int id : batch.job_ids) {
            if (!inst.has_job(id)) {
                report.fail("unknown job id " + std::to_string(id));
                continue;
            }
            if (seen[id])
                report.fail("job " + std::to_string(id) + " scheduled twice");
            seen[id] = true;
            const Job& job = inst.jobs()[inst.sorted_index_of(id)];
            if (batch.start < job.release)
                report.fail("job " + std::to_string(id) + " starts at " +
                            std::to_string(batch.start) + " before release " +
                            std::to_string(job.release));
            if (batch.start + p > job.deadline)
                report.fail("job " + std::to_string(id) + " finishes at " +
                            std::to_string(batch.start + p) + " after deadline " +
                            std::to_string(job.deadline));
            flow += batch.start + p - job.release;
            ++scheduled;
        }
    }

    if (scheduled != inst.m())
        report.fail("schedules " + std::to_string(scheduled) + " jobs, expected m = " +
                    std::to_string(inst.m()));
    if (sched.total_flow != flow)
        report.fail("stated total_flow " + std::to_string(sched.total_flow) +
                    " != recomputed " + std::to_string(flow));

    report.recomputed_flow = flow;
    return report;
}

// Raised when an assignment places a job outside its feasibility window.
class WindowError : public std::invalid_argument {
public:
    WindowError(int job_id, Time start, const Job& job)
        : std::invalid_argument("job " + std::to_string(job_id) + " at slot " +
                                std::to_string(start) + " violates window [" +
                                std::to_string(job.release) + ", " +
                                std::to_string(job.deadline) + ")"),
          job_id(job_id) {}
    int job_id;
};

// Sum of (start + p - release) over an explicit job -> start assignment.
// Order of enumeration is immaterial.
inline Flow flow_of_assignment(const Instance& inst,
                               std::span<const std::pair<int, Time>> assignment) {
    Flow flow = 0;
    for (const auto& [id, start] : assignment) {
        const Job& job = inst.jobs()[inst.sorted_index_of(id)];
        if (start < job.release || start + inst.p() > job.deadline)
            throw WindowError(id, start, job);
        flow += start + inst.p() - job.release;
    }
    return flow;
}

inline Flow flow_of_assignment(const Instance& inst,
                               const std::vector<std::pair<int, Time>>& assignment) {
    return flow_of_assignment(inst, std::span<const std::pair<int, Time>>(assignment));
}

// Raised when a solver's stated precondition does not hold (the CLI turns
// these into exit code 3 plus a hint to fall back to arbitrary-dp).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace flowbatch
