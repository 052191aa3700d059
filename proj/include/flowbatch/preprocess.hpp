// Release-time preprocessing: shift releases right until no time slot holds
// more than B of them, verify the agreeable-deadlines property, and compute
// the predecessor index used by the agreeable DPs.
#pragma once

#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "flowbatch/core.hpp"

namespace flowbatch {

struct PreprocessResult {
    // Same jobs with shifted releases, re-sorted; absent when infeasible.
    std::optional<Instance> transformed;
    Flow shift_total = 0;  // sum of (shifted - original) over all jobs
    bool infeasible = false;
    std::vector<std::pair<int, Time>> original_releases;  // id -> original r

    Time original_release_of(int id) const {
        for (const auto& [jid, r] : original_releases)
            if (jid == id) return r;
        throw std::invalid_argument("unknown job id " + std::to_string(id));
    }
};

// Left-to-right sweep: at every time slot holding more than B released jobs,
// the extras move one slot right. Which jobs stay is decided by smallest
// (deadline, id) — for agreeable instances this is exactly "bump the
// largest-indexed", and for arbitrary deadlines it keeps the jobs with the
// least room to spare. Designed for p = 1; uniform solvers do not use it.
inline PreprocessResult make_b_capacity_compatible(const Instance& inst) {
    PreprocessResult result;
    result.original_releases.reserve(inst.jobs().size());
    for (const Job& j : inst.jobs()) result.original_releases.emplace_back(j.id, j.release);

    // Min-heap of pending jobs ordered by (deadline, id).
    auto later = [&](int a, int b) {
        const Job& ja = inst.jobs()[a];
        const Job& jb = inst.jobs()[b];
        return std::tie(ja.deadline, ja.id) > std::tie(jb.deadline, jb.id);
    };
    std::priority_queue<int, std::vector<int>, decltype(later)> pending(later);

    std::vector<Job> shifted = inst.jobs();
    const int n = inst.n();
    int next = 0;  // next unseen job in release order
    Time t = n > 0 ? inst.jobs()[0].release : 0;
    while (next < n || !pending.empty()) {
        if (pending.empty() && inst.jobs()[next].release > t) t = inst.jobs()[next].release;
        while (next < n && inst.jobs()[next].release == t) pending.push(next++);
        for (int taken = 0; taken < inst.capacity() && !pending.empty(); ++taken) {
            int idx = pending.top();
            pending.pop();
            shifted[idx].release = t;
            result.shift_total += t - inst.jobs()[idx].release;
            if (t > shifted[idx].deadline - inst.p()) result.infeasible = true;
        }
        ++t;
    }

    if (!result.infeasible)
        result.transformed = Instance::create(inst.p(), inst.capacity(), inst.budget(),
                                              std::move(shifted), inst.subset_size());
    return result;
}

// True iff deadlines are non-decreasing in the (release, deadline, id) sort
// order; equal releases are unconstrained.
inline bool check_agreeable(const Instance& inst) {
    const auto& jobs = inst.jobs();
    for (std::size_t i = 1; i < jobs.size(); ++i)
        if (jobs[i].deadline < jobs[i - 1].deadline) return false;
    return true;
}

// predecessor_index()[l] is the largest 1-based sorted index i with
// r_i < r_l, or 0 when no earlier release exists. Index 0 is unused.
inline std::vector<int> predecessor_index(const Instance& inst) {
    const int n = inst.n();
    std::vector<int> pred(static_cast<std::size_t>(n) + 1, 0);
    for (int l = 1; l <= n; ++l) {
        if (l > 1 && inst.jobs()[l - 2].release < inst.jobs()[l - 1].release)
            pred[l] = l - 1;
        else if (l > 1)
            pred[l] = pred[l - 1];
    }
    return pred;
}

}  // namespace flowbatch
