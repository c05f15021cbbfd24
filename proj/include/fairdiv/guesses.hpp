#pragma once

#include "fairdiv/element.hpp"
#include "fairdiv/metric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fairdiv {

// Geometric ladder of guesses for the unknown optimum: values
// d_min / (1 - eps)^j restricted to [d_min, d_max], ascending.
struct GuessLadder {
    double eps = 0.0;
    double d_min = 0.0;
    double d_max = 0.0;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
};

GuessLadder build_ladder(double d_min, double d_max, double eps);

// A size-capped element set whose members stay pairwise >= mu apart.
// Members keep insertion (arrival) order. An optional group filter makes
// the candidate group-specific.
class Candidate {
public:
    Candidate(double mu, std::size_t cap, std::optional<int> group_filter = std::nullopt)
        : mu_(mu), cap_(cap), group_filter_(group_filter) {}

    // Appends x iff the group filter matches, the candidate is not full,
    // and d(x, members) >= mu. Returns whether x was appended.
    bool offer(const Element& x, const Metric& metric);

    const std::vector<Element>& members() const { return members_; }
    double mu() const { return mu_; }
    std::size_t cap() const { return cap_; }
    bool full() const { return members_.size() >= cap_; }
    std::optional<int> group_filter() const { return group_filter_; }

private:
    double mu_;
    std::size_t cap_;
    std::optional<int> group_filter_;
    std::vector<Element> members_;
};

// Returns the full (size-k) candidate of maximum diversity; ties go to
// the smaller guess. Candidates must be ordered by ascending guess.
// Throws infeasible_error when no candidate reached k members.
std::vector<Element> sdm_finalize(std::span<const Candidate> candidates, std::size_t k,
                                  const Metric& metric);

// One-pass unconstrained diversity maximization: one candidate per guess.
class StreamingDiversity {
public:
    StreamingDiversity(GuessLadder ladder, std::size_t k, Metric metric);

    void process(const Element& x);
    std::vector<Element> finalize() const { return sdm_finalize(candidates_, k_); }

    std::span<const Candidate> candidates() const { return candidates_; }
    const GuessLadder& ladder() const { return ladder_; }
    std::size_t stored_elements() const;

private:
    GuessLadder ladder_;
    std::size_t k_;
    Metric metric_;
    std::vector<Candidate> candidates_;
};

} // namespace fairdiv
