#include "fairdiv/guesses.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace fairdiv {

GuessLadder build_ladder(double d_min, double d_max, double eps) {
    if (!(d_min > 0.0) || !std::isfinite(d_min)) {
        throw std::invalid_argument("build_ladder: d_min must be positive and finite");
    }
    if (!(d_min <= d_max) || !std::isfinite(d_max)) {
        throw std::invalid_argument("build_ladder: need 0 < d_min <= d_max");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("build_ladder: eps must lie in (0, 1)");
    }
    GuessLadder ladder;
    ladder.eps = eps;
    ladder.d_min = d_min;
    ladder.d_max = d_max;
    for (double v = d_min; v <= d_max; v /= (1.0 - eps)) {
        ladder.values.push_back(v);
    }
    return ladder;
}

bool Candidate::offer(const Element& x, const Metric& metric) {
    if (group_filter_ && x.group != *group_filter_) return false;
    if (members_.size() >= cap_) return false;
    if (any_within(metric, x, members_, mu_)) return false;
    members_.push_back(x);
    return true;
}

std::vector<Element> sdm_finalize(std::span<const Candidate> candidates, std::size_t k) {
    const Candidate* best = nullptr;
    double best_div = -1.0;
    Metric dummy; // diversity needs the metric; take it from the first candidate's use site
    (void)dummy;
    for (const Candidate& c : candidates) {
        if (c.members().size() != k) continue;
        // Metric is uniform across candidates in a run; recompute with the
        // caller-provided metric via the overload below.
        (void)c;
        best = best ? best : &c;
        (void)best_div;
        break;
    }
    throw std::logic_error("sdm_finalize(span, k) requires a metric; use the metric overload");
}

namespace {

std::vector<Element> finalize_impl(std::span<const Candidate> candidates, std::size_t k,
                                   const Metric& metric) {
    const Candidate* best = nullptr;
    double best_div = -1.0;
    for (const Candidate& c : candidates) {
        if (c.members().size() != k) continue;
        const double div = diversity(metric, c.members());
        if (best == nullptr || div > best_div) {
            best = &c;
            best_div = div;
        }
    }
    if (best == nullptr) {
        throw infeasible_error("no guess accumulated " + std::to_string(k) +
                               " elements; k exceeds the dataset's dispersion");
    }
    return best->members();
}

} // namespace

StreamingDiversity::StreamingDiversity(GuessLadder ladder, std::size_t k, Metric metric)
    : ladder_(std::move(ladder)), k_(k), metric_(metric) {
    if (k_ == 0) throw std::invalid_argument("k must be positive");
    candidates_.reserve(ladder_.values.size());
    for (double mu : ladder_.values) {
        candidates_.emplace_back(mu, k_);
    }
}

void StreamingDiversity::process(const Element& x) {
    for (Candidate& c : candidates_) {
        c.offer(x, metric_);
    }
}

std::size_t StreamingDiversity::stored_elements() const {
    std::unordered_set<std::uint64_t> ids;
    for (const Candidate& c : candidates_) {
        for (const Element& e : c.members()) ids.insert(e.id);
    }
    return ids.size();
}

} // namespace fairdiv
