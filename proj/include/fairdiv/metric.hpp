#pragma once

#include "fairdiv/element.hpp"

#include <span>
#include <string>
#include <utility>

namespace fairdiv {

enum class MetricKind {
    euclidean,
    manhattan,
    angular,
};

MetricKind metric_kind_from_string(const std::string& name);
const char* to_string(MetricKind kind);

// A distance metric over elements. All three kinds are nonnegative,
// symmetric and satisfy the triangle inequality; the angular distance is
// arccos of the cosine similarity, with the cosine clamped to [-1, 1].
struct Metric {
    MetricKind kind = MetricKind::euclidean;

    double operator()(const Element& x, const Element& y) const;
};

// Metric distance between two elements. Throws std::invalid_argument on
// dimension mismatch, or on a zero vector under the angular metric.
double distance(const Metric& metric, const Element& x, const Element& y);

// min over y in s of d(x, y); +infinity when s is empty.
double set_distance(const Metric& metric, const Element& x, std::span<const Element> s);

// True iff some member of s is strictly closer to x than `threshold`.
// Early-exits; the streaming hot path uses this instead of set_distance.
bool any_within(const Metric& metric, const Element& x, std::span<const Element> s,
                double threshold);

// Minimum pairwise distance over distinct pairs; +infinity for |s| <= 1.
double diversity(const Metric& metric, std::span<const Element> s);

// Exact (d_min, d_max) over all pairs, excluding zero-distance pairs
// from d_min so the spread d_max/d_min stays finite. Quadratic; meant
// for datasets small enough to enumerate.
std::pair<double, double> extremal_distances(const GroupedDataset& dataset, const Metric& metric);

} // namespace fairdiv
