#include "fairdiv/metric.hpp"

#include "fairdiv/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace fairdiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dimensions(const Element& x, const Element& y) {
    if (x.features.size() != y.features.size()) {
        throw std::invalid_argument(
            "distance: feature dimension mismatch (" + std::to_string(x.features.size()) +
            " vs " + std::to_string(y.features.size()) + ")");
    }
}

} // namespace

MetricKind metric_kind_from_string(const std::string& name) {
    if (name == "euclidean") return MetricKind::euclidean;
    if (name == "manhattan") return MetricKind::manhattan;
    if (name == "angular") return MetricKind::angular;
    throw std::invalid_argument("unknown metric: " + name);
}

const char* to_string(MetricKind kind) {
    switch (kind) {
        case MetricKind::euclidean: return "euclidean";
        case MetricKind::manhattan: return "manhattan";
        case MetricKind::angular: return "angular";
    }
    return "unknown";
}

double distance(const Metric& metric, const Element& x, const Element& y) {
    check_dimensions(x, y);
    const auto& ops = kernels::active();
    const double* a = x.features.data();
    const double* b = y.features.data();
    const std::size_t n = x.features.size();
    switch (metric.kind) {
        case MetricKind::euclidean:
            return std::sqrt(ops.sum_squared_diff(a, b, n));
        case MetricKind::manhattan:
            return ops.sum_abs_diff(a, b, n);
        case MetricKind::angular: {
            double ab = 0.0, aa = 0.0, bb = 0.0;
            ops.dot_and_sqnorms(a, b, n, ab, aa, bb);
            if (aa == 0.0 || bb == 0.0) {
                throw std::invalid_argument("angular distance undefined for zero vectors");
            }
            // sqrt(aa * bb) keeps cos == 1 exact when x and y coincide.
            const double cosine = std::clamp(ab / std::sqrt(aa * bb), -1.0, 1.0);
            return std::acos(cosine);
        }
    }
    throw std::invalid_argument("unknown metric kind");
}

double Metric::operator()(const Element& x, const Element& y) const {
    return distance(*this, x, y);
}

double set_distance(const Metric& metric, const Element& x, std::span<const Element> s) {
    double best = kInf;
    for (const Element& y : s) {
        best = std::min(best, distance(metric, x, y));
    }
    return best;
}

bool any_within(const Metric& metric, const Element& x, std::span<const Element> s,
                double threshold) {
    for (const Element& y : s) {
        if (distance(metric, x, y) < threshold) return true;
    }
    return false;
}

double diversity(const Metric& metric, std::span<const Element> s) {
    double best = kInf;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            best = std::min(best, distance(metric, s[i], s[j]));
        }
    }
    return best;
}

std::pair<double, double> extremal_distances(const GroupedDataset& dataset, const Metric& metric) {
    const auto& elems = dataset.elements;
    if (elems.size() < 2) {
        throw std::invalid_argument("extremal_distances: need at least 2 elements");
    }
    double d_min = kInf;
    double d_max = 0.0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const double d = distance(metric, elems[i], elems[j]);
            if (d > 0.0) d_min = std::min(d_min, d);
            d_max = std::max(d_max, d);
        }
    }
    if (!std::isfinite(d_min)) {
        throw std::invalid_argument("extremal_distances: all pairwise distances are zero");
    }
    return {d_min, d_max};
}

GroupedDataset GroupedDataset::from_elements(std::vector<Element> elements, int group_count) {
    if (group_count < 1) {
        throw std::invalid_argument("dataset: group count must be positive");
    }
    GroupedDataset ds;
    ds.group_count = group_count;
    ds.group_sizes.assign(static_cast<std::size_t>(group_count), 0);
    ds.dimension = elements.empty() ? 0 : elements.front().features.size();
    std::unordered_set<std::uint64_t> seen_ids;
    seen_ids.reserve(elements.size());
    for (const Element& e : elements) {
        if (e.group < 0 || e.group >= group_count) {
            throw std::invalid_argument("dataset: element " + std::to_string(e.id) +
                                        " has group " + std::to_string(e.group) +
                                        " outside [0, " + std::to_string(group_count) + ")");
        }
        if (e.features.size() != ds.dimension) {
            throw std::invalid_argument("dataset: element " + std::to_string(e.id) +
                                        " has inconsistent feature dimension");
        }
        if (!seen_ids.insert(e.id).second) {
            throw std::invalid_argument("dataset: duplicate element id " + std::to_string(e.id));
        }
        ++ds.group_sizes[static_cast<std::size_t>(e.group)];
    }
    ds.elements = std::move(elements);
    return ds;
}

} // namespace fairdiv
