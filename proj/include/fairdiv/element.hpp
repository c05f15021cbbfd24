#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairdiv {

// Raised when an algorithm cannot produce a feasible solution for the
// given instance (as opposed to being called with malformed input).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// A single stream element: unique id, feature vector, group label.
struct Element {
    std::uint64_t id = 0;
    std::vector<double> features;
    int group = 0;
};

// A finite dataset with group structure. The element order is the
// arrival order of the stream.
struct GroupedDataset {
    std::vector<Element> elements;
    int group_count = 0;                    // m
    std::vector<std::size_t> group_sizes;   // indexed by group, sums to elements.size()
    std::size_t dimension = 0;

    std::size_t size() const { return elements.size(); }

    // Validates group labels, uniform dimension and id uniqueness, and
    // computes the per-group counts.
    static GroupedDataset from_elements(std::vector<Element> elements, int group_count);
};

// A size-k solution satisfying the per-group counts exactly, together
// with its diversity value and the guess it was finalized from.
struct FairSolution {
    std::vector<Element> elements;
    double diversity = 0.0;
    double winning_mu = 0.0;
};

} // namespace fairdiv
