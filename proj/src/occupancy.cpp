#include "poolsim/occupancy.hpp"

#include <stdexcept>
#include <string>

namespace poolsim {

OccupancyMeasure::OccupancyMeasure(std::int64_t n) : n_(n), counts_{n, 0} {
    if (n < 1) throw std::invalid_argument("pool count must be >= 1");
}

OccupancyMeasure::OccupancyMeasure(std::int64_t n, std::span<const std::int64_t> levels)
    : n_(n) {
    if (n < 1) throw std::invalid_argument("pool count must be >= 1");
    counts_.reserve(levels.size() + 2);
    counts_.push_back(n);
    for (std::int64_t c : levels) {
        counts_.push_back(c);
        total_tasks_ += c;
    }
    counts_.push_back(0);
    validate();
}

std::int64_t OccupancyMeasure::count(int i) const noexcept {
    if (i <= 0) return n_;
    if (i >= static_cast<int>(counts_.size())) return 0;
    return counts_[static_cast<std::size_t>(i)];
}

double OccupancyMeasure::fraction(int i) const noexcept {
    return static_cast<double>(count(i)) / static_cast<double>(n_);
}

void OccupancyMeasure::apply_arrival(int level) {
    if (level < 1) throw std::invalid_argument("arrival level must be >= 1");
    if (count(level - 1) - count(level) < 1)
        throw std::invalid_argument("no pool with exactly " + std::to_string(level - 1) +
                                    " tasks for arrival at level " + std::to_string(level));
    // Keep one zero level above the highest occupied one; grow by doubling.
    while (static_cast<int>(counts_.size()) < level + 2)
        counts_.resize(counts_.size() * 2, 0);
    ++counts_[static_cast<std::size_t>(level)];
    ++total_tasks_;
}

void OccupancyMeasure::apply_departure(int level) {
    if (level < 1) throw std::invalid_argument("departure level must be >= 1");
    if (count(level) - count(level + 1) < 1)
        throw std::invalid_argument("no pool with exactly " + std::to_string(level) +
                                    " tasks for departure");
    --counts_[static_cast<std::size_t>(level)];
    --total_tasks_;
}

double OccupancyMeasure::total_mass() const noexcept {
    return static_cast<double>(total_tasks_) / static_cast<double>(n_);
}

double OccupancyMeasure::tail_mass(int j) const {
    if (j < 1) throw std::domain_error("tail mass level must be >= 1");
    std::int64_t sum = 0;
    for (int i = j; i < static_cast<int>(counts_.size()); ++i)
        sum += counts_[static_cast<std::size_t>(i)];
    return static_cast<double>(sum) / static_cast<double>(n_);
}

int OccupancyMeasure::max_occupied_level() const noexcept {
    for (int i = static_cast<int>(counts_.size()) - 1; i >= 1; --i)
        if (counts_[static_cast<std::size_t>(i)] > 0) return i;
    return 0;
}

void OccupancyMeasure::validate() const {
    if (counts_.empty() || counts_[0] != n_)
        throw std::logic_error("occupancy: count(0) != n");
    if (counts_.back() != 0)
        throw std::logic_error("occupancy: trailing level not empty");
    std::int64_t tasks = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0 || counts_[i] > n_)
            throw std::logic_error("occupancy: count out of [0, n]");
        if (i + 1 < counts_.size() && counts_[i + 1] > counts_[i])
            throw std::logic_error("occupancy: counts not non-increasing");
        if (i >= 1) tasks += counts_[i];
    }
    if (tasks != total_tasks_)
        throw std::logic_error("occupancy: cached task total out of sync");
}

}  // namespace poolsim
