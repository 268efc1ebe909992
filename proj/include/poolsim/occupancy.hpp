#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace poolsim {

/// Aggregate occupancy state of n server pools.
///
/// count(i) is the number of pools holding at least i tasks, so count(0) == n,
/// the counts are non-increasing in i, and the internal array always keeps one
/// trailing zero level above the highest occupied one (growing on demand).
class OccupancyMeasure {
public:
    explicit OccupancyMeasure(std::int64_t n);

    // levels[k] = count for level k+1; level 0 is implied (== n).
    OccupancyMeasure(std::int64_t n, std::span<const std::int64_t> levels);

    std::int64_t n() const noexcept { return n_; }

    // Index of the trailing zero level; count(cap()) == 0.
    int cap() const noexcept { return static_cast<int>(counts_.size()) - 1; }

    std::int64_t count(int i) const noexcept;
    double fraction(int i) const noexcept;  // q(i) = count(i)/n

    std::int64_t total_tasks() const noexcept { return total_tasks_; }

    // Places a task in a pool with exactly level-1 tasks.
    void apply_arrival(int level);

    // Removes a task from a pool with exactly `level` tasks.
    void apply_departure(int level);

    double total_mass() const noexcept;   // u_n = sum_{i>=1} q(i)
    double tail_mass(int j) const;        // v_n(j) = sum_{i>=j} q(i)

    // Largest i >= 1 with count(i) > 0; 0 for an empty system.
    int max_occupied_level() const noexcept;

    void validate() const;  // throws std::logic_error on invariant violation

    bool operator==(const OccupancyMeasure&) const = default;

    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }

private:
    std::int64_t n_;
    std::vector<std::int64_t> counts_;  // counts_[0] == n_, trailing zero kept
    std::int64_t total_tasks_ = 0;
};

}  // namespace poolsim
