#ifndef DIARYEMBED_ORACLES_HPP
#define DIARYEMBED_ORACLES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "diaryembed/hexgroup.hpp"
#include "diaryembed/words.hpp"

namespace diaryembed::oracles {

/*
 * Brute-force verifiers. Nothing here shares an algorithm with the module it
 * checks: group distances come from breadth-first search over the exact
 * integer reflection representation, and recording flags come from a direct
 * replay of the greedy rule.
 */

struct EnumerationGrid {
    std::vector<Letter> alphabet;
    std::int64_t min_days = 1;
    std::int64_t max_days = 1;
    std::int64_t min_word_len = 1;
    std::int64_t max_word_len = 1;
    std::int64_t budget = 20'000'000;

    // Exact number of sentences in the grid (capped at budget + 1).
    std::int64_t count() const;
};

// Every sentence in the grid exactly once, in deterministic order. Throws
// when the count exceeds the budget.
void for_each_sentence(const EnumerationGrid& grid,
                       const std::function<void(const Sentence&)>& visit);
std::vector<Sentence> enumerate_sentences(const EnumerationGrid& grid);

struct RecordingTrace {
    // recorded[w][l]: whether letter l+1 of word w+1 was ever recorded.
    std::vector<std::vector<bool>> recorded;
    // page[w][l]: 1-based page within its chapter, 0 when unrecorded.
    std::vector<std::vector<std::int64_t>> page;
    // chapter[w][l]: 1-based chapter (day) the letter was recorded in, 0 when
    // unrecorded.
    std::vector<std::vector<std::int64_t>> chapter;
    Sentence chapters;

    bool is_recorded(std::int64_t word_index, std::int64_t letter_index) const;
};

// Ground-truth replay of the greedy recording rule: scan the chronological
// log for the most recent unrecorded event, up to kappa times per day.
RecordingTrace verify_recording(const Sentence& a, std::int64_t kappa);

/*
 * Distance oracle over the reflection representation: each generator acts as
 * an exact integer 6x6 reflection matrix, the representation is faithful, and
 * distances come from breadth-first search keyed by matrices. Words of length
 * up to table_radius + scan_radius are resolved (direct lookup within
 * table_radius, midpoint scan beyond).
 */
class CayleyOracle {
public:
    explicit CayleyOracle(std::int64_t table_radius, std::int64_t scan_radius = -1);

    std::int64_t table_radius() const { return table_radius_; }
    std::int64_t scan_radius() const { return scan_radius_; }
    std::int64_t max_resolvable() const { return table_radius_ + scan_radius_; }

    // Cumulative count of elements within distance r.
    std::int64_t ball_size(std::int64_t r) const;
    std::int64_t sphere_size(std::int64_t r) const;

    // Geodesic length of the element the word represents. Requires
    // length(w) <= max_resolvable().
    std::int64_t distance_of_word(const hex::GenWord& w) const;

    // Distance between the elements represented by two words; requires
    // length(wg) + length(wh) <= max_resolvable().
    std::int64_t pair_distance(const hex::GenWord& wg, const hex::GenWord& wh) const;

private:
    using Mat = std::array<std::int64_t, 36>;

    std::int64_t lookup(const Mat& m) const;  // -1 when absent
    std::int64_t resolve(const Mat& m, std::int64_t word_length) const;

    std::int64_t table_radius_;
    std::int64_t scan_radius_;
    std::vector<Mat> table_;             // sorted per sphere
    std::vector<std::size_t> sphere_start_;
    std::vector<Mat> scan_inverses_;     // inverses of ball(scan_radius_), sphere by sphere
    std::vector<std::size_t> scan_sphere_start_;
};

// Convenience wrapper over a lazily built process-wide oracle with the given
// cap; resolves words of length <= 2*cap.
std::int64_t oracle_distance(const hex::GenWord& w, std::int64_t cap = 7);

}  // namespace diaryembed::oracles

#endif
