#include "diaryembed/oracles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace diaryembed::oracles {

std::int64_t EnumerationGrid::count() const {
    if (alphabet.empty() || max_days < min_days || max_word_len < min_word_len) return 0;
    if (min_days < 0 || min_word_len < 1)
        throw std::invalid_argument("EnumerationGrid: invalid bounds");
    // Words per slot: sum of |alphabet|^len over the length range.
    std::int64_t words = 0;
    std::int64_t pow = 1;
    for (std::int64_t len = 1; len <= max_word_len; ++len) {
        if (pow > budget) return budget + 1;
        pow *= static_cast<std::int64_t>(alphabet.size());
        if (len >= min_word_len) words += pow;
        if (words > budget) return budget + 1;
    }
    std::int64_t total = 0;
    std::int64_t per_day = 1;
    for (std::int64_t days = 0; days <= max_days; ++days) {
        if (days >= min_days) total += per_day;
        if (total > budget) return budget + 1;
        if (per_day > budget / std::max<std::int64_t>(words, 1)) return budget + 1;
        per_day *= words;
    }
    return total;
}

namespace {

// Advance a base-`base` odometer; false when it wraps around to all zeros.
bool advance(std::vector<std::size_t>& digits, std::size_t base) {
    std::size_t i = digits.size();
    while (i > 0) {
        if (++digits[i - 1] < base) return true;
        digits[i - 1] = 0;
        --i;
    }
    return false;
}

void enumerate_words(const EnumerationGrid& grid, std::vector<Word>& out) {
    std::vector<Letter> current;
    for (std::int64_t len = grid.min_word_len; len <= grid.max_word_len; ++len) {
        std::vector<std::size_t> digits(static_cast<std::size_t>(len), 0);
        do {
            current.clear();
            for (std::size_t d : digits) current.push_back(grid.alphabet[d]);
            out.emplace_back(current);
        } while (advance(digits, grid.alphabet.size()));
    }
}

}  // namespace

void for_each_sentence(const EnumerationGrid& grid,
                       const std::function<void(const Sentence&)>& visit) {
    if (grid.count() > grid.budget)
        throw std::invalid_argument("for_each_sentence: grid exceeds its budget");
    if (grid.alphabet.empty() || grid.max_days < grid.min_days ||
        grid.max_word_len < grid.min_word_len)
        return;
    std::vector<Word> words;
    enumerate_words(grid, words);
    if (grid.min_days == 0) visit(Sentence());
    std::vector<std::size_t> slots;
    for (std::int64_t days = std::max<std::int64_t>(grid.min_days, 1); days <= grid.max_days;
         ++days) {
        slots.assign(static_cast<std::size_t>(days), 0);
        do {
            Sentence s;
            for (std::size_t w : slots) s.append(words[w]);
            visit(s);
        } while (advance(slots, words.size()));
    }
}

std::vector<Sentence> enumerate_sentences(const EnumerationGrid& grid) {
    std::vector<Sentence> out;
    for_each_sentence(grid, [&](const Sentence& s) { out.push_back(s); });
    return out;
}

bool RecordingTrace::is_recorded(std::int64_t word_index, std::int64_t letter_index) const {
    return recorded.at(static_cast<std::size_t>(word_index - 1))
        .at(static_cast<std::size_t>(letter_index - 1));
}

RecordingTrace verify_recording(const Sentence& a, std::int64_t kappa) {
    if (kappa < 1) throw std::invalid_argument("verify_recording: kappa must be at least 1");
    struct Event {
        std::int64_t word;    // 1-based
        std::int64_t letter;  // 1-based
        bool recorded = false;
    };
    std::vector<Event> log;
    RecordingTrace trace;
    for (std::int64_t day = 1; day <= a.length(); ++day) {
        std::int64_t len = a.word(day).length();
        trace.recorded.emplace_back(static_cast<std::size_t>(len), false);
        trace.page.emplace_back(static_cast<std::size_t>(len), 0);
        trace.chapter.emplace_back(static_cast<std::size_t>(len), 0);
    }
    for (std::int64_t day = 1; day <= a.length(); ++day) {
        for (std::int64_t l = 1; l <= a.word(day).length(); ++l) log.push_back({day, l});
        Word chapter;
        for (std::int64_t p = 1; p <= kappa; ++p) {
            // Most recent unrecorded event, by a plain backwards scan.
            std::int64_t found = -1;
            for (std::int64_t i = static_cast<std::int64_t>(log.size()); i-- > 0;) {
                if (!log[static_cast<std::size_t>(i)].recorded) {
                    found = i;
                    break;
                }
            }
            if (found < 0) break;
            Event& e = log[static_cast<std::size_t>(found)];
            e.recorded = true;
            chapter.push_back(a.word(e.word).at(e.letter - 1));
            trace.recorded[static_cast<std::size_t>(e.word - 1)][static_cast<std::size_t>(e.letter - 1)] = true;
            trace.page[static_cast<std::size_t>(e.word - 1)][static_cast<std::size_t>(e.letter - 1)] = p;
            trace.chapter[static_cast<std::size_t>(e.word - 1)][static_cast<std::size_t>(e.letter - 1)] = day;
        }
        trace.chapters.append(std::move(chapter));
    }
    return trace;
}

namespace {

using Mat = std::array<std::int64_t, 36>;

Mat identity_matrix() {
    Mat m{};
    for (int i = 0; i < 6; ++i) m[static_cast<std::size_t>(i * 6 + i)] = 1;
    return m;
}

// Bilinear form of the reflection representation: 1 on the diagonal, 0 for
// commuting pairs, -1 for non-commuting distinct pairs.
int form(int i, int j) {
    if (i == j) return 1;
    bool commute = (i / 3 != j / 3) && (i % 3 != j % 3);
    return commute ? 0 : -1;
}

Mat generator_matrix(int g) {
    Mat m = identity_matrix();
    for (int c = 0; c < 6; ++c)
        m[static_cast<std::size_t>(g * 6 + c)] =
            (c == g ? 1 : 0) - 2 * static_cast<std::int64_t>(form(g, c));
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat out{};
    for (int r = 0; r < 6; ++r)
        for (int k = 0; k < 6; ++k) {
            std::int64_t v = a[static_cast<std::size_t>(r * 6 + k)];
            if (v == 0) continue;
            for (int c = 0; c < 6; ++c)
                out[static_cast<std::size_t>(r * 6 + c)] += v * b[static_cast<std::size_t>(k * 6 + c)];
        }
    return out;
}

Mat word_matrix(const hex::GenWord& w) {
    Mat m = identity_matrix();
    for (hex::Generator g : w) m = mat_mul(m, generator_matrix(g.code()));
    return m;
}

}  // namespace

CayleyOracle::CayleyOracle(std::int64_t table_radius, std::int64_t scan_radius)
    : table_radius_(table_radius),
      scan_radius_(scan_radius < 0 ? std::max<std::int64_t>(table_radius - 2, 0) : scan_radius) {
    if (table_radius_ < 0) throw std::invalid_argument("CayleyOracle: negative radius");
    if (scan_radius_ > table_radius_)
        throw std::invalid_argument("CayleyOracle: scan radius exceeds table radius");
    std::array<Mat, 6> gens;
    for (int g = 0; g < 6; ++g) gens[static_cast<std::size_t>(g)] = generator_matrix(g);

    sphere_start_.push_back(0);
    std::vector<Mat> frontier{identity_matrix()};
    std::vector<Mat> previous;
    for (std::int64_t r = 0; r <= table_radius_; ++r) {
        table_.insert(table_.end(), frontier.begin(), frontier.end());
        sphere_start_.push_back(table_.size());
        if (r == table_radius_) break;
        std::vector<Mat> next;
        next.reserve(frontier.size() * 6);
        for (const Mat& m : frontier)
            for (const Mat& g : gens) next.push_back(mat_mul(m, g));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        // The Cayley graph is bipartite (every relator has even length), so
        // expanding sphere r only reaches spheres r-1 and r+1.
        std::vector<Mat> sphere;
        sphere.reserve(next.size());
        for (const Mat& m : next)
            if (!std::binary_search(previous.begin(), previous.end(), m)) sphere.push_back(m);
        previous = std::move(frontier);
        frontier = std::move(sphere);
    }

    // Second BFS over ball(scan_radius_) carrying, next to each element's
    // matrix, the matrix of the reversed word (its inverse, the generators
    // being involutions): appending a generator on the right of the key
    // corresponds to multiplying it on the left of the inverse.
    scan_sphere_start_.push_back(0);
    std::vector<std::pair<Mat, Mat>> inv_frontier{{identity_matrix(), identity_matrix()}};
    std::vector<Mat> inv_previous_keys;
    for (std::int64_t r = 0; r <= scan_radius_; ++r) {
        std::sort(inv_frontier.begin(), inv_frontier.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [key, inv] : inv_frontier) scan_inverses_.push_back(inv);
        scan_sphere_start_.push_back(scan_inverses_.size());
        if (r == scan_radius_) break;
        std::vector<Mat> keys;
        keys.reserve(inv_frontier.size());
        for (const auto& [key, inv] : inv_frontier) keys.push_back(key);
        std::vector<std::pair<Mat, Mat>> next;
        next.reserve(inv_frontier.size() * 6);
        for (const auto& [key, inv] : inv_frontier)
            for (int g = 0; g < 6; ++g)
                next.emplace_back(mat_mul(key, gens[static_cast<std::size_t>(g)]),
                                  mat_mul(gens[static_cast<std::size_t>(g)], inv));
        std::sort(next.begin(), next.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const auto& x, const auto& y) { return x.first == y.first; }),
                   next.end());
        std::vector<std::pair<Mat, Mat>> sphere;
        for (auto& entry : next)
            if (!std::binary_search(inv_previous_keys.begin(), inv_previous_keys.end(),
                                    entry.first))
                sphere.push_back(std::move(entry));
        inv_previous_keys = std::move(keys);
        inv_frontier = std::move(sphere);
    }
}

std::int64_t CayleyOracle::ball_size(std::int64_t r) const {
    if (r < 0) return 0;
    r = std::min(r, table_radius_);
    return static_cast<std::int64_t>(sphere_start_[static_cast<std::size_t>(r) + 1]);
}

std::int64_t CayleyOracle::sphere_size(std::int64_t r) const {
    if (r < 0 || r > table_radius_) return 0;
    return static_cast<std::int64_t>(sphere_start_[static_cast<std::size_t>(r) + 1] -
                                     sphere_start_[static_cast<std::size_t>(r)]);
}

std::int64_t CayleyOracle::lookup(const Mat& m) const {
    for (std::int64_t r = 0; r <= table_radius_; ++r) {
        auto lo = table_.begin() + static_cast<std::ptrdiff_t>(sphere_start_[static_cast<std::size_t>(r)]);
        auto hi = table_.begin() + static_cast<std::ptrdiff_t>(sphere_start_[static_cast<std::size_t>(r) + 1]);
        if (std::binary_search(lo, hi, m)) return r;
    }
    return -1;
}

std::int64_t CayleyOracle::resolve(const Mat& m, std::int64_t word_length) const {
    if (word_length > max_resolvable())
        throw std::invalid_argument("CayleyOracle: word exceeds the resolvable range");
    std::int64_t direct = lookup(m);
    if (direct >= 0) return direct;
    // Midpoint scan: for x at distance s on a geodesic to the target, the
    // remainder x^-1 * m sits within the table once s >= d - table_radius.
    // Scanning spheres in increasing s, the first s whose best candidate B
    // satisfies B <= table_radius + s is exact.
    std::int64_t best = -1;
    for (std::int64_t s = 1; s <= scan_radius_; ++s) {
        auto lo = scan_sphere_start_[static_cast<std::size_t>(s)];
        auto hi = scan_sphere_start_[static_cast<std::size_t>(s) + 1];
        for (std::size_t i = lo; i < hi; ++i) {
            std::int64_t t = lookup(mat_mul(scan_inverses_[i], m));
            if (t >= 0 && (best < 0 || s + t < best)) best = s + t;
        }
        if (best >= 0 && best <= table_radius_ + s) return best;
    }
    throw std::logic_error("CayleyOracle: failed to resolve distance within range");
}

std::int64_t CayleyOracle::distance_of_word(const hex::GenWord& w) const {
    return resolve(word_matrix(w), static_cast<std::int64_t>(w.size()));
}

std::int64_t CayleyOracle::pair_distance(const hex::GenWord& wg, const hex::GenWord& wh) const {
    hex::GenWord joined(wg.rbegin(), wg.rend());
    joined.insert(joined.end(), wh.begin(), wh.end());
    return distance_of_word(joined);
}

std::int64_t oracle_distance(const hex::GenWord& w, std::int64_t cap) {
    if (cap < 1) throw std::invalid_argument("oracle_distance: cap must be positive");
    if (static_cast<std::int64_t>(w.size()) > 2 * cap)
        throw std::invalid_argument("oracle_distance: word longer than twice the cap");
    static std::mutex mutex;
    static std::map<std::int64_t, CayleyOracle> oracles;
    std::lock_guard lock(mutex);
    auto it = oracles.find(cap);
    if (it == oracles.end())
        it = oracles.try_emplace(cap, cap + 1, cap - 1).first;
    return it->second.distance_of_word(w);
}

}  // namespace diaryembed::oracles
