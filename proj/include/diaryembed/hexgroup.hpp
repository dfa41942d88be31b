#ifndef DIARYEMBED_HEXGROUP_HPP
#define DIARYEMBED_HEXGROUP_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diaryembed/words.hpp"

namespace diaryembed::hex {

/*
 * The hexagonal hyperbolic Coxeter group: involutions a1,a2,a3,b1,b2,b3 with
 * a_k and b_l commuting exactly when k != l. The reduction and normal-form
 * machinery only consults commutes(), so it is written against the
 * commutation table rather than this particular group.
 */

enum class Family : std::uint8_t { kA = 0, kB = 1 };

class Generator {
public:
    Generator(Family family, int index);  // index in 1..3
    static Generator from_code(int code);  // 0..5 = a1,a2,a3,b1,b2,b3
    static std::optional<Generator> parse(std::string_view token);

    Family family() const { return static_cast<Family>(code_ / 3); }
    int index() const { return code_ % 3 + 1; }
    int code() const { return code_; }
    std::string str() const;
    Letter letter() const;

    auto operator<=>(const Generator&) const = default;

private:
    explicit Generator(int code) : code_(static_cast<std::uint8_t>(code)) {}
    std::uint8_t code_;
};

inline bool commutes(Generator x, Generator y) {
    return x.family() != y.family() && x.index() != y.index();
}

using GenWord = std::vector<Generator>;

// Whitespace-separated generator tokens ("a1 b2 a1"). Throws on unknown tokens.
GenWord parse_gen_word(std::string_view text);
std::string gen_word_str(const GenWord& w);
Word to_word(const GenWord& w);

// Deletes pairs of equal generators separated only by letters commuting with
// them, until none remain. The result is geodesic and represents the same
// element.
GenWord reduce(const GenWord& w);

// Lexicographically least geodesic (order a1 < a2 < a3 < b1 < b2 < b3) in the
// commutation class of reduce(w). Equal elements share this form.
GenWord shortlex_canonical(const GenWord& w);

class GroupElement {
public:
    GroupElement() = default;  // identity
    static GroupElement identity() { return GroupElement(); }
    static GroupElement from_word(const GenWord& w);
    static GroupElement parse(std::string_view text);

    const GenWord& canonical_word() const { return canonical_; }
    std::int64_t length() const { return static_cast<std::int64_t>(canonical_.size()); }
    bool is_identity() const { return canonical_.empty(); }
    std::string str() const { return gen_word_str(canonical_); }

    bool operator==(const GroupElement&) const = default;
    std::strong_ordering operator<=>(const GroupElement& other) const;

private:
    GenWord canonical_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
std::int64_t group_distance(const GroupElement& g, const GroupElement& h);

// The unique geodesic representative with every letter of `side` commuted as
// far left as possible.
GenWord side_left_rep(const GroupElement& g, Family side);

inline constexpr std::int64_t kDefaultBfsCap = 10;

struct Ball {
    std::int64_t radius = 0;
    // Breadth-first order; sphere_start[r] indexes the first element at
    // distance r, with a trailing end sentinel.
    std::vector<GroupElement> elements;
    std::vector<std::int64_t> distance;
    std::vector<std::size_t> sphere_start;

    std::int64_t size() const { return static_cast<std::int64_t>(elements.size()); }
    std::int64_t sphere_size(std::int64_t r) const;
    std::optional<std::size_t> index_of(const GroupElement& g) const;
};

// All elements within `radius`, exact distances, deterministic order.
// Throws when radius exceeds the cap.
Ball bfs_ball(std::int64_t radius, std::int64_t cap = kDefaultBfsCap);

// Deterministic pseudo-random element of geodesic length at least
// target_length/2 (rounded up).
GroupElement random_element(std::int64_t target_length, std::uint64_t seed);

}  // namespace diaryembed::hex

#endif
