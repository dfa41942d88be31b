#include "diaryembed/hexgroup.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace diaryembed::hex {

Generator::Generator(Family family, int index) {
    if (index < 1 || index > 3) throw std::invalid_argument("Generator: index must be 1..3");
    code_ = static_cast<std::uint8_t>(static_cast<int>(family) * 3 + index - 1);
}

Generator Generator::from_code(int code) {
    if (code < 0 || code > 5) throw std::invalid_argument("Generator: code must be 0..5");
    return Generator(code);
}

std::optional<Generator> Generator::parse(std::string_view token) {
    if (token.size() != 2) return std::nullopt;
    char f = token[0];
    char d = token[1];
    if ((f != 'a' && f != 'b') || d < '1' || d > '3') return std::nullopt;
    return Generator(f == 'a' ? Family::kA : Family::kB, d - '0');
}

std::string Generator::str() const {
    std::string out(1, family() == Family::kA ? 'a' : 'b');
    out += static_cast<char>('0' + index());
    return out;
}

Letter Generator::letter() const { return Letter::atom(str()); }

GenWord parse_gen_word(std::string_view text) {
    GenWord out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        auto g = Generator::parse(token);
        if (!g) throw std::invalid_argument("parse_gen_word: unknown generator '" + token + "'");
        out.push_back(*g);
    }
    return out;
}

std::string gen_word_str(const GenWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += w[i].str();
    }
    return out;
}

Word to_word(const GenWord& w) {
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (Generator g : w) letters.push_back(g.letter());
    return Word(std::move(letters));
}

GenWord reduce(const GenWord& w) {
    GenWord out;
    out.reserve(w.size());
    for (Generator x : w) {
        // Scan back over letters commuting with x; an equal letter there
        // cancels with x.
        bool cancelled = false;
        for (std::size_t i = out.size(); i-- > 0;) {
            if (out[i] == x) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                cancelled = true;
                break;
            }
            if (!commutes(out[i], x)) break;
        }
        if (!cancelled) out.push_back(x);
    }
    return out;
}

GenWord shortlex_canonical(const GenWord& w) {
    GenWord rest = reduce(w);
    GenWord out;
    out.reserve(rest.size());
    // Repeatedly emit the smallest letter that can be commuted to the front.
    while (!rest.empty()) {
        std::size_t best = 0;
        bool found = false;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            bool movable = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (!commutes(rest[j], rest[i])) {
                    movable = false;
                    break;
                }
            }
            if (movable && (!found || rest[i] < rest[best])) {
                best = i;
                found = true;
            }
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

GroupElement GroupElement::from_word(const GenWord& w) {
    GroupElement g;
    g.canonical_ = shortlex_canonical(w);
    return g;
}

GroupElement GroupElement::parse(std::string_view text) {
    return from_word(parse_gen_word(text));
}

std::strong_ordering GroupElement::operator<=>(const GroupElement& other) const {
    if (canonical_.size() != other.canonical_.size())
        return canonical_.size() <=> other.canonical_.size();
    for (std::size_t i = 0; i < canonical_.size(); ++i) {
        if (canonical_[i] != other.canonical_[i])
            return canonical_[i].code() <=> other.canonical_[i].code();
    }
    return std::strong_ordering::equal;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    GenWord w = g.canonical_word();
    const GenWord& v = h.canonical_word();
    w.insert(w.end(), v.begin(), v.end());
    return GroupElement::from_word(w);
}

GroupElement inverse(const GroupElement& g) {
    GenWord w(g.canonical_word().rbegin(), g.canonical_word().rend());
    return GroupElement::from_word(w);
}

std::int64_t group_distance(const GroupElement& g, const GroupElement& h) {
    GenWord w(g.canonical_word().rbegin(), g.canonical_word().rend());
    const GenWord& v = h.canonical_word();
    w.insert(w.end(), v.begin(), v.end());
    return static_cast<std::int64_t>(reduce(w).size());
}

GenWord side_left_rep(const GroupElement& g, Family side) {
    GenWord w = g.canonical_word();
    // Bubble side-family letters left over commuting letters until no swap
    // applies. Letters of one family never commute with each other, so the
    // fixpoint is unique.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i].family() == side && w[i - 1].family() != side && commutes(w[i - 1], w[i])) {
                std::swap(w[i - 1], w[i]);
                changed = true;
            }
        }
    }
    return w;
}

namespace {

std::string element_key(const GroupElement& g) {
    std::string key;
    key.reserve(g.canonical_word().size());
    for (Generator x : g.canonical_word()) key += static_cast<char>('0' + x.code());
    return key;
}

}  // namespace

std::int64_t Ball::sphere_size(std::int64_t r) const {
    if (r < 0 || r > radius) return 0;
    return static_cast<std::int64_t>(sphere_start[static_cast<std::size_t>(r) + 1] -
                                     sphere_start[static_cast<std::size_t>(r)]);
}

std::optional<std::size_t> Ball::index_of(const GroupElement& g) const {
    // Spheres are sorted by canonical word, shorter spheres first.
    std::int64_t r = g.length();
    if (r > radius) return std::nullopt;
    auto lo = elements.begin() + static_cast<std::ptrdiff_t>(sphere_start[static_cast<std::size_t>(r)]);
    auto hi = elements.begin() + static_cast<std::ptrdiff_t>(sphere_start[static_cast<std::size_t>(r) + 1]);
    auto it = std::lower_bound(lo, hi, g);
    if (it == hi || !(*it == g)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
}

Ball bfs_ball(std::int64_t radius, std::int64_t cap) {
    if (radius < 0) throw std::invalid_argument("bfs_ball: negative radius");
    if (radius > cap) throw std::invalid_argument("bfs_ball: radius exceeds the cap");
    Ball ball;
    ball.radius = radius;
    ball.sphere_start.push_back(0);
    std::vector<GroupElement> frontier{GroupElement::identity()};
    std::unordered_map<std::string, bool> seen;
    seen.emplace(element_key(GroupElement::identity()), true);
    for (std::int64_t r = 0; r <= radius; ++r) {
        std::sort(frontier.begin(), frontier.end());
        for (const GroupElement& g : frontier) {
            ball.elements.push_back(g);
            ball.distance.push_back(r);
        }
        ball.sphere_start.push_back(ball.elements.size());
        if (r == radius) break;
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier) {
            for (int code = 0; code < 6; ++code) {
                GenWord w = g.canonical_word();
                w.push_back(Generator::from_code(code));
                GroupElement h = GroupElement::from_word(w);
                if (h.length() != g.length() + 1) continue;
                auto [it, inserted] = seen.emplace(element_key(h), true);
                if (inserted) next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    return ball;
}

GroupElement random_element(std::int64_t target_length, std::uint64_t seed) {
    if (target_length < 0) throw std::invalid_argument("random_element: negative target");
    std::mt19937_64 rng(seed);
    std::int64_t need = (target_length + 1) / 2;
    for (;;) {
        GenWord w;
        w.reserve(static_cast<std::size_t>(target_length));
        for (std::int64_t i = 0; i < target_length; ++i)
            w.push_back(Generator::from_code(static_cast<int>(rng() % 6)));
        GroupElement g = GroupElement::from_word(w);
        if (g.length() >= need) return g;
    }
}

}  // namespace diaryembed::hex
