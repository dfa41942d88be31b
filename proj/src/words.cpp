#include "diaryembed/words.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace diaryembed {

namespace {

struct LetterData {
    Letter::Kind kind;
    std::string token;          // atoms
    std::vector<Letter> parts;  // tuples
};

std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

class LetterTable {
public:
    static LetterTable& instance() {
        static LetterTable table;
        return table;
    }

    Letter intern(LetterData data) {
        std::uint64_t h = hash_of(data);
        {
            std::shared_lock lock(mutex_);
            if (auto it = find_locked(h, data); it != 0xffffffffu) return Letter(it);
        }
        std::unique_lock lock(mutex_);
        if (auto it = find_locked(h, data); it != 0xffffffffu) return Letter(it);
        auto id = static_cast<std::uint32_t>(entries_.size());
        entries_.push_back(std::move(data));
        index_.emplace(h, id);
        return Letter(id);
    }

    const LetterData& data(std::uint32_t id) const {
        std::shared_lock lock(mutex_);
        return entries_[id];
    }

private:
    LetterTable() {
        // Reserved markers occupy fixed slots.
        entries_.push_back({Letter::Kind::kStar, "", {}});
        entries_.push_back({Letter::Kind::kPad, "", {}});
        index_.emplace(hash_of(entries_[0]), 0u);
        index_.emplace(hash_of(entries_[1]), 1u);
    }

    static std::uint64_t hash_of(const LetterData& d) {
        std::uint64_t h = static_cast<std::uint64_t>(d.kind) + 1;
        for (char c : d.token) h = hash_combine(h, static_cast<unsigned char>(c));
        for (const Letter& p : d.parts) h = hash_combine(h, p.id() + 0x100000000ULL);
        return h;
    }

    std::uint32_t find_locked(std::uint64_t h, const LetterData& d) const {
        auto [lo, hi] = index_.equal_range(h);
        for (auto it = lo; it != hi; ++it) {
            const LetterData& e = entries_[it->second];
            if (e.kind == d.kind && e.token == d.token && e.parts == d.parts) return it->second;
        }
        return 0xffffffffu;
    }

    mutable std::shared_mutex mutex_;
    std::deque<LetterData> entries_;
    std::unordered_multimap<std::uint64_t, std::uint32_t> index_;
};

Letter Letter::atom(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("Letter::atom: empty token");
    return LetterTable::instance().intern({Kind::kAtom, std::string(token), {}});
}

Letter Letter::character(char c) { return atom(std::string_view(&c, 1)); }

Letter Letter::star() { return Letter(0); }

Letter Letter::pad() { return Letter(1); }

Letter Letter::tuple(std::span<const Letter> parts) {
    return LetterTable::instance().intern(
        {Kind::kTuple, "", std::vector<Letter>(parts.begin(), parts.end())});
}

Letter Letter::tuple(std::initializer_list<Letter> parts) {
    return tuple(std::span<const Letter>(parts.begin(), parts.size()));
}

Letter::Kind Letter::kind() const { return LetterTable::instance().data(id_).kind; }

const std::string& Letter::token() const {
    const LetterData& d = LetterTable::instance().data(id_);
    if (d.kind != Kind::kAtom) throw std::logic_error("Letter::token on non-atom");
    return d.token;
}

std::span<const Letter> Letter::parts() const {
    const LetterData& d = LetterTable::instance().data(id_);
    if (d.kind != Kind::kTuple) throw std::logic_error("Letter::parts on non-tuple");
    return d.parts;
}

std::strong_ordering Letter::operator<=>(const Letter& other) const {
    if (id_ == other.id_) return std::strong_ordering::equal;
    const LetterData& a = LetterTable::instance().data(id_);
    const LetterData& b = LetterTable::instance().data(other.id_);
    if (a.kind != b.kind) return a.kind <=> b.kind;
    switch (a.kind) {
        case Kind::kStar:
        case Kind::kPad:
            return std::strong_ordering::equal;
        case Kind::kAtom:
            return a.token <=> b.token;
        case Kind::kTuple: {
            std::size_t n = std::min(a.parts.size(), b.parts.size());
            for (std::size_t i = 0; i < n; ++i) {
                auto c = a.parts[i] <=> b.parts[i];
                if (c != std::strong_ordering::equal) return c;
            }
            return a.parts.size() <=> b.parts.size();
        }
    }
    return std::strong_ordering::equal;
}

std::string Letter::str() const {
    const LetterData& d = LetterTable::instance().data(id_);
    switch (d.kind) {
        case Kind::kStar:
            return "*";
        case Kind::kPad:
            return ".";
        case Kind::kAtom:
            if (d.token.size() == 1 && d.token[0] != '*' && d.token[0] != '.' &&
                d.token[0] != '[' && d.token[0] != '(' && d.token[0] != '|')
                return d.token;
            return "[" + d.token + "]";
        case Kind::kTuple: {
            std::string out = "(";
            for (std::size_t i = 0; i < d.parts.size(); ++i) {
                if (i) out += ",";
                out += d.parts[i].str();
            }
            out += ")";
            return out;
        }
    }
    return "?";
}

Word Word::of(std::string_view ascii) {
    std::vector<Letter> letters;
    letters.reserve(ascii.size());
    for (char c : ascii) letters.push_back(Letter::character(c));
    return Word(std::move(letters));
}

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == '*') {
            letters.push_back(Letter::star());
            ++i;
        } else if (c == '.') {
            letters.push_back(Letter::pad());
            ++i;
        } else if (c == '[') {
            auto close = text.find(']', i);
            if (close == std::string_view::npos)
                throw std::invalid_argument("Word::parse: unterminated '['");
            letters.push_back(Letter::atom(text.substr(i + 1, close - i - 1)));
            i = close + 1;
        } else {
            letters.push_back(Letter::character(c));
            ++i;
        }
    }
    return Word(std::move(letters));
}

void Word::append(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

Word Word::prefix(std::int64_t n) const {
    n = std::clamp<std::int64_t>(n, 0, length());
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(std::int64_t n) const {
    n = std::clamp<std::int64_t>(n, 0, length());
    return Word(std::vector<Letter>(letters_.end() - n, letters_.end()));
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    std::size_t n = std::min(letters_.size(), other.letters_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = letters_[i] <=> other.letters_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return letters_.size() <=> other.letters_.size();
}

std::string Word::str() const {
    std::string out;
    for (const Letter& l : letters_) out += l.str();
    return out;
}

Sentence::Sentence(std::vector<Word> words) : words_(std::move(words)) {
    for (const Word& w : words_)
        if (w.empty()) throw std::invalid_argument("Sentence: empty words are not allowed");
}

Sentence Sentence::parse(std::string_view text) {
    Sentence out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t bar = text.find('|', start);
        std::string_view piece =
            bar == std::string_view::npos ? text.substr(start) : text.substr(start, bar - start);
        out.append(Word::parse(piece));
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return out;
}

void Sentence::append(Word w) {
    if (w.empty()) throw std::invalid_argument("Sentence: empty words are not allowed");
    words_.push_back(std::move(w));
}

void Sentence::append(const Sentence& other) {
    words_.insert(words_.end(), other.words_.begin(), other.words_.end());
}

Sentence Sentence::prefix(std::int64_t n) const {
    n = std::clamp<std::int64_t>(n, 0, length());
    return Sentence(std::vector<Word>(words_.begin(), words_.begin() + n));
}

Sentence Sentence::suffix_from(std::int64_t i) const {
    if (i < 1) i = 1;
    if (i > length() + 1) i = length() + 1;
    return Sentence(std::vector<Word>(words_.begin() + (i - 1), words_.end()));
}

std::int64_t Sentence::total_letters() const {
    std::int64_t total = 0;
    for (const Word& w : words_) total += w.length();
    return total;
}

std::strong_ordering Sentence::operator<=>(const Sentence& other) const {
    std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = words_[i] <=> other.words_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return words_.size() <=> other.words_.size();
}

std::string Sentence::str() const {
    std::string out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i) out += "|";
        out += words_[i].str();
    }
    return out;
}

std::int64_t common_prefix_length(const Word& u, const Word& v) {
    std::int64_t n = std::min(u.length(), v.length());
    std::int64_t i = 0;
    while (i < n && u.at(i) == v.at(i)) ++i;
    return i;
}

std::int64_t common_prefix_length(const Sentence& a, const Sentence& b) {
    std::int64_t n = std::min(a.length(), b.length());
    std::int64_t i = 0;
    while (i < n && a.words()[static_cast<std::size_t>(i)] == b.words()[static_cast<std::size_t>(i)]) ++i;
    return i;
}

std::int64_t word_tree_distance(const Word& u, const Word& v) {
    return u.length() + v.length() - 2 * common_prefix_length(u, v);
}

std::int64_t sentence_tree_distance(const Sentence& a, const Sentence& b) {
    return a.length() + b.length() - 2 * common_prefix_length(a, b);
}

bool is_prefix_of(const Word& prefix, const Word& w) {
    return prefix.length() <= w.length() && common_prefix_length(prefix, w) == prefix.length();
}

bool is_prefix_of(const Sentence& prefix, const Sentence& s) {
    return prefix.length() <= s.length() && common_prefix_length(prefix, s) == prefix.length();
}

SplitCommon split_common(const Sentence& a, const Sentence& b) {
    std::int64_t p = common_prefix_length(a, b);
    return {a.prefix(p), a.suffix_from(p + 1), b.suffix_from(p + 1)};
}

Word word_reverse(const Word& w) {
    std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(letters));
}

Word norm_r(const Word& u, std::int64_t r, Letter filler) {
    if (r < 0) throw std::invalid_argument("norm_r: negative length");
    for (const Letter& l : u)
        if (l == filler) throw std::invalid_argument("norm_r: filler occurs in the word");
    if (u.length() >= r) return u.prefix(r);
    Word out = u;
    for (std::int64_t i = u.length(); i < r; ++i) out.push_back(filler);
    return out;
}

namespace {

// Final k letters, padded at the front with pad() so the result always has
// k letters.
Word padded_suffix(const Word& w, std::int64_t k) {
    Word out;
    for (std::int64_t i = w.length(); i < k; ++i) out.push_back(Letter::pad());
    out.append(w.suffix(k));
    return out;
}

}  // namespace

NomtBranch nomt_distinguish(const Word& w, const Word& w2, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("nomt_distinguish: k must be positive");
    if (w == w2) throw std::invalid_argument("nomt_distinguish: words are equal");
    if (word_tree_distance(w, w2) > k)
        throw std::invalid_argument("nomt_distinguish: tree distance exceeds k");
    if (padded_suffix(w, k) != padded_suffix(w2, k)) return NomtBranch::kSuffixDiffers;
    std::string d1 = decimal_digits(w.length());
    std::string d2 = decimal_digits(w2.length());
    auto last_k = [&](const std::string& s) {
        return s.size() <= static_cast<std::size_t>(k) ? s : s.substr(s.size() - static_cast<std::size_t>(k));
    };
    if (last_k(d1) == last_k(d2))
        throw std::logic_error("nomt_distinguish: neither branch holds");
    return NomtBranch::kLengthExpansionDiffers;
}

Rational awl(const Sentence& a) {
    if (a.empty()) throw std::invalid_argument("awl: empty sentence");
    return Rational(a.total_letters(), a.length());
}

namespace {

void check_letter_address(const Sentence& a, std::int64_t word_index, std::int64_t letter_index) {
    if (word_index < 1 || word_index > a.length())
        throw std::out_of_range("letter address: word index out of range");
    if (letter_index < 1 || letter_index > a.word(word_index).length())
        throw std::out_of_range("letter address: letter index out of range");
}

}  // namespace

Sentence tail_sentence(const Sentence& a, std::int64_t word_index, std::int64_t letter_index) {
    check_letter_address(a, word_index, letter_index);
    const Word& u = a.word(word_index);
    Sentence out;
    out.append(u.suffix(u.length() - letter_index + 1));
    for (std::int64_t i = word_index + 1; i <= a.length(); ++i) out.append(a.word(i));
    return out;
}

Sentence head_sentence(const Sentence& a, std::int64_t word_index, std::int64_t letter_index) {
    check_letter_address(a, word_index, letter_index);
    Sentence out = a.prefix(word_index - 1);
    out.append(a.word(word_index).prefix(letter_index));
    return out;
}

std::string decimal_digits(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("decimal_digits: negative");
    return std::to_string(n);
}

Word decimal_word(std::int64_t n) { return Word::of(decimal_digits(n)); }

}  // namespace diaryembed
