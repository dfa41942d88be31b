#ifndef DIARYEMBED_WORDS_HPP
#define DIARYEMBED_WORDS_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diaryembed/rational.hpp"

namespace diaryembed {

/*
 * Interned symbol. A letter is either an atom (a named token), one of the two
 * reserved markers, or a tuple of letters (used for composite alphabets such
 * as products of alphabets). Equality is O(1); ordering is structural and
 * stable across runs.
 *
 *   star() marks the start of a "starred" word.
 *   pad()  is the filler used when a word is normalised to a fixed length.
 */
class Letter {
public:
    enum class Kind : std::uint8_t { kStar, kPad, kAtom, kTuple };

    static Letter atom(std::string_view token);
    static Letter character(char c);
    static Letter star();
    static Letter pad();
    static Letter tuple(std::span<const Letter> parts);
    static Letter tuple(std::initializer_list<Letter> parts);

    Kind kind() const;
    // Atoms only.
    const std::string& token() const;
    // Tuples only.
    std::span<const Letter> parts() const;

    bool operator==(const Letter& other) const { return id_ == other.id_; }
    bool operator!=(const Letter& other) const { return id_ != other.id_; }
    std::strong_ordering operator<=>(const Letter& other) const;

    std::uint32_t id() const { return id_; }
    std::string str() const;

private:
    explicit Letter(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
    friend class LetterTable;
};

/* A finite string of letters. May be empty. */
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    // One atom per character: Word::of("abc") == [a][b][c].
    static Word of(std::string_view ascii);
    // Inverse of str(): single characters, '*', '.', and "[token]" atoms.
    static Word parse(std::string_view text);

    std::int64_t length() const { return static_cast<std::int64_t>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    const Letter& at(std::int64_t i) const { return letters_.at(static_cast<std::size_t>(i)); }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter l) { letters_.push_back(l); }
    void append(const Word& other);
    Word prefix(std::int64_t n) const;
    Word suffix(std::int64_t n) const;

    bool operator==(const Word&) const = default;
    std::strong_ordering operator<=>(const Word& other) const;

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

/* A finite string of non-empty words. */
class Sentence {
public:
    Sentence() = default;
    explicit Sentence(std::vector<Word> words);
    static Sentence parse(std::string_view text);

    std::int64_t length() const { return static_cast<std::int64_t>(words_.size()); }
    bool empty() const { return words_.empty(); }
    // 1-based, matching the u_1 ... u_m convention used throughout.
    const Word& word(std::int64_t i) const { return words_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Word>& words() const { return words_; }
    auto begin() const { return words_.begin(); }
    auto end() const { return words_.end(); }

    void append(Word w);
    void append(const Sentence& other);
    Sentence prefix(std::int64_t n) const;
    // Words i..length(), 1-based, inclusive.
    Sentence suffix_from(std::int64_t i) const;
    std::int64_t total_letters() const;

    bool operator==(const Sentence&) const = default;
    std::strong_ordering operator<=>(const Sentence& other) const;

    std::string str() const;

private:
    std::vector<Word> words_;
};

std::int64_t common_prefix_length(const Word& u, const Word& v);
std::int64_t common_prefix_length(const Sentence& a, const Sentence& b);

// Graph distance in the rooted tree whose vertices are words (children append
// one letter): length(u) + length(v) - 2 * common prefix.
std::int64_t word_tree_distance(const Word& u, const Word& v);

// Same formula one level up, on the tree whose vertices are sentences.
std::int64_t sentence_tree_distance(const Sentence& a, const Sentence& b);

bool is_prefix_of(const Word& prefix, const Word& w);
bool is_prefix_of(const Sentence& prefix, const Sentence& s);

struct SplitCommon {
    Sentence common;
    Sentence tail_a;
    Sentence tail_b;
};

// Longest common word-level prefix and the two remainders. The first words of
// the remainders differ whenever both are non-empty.
SplitCommon split_common(const Sentence& a, const Sentence& b);

Word word_reverse(const Word& w);

// First r letters of u, extended with `filler` when u is shorter than r.
// Result has length exactly r. `filler` must not occur in u.
Word norm_r(const Word& u, std::int64_t r, Letter filler);

enum class NomtBranch { kSuffixDiffers, kLengthExpansionDiffers };

// For distinct words at tree distance <= k: either their final k letters
// differ (short words padded at the front with pad()), or the final k digits
// of the decimal expansions of their lengths differ.
NomtBranch nomt_distinguish(const Word& w, const Word& w2, std::int64_t k);

// Average word length; exact. Rejects the empty sentence.
Rational awl(const Sentence& a);

// With u_i = v a w (letter a at 1-based position letter_index), the
// tail-sentence is (a w | u_{i+1} | ... | u_m); the head-sentence is
// (u_1 | ... | u_{i-1} | v a).
Sentence tail_sentence(const Sentence& a, std::int64_t word_index, std::int64_t letter_index);
Sentence head_sentence(const Sentence& a, std::int64_t word_index, std::int64_t letter_index);

// Base-10 expansion, most significant digit first, "0" for zero.
std::string decimal_digits(std::int64_t n);
Word decimal_word(std::int64_t n);

}  // namespace diaryembed

#endif
