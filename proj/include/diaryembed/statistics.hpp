#ifndef DIARYEMBED_STATISTICS_HPP
#define DIARYEMBED_STATISTICS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "diaryembed/words.hpp"

namespace diaryembed {

// Symbol returned by a finite statistic when it addresses a word before the
// start of the sentence.
Letter out_of_range_symbol();

/*
 * A map from sentences to a finite symbol set. Symbols are letters (atoms or
 * tuples), so products of statistics stay inside the same type.
 */
class FiniteStatistic {
public:
    FiniteStatistic(std::string name, std::function<Letter(const Sentence&)> eval)
        : name_(std::move(name)), eval_(std::move(eval)) {}

    Letter operator()(const Sentence& a) const { return eval_(a); }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::function<Letter(const Sentence&)> eval_;
};

/*
 * A c-indexed family of word-valued statistics: eval_c(c, a) has length at
 * most tau*c and grows monotonically (as prefixes) in c. All statistics here
 * are cut from a single finite limit word, which is exposed directly.
 */
class LinearStatistic {
public:
    LinearStatistic(std::string name, std::int64_t tau,
                    std::function<Word(const Sentence&)> limit);

    std::int64_t tau() const { return tau_; }
    Word limit(const Sentence& a) const { return limit_(a); }
    // First n letters of the limit word.
    Word limit_prefix(std::int64_t n, const Sentence& a) const;
    Word eval_c(std::int64_t c, const Sentence& a) const;
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::int64_t tau_;
    std::function<Word(const Sentence&)> limit_;
};

// Last letter of the final word; out_of_range_symbol() on the empty sentence.
FiniteStatistic last_letter_statistic();

// Final kappa letters of the final word, in reading order, as one tuple symbol.
FiniteStatistic trunc_statistic(std::int64_t kappa);

// Final tau*c letters of the final word, most recent first.
LinearStatistic ltrunc_statistic(std::int64_t tau);

// Final tau*c digits of the decimal expansion of the final word's length,
// least significant first.
LinearStatistic decimal_length_ltrunc_statistic(std::int64_t tau);

enum class PriorityOrder { kOldestFirst, kNewestFirst };

// First tau*c letters of all letters of the sentence, re-ordered by priority.
LinearStatistic oop_statistic(PriorityOrder order, std::int64_t tau);

// Evaluate `stat` on the prefix that ends at word w_{i-r+1}. Out-of-range
// addresses yield out_of_range_symbol() / the empty word.
FiniteStatistic with_word_offset(FiniteStatistic stat, std::int64_t offset_r);
LinearStatistic with_word_offset(LinearStatistic stat, std::int64_t offset_r);

// Tuple of the component evaluations. A single statistic is returned as-is.
FiniteStatistic product_statistic(std::vector<FiniteStatistic> stats);

// First n letters of the limit statistic.
Word eval_linear_inf(const LinearStatistic& stat, std::int64_t n, const Sentence& a);

/* Descriptor form used by harness config files. */
struct StatisticDescriptor {
    std::string kind;         // last-letter | trunc | ltrunc | decimal-length-ltrunc | oop
    std::int64_t param = 1;   // kappa or tau
    std::string order = "newest-first";  // oop only
    std::int64_t offset = 1;  // word offset r

    bool operator==(const StatisticDescriptor&) const = default;
};

std::variant<FiniteStatistic, LinearStatistic> make_statistic(const StatisticDescriptor& d);

// Text form: kind[:param[:order]][@offset], e.g. "ltrunc:12" or
// "last-letter@2" or "oop:3:newest-first".
StatisticDescriptor parse_statistic_descriptor(std::string_view text);
std::string to_string(const StatisticDescriptor& d);

}  // namespace diaryembed

#endif
