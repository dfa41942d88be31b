#ifndef DIARYEMBED_TESTS_SUPPORT_HPP
#define DIARYEMBED_TESTS_SUPPORT_HPP

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "diaryembed/diary.hpp"
#include "diaryembed/oracles.hpp"

namespace diaryembed::testsupport {

// Every starred sentence with 1..max_days words whose payloads run over
// {a,b} with 1..max_payload letters.
inline std::vector<Sentence> starred_grid(std::int64_t max_days, std::int64_t max_payload) {
    oracles::EnumerationGrid grid;
    grid.alphabet = {Letter::character('a'), Letter::character('b')};
    grid.min_days = 1;
    grid.max_days = max_days;
    grid.min_word_len = 1;
    grid.max_word_len = max_payload;
    std::vector<Sentence> out;
    oracles::for_each_sentence(grid, [&](const Sentence& s) {
        Sentence starred;
        for (const Word& w : s) {
            Word sw;
            sw.push_back(Letter::star());
            sw.append(w);
            starred.append(std::move(sw));
        }
        out.push_back(std::move(starred));
    });
    return out;
}

struct DiaryRun {
    Sentence chapters;
    oracles::RecordingTrace trace;
};

inline std::vector<DiaryRun> run_diaries(const std::vector<Sentence>& sentences,
                                         std::int64_t kappa) {
    std::vector<DiaryRun> out;
    out.reserve(sentences.size());
    for (const Sentence& s : sentences)
        out.push_back({alice_diary(kappa, s), oracles::verify_recording(s, kappa)});
    return out;
}

// Chapter of the form u*v with u star-free forces the day's word.
inline std::int64_t violations_chapter_recovers_day(const std::vector<Sentence>& sentences,
                                                    const std::vector<DiaryRun>& runs) {
    std::int64_t bad = 0;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        const Sentence& alpha = sentences[s];
        const Sentence& chapters = runs[s].chapters;
        for (std::int64_t i = 1; i <= alpha.length(); ++i) {
            const Word& v = chapters.word(i);
            std::int64_t first_star = -1;
            for (std::int64_t q = 0; q < v.length(); ++q) {
                if (v.at(q) == Letter::star()) {
                    first_star = q;
                    break;
                }
            }
            if (first_star < 0) continue;
            Word expected;
            expected.push_back(Letter::star());
            expected.append(word_reverse(v.prefix(first_star)));
            if (alpha.word(i) != expected) ++bad;
        }
    }
    return bad;
}

// Equal diaries force equality of any day whose word fits inside a chapter.
inline std::int64_t violations_short_day_equal(const std::vector<Sentence>& sentences,
                                               const std::vector<DiaryRun>& runs,
                                               std::int64_t kappa) {
    std::int64_t bad = 0;
    std::map<Sentence, std::vector<std::size_t>> by_diary;
    for (std::size_t s = 0; s < sentences.size(); ++s)
        by_diary[runs[s].chapters].push_back(s);
    for (const auto& [chapters, group] : by_diary) {
        for (std::size_t x = 0; x < group.size(); ++x) {
            for (std::size_t y = x + 1; y < group.size(); ++y) {
                const Sentence& a = sentences[group[x]];
                const Sentence& b = sentences[group[y]];
                for (std::int64_t i = 1; i <= a.length(); ++i) {
                    if (a.word(i).length() <= kappa && a.word(i) != b.word(i)) ++bad;
                    if (b.word(i).length() <= kappa && a.word(i) != b.word(i)) ++bad;
                }
            }
        }
    }
    return bad;
}

// Equal diaries plus two recorded letters in the same position force equal
// letters.
inline std::int64_t violations_recorded_letters_equal(const std::vector<Sentence>& sentences,
                                                      const std::vector<DiaryRun>& runs) {
    std::int64_t bad = 0;
    std::map<Sentence, std::vector<std::size_t>> by_diary;
    for (std::size_t s = 0; s < sentences.size(); ++s)
        by_diary[runs[s].chapters].push_back(s);
    for (const auto& [chapters, group] : by_diary) {
        for (std::size_t x = 0; x < group.size(); ++x) {
            for (std::size_t y = x + 1; y < group.size(); ++y) {
                const Sentence& a = sentences[group[x]];
                const Sentence& b = sentences[group[y]];
                const auto& ta = runs[group[x]].trace;
                const auto& tb = runs[group[y]].trace;
                for (std::int64_t i = 1; i <= std::min(a.length(), b.length()); ++i) {
                    const Word& wa = a.word(i);
                    const Word& wb = b.word(i);
                    for (std::int64_t d = 1; d <= std::min(wa.length(), wb.length()); ++d) {
                        std::int64_t pa = wa.length() - d + 1;
                        std::int64_t pb = wb.length() - d + 1;
                        if (!ta.is_recorded(i, pa) || !tb.is_recorded(i, pb)) continue;
                        if (wa.at(pa - 1) != wb.at(pb - 1)) ++bad;
                    }
                }
            }
        }
    }
    return bad;
}

// A tail-sentence averaging at most kappa letters per word gets recorded.
// AWL(tail) <= kappa is checked as tail letters <= kappa * tail words.
inline std::int64_t violations_awl_recording(const std::vector<Sentence>& sentences,
                                             const std::vector<DiaryRun>& runs,
                                             std::int64_t kappa) {
    std::int64_t bad = 0;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        const Sentence& a = sentences[s];
        std::int64_t after = a.total_letters();
        for (std::int64_t i = 1; i <= a.length(); ++i) {
            for (std::int64_t l = 1; l <= a.word(i).length(); ++l) {
                std::int64_t tail_letters = after - (l - 1);
                if (tail_letters <= kappa * (a.length() - i + 1) &&
                    !runs[s].trace.is_recorded(i, l))
                    ++bad;
            }
            after -= a.word(i).length();
        }
    }
    return bad;
}

// The distance bound d(AD(a), AD(b)) >= d(a, b) - 2j - 2i for distinct
// same-position letters whose tail averages fit the chapter size. The two
// average conditions kappa >= N*(m-j+1)/(i+1) reduce to kappa*(i+1) >= tail
// letters; only the smallest qualifying i gives a binding bound.
inline std::int64_t violations_awl_distance_bound(const std::vector<Sentence>& sentences,
                                                  const std::vector<DiaryRun>& runs,
                                                  std::int64_t kappa) {
    std::int64_t bad = 0;
    std::vector<std::vector<std::int64_t>> cum(sentences.size());
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        cum[s].push_back(0);
        for (const Word& w : sentences[s]) cum[s].push_back(cum[s].back() + w.length());
    }
    for (std::size_t x = 0; x < sentences.size(); ++x) {
        for (std::size_t y = x + 1; y < sentences.size(); ++y) {
            const Sentence& a = sentences[x];
            const Sentence& b = sentences[y];
            std::int64_t p = common_prefix_length(a, b);
            std::int64_t m = a.length() - p;
            std::int64_t n = b.length() - p;
            if (m == 0 || n == 0) continue;
            std::int64_t diary_d = sentence_tree_distance(runs[x].chapters, runs[y].chapters);
            if (diary_d >= m + n - 2) continue;  // every bound below is vacuous or met
            for (std::int64_t j = 1; j <= std::min(m, n); ++j) {
                const Word& wa = a.word(p + j);
                const Word& wb = b.word(p + j);
                for (std::int64_t d = 1; d <= std::min(wa.length(), wb.length()); ++d) {
                    std::int64_t pa = wa.length() - d + 1;
                    std::int64_t pb = wb.length() - d + 1;
                    if (wa.at(pa - 1) == wb.at(pb - 1)) continue;
                    std::int64_t la = cum[x][a.length()] - cum[x][p + j - 1] - (pa - 1);
                    std::int64_t lb = cum[y][b.length()] - cum[y][p + j - 1] - (pb - 1);
                    std::int64_t need = std::max(la, lb);
                    std::int64_t i_min = (need + kappa - 1) / kappa - 1;
                    if (i_min < 0) i_min = 0;
                    if (i_min > std::min(m, n) - j) continue;
                    if (diary_d < (m + n) - 2 * j - 2 * i_min) ++bad;
                }
            }
        }
    }
    return bad;
}

// Matching positions and matching interior lengths pin recorded letters to
// the same page of the same chapter.
inline std::int64_t violations_page_alignment(const std::vector<Sentence>& sentences,
                                              const std::vector<DiaryRun>& runs) {
    std::int64_t bad = 0;
    for (std::size_t x = 0; x < sentences.size(); ++x) {
        for (std::size_t y = 0; y < sentences.size(); ++y) {
            if (x == y) continue;
            const Sentence& a = sentences[x];
            const Sentence& b = sentences[y];
            const auto& ta = runs[x].trace;
            const auto& tb = runs[y].trace;
            std::int64_t mn = std::min(a.length(), b.length());
            for (std::int64_t i = 1; i <= mn; ++i) {
                const Word& wa = a.word(i);
                const Word& wb = b.word(i);
                for (std::int64_t d = 1; d <= std::min(wa.length(), wb.length()); ++d) {
                    std::int64_t pa = wa.length() - d + 1;
                    std::int64_t pb = wb.length() - d + 1;
                    if (!ta.is_recorded(i, pa)) continue;
                    std::int64_t j = ta.chapter[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(pa - 1)];
                    if (j < i || j > mn) continue;
                    bool lengths_match = true;
                    for (std::int64_t l = i + 1; l <= j; ++l)
                        lengths_match &= a.word(l).length() == b.word(l).length();
                    if (!lengths_match) continue;
                    std::int64_t k = ta.page[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(pa - 1)];
                    if (!tb.is_recorded(i, pb) ||
                        tb.chapter[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(pb - 1)] != j ||
                        tb.page[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(pb - 1)] != k)
                        ++bad;
                }
            }
        }
    }
    return bad;
}

/* Pair generators for the criterion bound tests. */

inline Word random_word(std::mt19937_64& rng, std::int64_t min_len, std::int64_t max_len) {
    std::int64_t len = min_len + static_cast<std::int64_t>(
                                     rng() % static_cast<std::uint64_t>(max_len - min_len + 1));
    Word w;
    for (std::int64_t i = 0; i < len; ++i)
        w.push_back(Letter::character(static_cast<char>('a' + rng() % 3)));
    return w;
}

inline Sentence random_sentence(std::mt19937_64& rng, std::int64_t days, std::int64_t min_len,
                                std::int64_t max_len) {
    Sentence s;
    for (std::int64_t i = 0; i < days; ++i) s.append(random_word(rng, min_len, max_len));
    return s;
}

// Forces a last-letter disagreement at tail depth `witness_depth`, with equal
// last letters before it.
inline std::pair<Sentence, Sentence> make_last_letter_pair(std::mt19937_64& rng,
                                                           std::int64_t witness_depth,
                                                           std::int64_t max_extra_tail = 30) {
    std::int64_t p = static_cast<std::int64_t>(rng() % 4);
    Sentence common = random_sentence(rng, p, 1, 6);
    std::int64_t m = witness_depth +
                     static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_extra_tail));
    std::int64_t n = witness_depth +
                     static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_extra_tail));
    Sentence a = common;
    Sentence b = common;
    for (std::int64_t i = 1; i <= std::max(m, n); ++i) {
        Word wa = random_word(rng, 0, 5);
        Word wb = random_word(rng, 0, 5);
        char ca = static_cast<char>('a' + rng() % 3);
        char cb = ca;
        if (i == witness_depth) {
            cb = static_cast<char>('a' + (ca - 'a' + 1 + rng() % 2) % 3);
        } else if (i == 1) {
            // keep the divergence at depth 1 visible to split_common
            wb.push_back(Letter::character('z'));
        }
        wa.push_back(Letter::character(ca));
        wb.push_back(Letter::character(cb));
        if (i <= m) a.append(std::move(wa));
        if (i <= n) b.append(std::move(wb));
    }
    return {a, b};
}

// Tail words capped at `word_cap` letters so tail averages stay small, with
// the first tail words distinct.
inline std::pair<Sentence, Sentence> make_bounded_tail_pair(std::mt19937_64& rng,
                                                            std::int64_t word_cap,
                                                            std::int64_t max_tail) {
    std::int64_t p = static_cast<std::int64_t>(rng() % 4);
    Sentence common = random_sentence(rng, p, 1, word_cap);
    std::int64_t m = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_tail));
    std::int64_t n = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_tail));
    Sentence a = common;
    Sentence b = common;
    for (std::int64_t i = 1; i <= std::max(m, n); ++i) {
        Word wa = random_word(rng, 1, word_cap);
        Word wb = random_word(rng, 1, word_cap);
        if (i == 1) {
            while (wb == wa) wb = random_word(rng, 1, word_cap);
        }
        if (i <= m) a.append(std::move(wa));
        if (i <= n) b.append(std::move(wb));
    }
    return {a, b};
}

// The first tail words differ but sit in front of one very long word on each
// side, so the tail averages only drop below the bound at depth 2.
inline std::pair<Sentence, Sentence> make_long_word_pair(std::mt19937_64& rng,
                                                         std::int64_t long_len) {
    std::int64_t p = static_cast<std::int64_t>(rng() % 3);
    Sentence common = random_sentence(rng, p, 1, 6);
    Sentence a = common;
    Sentence b = common;
    Word first_a = random_word(rng, 1, 6);
    Word first_b = random_word(rng, 1, 6);
    while (first_b == first_a) first_b = random_word(rng, 1, 6);
    a.append(first_a);
    b.append(first_b);
    Word long_a = random_word(rng, long_len, long_len);
    Word long_b = random_word(rng, long_len, long_len);
    long_a.push_back(Letter::character('a'));
    long_b.push_back(Letter::character('b'));
    a.append(std::move(long_a));
    b.append(std::move(long_b));
    std::int64_t extra = 1 + static_cast<std::int64_t>(rng() % 3);
    for (std::int64_t i = 0; i < extra; ++i) {
        a.append(random_word(rng, 1, 6));
        b.append(random_word(rng, 1, 6));
    }
    return {a, b};
}

}  // namespace diaryembed::testsupport

#endif
