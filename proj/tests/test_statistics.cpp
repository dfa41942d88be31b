#include <random>

#include "diaryembed/statistics.hpp"
#include "doctest.h"

using namespace diaryembed;

namespace {

Sentence random_sentence(std::mt19937_64& rng, std::int64_t max_days, std::int64_t max_len) {
    std::int64_t days = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_days));
    Sentence s;
    for (std::int64_t i = 0; i < days; ++i) {
        std::int64_t len = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_len));
        Word w;
        for (std::int64_t j = 0; j < len; ++j)
            w.push_back(Letter::character(static_cast<char>('a' + rng() % 3)));
        s.append(std::move(w));
    }
    return s;
}

}  // namespace

TEST_CASE("last letter per prefix") {
    FiniteStatistic last = last_letter_statistic();
    Sentence s = Sentence::parse("abc|bc|aa");
    CHECK(last(s.prefix(1)) == Letter::character('c'));
    CHECK(last(s.prefix(2)) == Letter::character('c'));
    CHECK(last(s.prefix(3)) == Letter::character('a'));
    CHECK(last(Sentence()) == out_of_range_symbol());
}

TEST_CASE("suffix statistics") {
    LinearStatistic lt = ltrunc_statistic(1);
    CHECK(lt.eval_c(2, Sentence::parse("abcde")) == Word::of("ed"));
    CHECK(lt.eval_c(0, Sentence::parse("abcde")) == Word());
    CHECK(lt.limit(Sentence::parse("abc|de")) == Word::of("ed"));

    LinearStatistic dl = decimal_length_ltrunc_statistic(1);
    CHECK(dl.eval_c(1, Sentence(std::vector<Word>{Word::of(std::string(12, 'a'))})) ==
          Word::of("2"));
    CHECK(dl.limit(Sentence(std::vector<Word>{Word::of(std::string(105, 'a'))})) ==
          Word::of("501"));

    FiniteStatistic tk = trunc_statistic(2);
    CHECK(tk(Sentence::parse("abcd")) == Letter::tuple({Letter::character('c'), Letter::character('d')}));
    // Shorter words keep reading order without padding.
    CHECK(tk(Sentence::parse("ab|c")) == Letter::tuple({Letter::character('c')}));

    CHECK_THROWS_AS(trunc_statistic(0), std::invalid_argument);
    CHECK_THROWS_AS(ltrunc_statistic(0), std::invalid_argument);
}

TEST_CASE("limit statistics") {
    LinearStatistic lt = ltrunc_statistic(1);
    CHECK(eval_linear_inf(lt, 3, Sentence::parse("abc")) == Word::of("cba"));
    CHECK(eval_linear_inf(lt, 0, Sentence::parse("abc")) == Word());

    std::mt19937_64 rng(5);
    std::vector<LinearStatistic> stats;
    stats.push_back(ltrunc_statistic(2));
    stats.push_back(decimal_length_ltrunc_statistic(1));
    stats.push_back(oop_statistic(PriorityOrder::kNewestFirst, 3));
    for (int trial = 0; trial < 300; ++trial) {
        Sentence a = random_sentence(rng, 4, 12);
        for (const LinearStatistic& s : stats) {
            std::int64_t c = static_cast<std::int64_t>(rng() % 6);
            std::int64_t cc = c + static_cast<std::int64_t>(rng() % 4);
            // Output stays within the linear budget and grows as prefixes.
            CHECK(s.eval_c(c, a).length() <= s.tau() * c);
            CHECK(is_prefix_of(s.eval_c(c, a), s.eval_c(cc, a)));
            std::int64_t n = static_cast<std::int64_t>(rng() % 8);
            CHECK(is_prefix_of(s.limit_prefix(n, a), s.limit_prefix(n + 5, a)));
        }
    }
}

TEST_CASE("order-of-priority statistic") {
    Sentence s = Sentence::parse("ab|cd");
    CHECK(oop_statistic(PriorityOrder::kNewestFirst, 1).limit(s) == Word::of("dcba"));
    CHECK(oop_statistic(PriorityOrder::kOldestFirst, 1).limit(s) == Word::of("abcd"));
}

TEST_CASE("product statistics") {
    FiniteStatistic single = product_statistic({last_letter_statistic()});
    Sentence s = Sentence::parse("abc|bc|aa");
    CHECK(single(s) == last_letter_statistic()(s));

    FiniteStatistic pair = product_statistic({last_letter_statistic(), last_letter_statistic()});
    Letter v = pair(s);
    REQUIRE(v.kind() == Letter::Kind::kTuple);
    CHECK(v.parts()[0] == v.parts()[1]);

    CHECK_THROWS_AS(product_statistic({}), std::invalid_argument);

    std::mt19937_64 rng(17);
    std::vector<FiniteStatistic> comps;
    comps.push_back(last_letter_statistic());
    comps.push_back(trunc_statistic(2));
    comps.push_back(with_word_offset(last_letter_statistic(), 2));
    FiniteStatistic prod = product_statistic(comps);
    for (int trial = 0; trial < 200; ++trial) {
        Sentence a = random_sentence(rng, 4, 5);
        Letter got = prod(a);
        REQUIRE(got.kind() == Letter::Kind::kTuple);
        REQUIRE(got.parts().size() == comps.size());
        for (std::size_t k = 0; k < comps.size(); ++k) CHECK(got.parts()[k] == comps[k](a));

        // The product separates two sentences exactly when some factor does.
        Sentence b = random_sentence(rng, 4, 5);
        bool factor_differs = false;
        for (const FiniteStatistic& c : comps) factor_differs |= (c(a) != c(b));
        CHECK((prod(a) != prod(b)) == factor_differs);
    }
}

TEST_CASE("word-offset statistics address one word") {
    FiniteStatistic at2 = with_word_offset(last_letter_statistic(), 2);
    CHECK(at2(Sentence::parse("ab|cd|ef")) == Letter::character('d'));
    CHECK(at2(Sentence::parse("ab")) == out_of_range_symbol());

    LinearStatistic lt2 = with_word_offset(ltrunc_statistic(1), 2);
    CHECK(lt2.limit(Sentence::parse("ab|cd|ef")) == Word::of("dc"));
    CHECK(lt2.limit(Sentence::parse("ab")) == Word());

    // Depends only on the addressed word: mutate the others.
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        Sentence a = random_sentence(rng, 4, 4);
        if (a.length() < 2) continue;
        Sentence mutated;
        for (std::int64_t i = 1; i <= a.length(); ++i) {
            if (i == a.length() - 1) {
                mutated.append(a.word(i));
            } else {
                Word w = a.word(i);
                w.push_back(Letter::character('z'));
                mutated.append(std::move(w));
            }
        }
        CHECK(at2(a) == at2(mutated));
        CHECK(lt2.limit(a) == lt2.limit(mutated));
    }
}

TEST_CASE("statistic descriptors") {
    auto last = make_statistic({.kind = "last-letter"});
    CHECK(std::holds_alternative<FiniteStatistic>(last));
    auto lt = make_statistic({.kind = "ltrunc", .param = 12});
    REQUIRE(std::holds_alternative<LinearStatistic>(lt));
    CHECK(std::get<LinearStatistic>(lt).tau() == 12);
    auto off = make_statistic({.kind = "last-letter", .offset = 3});
    CHECK(std::get<FiniteStatistic>(off)(Sentence::parse("ab|cd|ef")) == Letter::character('b'));
    CHECK_THROWS_AS(make_statistic({.kind = "nonsense"}), std::invalid_argument);
    CHECK_THROWS_AS(make_statistic({.kind = "ltrunc", .param = 0}), std::invalid_argument);
    CHECK_THROWS_AS(make_statistic({.kind = "oop", .order = "sideways"}), std::invalid_argument);
}
