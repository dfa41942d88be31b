#include <random>

#include "diaryembed/embed.hpp"
#include "diaryembed/oracles.hpp"
#include "doctest.h"

using namespace diaryembed;
using hex::Family;
using hex::GroupElement;

TEST_CASE("factor sentences") {
    GroupElement g = GroupElement::parse("b1 a2 a3 b2 a1 b1");
    CHECK(f_side(g, Family::kA).str() == "[a2]|[a3]|[b1][a1]");
    CHECK(f_side(GroupElement::identity(), Family::kA).empty());
    CHECK(f_side(GroupElement::parse("b1 b2"), Family::kB).str() == "[b1]|[b2]");

    auto [fa, fb] = f_embed(GroupElement::parse("a1 b1"));
    CHECK(sentence_tree_distance(f_side(GroupElement::identity(), Family::kA), fa) == 1);
    CHECK(sentence_tree_distance(f_side(GroupElement::identity(), Family::kB), fb) == 1);
}

TEST_CASE("factor map is an isometric embedding") {
    oracles::CayleyOracle oracle(7, 5);
    hex::Ball ball = hex::bfs_ball(3);
    std::vector<std::pair<Sentence, Sentence>> images;
    for (const auto& g : ball.elements) images.push_back(f_embed(g));
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            std::int64_t d_image = sentence_tree_distance(images[i].first, images[j].first) +
                                   sentence_tree_distance(images[i].second, images[j].second);
            CHECK(d_image == oracle.pair_distance(ball.elements[i].canonical_word(),
                                                  ball.elements[j].canonical_word()));
        }
    }
}

TEST_CASE("letters surviving cancellation count the factor distances") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 400; ++trial) {
        GroupElement g = hex::random_element(12, rng());
        GroupElement h = hex::random_element(12, rng());
        hex::GenWord joined(g.canonical_word().rbegin(), g.canonical_word().rend());
        joined.insert(joined.end(), h.canonical_word().begin(), h.canonical_word().end());
        hex::GenWord survivors = hex::reduce(joined);
        std::int64_t a_letters = 0, b_letters = 0;
        for (hex::Generator x : survivors)
            (x.family() == Family::kA ? a_letters : b_letters)++;
        CHECK(a_letters == sentence_tree_distance(f_side(g, Family::kA), f_side(h, Family::kA)));
        CHECK(b_letters == sentence_tree_distance(f_side(g, Family::kB), f_side(h, Family::kB)));
    }
}

TEST_CASE("combined pipeline") {
    EmbeddingConfig paper = EmbeddingConfig::paper();
    CHECK(paper.j_finite == 2);
    CHECK(paper.j_linear == 2);
    CHECK(paper.delta == Rational(0));
    CHECK(paper.n_bound == Rational(18));
    CHECK(paper.epsilon == Rational(1));
    CHECK(paper.tau == 12);
    Diary d = appendix_diary(paper);
    REQUIRE(d.lower_bound_m().has_value());
    CHECK(*d.lower_bound_m() == Rational(64));
    CHECK(d.kind().find("8465") != std::string::npos);

    // The combined diary stays height-preserving and prefix-causal.
    Diary custom_diary = appendix_diary(EmbeddingConfig::custom(16));
    std::mt19937_64 causal_rng(211);
    for (int trial = 0; trial < 40; ++trial) {
        Sentence a;
        std::int64_t days = 1 + static_cast<std::int64_t>(causal_rng() % 5);
        for (std::int64_t i = 0; i < days; ++i) {
            Word w;
            std::int64_t len = 1 + static_cast<std::int64_t>(causal_rng() % 6);
            for (std::int64_t q = 0; q < len; ++q)
                w.push_back(Letter::character(static_cast<char>('a' + causal_rng() % 3)));
            a.append(std::move(w));
        }
        Word img = custom_diary.apply(a);
        REQUIRE(img.length() == a.length());
        for (std::int64_t i = 0; i <= a.length(); ++i)
            CHECK(custom_diary.apply(a.prefix(i)) == img.prefix(i));
    }

    EmbeddingConfig custom = EmbeddingConfig::custom(32);
    EmbeddingPipeline pipeline(custom);
    // Only the finite component's bound survives a custom kappa.
    REQUIRE(pipeline.diary().lower_bound_m().has_value());
    CHECK(*pipeline.diary().lower_bound_m() == Rational(4));
    CHECK(pipeline.diary().kind().find("kappa=32") != std::string::npos);

    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 60; ++trial) {
        GroupElement g = hex::random_element(10, rng());
        GroupElement h = hex::random_element(10, rng());
        auto [da, db] = pipeline.image(g);
        auto [fa, fb] = f_embed(g);
        CHECK(da.length() == fa.length());
        CHECK(db.length() == fb.length());
        // Images are pure functions of the element.
        auto [ra, rb] = pipeline.image(g);
        CHECK(word_tree_distance(da, ra) + word_tree_distance(db, rb) == 0);
        auto [ha, hb] = pipeline.image(h);
        std::int64_t d_image = word_tree_distance(da, ha) + word_tree_distance(db, hb);
        CHECK(d_image <= hex::group_distance(g, h));
    }

    auto [ia, ib] = h2_embed(GroupElement::parse("a1 b1 a1"), custom);
    auto [ja, jb] = pipeline.image(GroupElement::parse("a1 b1 a1"));
    CHECK(ia == ja);
    CHECK(ib == jb);
}

TEST_CASE("pair classification") {
    EmbeddingConfig config = EmbeddingConfig::custom(32);
    CHECK_THROWS_AS(classify_pair(GroupElement::identity(), GroupElement::identity(), config),
                    std::invalid_argument);

    // Distinct final letters in the dominant factor: the finite statistic wins.
    CHECK(classify_pair(GroupElement::parse("a1"), GroupElement::parse("a2"), config) ==
          PairClass::kLeo);

    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        GroupElement g = hex::random_element(10, rng());
        GroupElement h = hex::random_element(10, rng());
        if (g == h) continue;
        PairClass c1 = classify_pair(g, h, config);
        PairClass c2 = classify_pair(g, h, config);
        CHECK(c1 == c2);
    }
}

TEST_CASE("binary recoding") {
    std::vector<Letter> omega{Letter::character('x'), Letter::character('y'),
                              Letter::character('z')};
    BinaryCodec codec = BinaryCodec::for_symbols(omega);
    CHECK(codec.width() == 2);
    Word img = codec.encode(Word({omega[0], omega[1]}));
    CHECK(img.str() == "0001");
    CHECK(codec.encode(Word()).empty());
    CHECK_THROWS_AS(codec.encode(Word::of("q")), std::invalid_argument);
    CHECK_THROWS_AS(BinaryCodec::for_symbols(omega, 1), std::invalid_argument);

    // Distance bracket: width*d - 2*(width-1) <= d_binary <= width*d.
    std::mt19937_64 rng(109);
    for (std::int64_t width : {2, 3, 8}) {
        std::vector<Letter> symbols;
        for (int s = 0; s < (1 << std::min<std::int64_t>(width, 4)); ++s)
            symbols.push_back(Letter::atom("s" + std::to_string(s)));
        BinaryCodec c = BinaryCodec::for_symbols(symbols, width);
        for (int trial = 0; trial < 300; ++trial) {
            auto random_omega_word = [&](std::int64_t len) {
                Word w;
                for (std::int64_t i = 0; i < len; ++i)
                    w.push_back(symbols[rng() % symbols.size()]);
                return w;
            };
            Word common = random_omega_word(static_cast<std::int64_t>(rng() % 6));
            Word u = common, v = common;
            u.append(random_omega_word(static_cast<std::int64_t>(rng() % 5)));
            v.append(random_omega_word(static_cast<std::int64_t>(rng() % 5)));
            std::int64_t d = word_tree_distance(u, v);
            std::int64_t db = word_tree_distance(c.encode(u), c.encode(v));
            CHECK(db <= width * d);
            CHECK(db >= width * d - 2 * (width - 1));
        }
    }
}

TEST_CASE("distortion records serialize") {
    DistortionRecord r{"a1", "b2 a1", 3, 1, 2, 3, PairClass::kLeo};
    nlohmann::json j = to_json(r);
    CHECK(j["g"] == "a1");
    CHECK(j["d_group"] == 3);
    CHECK(j["class"] == "leo");
    CHECK(to_csv(r) == "\"a1\",\"b2 a1\",3,1,2,3,leo");
    CHECK(csv_header_distortion() == "g,g2,d_group,d1,d2,d_image,class");
}
