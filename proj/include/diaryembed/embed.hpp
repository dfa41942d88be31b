#ifndef DIARYEMBED_EMBED_HPP
#define DIARYEMBED_EMBED_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diaryembed/diary.hpp"
#include "diaryembed/hexgroup.hpp"

#include "json.hpp"

namespace diaryembed {

/*
 * The composed pipeline: group element -> side-left sentences (one per
 * generator family) -> diary images over a finite alphabet. The sum of the
 * two sentence-tree distances equals the group distance exactly; the diary
 * stage is 1-Lipschitz on each factor.
 */
struct EmbeddingConfig {
    enum class Mode { kPaper, kCustom };

    Mode mode = Mode::kCustom;
    std::int64_t custom_kappa = 32;

    std::int64_t j_finite = 2;
    std::int64_t j_linear = 2;
    Rational delta{0};
    Rational n_bound{18};
    Rational epsilon{1};
    std::int64_t tau = 12;

    static EmbeddingConfig paper();
    static EmbeddingConfig custom(std::int64_t kappa);

    std::vector<FiniteStatistic> finite_statistics() const;  // { last letter }
    std::vector<LinearStatistic> linear_statistics() const;  // { ltrunc(tau), decimal ltrunc(tau) }
};

// Cuts the side-left representation at each letter of `side`: blocks
// (u_1 s_1 | u_2 s_2 | ... | u_m s_m), with the trailing block of other-family
// letters dropped.
Sentence f_side(const hex::GroupElement& g, hex::Family side);

// (f_side(g, A), f_side(g, B)). L1 distance between images equals the group
// distance.
std::pair<Sentence, Sentence> f_embed(const hex::GroupElement& g);

// The combined diary for the configured statistics: finite part (last letter,
// exact), linear part (Alice's diary over the recoded sentence).
Diary appendix_diary(const EmbeddingConfig& config);

std::pair<Word, Word> h2_embed(const hex::GroupElement& g, const EmbeddingConfig& config);

enum class PairClass { kLeo, kVirgo, kNeither };
std::string_view to_string(PairClass c);

// Checks the dominant factor (ties go to A) against the finite criterion
// first, then the linear one. Holds its statistics, so sweeps can reuse one
// instance.
class PairClassifier {
public:
    explicit PairClassifier(const EmbeddingConfig& config);

    PairClass classify(const hex::GroupElement& g, const hex::GroupElement& g2) const;
    // Same decision from precomputed factor sentences.
    PairClass classify_factors(const Sentence& fa_g, const Sentence& fb_g, const Sentence& fa_h,
                               const Sentence& fb_h) const;

private:
    EmbeddingConfig config_;
    std::vector<FiniteStatistic> finite_;
    std::vector<LinearStatistic> linear_;
};

PairClass classify_pair(const hex::GroupElement& g, const hex::GroupElement& g2,
                        const EmbeddingConfig& config);

/*
 * Fixed-width binary recoding of output alphabets: each symbol maps to a
 * `width`-bit code, so a word at depth h maps to a binary word of length
 * h*width. Codes are assigned in structural symbol order, making recodings
 * reproducible from the emitted table alone.
 */
class BinaryCodec {
public:
    // width 0 picks the smallest width that fits.
    static BinaryCodec for_symbols(std::span<const Letter> symbols, std::int64_t width = 0);

    std::int64_t width() const { return width_; }
    std::int64_t size() const { return static_cast<std::int64_t>(symbols_.size()); }
    // Word over the atoms "0" and "1". Throws on symbols outside the codec.
    Word encode(const Word& omega_word) const;
    nlohmann::json to_json() const;

private:
    std::int64_t width_ = 1;
    std::vector<Letter> symbols_;  // sorted; code of symbols_[i] is i
};

Word binary_recode(const Word& omega_word, const BinaryCodec& codec);

// Caches per-element images of the diary stage for pair sweeps.
class EmbeddingPipeline {
public:
    explicit EmbeddingPipeline(EmbeddingConfig config);

    const EmbeddingConfig& config() const { return config_; }
    const Diary& diary() const { return diary_; }
    std::pair<Word, Word> image(const hex::GroupElement& g) const;

private:
    EmbeddingConfig config_;
    Diary diary_;
};

struct DistortionRecord {
    std::string g;
    std::string g2;
    std::int64_t d_group = 0;
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    std::int64_t d_image = 0;
    PairClass cls = PairClass::kNeither;
};

nlohmann::json to_json(const DistortionRecord& r);
std::string csv_header_distortion();
std::string to_csv(const DistortionRecord& r);

}  // namespace diaryembed

#endif
