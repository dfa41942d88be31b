#include "diaryembed/embed.hpp"

#include <algorithm>
#include <stdexcept>

namespace diaryembed {

EmbeddingConfig EmbeddingConfig::paper() {
    EmbeddingConfig c;
    c.mode = Mode::kPaper;
    return c;
}

EmbeddingConfig EmbeddingConfig::custom(std::int64_t kappa) {
    EmbeddingConfig c;
    c.mode = Mode::kCustom;
    c.custom_kappa = kappa;
    return c;
}

std::vector<FiniteStatistic> EmbeddingConfig::finite_statistics() const {
    std::vector<FiniteStatistic> out;
    out.push_back(last_letter_statistic());
    return out;
}

std::vector<LinearStatistic> EmbeddingConfig::linear_statistics() const {
    std::vector<LinearStatistic> out;
    out.push_back(ltrunc_statistic(tau));
    out.push_back(decimal_length_ltrunc_statistic(tau));
    return out;
}

Sentence f_side(const hex::GroupElement& g, hex::Family side) {
    hex::GenWord w = hex::side_left_rep(g, side);
    Sentence out;
    Word block;
    for (hex::Generator x : w) {
        block.push_back(x.letter());
        if (x.family() == side) {
            out.append(std::move(block));
            block = Word();
        }
    }
    // Letters after the final side letter are dropped.
    return out;
}

std::pair<Sentence, Sentence> f_embed(const hex::GroupElement& g) {
    return {f_side(g, hex::Family::kA), f_side(g, hex::Family::kB)};
}

Diary appendix_diary(const EmbeddingConfig& config) {
    Diary finite_part = aries_diary(config.finite_statistics(), Rational(0), config.j_finite);
    std::optional<std::int64_t> kappa_override;
    if (config.mode == EmbeddingConfig::Mode::kCustom) kappa_override = config.custom_kappa;
    Diary linear_part = virgo_diary(config.linear_statistics(), config.delta, config.j_linear,
                                    config.n_bound, config.epsilon, kappa_override);
    return combine_diaries(finite_part, linear_part);
}

std::pair<Word, Word> h2_embed(const hex::GroupElement& g, const EmbeddingConfig& config) {
    Diary d = appendix_diary(config);
    auto [fa, fb] = f_embed(g);
    return {d.apply(fa), d.apply(fb)};
}

std::string_view to_string(PairClass c) {
    switch (c) {
        case PairClass::kLeo:
            return "leo";
        case PairClass::kVirgo:
            return "virgo";
        case PairClass::kNeither:
            return "neither";
    }
    return "?";
}

PairClassifier::PairClassifier(const EmbeddingConfig& config)
    : config_(config),
      finite_(config.finite_statistics()),
      linear_(config.linear_statistics()) {}

PairClass PairClassifier::classify(const hex::GroupElement& g, const hex::GroupElement& g2) const {
    if (g == g2) throw std::invalid_argument("classify_pair: elements are equal");
    return classify_factors(f_side(g, hex::Family::kA), f_side(g, hex::Family::kB),
                            f_side(g2, hex::Family::kA), f_side(g2, hex::Family::kB));
}

PairClass PairClassifier::classify_factors(const Sentence& fa_g, const Sentence& fb_g,
                                           const Sentence& fa_h, const Sentence& fb_h) const {
    std::int64_t da = sentence_tree_distance(fa_g, fa_h);
    std::int64_t db = sentence_tree_distance(fb_g, fb_h);
    const Sentence& a = da >= db ? fa_g : fb_g;
    const Sentence& b = da >= db ? fa_h : fb_h;
    if (a == b) return PairClass::kNeither;
    if (check_leo(a, b, finite_, config_.j_finite)) return PairClass::kLeo;
    if (check_virgo(a, b, linear_, config_.delta, config_.j_linear, config_.n_bound,
                    config_.epsilon))
        return PairClass::kVirgo;
    return PairClass::kNeither;
}

PairClass classify_pair(const hex::GroupElement& g, const hex::GroupElement& g2,
                        const EmbeddingConfig& config) {
    return PairClassifier(config).classify(g, g2);
}

BinaryCodec BinaryCodec::for_symbols(std::span<const Letter> symbols, std::int64_t width) {
    BinaryCodec codec;
    codec.symbols_.assign(symbols.begin(), symbols.end());
    std::sort(codec.symbols_.begin(), codec.symbols_.end());
    codec.symbols_.erase(std::unique(codec.symbols_.begin(), codec.symbols_.end()),
                         codec.symbols_.end());
    std::int64_t needed = 1;
    while ((std::int64_t{1} << needed) < static_cast<std::int64_t>(codec.symbols_.size()))
        ++needed;
    if (width == 0) width = needed;
    if (width < needed || width > 62)
        throw std::invalid_argument("BinaryCodec: width cannot encode the symbol set");
    codec.width_ = width;
    return codec;
}

Word BinaryCodec::encode(const Word& omega_word) const {
    Word out;
    Letter zero = Letter::character('0');
    Letter one = Letter::character('1');
    for (const Letter& sym : omega_word) {
        auto it = std::lower_bound(symbols_.begin(), symbols_.end(), sym);
        if (it == symbols_.end() || *it != sym)
            throw std::invalid_argument("BinaryCodec: symbol outside codec");
        auto code = static_cast<std::uint64_t>(it - symbols_.begin());
        for (std::int64_t bit = width_ - 1; bit >= 0; --bit)
            out.push_back((code >> bit) & 1 ? one : zero);
    }
    return out;
}

nlohmann::json BinaryCodec::to_json() const {
    nlohmann::json codes = nlohmann::json::object();
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        std::string bits;
        for (std::int64_t bit = width_ - 1; bit >= 0; --bit)
            bits += ((i >> bit) & 1) ? '1' : '0';
        codes[symbols_[i].str()] = bits;
    }
    return nlohmann::json{{"width", width_}, {"codes", codes}};
}

Word binary_recode(const Word& omega_word, const BinaryCodec& codec) {
    return codec.encode(omega_word);
}

EmbeddingPipeline::EmbeddingPipeline(EmbeddingConfig config)
    : config_(config), diary_(appendix_diary(config)) {}

std::pair<Word, Word> EmbeddingPipeline::image(const hex::GroupElement& g) const {
    auto [fa, fb] = f_embed(g);
    return {diary_.apply(fa), diary_.apply(fb)};
}

nlohmann::json to_json(const DistortionRecord& r) {
    return nlohmann::json{{"g", r.g},   {"g2", r.g2}, {"d_group", r.d_group},
                          {"d1", r.d1}, {"d2", r.d2}, {"d_image", r.d_image},
                          {"class", std::string(to_string(r.cls))}};
}

std::string csv_header_distortion() { return "g,g2,d_group,d1,d2,d_image,class"; }

std::string to_csv(const DistortionRecord& r) {
    std::string out;
    out += "\"" + r.g + "\",\"" + r.g2 + "\",";
    out += std::to_string(r.d_group) + "," + std::to_string(r.d1) + "," + std::to_string(r.d2) +
           "," + std::to_string(r.d_image) + "," + std::string(to_string(r.cls));
    return out;
}

}  // namespace diaryembed
