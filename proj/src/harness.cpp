#include "diaryembed/harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "diaryembed/oracles.hpp"

namespace diaryembed::harness {

EmbeddingConfig ExperimentConfig::embedding() const {
    if (mode == "paper") return EmbeddingConfig::paper();
    if (mode == "custom") return EmbeddingConfig::custom(kappa);
    throw ConfigError("unknown mode '" + mode + "' (expected paper or custom)");
}

ExperimentConfig apply_env(ExperimentConfig config) {
    if (const char* cap = std::getenv("DIARY_EMBED_BFS_CAP")) {
        try {
            config.bfs_cap = std::stoll(cap);
        } catch (const std::exception&) {
            throw ConfigError("DIARY_EMBED_BFS_CAP is not an integer");
        }
    }
    return config;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r\n");
        line = line.substr(first, last - first + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        key = trim(key);
        value = trim(value);
        auto as_int = [&](const std::string& v) {
            try {
                return std::stoll(v);
            } catch (const std::exception&) {
                throw ConfigError(path + ": value of " + key + " is not an integer");
            }
        };
        if (key == "command")
            base.command = value;
        else if (key == "input")
            base.args.push_back(value);
        else if (key == "radius")
            base.radius = as_int(value);
        else if (key == "samples")
            base.samples = as_int(value);
        else if (key == "length")
            base.length = as_int(value);
        else if (key == "seed")
            base.seed = static_cast<std::uint64_t>(as_int(value));
        else if (key == "mode")
            base.mode = value;
        else if (key == "kappa")
            base.kappa = as_int(value);
        else if (key == "min-distance")
            base.min_distance = as_int(value);
        else if (key == "out")
            base.out = value;
        else if (key == "format")
            base.format = value;
        else if (key == "side")
            base.side = value;
        else if (key == "diary")
            base.diary_descriptor = value;
        else if (key == "binary")
            base.binary_dump = (value == "1" || value == "true");
        else if (key == "bfs-cap")
            base.bfs_cap = as_int(value);
        else
            throw ConfigError(path + ": unknown key '" + key + "'");
    }
    return base;
}

namespace {

class RecordWriter {
public:
    RecordWriter(const std::string& path, const std::string& format, const std::string& csv_header)
        : format_(format) {
        if (format_ != "jsonl" && format_ != "csv")
            throw ConfigError("unknown format '" + format_ + "' (expected jsonl or csv)");
        if (path.empty()) return;
        file_.emplace(path, std::ios::binary | std::ios::trunc);
        if (!*file_) throw ConfigError("cannot open output file " + path);
        if (format_ == "csv") *file_ << csv_header << "\n";
    }

    void write(const nlohmann::json& record, const std::string& csv_row) {
        if (!file_) return;
        if (format_ == "jsonl")
            *file_ << record.dump() << "\n";
        else
            *file_ << csv_row << "\n";
    }

private:
    std::string format_;
    std::optional<std::ofstream> file_;
};

hex::GroupElement element_arg(const ExperimentConfig& config) {
    if (config.args.empty()) throw ConfigError(config.command + ": missing word argument");
    return hex::GroupElement::from_word(hex::parse_gen_word(config.args[0]));
}

std::int64_t radius_arg(const ExperimentConfig& config, std::int64_t fallback) {
    std::int64_t r = config.radius >= 0 ? config.radius : fallback;
    if (r > config.bfs_cap)
        throw ConfigError("radius " + std::to_string(r) + " exceeds the ball cap " +
                          std::to_string(config.bfs_cap));
    return r;
}

int cmd_reduce(const ExperimentConfig& config, std::ostream& out) {
    if (config.args.empty()) throw ConfigError("reduce: missing word argument");
    out << hex::gen_word_str(hex::reduce(hex::parse_gen_word(config.args[0]))) << "\n";
    return 0;
}

int cmd_normal_form(const ExperimentConfig& config, std::ostream& out) {
    hex::GroupElement g = element_arg(config);
    if (config.side.empty()) {
        out << g.str() << "\n";
    } else if (config.side == "a" || config.side == "A") {
        out << hex::gen_word_str(hex::side_left_rep(g, hex::Family::kA)) << "\n";
    } else if (config.side == "b" || config.side == "B") {
        out << hex::gen_word_str(hex::side_left_rep(g, hex::Family::kB)) << "\n";
    } else {
        throw ConfigError("normal-form: side must be a or b");
    }
    return 0;
}

int cmd_ball(const ExperimentConfig& config, std::ostream& out) {
    std::int64_t radius = radius_arg(config, 3);
    hex::Ball ball = hex::bfs_ball(radius, config.bfs_cap);
    RecordWriter writer(config.out, config.format, "word,distance");
    for (std::int64_t i = 0; i < ball.size(); ++i) {
        const auto& g = ball.elements[static_cast<std::size_t>(i)];
        nlohmann::json rec{{"word", g.str()}, {"distance", ball.distance[static_cast<std::size_t>(i)]}};
        writer.write(rec, "\"" + g.str() + "\"," + std::to_string(ball.distance[static_cast<std::size_t>(i)]));
    }
    nlohmann::json spheres = nlohmann::json::array();
    for (std::int64_t r = 0; r <= radius; ++r) spheres.push_back(ball.sphere_size(r));
    out << nlohmann::json{{"radius", radius}, {"size", ball.size()}, {"spheres", spheres}}.dump()
        << "\n";
    return 0;
}

int cmd_diary(const ExperimentConfig& config, std::ostream& out) {
    if (config.args.empty()) throw ConfigError("diary: missing sentence argument");
    Sentence a = Sentence::parse(config.args[0]);
    if (config.diary_descriptor.empty()) {
        out << alice_diary(config.kappa, a).str() << "\n";
        return 0;
    }
    Diary d = make_diary(parse_diary_descriptor(config.diary_descriptor));
    out << d.apply(a).str() << "\n";
    return 0;
}

int cmd_embed(const ExperimentConfig& config, std::ostream& out) {
    hex::GroupElement g = element_arg(config);
    EmbeddingPipeline pipeline(config.embedding());
    auto [fa, fb] = f_embed(g);
    auto [da, db] = pipeline.image(g);
    out << "canonical: " << g.str() << "\n";
    out << "F_A: " << fa.str() << "\n";
    out << "F_B: " << fb.str() << "\n";
    out << "D_A: " << da.str() << "\n";
    out << "D_B: " << db.str() << "\n";
    if (config.binary_dump) {
        std::vector<Letter> symbols(da.letters());
        symbols.insert(symbols.end(), db.letters().begin(), db.letters().end());
        BinaryCodec codec = BinaryCodec::for_symbols(symbols);
        auto hex_dump = [](const Word& bits) {
            std::string s;
            std::uint8_t acc = 0;
            int n = 0;
            Letter one = Letter::character('1');
            for (const Letter& b : bits) {
                acc = static_cast<std::uint8_t>((acc << 1) | (b == one ? 1 : 0));
                if (++n == 4) {
                    s += "0123456789abcdef"[acc];
                    acc = 0;
                    n = 0;
                }
            }
            if (n > 0) s += "0123456789abcdef"[acc << (4 - n)];
            return s;
        };
        out << "bin_A: " << hex_dump(codec.encode(da)) << "\n";
        out << "bin_B: " << hex_dump(codec.encode(db)) << "\n";
        out << "codec: " << codec.to_json().dump() << "\n";
    }
    return 0;
}

int cmd_isometry(const ExperimentConfig& config, std::ostream& out) {
    std::int64_t radius = radius_arg(config, 4);
    if (radius > 8) throw ConfigError("isometry: radius above 8 exceeds the oracle range");
    hex::Ball ball = hex::bfs_ball(radius, config.bfs_cap);
    // Distances checked against the reflection-representation oracle, which
    // shares no code with reduce()/canonical forms.
    std::int64_t table = std::min<std::int64_t>(2 * radius, 8);
    std::int64_t scan = std::max<std::int64_t>(2 * radius - table, 0);
    oracles::CayleyOracle oracle(table, scan);
    RecordWriter writer(config.out, config.format, "g,g2,d_image,d_group");
    std::vector<std::pair<Sentence, Sentence>> images;
    images.reserve(static_cast<std::size_t>(ball.size()));
    for (const auto& g : ball.elements) images.push_back(f_embed(g));
    std::int64_t violations = 0;
    std::int64_t pairs = 0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            std::int64_t d_image = sentence_tree_distance(images[i].first, images[j].first) +
                                   sentence_tree_distance(images[i].second, images[j].second);
            std::int64_t d_group = oracle.pair_distance(ball.elements[i].canonical_word(),
                                                        ball.elements[j].canonical_word());
            ++pairs;
            if (d_image != d_group) {
                ++violations;
                // Counterexamples go to stderr and the record file.
                std::string gs = ball.elements[i].str();
                std::string hs = ball.elements[j].str();
                if (violations <= 10)
                    std::cerr << "isometry violation: " << gs << " / " << hs
                              << " d_image=" << d_image << " d_group=" << d_group << "\n";
                writer.write(nlohmann::json{{"g", gs},
                                            {"g2", hs},
                                            {"d_image", d_image},
                                            {"d_group", d_group}},
                             "\"" + gs + "\",\"" + hs + "\"," + std::to_string(d_image) + "," +
                                 std::to_string(d_group));
            }
        }
    }
    out << nlohmann::json{{"radius", radius}, {"pairs", pairs}, {"violations", violations}}.dump()
        << "\n";
    return violations == 0 ? 0 : 1;
}

struct SweepStats {
    std::vector<Rational> ratios;
    std::int64_t leo = 0, virgo = 0, neither = 0;
    std::int64_t violations = 0;
    std::int64_t collisions = 0;
    Rational c_emp{0};

    void add(const DistortionRecord& r) {
        if (r.cls == PairClass::kLeo) ++leo;
        if (r.cls == PairClass::kVirgo) ++virgo;
        if (r.cls == PairClass::kNeither) ++neither;
        if (r.d_image > r.d_group) ++violations;
        if (r.d_image == 0) {
            ++collisions;
        } else {
            ratios.push_back(Rational(r.d_image, r.d_group));
            c_emp = std::max(c_emp, Rational(r.d_group, r.d_image));
        }
    }

    nlohmann::json summary() const {
        nlohmann::json s{{"pairs", ratios.size() + static_cast<std::size_t>(collisions)},
                         {"violations", violations},
                         {"collisions", collisions},
                         {"class_counts",
                          nlohmann::json{{"leo", leo}, {"virgo", virgo}, {"neither", neither}}}};
        if (!ratios.empty()) {
            std::vector<Rational> sorted = ratios;
            std::sort(sorted.begin(), sorted.end());
            s["min_ratio"] = to_string(sorted.front());
            s["median_ratio"] = to_string(sorted[sorted.size() / 2]);
            s["max_ratio"] = to_string(sorted.back());
            s["c_emp"] = to_string(c_emp);
        }
        return s;
    }
};

DistortionRecord make_record(const PairClassifier& classifier, const hex::GroupElement& g,
                             const hex::GroupElement& h, const std::pair<Word, Word>& img_g,
                             const std::pair<Word, Word>& img_h) {
    DistortionRecord r;
    r.g = g.str();
    r.g2 = h.str();
    r.d_group = hex::group_distance(g, h);
    r.d1 = word_tree_distance(img_g.first, img_h.first);
    r.d2 = word_tree_distance(img_g.second, img_h.second);
    r.d_image = r.d1 + r.d2;
    r.cls = classifier.classify(g, h);
    return r;
}

int cmd_distort(const ExperimentConfig& config, std::ostream& out) {
    EmbeddingPipeline pipeline(config.embedding());
    PairClassifier classifier(config.embedding());
    RecordWriter writer(config.out, config.format, csv_header_distortion());
    SweepStats stats;
    if (config.radius >= 0) {
        std::int64_t radius = radius_arg(config, 3);
        hex::Ball ball = hex::bfs_ball(radius, config.bfs_cap);
        std::vector<std::pair<Word, Word>> images;
        images.reserve(static_cast<std::size_t>(ball.size()));
        for (const auto& g : ball.elements) images.push_back(pipeline.image(g));
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (std::size_t j = i + 1; j < images.size(); ++j) {
                DistortionRecord r = make_record(classifier, ball.elements[i], ball.elements[j],
                                                 images[i], images[j]);
                stats.add(r);
                writer.write(to_json(r), to_csv(r));
            }
        }
    } else {
        std::int64_t samples = config.samples > 0 ? config.samples : 1000;
        std::mt19937_64 rng(config.seed);
        for (std::int64_t s = 0; s < samples; ++s) {
            hex::GroupElement g = hex::random_element(config.length, rng());
            hex::GroupElement h = hex::random_element(config.length, rng());
            if (g == h) continue;
            DistortionRecord r =
                make_record(classifier, g, h, pipeline.image(g), pipeline.image(h));
            stats.add(r);
            writer.write(to_json(r), to_csv(r));
        }
    }
    out << stats.summary().dump() << "\n";
    return stats.violations == 0 ? 0 : 1;
}

int cmd_classify(const ExperimentConfig& config, std::ostream& out) {
    EmbeddingConfig embedding = config.embedding();
    RecordWriter writer(config.out, config.format, csv_header_distortion());
    SweepStats stats;
    std::int64_t considered = 0;
    auto balanced = [](const Sentence& a, const Sentence& b) {
        std::int64_t p = common_prefix_length(a, b);
        std::int64_t m = a.length() - p, n = b.length() - p;
        return 3 * m >= m + n && 3 * n >= m + n;
    };
    EmbeddingPipeline pipeline(embedding);
    PairClassifier classifier(embedding);
    auto consider = [&](const hex::GroupElement& g, const hex::GroupElement& h) {
        if (g == h) return;
        if (hex::group_distance(g, h) < config.min_distance) return;
        Sentence a1 = f_side(g, hex::Family::kA);
        Sentence b1 = f_side(h, hex::Family::kA);
        Sentence a2 = f_side(g, hex::Family::kB);
        Sentence b2 = f_side(h, hex::Family::kB);
        bool dominant_a =
            sentence_tree_distance(a1, b1) >= sentence_tree_distance(a2, b2);
        if (!(dominant_a ? balanced(a1, b1) : balanced(a2, b2))) return;
        ++considered;
        DistortionRecord r =
            make_record(classifier, g, h, pipeline.image(g), pipeline.image(h));
        stats.add(r);
        writer.write(to_json(r), to_csv(r));
    };
    if (config.radius >= 0) {
        std::int64_t radius = radius_arg(config, 4);
        hex::Ball ball = hex::bfs_ball(radius, config.bfs_cap);
        for (std::size_t i = 0; i < ball.elements.size(); ++i)
            for (std::size_t j = i + 1; j < ball.elements.size(); ++j)
                consider(ball.elements[i], ball.elements[j]);
    } else {
        std::int64_t samples = config.samples > 0 ? config.samples : 1000;
        std::mt19937_64 rng(config.seed);
        for (std::int64_t s = 0; s < samples; ++s)
            consider(hex::random_element(config.length, rng()),
                     hex::random_element(config.length, rng()));
    }
    nlohmann::json summary = stats.summary();
    summary["considered"] = considered;
    summary["min_distance"] = config.min_distance;
    out << summary.dump() << "\n";
    return 0;
}

int cmd_selftest(const ExperimentConfig& config, std::ostream& out);

}  // namespace

int run(const ExperimentConfig& config, std::ostream& out) {
    try {
        if (config.command == "reduce") return cmd_reduce(config, out);
        if (config.command == "normal-form") return cmd_normal_form(config, out);
        if (config.command == "ball") return cmd_ball(config, out);
        if (config.command == "diary") return cmd_diary(config, out);
        if (config.command == "embed") return cmd_embed(config, out);
        if (config.command == "isometry") return cmd_isometry(config, out);
        if (config.command == "distort") return cmd_distort(config, out);
        if (config.command == "classify") return cmd_classify(config, out);
        if (config.command == "selftest") return cmd_selftest(config, out);
        throw ConfigError("unknown command '" + config.command + "'");
    } catch (const ConfigError& e) {
        out << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        out << "config error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int cmd_selftest(const ExperimentConfig& config, std::ostream& out) {
    (void)config;
    std::int64_t failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    check("alice-diary worked example",
          alice_diary(3, Sentence::parse("abac|cb|accc|bcbc|a")) ==
              Sentence::parse("cab|bca|ccc|cbc|aba"));

    hex::GroupElement g = hex::GroupElement::parse("b1 a2 a3 b2 a1 b1");
    check("a-left representation",
          hex::gen_word_str(hex::side_left_rep(g, hex::Family::kA)) == "a2 a3 b1 a1 b2 b1");
    check("factor sentence", f_side(g, hex::Family::kA).str() == "[a2]|[a3]|[b1][a1]");

    {
        oracles::CayleyOracle oracle(5, 3);
        bool ok = true;
        // Every word of length <= 4: reduce() length must match the oracle.
        std::vector<std::size_t> digits;
        for (std::int64_t len = 0; len <= 4 && ok; ++len) {
            digits.assign(static_cast<std::size_t>(len), 0);
            for (;;) {
                hex::GenWord w;
                for (std::size_t d : digits) w.push_back(hex::Generator::from_code(static_cast<int>(d)));
                if (static_cast<std::int64_t>(hex::reduce(w).size()) != oracle.distance_of_word(w)) {
                    ok = false;
                    break;
                }
                std::size_t i = digits.size();
                while (i > 0) {
                    if (++digits[i - 1] < 6) break;
                    digits[i - 1] = 0;
                    --i;
                }
                if (i == 0) break;
            }
        }
        check("reduce against reflection oracle (length <= 4)", ok);
    }

    {
        ExperimentConfig iso;
        iso.command = "isometry";
        iso.radius = 3;
        std::ostringstream sink;
        check("isometry sweep radius 3", cmd_isometry(iso, sink) == 0);
    }

    {
        ExperimentConfig d1;
        d1.command = "distort";
        d1.samples = 40;
        d1.length = 6;
        d1.seed = 9;
        std::ostringstream s1, s2;
        int r1 = cmd_distort(d1, s1);
        int r2 = cmd_distort(d1, s2);
        check("distort determinism", r1 == 0 && r2 == 0 && s1.str() == s2.str());
    }

    out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

}  // namespace diaryembed::harness
