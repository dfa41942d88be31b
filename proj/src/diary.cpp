#include "diaryembed/diary.hpp"

#include <algorithm>
#include <stdexcept>

namespace diaryembed {

Diary::Diary(std::string kind, std::function<Word(const Sentence&)> apply,
             std::optional<Rational> lower_bound_m, std::string criterion)
    : kind_(std::move(kind)),
      apply_(std::move(apply)),
      lower_bound_m_(std::move(lower_bound_m)),
      criterion_(std::move(criterion)) {}

Sentence alice_diary(std::int64_t kappa, const Sentence& a) {
    if (kappa < 1) throw std::invalid_argument("alice_diary: kappa must be at least 1");
    // Unrecorded events always form, day by day, a prefix of that day's
    // word; days are drained newest-first. A stack of (day, remaining)
    // makes each event O(1).
    struct Segment {
        std::int64_t day;
        std::int64_t remaining;  // first `remaining` letters still unrecorded
    };
    std::vector<Segment> backlog;
    Sentence chapters;
    for (std::int64_t day = 1; day <= a.length(); ++day) {
        backlog.push_back({day, a.word(day).length()});
        Word chapter;
        for (std::int64_t page = 0; page < kappa && !backlog.empty(); ++page) {
            Segment& top = backlog.back();
            chapter.push_back(a.word(top.day).at(top.remaining - 1));
            if (--top.remaining == 0) backlog.pop_back();
        }
        chapters.append(std::move(chapter));
    }
    return chapters;
}

namespace {

Letter pack_word(const Word& w) {
    return Letter::tuple(std::span<const Letter>(w.letters().data(), w.letters().size()));
}

Word pack_chapters(const Sentence& chapters) {
    Word out;
    for (const Word& c : chapters) out.push_back(pack_word(c));
    return out;
}

}  // namespace

Diary make_alice_diary(std::int64_t kappa) {
    if (kappa < 1) throw std::invalid_argument("make_alice_diary: kappa must be at least 1");
    return Diary("alice(" + std::to_string(kappa) + ")", [kappa](const Sentence& a) {
        return pack_chapters(alice_diary(kappa, a));
    });
}

Diary associated_diary(const FiniteStatistic& stat) {
    return Diary("associated(" + stat.name() + ")", [stat](const Sentence& a) {
        Word out;
        for (std::int64_t i = 1; i <= a.length(); ++i) out.push_back(stat(a.prefix(i)));
        return out;
    });
}

namespace {

struct PairShape {
    std::int64_t p, m, n;
};

PairShape pair_shape(const Sentence& a, const Sentence& b, const char* who) {
    if (a == b) throw std::invalid_argument(std::string(who) + ": sentences are equal");
    std::int64_t p = common_prefix_length(a, b);
    return {p, a.length() - p, b.length() - p};
}

Rational awl_or_zero(const Sentence& s) { return s.empty() ? Rational(0) : awl(s); }

}  // namespace

std::optional<Witness> check_aries(const Sentence& a, const Sentence& b,
                                   std::span<const FiniteStatistic> stats, const Rational& delta,
                                   std::int64_t J) {
    if (stats.empty()) throw std::invalid_argument("check_aries: no statistics");
    if (delta < Rational(0) || delta >= Rational(1))
        throw std::invalid_argument("check_aries: delta must lie in [0,1)");
    if (J < 1) throw std::invalid_argument("check_aries: J must be at least 1");
    auto [p, m, n] = pair_shape(a, b, "check_aries");
    std::int64_t j_max = std::min(floor_of(delta * Rational(std::min(m, n)) + Rational(J)),
                                  std::min(m, n));
    for (std::int64_t j = 1; j <= j_max; ++j) {
        Sentence pa = a.prefix(p + j);
        Sentence pb = b.prefix(p + j);
        for (std::size_t k = 0; k < stats.size(); ++k) {
            if (stats[k](pa) != stats[k](pb)) return Witness{j, k};
        }
    }
    return std::nullopt;
}

std::optional<Witness> check_leo(const Sentence& a, const Sentence& b,
                                 std::span<const FiniteStatistic> stats, std::int64_t J) {
    return check_aries(a, b, stats, Rational(0), J);
}

std::optional<Witness> check_virgo(const Sentence& a, const Sentence& b,
                                   std::span<const LinearStatistic> stats, const Rational& delta,
                                   std::int64_t J, const Rational& N, const Rational& epsilon) {
    if (stats.empty()) throw std::invalid_argument("check_virgo: no statistics");
    if (delta < Rational(0) || delta >= Rational(1))
        throw std::invalid_argument("check_virgo: delta must lie in [0,1)");
    if (J < 1) throw std::invalid_argument("check_virgo: J must be at least 1");
    if (epsilon <= Rational(0)) throw std::invalid_argument("check_virgo: epsilon must be positive");
    auto [p, m, n] = pair_shape(a, b, "check_virgo");
    std::int64_t c = m + n;
    Rational length_floor = epsilon * Rational(c);
    std::int64_t j_max = std::min(floor_of(delta * Rational(std::min(m, n)) + Rational(J)),
                                  std::min(m, n));
    for (std::int64_t j = 1; j <= j_max; ++j) {
        // (1) bounded tail averages past depth p+j; an empty tail counts as 0
        if (awl_or_zero(a.suffix_from(p + j + 1)) > N) continue;
        if (awl_or_zero(b.suffix_from(p + j + 1)) > N) continue;
        // (2) a long word on either side, or differing words, at depth p+j
        const Word& ua = a.word(p + j);
        const Word& ub = b.word(p + j);
        if (Rational(ua.length()) < length_floor && Rational(ub.length()) < length_floor &&
            ua == ub)
            continue;
        // (3) some statistic at scale c separates the depth-(p+j) prefixes
        Sentence pa = a.prefix(p + j);
        Sentence pb = b.prefix(p + j);
        for (std::size_t k = 0; k < stats.size(); ++k) {
            if (stats[k].eval_c(c, pa) != stats[k].eval_c(c, pb)) return Witness{j, k};
        }
    }
    return std::nullopt;
}

std::optional<std::int64_t> check_taurus(const Sentence& a, const Sentence& b,
                                         std::span<const LinearStatistic> stats, std::int64_t J,
                                         const Rational& N, const Rational& epsilon) {
    if (stats.empty()) throw std::invalid_argument("check_taurus: no statistics");
    if (J < 1) throw std::invalid_argument("check_taurus: J must be at least 1");
    if (epsilon <= Rational(0))
        throw std::invalid_argument("check_taurus: epsilon must be positive");
    auto [p, m, n] = pair_shape(a, b, "check_taurus");
    std::int64_t c = m + n;
    Rational length_cap = epsilon * Rational(c);
    auto separated_at = [&](std::int64_t j) {
        Sentence pa = a.prefix(p + j);
        Sentence pb = b.prefix(p + j);
        for (const LinearStatistic& s : stats)
            if (s.eval_c(c, pa) != s.eval_c(c, pb)) return true;
        return false;
    };
    std::int64_t j_max = std::min(J, std::min(m, n));
    for (std::int64_t j = 1; j <= j_max; ++j) {
        if (awl_or_zero(a.suffix_from(p + j + 1)) > N) continue;
        if (awl_or_zero(b.suffix_from(p + j + 1)) > N) continue;
        // Walk j' downward; `short_gap` tracks whether every depth in
        // (j', j] has short words on both sides.
        bool ok = true;
        bool short_gap = true;
        for (std::int64_t jp = j; jp >= 1; --jp) {
            if (short_gap && !separated_at(jp)) {
                ok = false;
                break;
            }
            short_gap = short_gap && Rational(a.word(p + jp).length()) <= length_cap &&
                        Rational(b.word(p + jp).length()) <= length_cap;
            if (!short_gap) break;
        }
        if (ok) return j;
    }
    return std::nullopt;
}

VirgoConstants VirgoConstants::derive(std::span<const LinearStatistic> stats,
                                      const Rational& delta, std::int64_t J, const Rational& N,
                                      const Rational& epsilon) {
    if (stats.empty()) throw std::invalid_argument("VirgoConstants: no statistics");
    if (delta < Rational(0) || delta >= Rational(1))
        throw std::invalid_argument("VirgoConstants: delta must lie in [0,1)");
    if (J < 1) throw std::invalid_argument("VirgoConstants: J must be at least 1");
    if (N <= Rational(0)) throw std::invalid_argument("VirgoConstants: N must be positive");
    if (epsilon <= Rational(0))
        throw std::invalid_argument("VirgoConstants: epsilon must be positive");
    VirgoConstants k;
    k.delta = delta;
    k.J = J;
    k.N = N;
    k.epsilon = epsilon;
    k.tau = 1;
    for (const LinearStatistic& s : stats) k.tau = std::max(k.tau, s.tau());
    k.omega = ceil_at_least(Rational(k.tau) / epsilon);
    Rational slope = Rational(1) - delta;
    k.U = Rational(12 * k.tau * J) / slope + Rational(k.omega) * N + Rational(1);
    k.V = Rational(12 * J) * (Rational(k.tau) + epsilon) / slope + Rational(k.omega) * N +
          Rational(1);
    Rational bound = std::max({Rational(16) * k.U / slope, Rational(64 * J * k.tau) / slope,
                               Rational(16) * k.V / slope,
                               Rational(64 * J) * (Rational(k.tau) + epsilon) / slope});
    k.kappa = ceil_strict(bound);
    k.M = std::max({Rational(3), Rational(8) / slope, Rational(32 * J) / slope});
    return k;
}

Sentence virgo_I_map(std::span<const LinearStatistic> stats, std::int64_t omega,
                     const Sentence& a) {
    if (omega < 1) throw std::invalid_argument("virgo_I_map: omega must be at least 1");
    Sentence image;
    for (std::int64_t i = 1; i <= a.length(); ++i) {
        Sentence prefix = a.prefix(i);
        const Word& w = a.word(i);
        std::int64_t r = omega * w.length();
        // Reversed, length-normalised limit word of each statistic.
        std::vector<Word> hats;
        hats.reserve(stats.size());
        for (const LinearStatistic& s : stats)
            hats.push_back(word_reverse(norm_r(s.limit(prefix), r, Letter::pad())));
        Word day;
        day.push_back(Letter::star());
        std::vector<Letter> entry(stats.size() + 1, Letter::pad());
        for (std::int64_t q = 0; q < r; ++q) {
            entry[0] = w.at(q % w.length());
            for (std::size_t k = 0; k < hats.size(); ++k) entry[k + 1] = hats[k].at(q);
            day.push_back(Letter::tuple(std::span<const Letter>(entry.data(), entry.size())));
        }
        image.append(std::move(day));
    }
    return image;
}

Sentence virgo_I_map(std::span<const LinearStatistic> stats, const VirgoConstants& constants,
                     const Sentence& a) {
    return virgo_I_map(stats, constants.omega, a);
}

Diary virgo_diary(std::vector<LinearStatistic> stats, const Rational& delta, std::int64_t J,
                  const Rational& N, const Rational& epsilon,
                  std::optional<std::int64_t> kappa_override) {
    VirgoConstants constants = VirgoConstants::derive(stats, delta, J, N, epsilon);
    std::int64_t kappa = kappa_override.value_or(constants.kappa);
    if (kappa < 1) throw std::invalid_argument("virgo_diary: kappa must be at least 1");
    std::string kind = "virgo(kappa=" + std::to_string(kappa) + ",omega=" +
                       std::to_string(constants.omega) + ")";
    std::optional<Rational> bound;
    if (!kappa_override) bound = constants.M;
    return Diary(
        std::move(kind),
        [stats = std::move(stats), omega = constants.omega, kappa](const Sentence& a) {
            return pack_chapters(alice_diary(kappa, virgo_I_map(stats, omega, a)));
        },
        bound, "virgo");
}

Diary taurus_diary(std::vector<LinearStatistic> stats, std::int64_t J, const Rational& N,
                   const Rational& epsilon, std::optional<std::int64_t> kappa_override) {
    Rational inner_n = N + Rational(6 * J * J) * epsilon;
    Diary inner = virgo_diary(std::move(stats), Rational(0), J, inner_n, epsilon, kappa_override);
    std::optional<Rational> bound;
    if (!kappa_override && inner.lower_bound_m())
        bound = std::max(Rational(3), *inner.lower_bound_m());
    return Diary("taurus(" + inner.kind() + ")",
                 [inner](const Sentence& a) { return inner.apply(a); }, bound, "taurus");
}

Diary aries_diary(std::vector<FiniteStatistic> stats, const Rational& delta, std::int64_t J) {
    if (stats.empty()) throw std::invalid_argument("aries_diary: empty statistic list");
    if (delta < Rational(0) || delta >= Rational(1))
        throw std::invalid_argument("aries_diary: delta must lie in [0,1)");
    if (J < 1) throw std::invalid_argument("aries_diary: J must be at least 1");
    Rational bound = Rational(2 * J) / (Rational(1) - delta);
    Diary inner = associated_diary(product_statistic(std::move(stats)));
    return Diary("aries(" + inner.kind() + ")",
                 [inner](const Sentence& a) { return inner.apply(a); }, bound, "aries");
}

namespace {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("diary descriptor: bad rational '" + text + "'");
    }
}

// Splits on commas outside parentheses.
std::vector<std::string> split_top_level(std::string_view body) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

}  // namespace

DiaryDescriptor parse_diary_descriptor(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw std::invalid_argument("diary descriptor: expected kind(...)");
    DiaryDescriptor d;
    d.kind = std::string(text.substr(0, open));
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    if (d.kind == "alice") {
        try {
            d.kappa = std::stoll(std::string(body));
        } catch (const std::exception&) {
            throw std::invalid_argument("diary descriptor: alice expects a chapter size");
        }
        return d;
    }
    if (d.kind == "combine") {
        for (const std::string& part : split_top_level(body))
            d.parts.push_back(parse_diary_descriptor(part));
        if (d.parts.size() < 2)
            throw std::invalid_argument("diary descriptor: combine expects at least two parts");
        return d;
    }
    if (d.kind != "associated" && d.kind != "aries" && d.kind != "virgo" && d.kind != "taurus")
        throw std::invalid_argument("diary descriptor: unknown kind '" + d.kind + "'");
    // Statistics first, then ';'-separated settings.
    std::vector<std::string> sections;
    std::size_t start = 0;
    while (true) {
        auto semi = body.find(';', start);
        sections.emplace_back(body.substr(start, semi - start));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    for (const std::string& stat : split_top_level(sections[0]))
        d.statistics.push_back(parse_statistic_descriptor(stat));
    for (std::size_t i = 1; i < sections.size(); ++i) {
        auto eq = sections[i].find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("diary descriptor: expected key=value in settings");
        std::string key = sections[i].substr(0, eq);
        std::string value = sections[i].substr(eq + 1);
        if (key == "delta")
            d.delta = parse_rational(value);
        else if (key == "J")
            d.J = std::stoll(value);
        else if (key == "N")
            d.N = parse_rational(value);
        else if (key == "eps" || key == "epsilon")
            d.epsilon = parse_rational(value);
        else if (key == "kappa")
            d.kappa = std::stoll(value);
        else
            throw std::invalid_argument("diary descriptor: unknown setting '" + key + "'");
    }
    return d;
}

std::string to_string(const DiaryDescriptor& d) {
    if (d.kind == "alice") return "alice(" + std::to_string(d.kappa) + ")";
    if (d.kind == "combine") {
        std::string out = "combine(";
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            if (i) out += ",";
            out += to_string(d.parts[i]);
        }
        return out + ")";
    }
    std::string out = d.kind + "(";
    for (std::size_t i = 0; i < d.statistics.size(); ++i) {
        if (i) out += ",";
        out += to_string(d.statistics[i]);
    }
    if (d.kind == "aries") out += ";delta=" + to_string(d.delta) + ";J=" + std::to_string(d.J);
    if (d.kind == "virgo")
        out += ";delta=" + to_string(d.delta) + ";J=" + std::to_string(d.J) +
               ";N=" + to_string(d.N) + ";eps=" + to_string(d.epsilon);
    if (d.kind == "taurus")
        out += ";J=" + std::to_string(d.J) + ";N=" + to_string(d.N) +
               ";eps=" + to_string(d.epsilon);
    if (d.kind != "aries" && d.kappa != 0) out += ";kappa=" + std::to_string(d.kappa);
    return out + ")";
}

Diary make_diary(const DiaryDescriptor& d) {
    auto finite_stats = [&]() {
        std::vector<FiniteStatistic> out;
        for (const StatisticDescriptor& s : d.statistics) {
            auto built = make_statistic(s);
            if (!std::holds_alternative<FiniteStatistic>(built))
                throw std::invalid_argument("make_diary: " + d.kind +
                                            " needs finite statistics, got " + to_string(s));
            out.push_back(std::get<FiniteStatistic>(std::move(built)));
        }
        return out;
    };
    auto linear_stats = [&]() {
        std::vector<LinearStatistic> out;
        for (const StatisticDescriptor& s : d.statistics) {
            auto built = make_statistic(s);
            if (!std::holds_alternative<LinearStatistic>(built))
                throw std::invalid_argument("make_diary: " + d.kind +
                                            " needs linear statistics, got " + to_string(s));
            out.push_back(std::get<LinearStatistic>(std::move(built)));
        }
        return out;
    };
    std::optional<std::int64_t> kappa_override;
    if (d.kappa != 0) kappa_override = d.kappa;
    if (d.kind == "alice") return make_alice_diary(d.kappa);
    if (d.kind == "associated") {
        auto stats = finite_stats();
        if (stats.size() != 1)
            throw std::invalid_argument("make_diary: associated expects one statistic");
        return associated_diary(stats.front());
    }
    if (d.kind == "aries") return aries_diary(finite_stats(), d.delta, d.J);
    if (d.kind == "virgo")
        return virgo_diary(linear_stats(), d.delta, d.J, d.N, d.epsilon, kappa_override);
    if (d.kind == "taurus") return taurus_diary(linear_stats(), d.J, d.N, d.epsilon, kappa_override);
    if (d.kind == "combine") {
        Diary acc = make_diary(d.parts.at(0));
        for (std::size_t i = 1; i < d.parts.size(); ++i)
            acc = combine_diaries(acc, make_diary(d.parts[i]));
        return acc;
    }
    throw std::invalid_argument("make_diary: unknown kind '" + d.kind + "'");
}

Diary combine_diaries(const Diary& d1, const Diary& d2) {
    std::optional<Rational> bound;
    if (d1.lower_bound_m() && d2.lower_bound_m())
        bound = std::max(*d1.lower_bound_m(), *d2.lower_bound_m());
    else if (d1.lower_bound_m())
        bound = d1.lower_bound_m();
    else if (d2.lower_bound_m())
        bound = d2.lower_bound_m();
    std::string criterion = d1.criterion();
    if (!d2.criterion().empty()) {
        if (!criterion.empty()) criterion += "+";
        criterion += d2.criterion();
    }
    return Diary(
        "combine(" + d1.kind() + "," + d2.kind() + ")",
        [d1, d2](const Sentence& a) {
            Word w1 = d1.apply(a);
            Word w2 = d2.apply(a);
            if (w1.length() != w2.length())
                throw std::logic_error("combine_diaries: component heights disagree");
            Word out;
            for (std::int64_t i = 0; i < w1.length(); ++i)
                out.push_back(Letter::tuple({w1.at(i), w2.at(i)}));
            return out;
        },
        bound, criterion);
}

}  // namespace diaryembed
