#include "diaryembed/statistics.hpp"

#include <stdexcept>

namespace diaryembed {

Letter out_of_range_symbol() { return Letter::atom("<none>"); }

LinearStatistic::LinearStatistic(std::string name, std::int64_t tau,
                                 std::function<Word(const Sentence&)> limit)
    : name_(std::move(name)), tau_(tau), limit_(std::move(limit)) {
    if (tau_ < 1) throw std::invalid_argument("LinearStatistic: tau must be at least 1");
}

Word LinearStatistic::limit_prefix(std::int64_t n, const Sentence& a) const {
    if (n < 0) throw std::invalid_argument("LinearStatistic: negative prefix length");
    return limit_(a).prefix(n);
}

Word LinearStatistic::eval_c(std::int64_t c, const Sentence& a) const {
    if (c < 0) throw std::invalid_argument("LinearStatistic: negative c");
    return limit_prefix(tau_ * c, a);
}

FiniteStatistic last_letter_statistic() {
    return FiniteStatistic("last-letter", [](const Sentence& a) {
        if (a.empty()) return out_of_range_symbol();
        const Word& w = a.word(a.length());
        return w.at(w.length() - 1);
    });
}

FiniteStatistic trunc_statistic(std::int64_t kappa) {
    if (kappa < 1) throw std::invalid_argument("trunc_statistic: kappa must be at least 1");
    return FiniteStatistic("trunc(" + std::to_string(kappa) + ")", [kappa](const Sentence& a) {
        if (a.empty()) return out_of_range_symbol();
        Word tail = a.word(a.length()).suffix(kappa);
        return Letter::tuple(std::span<const Letter>(tail.letters().data(), tail.letters().size()));
    });
}

LinearStatistic ltrunc_statistic(std::int64_t tau) {
    return LinearStatistic("ltrunc(" + std::to_string(tau) + ")", tau, [](const Sentence& a) {
        if (a.empty()) return Word();
        return word_reverse(a.word(a.length()));
    });
}

LinearStatistic decimal_length_ltrunc_statistic(std::int64_t tau) {
    return LinearStatistic("decimal-length-ltrunc(" + std::to_string(tau) + ")", tau,
                           [](const Sentence& a) {
                               if (a.empty()) return Word();
                               return word_reverse(decimal_word(a.word(a.length()).length()));
                           });
}

LinearStatistic oop_statistic(PriorityOrder order, std::int64_t tau) {
    const char* tag = order == PriorityOrder::kNewestFirst ? "newest-first" : "oldest-first";
    return LinearStatistic("oop(" + std::string(tag) + ")", tau, [order](const Sentence& a) {
        Word all;
        for (const Word& w : a) all.append(w);
        return order == PriorityOrder::kNewestFirst ? word_reverse(all) : all;
    });
}

FiniteStatistic with_word_offset(FiniteStatistic stat, std::int64_t offset_r) {
    if (offset_r < 1) throw std::invalid_argument("with_word_offset: offset must be at least 1");
    std::string name = stat.name() + "@-" + std::to_string(offset_r - 1);
    return FiniteStatistic(std::move(name), [stat = std::move(stat), offset_r](const Sentence& a) {
        std::int64_t end = a.length() - offset_r + 1;
        if (end < 1) return out_of_range_symbol();
        return stat(a.prefix(end));
    });
}

LinearStatistic with_word_offset(LinearStatistic stat, std::int64_t offset_r) {
    if (offset_r < 1) throw std::invalid_argument("with_word_offset: offset must be at least 1");
    std::string name = stat.name() + "@-" + std::to_string(offset_r - 1);
    std::int64_t tau = stat.tau();
    return LinearStatistic(std::move(name), tau,
                           [stat = std::move(stat), offset_r](const Sentence& a) {
                               std::int64_t end = a.length() - offset_r + 1;
                               if (end < 1) return Word();
                               return stat.limit(a.prefix(end));
                           });
}

FiniteStatistic product_statistic(std::vector<FiniteStatistic> stats) {
    if (stats.empty()) throw std::invalid_argument("product_statistic: empty list");
    if (stats.size() == 1) return std::move(stats.front());
    std::string name = "product(";
    for (std::size_t i = 0; i < stats.size(); ++i) {
        if (i) name += ",";
        name += stats[i].name();
    }
    name += ")";
    return FiniteStatistic(std::move(name), [stats = std::move(stats)](const Sentence& a) {
        std::vector<Letter> values;
        values.reserve(stats.size());
        for (const FiniteStatistic& s : stats) values.push_back(s(a));
        return Letter::tuple(std::span<const Letter>(values.data(), values.size()));
    });
}

Word eval_linear_inf(const LinearStatistic& stat, std::int64_t n, const Sentence& a) {
    return stat.limit_prefix(n, a);
}

std::variant<FiniteStatistic, LinearStatistic> make_statistic(const StatisticDescriptor& d) {
    auto wrap_finite = [&](FiniteStatistic s) -> std::variant<FiniteStatistic, LinearStatistic> {
        return d.offset == 1 ? std::move(s) : with_word_offset(std::move(s), d.offset);
    };
    auto wrap_linear = [&](LinearStatistic s) -> std::variant<FiniteStatistic, LinearStatistic> {
        return d.offset == 1 ? std::move(s) : with_word_offset(std::move(s), d.offset);
    };
    if (d.kind == "last-letter") return wrap_finite(last_letter_statistic());
    if (d.kind == "trunc") return wrap_finite(trunc_statistic(d.param));
    if (d.kind == "ltrunc") return wrap_linear(ltrunc_statistic(d.param));
    if (d.kind == "decimal-length-ltrunc")
        return wrap_linear(decimal_length_ltrunc_statistic(d.param));
    if (d.kind == "oop") {
        PriorityOrder order;
        if (d.order == "newest-first")
            order = PriorityOrder::kNewestFirst;
        else if (d.order == "oldest-first")
            order = PriorityOrder::kOldestFirst;
        else
            throw std::invalid_argument("make_statistic: unknown oop order " + d.order);
        return wrap_linear(oop_statistic(order, d.param));
    }
    throw std::invalid_argument("make_statistic: unknown kind " + d.kind);
}

StatisticDescriptor parse_statistic_descriptor(std::string_view text) {
    StatisticDescriptor d;
    auto at = text.find('@');
    if (at != std::string_view::npos) {
        std::string offset(text.substr(at + 1));
        try {
            d.offset = std::stoll(offset);
        } catch (const std::exception&) {
            throw std::invalid_argument("statistic descriptor: bad offset '" + offset + "'");
        }
        text = text.substr(0, at);
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        auto colon = text.find(':', start);
        fields.emplace_back(text.substr(start, colon - start));
        if (colon == std::string_view::npos) break;
        start = colon + 1;
    }
    if (fields.empty() || fields[0].empty())
        throw std::invalid_argument("statistic descriptor: missing kind");
    d.kind = fields[0];
    if (fields.size() >= 2) {
        try {
            d.param = std::stoll(fields[1]);
        } catch (const std::exception&) {
            throw std::invalid_argument("statistic descriptor: bad parameter '" + fields[1] + "'");
        }
    }
    if (fields.size() >= 3) d.order = fields[2];
    if (fields.size() > 3) throw std::invalid_argument("statistic descriptor: too many fields");
    return d;
}

std::string to_string(const StatisticDescriptor& d) {
    std::string out = d.kind;
    if (d.kind != "last-letter") out += ":" + std::to_string(d.param);
    if (d.kind == "oop") out += ":" + d.order;
    if (d.offset != 1) out += "@" + std::to_string(d.offset);
    return out;
}

}  // namespace diaryembed
