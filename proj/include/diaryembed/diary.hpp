#ifndef DIARYEMBED_DIARY_HPP
#define DIARYEMBED_DIARY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diaryembed/statistics.hpp"
#include "diaryembed/words.hpp"

namespace diaryembed {

/*
 * A height-preserving, order-preserving map from sentences into words over a
 * finite alphabet: one output letter per input word, and mapped prefixes stay
 * prefixes. Consequently 1-Lipschitz for the tree metrics.
 *
 * Constructors produced from one of the four pair criteria carry the constant
 * M with d(D(a), D(b)) >= d(a, b) / M for pairs certified by that criterion.
 */
class Diary {
public:
    Diary(std::string kind, std::function<Word(const Sentence&)> apply,
          std::optional<Rational> lower_bound_m = std::nullopt, std::string criterion = {});

    Word apply(const Sentence& a) const { return apply_(a); }
    Word operator()(const Sentence& a) const { return apply_(a); }

    const std::optional<Rational>& lower_bound_m() const { return lower_bound_m_; }
    const std::string& kind() const { return kind_; }
    const std::string& criterion() const { return criterion_; }

private:
    std::string kind_;
    std::function<Word(const Sentence&)> apply_;
    std::optional<Rational> lower_bound_m_;
    std::string criterion_;
};

// Greedy bounded-buffer summarization: each day appends its letters to the
// event log, then up to kappa unrecorded events are recorded, always the most
// recent unrecorded one first. Chapter i lists the letters recorded at the
// end of day i, in recording order.
Sentence alice_diary(std::int64_t kappa, const Sentence& a);

// alice_diary with each chapter packed into a single output letter.
Diary make_alice_diary(std::int64_t kappa);

// Chapter i is stat applied to the length-i prefix.
Diary associated_diary(const FiniteStatistic& stat);

struct Witness {
    std::int64_t j = 0;
    std::size_t stat_index = 0;
    bool operator==(const Witness&) const = default;
};

// With a, b written over their longest common prefix of p words and tails of
// m and n words: looks for the smallest 1 <= j <= delta*min(m,n) + J (and
// j <= min(m,n), so both depth-(p+j) prefixes exist) where some statistic
// separates the two prefixes. Requires a != b.
std::optional<Witness> check_aries(const Sentence& a, const Sentence& b,
                                   std::span<const FiniteStatistic> stats, const Rational& delta,
                                   std::int64_t J);

// check_aries with delta = 0.
std::optional<Witness> check_leo(const Sentence& a, const Sentence& b,
                                 std::span<const FiniteStatistic> stats, std::int64_t J);

// The three-part criterion on linear statistics: bounded tail AWLs past j, a
// long or differing word at depth p+j, and a statistic at scale c = m+n that
// separates the depth-(p+j) prefixes.
std::optional<Witness> check_virgo(const Sentence& a, const Sentence& b,
                                   std::span<const LinearStatistic> stats, const Rational& delta,
                                   std::int64_t J, const Rational& N, const Rational& epsilon);

// The cascading variant: some j <= J with bounded tail AWLs such that every
// j' <= j reachable from j through short words (length <= epsilon*(m+n) at
// all depths j' < j'' <= j, on both sides) is separated by some statistic at
// scale m+n.
std::optional<std::int64_t> check_taurus(const Sentence& a, const Sentence& b,
                                         std::span<const LinearStatistic> stats, std::int64_t J,
                                         const Rational& N, const Rational& epsilon);

/*
 * Derived constants for the linear-statistic diary. With tau the largest
 * statistic constant:
 *   omega = smallest integer >= tau/epsilon
 *   U     = 12*tau*J/(1-delta) + omega*N + 1
 *   V     = 12*(tau+epsilon)*J/(1-delta) + omega*N + 1
 *   kappa = smallest integer exceeding all of 16U/(1-delta), 64*J*tau/(1-delta),
 *           16V/(1-delta), 64*J*(tau+epsilon)/(1-delta)
 *   M     = max(3, 8/(1-delta), 32J/(1-delta))
 */
struct VirgoConstants {
    Rational delta;
    std::int64_t J = 1;
    Rational N;
    Rational epsilon;
    std::int64_t tau = 1;
    std::int64_t omega = 1;
    Rational U;
    Rational V;
    std::int64_t kappa = 1;
    Rational M;

    static VirgoConstants derive(std::span<const LinearStatistic> stats, const Rational& delta,
                                 std::int64_t J, const Rational& N, const Rational& epsilon);
};

// The isometric recoding into starred words over the enlarged alphabet
// {star} + A x prod_k (B_k + pad): word i becomes star followed by
// omega*length(w_i) tuple letters pairing (w_i repeated omega times) with the
// reversed, length-normalised limit words of every statistic on the prefix.
Sentence virgo_I_map(std::span<const LinearStatistic> stats, std::int64_t omega,
                     const Sentence& a);
Sentence virgo_I_map(std::span<const LinearStatistic> stats, const VirgoConstants& constants,
                     const Sentence& a);

// Alice's diary composed with the recoding above, using the derived kappa
// (or kappa_override for exploratory runs; the bound M is only claimed for
// the derived value).
Diary virgo_diary(std::vector<LinearStatistic> stats, const Rational& delta, std::int64_t J,
                  const Rational& N, const Rational& epsilon,
                  std::optional<std::int64_t> kappa_override = std::nullopt);

// virgo_diary at delta = 0 with N replaced by N + 6*J^2*epsilon.
Diary taurus_diary(std::vector<LinearStatistic> stats, std::int64_t J, const Rational& N,
                   const Rational& epsilon,
                   std::optional<std::int64_t> kappa_override = std::nullopt);

// Associated diary of the product statistic; M = 2J/(1-delta).
Diary aries_diary(std::vector<FiniteStatistic> stats, const Rational& delta, std::int64_t J);

// Chapter-wise pairing; M carries over as the max of the two components.
Diary combine_diaries(const Diary& d1, const Diary& d2);

/*
 * Text form of a diary constructor, for config files and the CLI:
 *
 *   alice(3)
 *   associated(last-letter)
 *   aries(last-letter;delta=1/2;J=2)
 *   virgo(ltrunc:12,decimal-length-ltrunc:12;J=2;N=18;eps=1)      (optional kappa=...)
 *   taurus(ltrunc:12;J=2;N=18;eps=1)
 *   combine(aries(last-letter;J=2),virgo(ltrunc:12;J=2;N=18;eps=1;kappa=32))
 */
struct DiaryDescriptor {
    std::string kind;
    std::int64_t kappa = 0;  // alice chapter size, or an override (0 = derived)
    Rational delta{0};
    std::int64_t J = 1;
    Rational N{1};
    Rational epsilon{1};
    std::vector<StatisticDescriptor> statistics;
    std::vector<DiaryDescriptor> parts;  // combine
};

DiaryDescriptor parse_diary_descriptor(std::string_view text);
std::string to_string(const DiaryDescriptor& d);
Diary make_diary(const DiaryDescriptor& d);

}  // namespace diaryembed

#endif
