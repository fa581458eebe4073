/*
 * Copyright 2026 The advopt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "advopt/ground_states.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "advopt/errors.hpp"

namespace advopt {
namespace {

// Partial endpoint matrix of a replacement prefix: entry [v1 * n + u] is the
// least x-sum over words starting at v1 and currently at u.
struct Candidate {
  std::vector<LetterIndex> word;
  std::vector<ExtRational> matrix;
};

bool dominates(const std::vector<ExtRational>& a, const std::vector<ExtRational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

struct SearchInput {
  LetterIndex left;
  LetterIndex right;
  std::size_t length;
};

SearchInput prepare(const Sft& y, const Sft& x, const Potential& p, const Word& base, Interval interval) {
  p.require_compatible(x, y);
  if (interval.a > interval.b) throw IntervalOutOfRange("empty interval");
  if (base.size() == 0 || interval.a - 1 < base.start || interval.b + 1 > base.end()) {
    throw IntervalOutOfRange("base word does not cover one letter beyond each end of the interval");
  }
  if (!y.is_legal(base)) throw std::invalid_argument("base word is not legal in Y");
  return {base.at(interval.a - 1), base.at(interval.b + 1), interval.length()};
}

// Exact margin of a finished candidate against the base table.
Rational margin_of(const std::vector<ExtRational>& matrix, const EndpointTable& base_table, std::size_t n,
                   const Rational& C) {
  std::optional<Rational> least;
  for (const auto& [pair, value] : base_table.entries) {
    const ExtRational& entry = matrix[pair.first * n + pair.second];
    // Finiteness of H depends on X alone, so this never fires for legal input.
    if (!entry.is_finite()) throw InconsistencyError("endpoint sets differ between words");
    Rational excess = entry.value() - value;
    if (!least || excess < *least) least = std::move(excess);
  }
  return *least - C;
}

struct SearchOutcome {
  std::vector<LetterIndex> word;
  Rational margin;
};

// Level-by-level search over replacement words in lexicographic order with
// dominance pruning. With `first_only` the search returns as soon as some
// replacement clears C.
std::optional<SearchOutcome> search(const Sft& y, const Sft& x, const Potential& p, const SearchInput& in,
                                    const EndpointTable& base_table, const Rational& C, bool first_only) {
  const std::size_t n = x.size();
  std::vector<Candidate> level;
  for (LetterIndex c : y.successors(in.left)) {
    Candidate start{{c}, std::vector<ExtRational>(n * n, ExtRational::infinity())};
    for (LetterIndex v = 0; v < n; ++v) start.matrix[v * n + v] = p.at(v, c);
    level.push_back(std::move(start));
  }
  for (std::size_t depth = 1; depth < in.length; ++depth) {
    std::vector<Candidate> next;
    std::vector<std::vector<std::size_t>> buckets(y.size());
    for (const Candidate& cand : level) {
      for (LetterIndex c : y.successors(cand.word.back())) {
        Candidate grown{cand.word, std::vector<ExtRational>(n * n, ExtRational::infinity())};
        grown.word.push_back(c);
        for (LetterIndex v1 = 0; v1 < n; ++v1) {
          for (LetterIndex u = 0; u < n; ++u) {
            const ExtRational& here = cand.matrix[v1 * n + u];
            if (!here.is_finite()) continue;
            for (LetterIndex w : x.successors(u)) {
              ExtRational value = here + p.at(w, c);
              ExtRational& slot = grown.matrix[v1 * n + w];
              if (value < slot) slot = std::move(value);
            }
          }
        }
        auto& bucket = buckets[c];
        bool dominated = false;
        for (std::size_t index : bucket) {
          if (dominates(next[index].matrix, grown.matrix)) {
            dominated = true;
            break;
          }
        }
        if (dominated) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::optional<SearchOutcome> best;
  for (const Candidate& cand : level) {
    if (!y.allowed(cand.word.back(), in.right)) continue;
    Rational margin = margin_of(cand.matrix, base_table, n, C);
    if (margin <= 0) continue;
    if (first_only) return SearchOutcome{cand.word, std::move(margin)};
    if (!best || margin > best->margin) best = SearchOutcome{cand.word, std::move(margin)};
  }
  return best;
}

Word slice(const Word& word, std::int64_t from, std::int64_t to) {
  Word out{from, {}};
  for (std::int64_t i = from; i <= to; ++i) out.letters.push_back(word.at(i));
  return out;
}

EndpointTable table_on(const Sft& x, const Potential& p, const Word& word, Interval interval) {
  return h_table(x, p, slice(word, interval.a, interval.b));
}

}  // namespace

std::optional<ImprovementCertificate> find_improvement(const Sft& y, const Sft& x, const Potential& p,
                                                       const Word& base, Interval interval, const Rational& C) {
  const SearchInput in = prepare(y, x, p, base, interval);
  const EndpointTable base_table = table_on(x, p, base, interval);
  auto outcome = search(y, x, p, in, base_table, C, false);
  if (!outcome) return std::nullopt;
  ImprovementCertificate cert{slice(base, interval.a - 1, interval.b + 1), interval, {}, std::move(outcome->margin)};
  cert.improved_word = cert.base_word;
  for (std::size_t i = 0; i < outcome->word.size(); ++i) cert.improved_word.letters[i + 1] = outcome->word[i];
  return cert;
}

bool has_improvement(const Sft& y, const Sft& x, const Potential& p, const Word& base, Interval interval,
                     const Rational& C) {
  const SearchInput in = prepare(y, x, p, base, interval);
  return search(y, x, p, in, table_on(x, p, base, interval), C, true).has_value();
}

std::optional<Rational> improvement_margin(const Sft& y, const Sft& x, const Potential& p, const Word& base,
                                           const Word& candidate, Interval interval, const Rational& C) {
  prepare(y, x, p, base, interval);
  if (candidate.start > interval.a - 1 || candidate.end() < interval.b + 1) return std::nullopt;
  if (!y.is_legal(slice(candidate, interval.a - 1, interval.b + 1))) return std::nullopt;
  if (candidate.at(interval.a - 1) != base.at(interval.a - 1) || candidate.at(interval.b + 1) != base.at(interval.b + 1)) {
    return std::nullopt;
  }
  const EndpointTable before = table_on(x, p, base, interval);
  const EndpointTable after = table_on(x, p, candidate, interval);
  std::optional<Rational> least;
  for (const auto& [pair, value] : before.entries) {
    if (!after.contains(pair.first, pair.second)) return std::nullopt;
    Rational excess = after.at(pair.first, pair.second) - value;
    if (!least || excess < *least) least = std::move(excess);
  }
  return *least - C;
}

bool validate(const ImprovementCertificate& cert, const Sft& y, const Sft& x, const Potential& p,
              const Rational& C) {
  const Interval& iv = cert.interval;
  if (cert.base_word.start != iv.a - 1 || cert.base_word.end() != iv.b + 1) return false;
  if (cert.improved_word.start != cert.base_word.start || cert.improved_word.size() != cert.base_word.size()) {
    return false;
  }
  if (!y.is_legal(cert.base_word)) return false;
  auto margin = improvement_margin(y, x, p, cert.base_word, cert.improved_word, iv, C);
  return margin && *margin > 0 && *margin == cert.margin;
}

WindowCertificate certify_orbit(const PeriodicOrbit& orbit, const Sft& y, const Sft& x, const Potential& p,
                                const Rational& C, std::size_t W) {
  if (W == 0) throw std::invalid_argument("window must be at least 1");
  if (orbit.host_fingerprint() != y.fingerprint()) throw std::invalid_argument("orbit does not live in Y");
  WindowCertificate result{orbit, C, W, WindowStatus::certified, std::nullopt};
  const auto period = static_cast<std::int64_t>(orbit.period());
  for (std::size_t len = 1; len <= W; ++len) {
    for (std::int64_t a = 0; a < period; ++a) {
      const Interval iv{a, a + static_cast<std::int64_t>(len) - 1};
      Word base{a - 1, {}};
      for (std::int64_t i = a - 1; i <= iv.b + 1; ++i) base.letters.push_back(orbit.at(i));
      if (!has_improvement(y, x, p, base, iv, C)) continue;
      result.status = WindowStatus::refuted;
      result.refutation = find_improvement(y, x, p, base, iv, C);
      return result;
    }
  }
  return result;
}

ForbiddenWordTester::ForbiddenWordTester(const Sft& y, const Sft& x, const Potential& p, Rational C,
                                         std::size_t context, Budget budget)
    : y_(y), x_(x), p_(p), C_(std::move(C)), context_(context), budget_(budget) {
  if (context == 0) throw std::invalid_argument("context must be at least 1");
  p.require_compatible(x, y);
  if (count_words(y, context, budget.max_words) > budget.max_words) {
    throw BudgetExceeded("too many context extensions");
  }
  for (const Word& w : enumerate_words(y, context)) extensions_.push_back(w.letters);
}

bool ForbiddenWordTester::window_improvable(const std::vector<LetterIndex>& window) {
  if (auto it = window_memo_.find(window); it != window_memo_.end()) return it->second;
  bool improvable = false;
  const std::size_t len = window.size();
  for (std::size_t width = 1; width + 2 <= len && !improvable; ++width) {
    for (std::size_t i = 1; i + width + 1 <= len && !improvable; ++i) {
      std::vector<LetterIndex> piece(window.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                     window.begin() + static_cast<std::ptrdiff_t>(i + width + 1));
      auto it = slice_memo_.find(piece);
      if (it == slice_memo_.end()) {
        const Word base{-1, piece};
        bool found = has_improvement(y_, x_, p_, base, Interval{0, static_cast<std::int64_t>(width) - 1}, C_);
        it = slice_memo_.emplace(std::move(piece), found).first;
      }
      improvable = it->second;
    }
  }
  window_memo_.emplace(window, improvable);
  return improvable;
}

bool ForbiddenWordTester::is_forbidden(const std::vector<LetterIndex>& word) {
  if (word.empty()) throw std::invalid_argument("word must be nonempty");
  // Words outside Y are absent from every subshift of Y.
  if (!y_.is_legal(word)) return true;
  for (const auto& left : extensions_) {
    if (!y_.allowed(left.back(), word.front())) continue;
    for (const auto& right : extensions_) {
      if (!y_.allowed(word.back(), right.front())) continue;
      std::vector<LetterIndex> window = left;
      window.insert(window.end(), word.begin(), word.end());
      window.insert(window.end(), right.begin(), right.end());
      if (!window_improvable(window)) return false;
    }
  }
  return true;
}

std::vector<Word> forbidden_words(const Sft& y, const Sft& x, const Potential& p, const Rational& C,
                                  std::size_t n, std::size_t context, const Budget& budget) {
  if (n == 0) throw std::invalid_argument("word length must be at least 1");
  if (count_words(y, n, budget.max_words) > budget.max_words) throw BudgetExceeded("too many candidate words");
  ForbiddenWordTester tester(y, x, p, C, context, budget);
  std::vector<Word> out;
  WordEnumerator words(y, n);
  std::vector<LetterIndex> letters;
  while (words.next(letters)) {
    if (tester.is_forbidden(letters)) out.push_back(Word{0, letters});
  }
  return out;
}

std::optional<MaximizerCandidate> periodic_maximizer_search(const Sft& x, const Sft& y, const Potential& p,
                                                            const Rational& C, std::size_t max_period,
                                                            std::size_t W) {
  if (!transitivity_constant(x)) throw NotTransitive("X is not transitive");
  if (!transitivity_constant(y)) throw NotTransitive("Y is not transitive");
  std::optional<MaximizerCandidate> best;
  for (const PeriodicOrbit& orbit : enumerate_periodic_orbits(y, max_period)) {
    WindowCertificate cert = certify_orbit(orbit, y, x, p, C, W);
    if (!cert.certified()) continue;
    PsiValue psi = psi_periodic(x, p, orbit);
    if (!best || psi.value > best->psi.value) best = MaximizerCandidate{orbit, std::move(psi), std::move(cert)};
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

struct NamedEdge {
  const char* name;
  int weight;
};

constexpr NamedEdge kHruskovaEdges[] = {
    {"AA", 0},  {"AB", -1}, {"AC", -1}, {"BA", -1}, {"BB", 0},  {"BD", -3},
    {"CA", -1}, {"CC", 0},  {"CD", -2}, {"DB", -3}, {"DC", -2}, {"DD", 0},
};

Word word_from_names(const Sft& y, std::int64_t start, const std::vector<std::string>& names) {
  Word w{start, {}};
  for (const auto& name : names) w.letters.push_back(y.alphabet().index_of(name));
  return w;
}

Word rerouted(const Sft& y, std::size_t M, const std::string& via) {
  std::vector<std::string> names{"AA", "A" + via};
  for (std::size_t i = 0; i < M; ++i) names.push_back(via + via);
  names.push_back(via + "D");
  names.push_back("DD");
  names.push_back("DD");
  return word_from_names(y, -1, names);
}

nlohmann::json table_json(const EndpointTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [pair, value] : table.entries) {
    out.push_back({{"v1", pair.first}, {"v2", pair.second}, {"value", to_string(value)}});
  }
  return out;
}

std::string describe_table(const EndpointTable& table) {
  std::string out;
  for (const auto& [pair, value] : table.entries) {
    if (!out.empty()) out += ",";
    out += to_string(value);
  }
  return out;
}

bool all_equal(const EndpointTable& table, const Rational& target) {
  return !table.entries.empty() &&
         std::all_of(table.entries.begin(), table.entries.end(), [&](const auto& e) { return e.second == target; });
}

}  // namespace

HruskovaSystem hruskova_system(const std::map<std::string, Rational>& weight_overrides) {
  std::vector<std::string> names;
  for (const auto& e : kHruskovaEdges) names.emplace_back(e.name);
  Alphabet alphabet(names);
  std::vector<std::pair<LetterIndex, LetterIndex>> transitions;
  for (LetterIndex a = 0; a < alphabet.size(); ++a) {
    for (LetterIndex b = 0; b < alphabet.size(); ++b) {
      if (alphabet.name(a)[1] == alphabet.name(b)[0]) transitions.emplace_back(a, b);
    }
  }
  std::vector<Rational> weights;
  for (const auto& e : kHruskovaEdges) weights.emplace_back(e.weight);
  for (const auto& [name, value] : weight_overrides) weights[alphabet.index_of(name)] = value;
  Sft x = one_letter_shift();
  Sft y = Sft::from_edges(alphabet, transitions);
  Potential f = Potential::lifted(x.alphabet(), y.alphabet(), weights);
  return {std::move(x), std::move(y), std::move(f)};
}

Word hruskova_base_word(const Sft& y, std::size_t M) { return rerouted(y, M, "B"); }
Word hruskova_improved_word(const Sft& y, std::size_t M) { return rerouted(y, M, "C"); }

ScenarioReport hruskova_scenario(std::size_t M, const Rational& C,
                                 const std::map<std::string, Rational>& weight_overrides) {
  if (M < 1 || M > 8) throw std::invalid_argument("M must lie in [1, 8]");
  if (C < 0 || C >= 1) throw std::invalid_argument("C must lie in [0, 1)");
  const HruskovaSystem sys = hruskova_system(weight_overrides);
  const Word base = hruskova_base_word(sys.y, M);
  const Word improved = hruskova_improved_word(sys.y, M);
  const auto m = static_cast<std::int64_t>(M);
  const Interval iv{0, m + 2};

  ScenarioReport report;
  report.name = "hruskova(M=" + std::to_string(M) + ",C=" + to_string(C) + ")";
  report.details["M"] = M;
  report.details["C"] = to_string(C);
  report.details["y_M"] = sys.y.render(base);
  report.details["y_M_prime"] = sys.y.render(improved);

  const EndpointTable h_base = h_table(sys.x, sys.f, slice(base, iv.a, iv.b));
  const EndpointTable h_improved = h_table(sys.x, sys.f, slice(improved, iv.a, iv.b));
  report.details["H_y_M"] = table_json(h_base);
  report.details["H_y_M_prime"] = table_json(h_improved);
  report.add("H on [0, M+2] of y_M", "-4", describe_table(h_base), all_equal(h_base, Rational(-4)));
  report.add("H on [0, M+2] of y_M'", "-3", describe_table(h_improved), all_equal(h_improved, Rational(-3)));

  const Rational expected_margin = Rational(1) - C;
  auto direct = improvement_margin(sys.y, sys.x, sys.f, base, improved, iv, C);
  report.add("y_M' improves y_M on [0, M+2] with margin 1 - C", to_string(expected_margin),
             direct ? to_string(*direct) : "not a replacement", direct && *direct == expected_margin);

  auto found = find_improvement(sys.y, sys.x, sys.f, base, iv, C);
  const bool found_ok = found && found->margin == expected_margin && validate(*found, sys.y, sys.x, sys.f, C);
  report.add("best improvement of y_M on [0, M+2] has margin 1 - C", to_string(expected_margin),
             found ? to_string(found->margin) : "none", found_ok);
  if (found) report.details["best_improvement"] = sys.y.render(found->improved_word);

  // Factors of length M+1 of the full point y_M, read off a window long
  // enough to contain every distinct one.
  std::vector<std::string> long_names(M + 1, "AA");
  long_names.push_back("AB");
  for (std::size_t i = 0; i < M; ++i) long_names.push_back("BB");
  long_names.push_back("BD");
  for (std::size_t i = 0; i < M + 1; ++i) long_names.push_back("DD");
  const Word long_word = word_from_names(sys.y, 0, long_names);
  std::vector<std::vector<LetterIndex>> factors;
  for (std::size_t i = 0; i + M + 1 <= long_word.size(); ++i) {
    factors.emplace_back(long_word.letters.begin() + static_cast<std::ptrdiff_t>(i),
                         long_word.letters.begin() + static_cast<std::ptrdiff_t>(i + M + 1));
  }
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());

  ForbiddenWordTester tester(sys.y, sys.x, sys.f, C, 2);
  std::vector<std::string> flagged;
  for (const auto& factor : factors) {
    if (tester.is_forbidden(factor)) flagged.push_back(sys.y.render(factor));
  }
  report.details["factors_checked"] = factors.size();
  report.add("no length-(M+1) factor of y_M is forbidden (context 2)", "none",
             flagged.empty() ? "none" : nlohmann::json(flagged).dump(), flagged.empty());

  const auto window = slice(base, iv.a, iv.b).letters;
  const bool window_forbidden = tester.is_forbidden(window);
  report.add("y_M on [0, M+2] is forbidden (context 2)", "true", window_forbidden ? "true" : "false",
             window_forbidden);

  if (!report.overall()) throw ScenarioFailed(report);
  return report;
}

}  // namespace advopt
