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

#ifndef ADVOPT_SFT_HPP
#define ADVOPT_SFT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace advopt {

/// Position of a letter in its Alphabet.
using LetterIndex = std::uint32_t;

/// Ordered finite list of distinct symbol names. The order is used for all
/// lexicographic tie-breaking.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  const std::string& name(LetterIndex index) const { return letters_.at(index); }
  const std::vector<std::string>& letters() const { return letters_; }

  std::optional<LetterIndex> find(std::string_view name) const;
  /// Throws UnknownLetter.
  LetterIndex index_of(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  std::vector<std::string> letters_;
  std::unordered_map<std::string, LetterIndex> index_;
};

/// A finite word with an explicit anchor: letters[i] sits at coordinate
/// start + i.
struct Word {
  std::int64_t start = 0;
  std::vector<LetterIndex> letters;

  std::size_t size() const { return letters.size(); }
  std::int64_t end() const { return start + static_cast<std::int64_t>(letters.size()) - 1; }
  LetterIndex at(std::int64_t coordinate) const {
    return letters.at(static_cast<std::size_t>(coordinate - start));
  }

  friend bool operator==(const Word&, const Word&) = default;
};

/// One-step vertex shift of finite type: letters are vertices, allowed
/// ordered pairs are edges. Every letter is essential.
class Sft {
 public:
  /// Builds the shift and prunes letters that lie on no bi-infinite walk.
  /// Throws EmptyShiftError when nothing survives.
  static Sft from_edges(const Alphabet& alphabet,
                        const std::vector<std::pair<LetterIndex, LetterIndex>>& edges);
  static Sft from_named_edges(const Alphabet& alphabet,
                              const std::vector<std::pair<std::string, std::string>>& edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return alphabet_.size(); }
  std::size_t edge_count() const;

  bool allowed(LetterIndex from, LetterIndex to) const;
  const std::vector<LetterIndex>& successors(LetterIndex u) const { return successors_[u]; }
  const std::vector<LetterIndex>& predecessors(LetterIndex v) const { return predecessors_[v]; }

  bool is_legal(std::span<const LetterIndex> letters) const;
  bool is_legal(const Word& word) const { return is_legal(word.letters); }

  /// Parses a comma-separated list of letter names. Throws UnknownLetter.
  Word parse_word(std::string_view text, std::int64_t start = 0) const;
  std::string render(const Word& word) const;
  std::string render(std::span<const LetterIndex> letters) const;

  /// Stable 64-bit digest of alphabet and edge set.
  std::uint64_t fingerprint() const;

  friend bool operator==(const Sft& a, const Sft& b) {
    return a.alphabet_ == b.alphabet_ && a.successors_ == b.successors_;
  }

 private:
  /// `successors` must be sorted and duplicate-free.
  Sft(Alphabet alphabet, std::vector<std::vector<LetterIndex>> successors);

  Alphabet alphabet_;
  std::vector<std::vector<LetterIndex>> successors_;
  std::vector<std::vector<LetterIndex>> predecessors_;
};

Sft full_shift(const Alphabet& alphabet);
/// Letters {0,1}, the pair (1,1) forbidden.
Sft golden_mean_shift();
/// Shift with a single letter "*" and its self-loop.
Sft one_letter_shift(std::string name = "*");

/// Sliding block code onto the one-step presentation over legal blocks of
/// length 2N+1.
class RecodingMap {
 public:
  RecodingMap(Alphabet source, std::size_t window, std::vector<std::vector<LetterIndex>> blocks);

  const Alphabet& source_alphabet() const { return source_; }
  /// N: each block letter is a source word on [-N, N].
  std::size_t source_window() const { return window_; }
  std::size_t block_length() const { return 2 * window_ + 1; }
  const Alphabet& block_alphabet() const { return block_alphabet_; }
  const std::vector<LetterIndex>& block(LetterIndex letter) const { return blocks_.at(letter); }
  /// Source letter at coordinate 0 of the block.
  LetterIndex center(LetterIndex letter) const { return blocks_.at(letter)[window_]; }

  std::optional<LetterIndex> block_letter(std::span<const LetterIndex> source_block) const;
  /// Source word of length n >= 2N+1 to block word of length n - 2N. The
  /// start coordinate moves inward by N. Throws std::invalid_argument on
  /// blocks that are not in the block alphabet.
  Word encode(const Word& source) const;
  Word decode(const Word& blocks) const;

 private:
  Alphabet source_;
  std::size_t window_;
  std::vector<std::vector<LetterIndex>> blocks_;
  Alphabet block_alphabet_;
};

/// Source presentation given by forbidden words of length at most step+1.
struct ForbiddenWordShift {
  Alphabet alphabet;
  std::vector<std::vector<LetterIndex>> forbidden;
  std::size_t step = 1;
};

struct Recoded {
  Sft sft;
  RecodingMap map;
};

/// Recodes to a one-step shift so that potentials of window L become
/// functions of the block at coordinate 0. Uses N = max(ceil((M-1)/2), L),
/// the least centred window that is both one-step and covers the potential.
Recoded recode(const ForbiddenWordShift& source, std::size_t potential_window);
/// Higher block presentation of an existing one-step shift.
Recoded recode(const Sft& source, std::size_t potential_window);

/// Result of load_sft: the one-step shift and, when the document was given
/// by forbidden words, the recoding that produced it.
struct LoadedSft {
  Sft sft;
  std::optional<RecodingMap> recoding;
};

/// Accepts {"letters", "allowed"} or {"letters", "forbidden_words", "step"}.
/// Throws SchemaError or EmptyShiftError.
LoadedSft load_sft(const nlohmann::json& document);
LoadedSft load_sft_file(const std::string& path);

/// Default search cap for transitivity_constant: 4 * |letters|^2.
std::size_t default_transitivity_cap(const Sft& sft);

/// Smallest D <= cap with a legal path of every length n >= D between every
/// ordered pair of letters; nullopt when the transition matrix is not
/// primitive within the cap.
std::optional<std::size_t> transitivity_constant(const Sft& sft, std::size_t cap);
std::optional<std::size_t> transitivity_constant(const Sft& sft);

/// Restartable lexicographic enumeration of legal words of fixed length.
class WordEnumerator {
 public:
  WordEnumerator(const Sft& sft, std::size_t length);

  /// Writes the next word into `out`; false when exhausted.
  bool next(std::vector<LetterIndex>& out);
  void reset();

 private:
  bool advance_from(std::size_t depth);

  const Sft* sft_;
  std::size_t length_;
  std::vector<LetterIndex> current_;
  std::vector<std::size_t> choice_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> enumerate_words(const Sft& sft, std::size_t length);

/// Number of legal words of the given length, saturating at `cap` + 1.
std::uint64_t count_words(const Sft& sft, std::size_t length, std::uint64_t cap);

/// Primitive cycle of a shift, stored as its lexicographically least
/// rotation.
class PeriodicOrbit {
 public:
  /// Canonicalizes the rotation and reduces proper powers to their primitive
  /// root. Throws std::invalid_argument if the cycle is not cyclically legal.
  static PeriodicOrbit from_cycle(const Sft& host, std::vector<LetterIndex> cycle);

  const std::vector<LetterIndex>& cycle() const { return cycle_; }
  std::size_t period() const { return cycle_.size(); }
  LetterIndex at(std::int64_t coordinate) const;
  std::uint64_t host_fingerprint() const { return host_; }

  friend bool operator==(const PeriodicOrbit&, const PeriodicOrbit&) = default;
  /// Period first, then lexicographic.
  friend std::strong_ordering operator<=>(const PeriodicOrbit& a, const PeriodicOrbit& b);

 private:
  PeriodicOrbit(std::uint64_t host, std::vector<LetterIndex> cycle)
      : host_(host), cycle_(std::move(cycle)) {}

  std::uint64_t host_;
  std::vector<LetterIndex> cycle_;
};

/// All primitive orbits of period <= max_period, ordered by (period, word).
std::vector<PeriodicOrbit> enumerate_periodic_orbits(const Sft& sft, std::size_t max_period);

}  // namespace advopt

#endif  // ADVOPT_SFT_HPP
