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

#include "advopt/sft.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "advopt/errors.hpp"

namespace advopt {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw SchemaError("alphabet must be nonempty");
  index_.reserve(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!index_.emplace(letters_[i], static_cast<LetterIndex>(i)).second) {
      throw SchemaError("alphabet letters must be pairwise distinct");
    }
  }
}

std::optional<LetterIndex> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LetterIndex Alphabet::index_of(std::string_view name) const {
  if (auto index = find(name)) return *index;
  throw UnknownLetter("unknown letter \"" + std::string(name) + "\"");
}

// --------------------------------------------------------------------- Sft

Sft::Sft(Alphabet alphabet, std::vector<std::vector<LetterIndex>> successors)
    : alphabet_(std::move(alphabet)), successors_(std::move(successors)) {
  predecessors_.resize(successors_.size());
  for (LetterIndex u = 0; u < successors_.size(); ++u) {
    for (LetterIndex v : successors_[u]) predecessors_[v].push_back(u);
  }
}

bool Sft::allowed(LetterIndex from, LetterIndex to) const {
  const auto& next = successors_[from];
  return std::binary_search(next.begin(), next.end(), to);
}

Sft Sft::from_edges(const Alphabet& alphabet,
                    const std::vector<std::pair<LetterIndex, LetterIndex>>& edges) {
  const std::size_t n = alphabet.size();
  std::vector<std::vector<LetterIndex>> out(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint outside alphabet");
    out[u].push_back(v);
  }
  std::vector<std::vector<LetterIndex>> in(n);
  for (LetterIndex u = 0; u < n; ++u) {
    std::sort(out[u].begin(), out[u].end());
    out[u].erase(std::unique(out[u].begin(), out[u].end()), out[u].end());
    for (LetterIndex v : out[u]) in[v].push_back(u);
  }

  // Repeatedly drop letters without a live successor or predecessor.
  std::vector<std::size_t> out_degree(n);
  std::vector<std::size_t> in_degree(n);
  for (std::size_t u = 0; u < n; ++u) {
    out_degree[u] = out[u].size();
    in_degree[u] = in[u].size();
  }
  std::vector<bool> alive(n, true);
  std::vector<LetterIndex> queue;
  for (LetterIndex u = 0; u < n; ++u) {
    if (out_degree[u] == 0 || in_degree[u] == 0) {
      alive[u] = false;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const LetterIndex u = queue.back();
    queue.pop_back();
    for (LetterIndex v : out[u]) {
      if (alive[v] && --in_degree[v] == 0) {
        alive[v] = false;
        queue.push_back(v);
      }
    }
    for (LetterIndex w : in[u]) {
      if (alive[w] && --out_degree[w] == 0) {
        alive[w] = false;
        queue.push_back(w);
      }
    }
  }

  std::vector<std::string> kept;
  std::vector<LetterIndex> new_index(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (alive[u]) {
      new_index[u] = static_cast<LetterIndex>(kept.size());
      kept.push_back(alphabet.name(static_cast<LetterIndex>(u)));
    }
  }
  if (kept.empty()) throw EmptyShiftError("shift has no bi-infinite point");

  std::vector<std::vector<LetterIndex>> pruned;
  pruned.reserve(kept.size());
  for (std::size_t u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    auto& row = pruned.emplace_back();
    for (LetterIndex v : out[u]) {
      if (alive[v]) row.push_back(new_index[v]);
    }
  }
  return Sft(Alphabet(std::move(kept)), std::move(pruned));
}

Sft Sft::from_named_edges(const Alphabet& alphabet,
                          const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::pair<LetterIndex, LetterIndex>> indexed;
  indexed.reserve(edges.size());
  for (const auto& [u, v] : edges) indexed.emplace_back(alphabet.index_of(u), alphabet.index_of(v));
  return from_edges(alphabet, indexed);
}

std::size_t Sft::edge_count() const {
  std::size_t total = 0;
  for (const auto& next : successors_) total += next.size();
  return total;
}

bool Sft::is_legal(std::span<const LetterIndex> letters) const {
  for (LetterIndex letter : letters) {
    if (letter >= size()) return false;
  }
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (!allowed(letters[i - 1], letters[i])) return false;
  }
  return true;
}

Word Sft::parse_word(std::string_view text, std::int64_t start) const {
  Word word{start, {}};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) word.letters.push_back(alphabet_.index_of(token));
    pos = comma + 1;
  }
  return word;
}

std::string Sft::render(std::span<const LetterIndex> letters) const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ',';
    out += alphabet_.name(letters[i]);
  }
  return out;
}

std::string Sft::render(const Word& word) const { return render(word.letters); }

std::uint64_t Sft::fingerprint() const {
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&hash](unsigned char byte) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  };
  for (const auto& letter : alphabet_.letters()) {
    for (char c : letter) mix(static_cast<unsigned char>(c));
    mix(0xff);
  }
  auto mix_word = [&mix](std::uint32_t value) {
    for (int shift = 0; shift < 32; shift += 8) mix(static_cast<unsigned char>(value >> shift));
  };
  for (LetterIndex u = 0; u < successors_.size(); ++u) {
    for (LetterIndex v : successors_[u]) {
      mix_word(u);
      mix_word(v);
    }
  }
  return hash;
}

Sft full_shift(const Alphabet& alphabet) {
  std::vector<std::pair<LetterIndex, LetterIndex>> edges;
  for (LetterIndex u = 0; u < alphabet.size(); ++u) {
    for (LetterIndex v = 0; v < alphabet.size(); ++v) edges.emplace_back(u, v);
  }
  return Sft::from_edges(alphabet, edges);
}

Sft golden_mean_shift() {
  return Sft::from_edges(Alphabet({"0", "1"}), {{0, 0}, {0, 1}, {1, 0}});
}

Sft one_letter_shift(std::string name) {
  return Sft::from_edges(Alphabet({std::move(name)}), {{0, 0}});
}

// ------------------------------------------------------------- RecodingMap

namespace {

std::string block_name(const Alphabet& source, std::span<const LetterIndex> block) {
  std::string name;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) name += '.';
    name += source.name(block[i]);
  }
  return name;
}

std::vector<std::string> block_names(const Alphabet& source,
                                     const std::vector<std::vector<LetterIndex>>& blocks) {
  std::vector<std::string> names;
  names.reserve(blocks.size());
  for (const auto& block : blocks) names.push_back(block_name(source, block));
  return names;
}

struct VectorHash {
  std::size_t operator()(const std::vector<LetterIndex>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

RecodingMap::RecodingMap(Alphabet source, std::size_t window,
                         std::vector<std::vector<LetterIndex>> blocks)
    : source_(std::move(source)),
      window_(window),
      blocks_(std::move(blocks)),
      block_alphabet_(block_names(source_, blocks_)) {
  for (const auto& block : blocks_) {
    if (block.size() != block_length()) throw std::invalid_argument("block has wrong length");
  }
}

std::optional<LetterIndex> RecodingMap::block_letter(std::span<const LetterIndex> source_block) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), source_block,
                             [](const std::vector<LetterIndex>& a, std::span<const LetterIndex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                             });
  if (it == blocks_.end() || !std::equal(it->begin(), it->end(), source_block.begin(), source_block.end())) {
    return std::nullopt;
  }
  return static_cast<LetterIndex>(it - blocks_.begin());
}

Word RecodingMap::encode(const Word& source) const {
  const std::size_t width = block_length();
  if (source.size() < width) throw std::invalid_argument("source word shorter than the block length");
  Word out{source.start + static_cast<std::int64_t>(window_), {}};
  for (std::size_t i = 0; i + width <= source.size(); ++i) {
    auto letter = block_letter(std::span(source.letters).subspan(i, width));
    if (!letter) throw std::invalid_argument("source word contains an illegal block");
    out.letters.push_back(*letter);
  }
  return out;
}

Word RecodingMap::decode(const Word& blocks) const {
  if (blocks.letters.empty()) throw std::invalid_argument("empty block word");
  Word out{blocks.start - static_cast<std::int64_t>(window_), block(blocks.letters[0])};
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const auto& prev = block(blocks.letters[i - 1]);
    const auto& cur = block(blocks.letters[i]);
    if (!std::equal(prev.begin() + 1, prev.end(), cur.begin())) {
      throw std::invalid_argument("consecutive blocks do not overlap");
    }
    out.letters.push_back(cur.back());
  }
  return out;
}

namespace {

// True when no forbidden word ends at the last position of `word`.
bool tail_is_clean(const std::vector<LetterIndex>& word,
                   const std::vector<std::vector<LetterIndex>>& forbidden) {
  for (const auto& bad : forbidden) {
    if (bad.size() > word.size()) continue;
    if (std::equal(bad.begin(), bad.end(), word.end() - static_cast<std::ptrdiff_t>(bad.size()))) {
      return false;
    }
  }
  return true;
}

void extend_blocks(const ForbiddenWordShift& source, std::size_t width,
                   std::vector<LetterIndex>& prefix, std::vector<std::vector<LetterIndex>>& out) {
  if (prefix.size() == width) {
    out.push_back(prefix);
    return;
  }
  for (LetterIndex a = 0; a < source.alphabet.size(); ++a) {
    prefix.push_back(a);
    if (tail_is_clean(prefix, source.forbidden)) extend_blocks(source, width, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Recoded recode(const ForbiddenWordShift& source, std::size_t potential_window) {
  for (const auto& bad : source.forbidden) {
    if (bad.empty() || bad.size() > source.step + 1) {
      throw SchemaError("forbidden word length must lie in [1, step+1]");
    }
    for (auto letter : bad) {
      if (letter >= source.alphabet.size()) throw SchemaError("forbidden word uses an unknown letter");
    }
  }
  const std::size_t step_window = source.step == 0 ? 0 : source.step / 2;  // ceil((M-1)/2)
  const std::size_t window = std::max(step_window, potential_window);
  const std::size_t width = 2 * window + 1;

  std::vector<std::vector<LetterIndex>> blocks;
  std::vector<LetterIndex> prefix;
  extend_blocks(source, width, prefix, blocks);
  if (blocks.empty()) throw EmptyShiftError("no legal block of length " + std::to_string(width));

  std::unordered_map<std::vector<LetterIndex>, LetterIndex, VectorHash> index;
  for (std::size_t i = 0; i < blocks.size(); ++i) index.emplace(blocks[i], static_cast<LetterIndex>(i));

  std::vector<std::pair<LetterIndex, LetterIndex>> edges;
  std::vector<LetterIndex> joined;
  std::vector<LetterIndex> next;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (LetterIndex a = 0; a < source.alphabet.size(); ++a) {
      joined.assign(blocks[i].begin(), blocks[i].end());
      joined.push_back(a);
      if (!tail_is_clean(joined, source.forbidden)) continue;
      next.assign(joined.begin() + 1, joined.end());
      auto it = index.find(next);
      if (it != index.end()) edges.emplace_back(static_cast<LetterIndex>(i), it->second);
    }
  }

  RecodingMap unpruned(source.alphabet, window, blocks);
  Sft sft = Sft::from_edges(unpruned.block_alphabet(), edges);
  std::vector<std::vector<LetterIndex>> kept;
  kept.reserve(sft.size());
  for (const auto& name : sft.alphabet().letters()) {
    kept.push_back(blocks[unpruned.block_alphabet().index_of(name)]);
  }
  return Recoded{std::move(sft), RecodingMap(source.alphabet, window, std::move(kept))};
}

Recoded recode(const Sft& source, std::size_t potential_window) {
  ForbiddenWordShift presentation{source.alphabet(), {}, 1};
  for (LetterIndex u = 0; u < source.size(); ++u) {
    for (LetterIndex v = 0; v < source.size(); ++v) {
      if (!source.allowed(u, v)) presentation.forbidden.push_back({u, v});
    }
  }
  return recode(presentation, potential_window);
}

// ----------------------------------------------------------------- loading

namespace {

std::string letter_string(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw SchemaError("letters must be strings");
}

}  // namespace

LoadedSft load_sft(const nlohmann::json& document) {
  if (!document.is_object()) throw SchemaError("Sft document must be a JSON object");
  if (!document.contains("letters") || !document["letters"].is_array()) {
    throw SchemaError("Sft document needs a \"letters\" array");
  }
  std::vector<std::string> names;
  for (const auto& letter : document["letters"]) names.push_back(letter_string(letter));
  Alphabet alphabet(std::move(names));

  const bool has_allowed = document.contains("allowed");
  const bool has_forbidden = document.contains("forbidden_words");
  if (has_allowed == has_forbidden) {
    throw SchemaError("Sft document needs exactly one of \"allowed\" or \"forbidden_words\"");
  }

  auto lookup = [&alphabet](const nlohmann::json& value) {
    auto index = alphabet.find(letter_string(value));
    if (!index) throw SchemaError("unknown letter in Sft document: " + value.dump());
    return *index;
  };

  if (has_allowed) {
    const auto& allowed = document["allowed"];
    if (!allowed.is_array()) throw SchemaError("\"allowed\" must be an array of pairs");
    std::vector<std::pair<LetterIndex, LetterIndex>> edges;
    for (const auto& pair : allowed) {
      if (!pair.is_array() || pair.size() != 2) throw SchemaError("\"allowed\" entries must be pairs");
      edges.emplace_back(lookup(pair[0]), lookup(pair[1]));
    }
    return LoadedSft{Sft::from_edges(alphabet, edges), std::nullopt};
  }

  const auto& forbidden = document["forbidden_words"];
  if (!forbidden.is_array()) throw SchemaError("\"forbidden_words\" must be an array of words");
  ForbiddenWordShift source{alphabet, {}, 0};
  std::size_t longest = 1;
  for (const auto& word : forbidden) {
    if (!word.is_array() || word.empty()) throw SchemaError("forbidden words must be nonempty arrays");
    std::vector<LetterIndex> letters;
    for (const auto& letter : word) letters.push_back(lookup(letter));
    longest = std::max(longest, letters.size());
    source.forbidden.push_back(std::move(letters));
  }
  if (document.contains("step")) {
    if (!document["step"].is_number_integer() || document["step"].get<long long>() < 0) {
      throw SchemaError("\"step\" must be a nonnegative integer");
    }
    source.step = static_cast<std::size_t>(document["step"].get<long long>());
  } else {
    source.step = longest - 1;
  }
  Recoded recoded = recode(source, 0);
  if (recoded.map.source_window() > 0) return LoadedSft{std::move(recoded.sft), std::move(recoded.map)};
  // Length-1 blocks: the recoding is the identity, so return the shift over
  // the document's own letters.
  std::vector<std::pair<LetterIndex, LetterIndex>> edges;
  for (LetterIndex b = 0; b < recoded.sft.size(); ++b) {
    for (LetterIndex c : recoded.sft.successors(b)) edges.emplace_back(recoded.map.center(b), recoded.map.center(c));
  }
  return LoadedSft{Sft::from_edges(source.alphabet, edges), std::nullopt};
}

LoadedSft load_sft_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  nlohmann::json document;
  try {
    in >> document;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return load_sft(document);
}

// ------------------------------------------------------------ transitivity

std::size_t default_transitivity_cap(const Sft& sft) { return 4 * sft.size() * sft.size(); }

std::optional<std::size_t> transitivity_constant(const Sft& sft, std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  const std::size_t n = sft.size();
  std::vector<std::uint8_t> power(n * n);
  for (LetterIndex u = 0; u < n; ++u) {
    for (LetterIndex v = 0; v < n; ++v) power[u * n + v] = sft.allowed(u, v);
  }
  std::vector<std::uint8_t> next(n * n);
  for (std::size_t d = 1; d <= cap; ++d) {
    if (std::all_of(power.begin(), power.end(), [](std::uint8_t b) { return b != 0; })) return d;
    // Every letter has a successor, so positivity of A^d persists for all
    // larger exponents; checking the first positive power is enough.
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        std::uint8_t reach = 0;
        for (LetterIndex w : sft.predecessors(static_cast<LetterIndex>(v))) {
          if (power[u * n + w]) {
            reach = 1;
            break;
          }
        }
        next[u * n + v] = reach;
      }
    }
    power.swap(next);
  }
  return std::nullopt;
}

std::optional<std::size_t> transitivity_constant(const Sft& sft) {
  return transitivity_constant(sft, default_transitivity_cap(sft));
}

// ------------------------------------------------------------- enumeration

WordEnumerator::WordEnumerator(const Sft& sft, std::size_t length)
    : sft_(&sft), length_(length), current_(length), choice_(length) {
  if (length == 0) throw std::invalid_argument("word length must be at least 1");
}

void WordEnumerator::reset() {
  started_ = false;
  done_ = false;
}

bool WordEnumerator::advance_from(std::size_t depth) {
  for (std::size_t d = depth; d < length_; ++d) {
    choice_[d] = 0;
    current_[d] = d == 0 ? 0 : sft_->successors(current_[d - 1]).front();
  }
  return true;
}

bool WordEnumerator::next(std::vector<LetterIndex>& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    advance_from(0);
    out = current_;
    return true;
  }
  for (std::size_t d = length_; d-- > 0;) {
    const std::size_t options = d == 0 ? sft_->size() : sft_->successors(current_[d - 1]).size();
    if (choice_[d] + 1 < options) {
      ++choice_[d];
      current_[d] = d == 0 ? static_cast<LetterIndex>(choice_[d])
                           : sft_->successors(current_[d - 1])[choice_[d]];
      advance_from(d + 1);
      out = current_;
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<Word> enumerate_words(const Sft& sft, std::size_t length) {
  std::vector<Word> words;
  WordEnumerator it(sft, length);
  std::vector<LetterIndex> letters;
  while (it.next(letters)) words.push_back(Word{0, letters});
  return words;
}

std::uint64_t count_words(const Sft& sft, std::size_t length, std::uint64_t cap) {
  const std::uint64_t saturated = cap + 1;
  std::vector<std::uint64_t> ending(sft.size(), 1);
  for (std::size_t step = 1; step < length; ++step) {
    std::vector<std::uint64_t> next(sft.size(), 0);
    for (LetterIndex v = 0; v < sft.size(); ++v) {
      for (LetterIndex u : sft.predecessors(v)) next[v] = std::min(saturated, next[v] + ending[u]);
    }
    ending.swap(next);
  }
  std::uint64_t total = 0;
  for (auto c : ending) total = std::min(saturated, total + c);
  return total;
}

// ---------------------------------------------------------- periodic orbits

namespace {

std::size_t primitive_period(const std::vector<LetterIndex>& cycle) {
  const std::size_t s = cycle.size();
  for (std::size_t p = 1; p < s; ++p) {
    if (s % p) continue;
    bool repeats = true;
    for (std::size_t i = p; i < s && repeats; ++i) repeats = cycle[i] == cycle[i - p];
    if (repeats) return p;
  }
  return s;
}

std::vector<LetterIndex> least_rotation(const std::vector<LetterIndex>& cycle) {
  std::vector<LetterIndex> best = cycle;
  std::vector<LetterIndex> rotated = cycle;
  for (std::size_t r = 1; r < cycle.size(); ++r) {
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    if (rotated < best) best = rotated;
  }
  return best;
}

}  // namespace

PeriodicOrbit PeriodicOrbit::from_cycle(const Sft& host, std::vector<LetterIndex> cycle) {
  if (cycle.empty()) throw std::invalid_argument("orbit cycle must be nonempty");
  if (!host.is_legal(cycle) || !host.allowed(cycle.back(), cycle.front())) {
    throw std::invalid_argument("orbit cycle is not cyclically legal");
  }
  cycle.resize(primitive_period(cycle));
  return PeriodicOrbit(host.fingerprint(), least_rotation(cycle));
}

LetterIndex PeriodicOrbit::at(std::int64_t coordinate) const {
  const auto s = static_cast<std::int64_t>(cycle_.size());
  return cycle_[static_cast<std::size_t>(((coordinate % s) + s) % s)];
}

std::strong_ordering operator<=>(const PeriodicOrbit& a, const PeriodicOrbit& b) {
  if (auto c = a.period() <=> b.period(); c != 0) return c;
  return a.cycle_ <=> b.cycle_;
}

namespace {

void closed_walks(const Sft& sft, std::size_t period, std::vector<LetterIndex>& walk,
                  std::vector<PeriodicOrbit>& out) {
  const LetterIndex first = walk.front();
  if (walk.size() == period) {
    if (!sft.allowed(walk.back(), first)) return;
    if (primitive_period(walk) != period) return;
    if (least_rotation(walk) != walk) return;
    out.push_back(PeriodicOrbit::from_cycle(sft, walk));
    return;
  }
  for (LetterIndex v : sft.successors(walk.back())) {
    // the least rotation starts with its smallest letter
    if (v < first) continue;
    walk.push_back(v);
    closed_walks(sft, period, walk, out);
    walk.pop_back();
  }
}

}  // namespace

std::vector<PeriodicOrbit> enumerate_periodic_orbits(const Sft& sft, std::size_t max_period) {
  if (max_period < 1) throw std::invalid_argument("max_period must be at least 1");
  std::vector<PeriodicOrbit> orbits;
  std::vector<LetterIndex> walk;
  for (std::size_t period = 1; period <= max_period; ++period) {
    for (LetterIndex start = 0; start < sft.size(); ++start) {
      walk.assign(1, start);
      closed_walks(sft, period, walk, orbits);
    }
  }
  return orbits;
}

}  // namespace advopt
