// Copyright 2026 The npc-coref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace npc {

// Dependency head sentinel for the sentence root.
inline constexpr int kRootHead = -1;

// Well-known named entity type labels. NerSpan::type is an open string so
// corpora with other label sets still load.
inline constexpr std::string_view kPer = "PER";
inline constexpr std::string_view kOrg = "ORG";
inline constexpr std::string_view kGpe = "GPE";
inline constexpr std::string_view kDate = "DATE";

struct Token {
  int index = 0;         // document-global ordinal, dense
  std::string text;
  std::string pos;       // Penn Treebank tag, empty when unavailable
  int head = kRootHead;  // document-global head index, kRootHead or self = root
  std::string deprel;    // dependency relation label, empty when unavailable
  int sentence = 0;      // ordinal of the containing sentence
};

// A token span [start, end) in document-global coordinates.
struct Mention {
  int start = 0;
  int end = 0;

  auto operator<=>(const Mention&) const = default;
  int size() const { return end - start; }
  bool contains(int token) const { return token >= start && token < end; }
  bool overlaps(const Mention& o) const {
    return start < o.end && o.start < end;
  }
};

struct NerSpan {
  std::string type;  // PER, ORG, GPE, DATE or any other label
  int start = 0;     // token index, inclusive
  int end = 0;       // token index, exclusive

  bool contains(int token) const { return token >= start && token < end; }
};

// A set of mentions asserted coreferent. Mentions are kept sorted and
// pairwise distinct.
struct Chain {
  int id = 0;
  std::vector<Mention> mentions;

  bool operator==(const Chain&) const = default;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::vector<Token> tokens;
  std::vector<NerSpan> ner;
  std::vector<Chain> chains;
  bool has_pos = false;   // a POS layer was supplied by the source
  bool has_deps = false;  // a dependency layer was supplied by the source

  int sentence_count() const {
    return tokens.empty() ? 0 : tokens.back().sentence + 1;
  }

  // Token range [begin, end) of the given sentence.
  std::pair<int, int> sentence_range(int sentence) const;

  // Whitespace-joined surface string of a span.
  std::string text(int start, int end) const;
  std::string text(const Mention& m) const { return text(m.start, m.end); }
};

// Syntactic kind of a mention, decided by its head token.
enum class MentionType { Name, Pronoun, Nominal };

std::string_view to_string(MentionType t);

// Sorts mentions and drops duplicates.
void normalize(Chain& chain);

// Checks document invariants (span bounds, dense token indices, heads within
// sentence, unique chain ids, no same-chain overlap). Throws MalformedInput.
void validate(const AnnotatedDocument& doc);

// Rank used to break ties when assigning an entity type to a chain:
// PER > ORG > GPE > DATE > everything else (alphabetical).
int entity_type_priority(std::string_view type);

// ASCII-lowercased copy.
std::string ascii_lower(std::string_view s);

}  // namespace npc
