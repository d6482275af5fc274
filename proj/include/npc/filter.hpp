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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "npc/types.hpp"

namespace npc {

// Honorific tokens stripped from the front of name strings. Comparison is
// case-insensitive and ignores a trailing period, so "Mr" covers "Mr.".
class HonorificSet {
 public:
  static HonorificSet defaults();
  // One token per line, UTF-8; '#' lines and blanks ignored.
  static HonorificSet load_file(const std::string& path);
  static HonorificSet from_tokens(const std::vector<std::string>& tokens);

  bool contains(std::string_view token) const;

 private:
  std::vector<std::string> normalized_;  // lowercased, no trailing period
};

// A coreference chain that survived NPC filtering.
struct NpcEntity {
  Chain chain;
  // Distinct name strings, original casing, insertion order; membership is
  // case-insensitive.
  std::vector<std::string> name_variants;
  std::map<Mention, MentionType> mention_types;

  bool has_variant(std::string_view name) const;
};

// The token in [start, end) none of whose transitive heads lie inside the
// span; rightmost such token when the span is disconnected. Throws
// MalformedInput on a dependency cycle.
int mention_head(const AnnotatedDocument& doc, const Mention& m);

// True iff the mention's head token lies inside a NER span of `type`.
bool is_person_headed(const AnnotatedDocument& doc, const Mention& m,
                      std::string_view type = kPer);

// Pronoun when the head's POS is PRP/PRP$, otherwise Name when the head
// lies inside a NER span of `type`, otherwise Nominal.
MentionType classify_mention(const AnnotatedDocument& doc, const Mention& m,
                             std::string_view type = kPer);

// Name strings of the chain: for every mention classified Name, the surface
// of the NER span covering its head (honorifics stripped), plus the final
// token of each multi-token variant. Tokens shaped like a middle initial
// ("X.") are never emitted alone.
std::vector<std::string> name_variants(const AnnotatedDocument& doc,
                                       const Chain& chain,
                                       std::string_view type = kPer,
                                       const HonorificSet& honorifics =
                                           HonorificSet::defaults());

// Keeps exactly the chains with at least one mention classified Name and
// attaches variants and mention types.
std::vector<NpcEntity> filter_chains(const AnnotatedDocument& doc,
                                     const std::vector<Chain>& chains,
                                     std::string_view type = kPer,
                                     const HonorificSet& honorifics =
                                         HonorificSet::defaults());

// Diagnostic for chains dropped by the filter: does the chain mention a
// third person animate pronoun (he/him/his/she/her/hers)?
bool has_animate_pronoun(const AnnotatedDocument& doc, const Chain& chain);

}  // namespace npc
