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

#include <optional>
#include <string>
#include <vector>

#include "npc/types.hpp"

namespace npc {

// Coverage ratios for one entity type over a corpus with gold chains and
// gold NER. A chain belongs to the type whose NER spans cover the most of
// its mentions' head tokens (ties: PER > ORG > GPE > DATE > other).
// Percentages over an empty denominator are absent, not zero.
struct StatsReport {
  std::string entity_type;

  int chain_count = 0;               // chains of this type
  int nonsingleton_chain_count = 0;
  int mention_count = 0;             // mentions in this type's chains
  int nonsingleton_mention_count = 0;
  int named_mention_count = 0;       // named, within non-singleton chains
  int named_chain_count = 0;         // chains with >= 1 named mention
  int total_chain_count = 0;         // corpus-wide denominators
  int total_mention_count = 0;
  int total_nonsingleton_mention_count = 0;

  std::optional<double> nonsingleton_pct;
  std::optional<double> chain_share_pct;
  // The share of mentions is reported against both plausible denominators:
  // mentions in non-singleton chains only, and all mentions.
  std::optional<double> mention_share_nonsingleton_pct;
  std::optional<double> mention_share_all_pct;
  // Named vs non-named percentages use one denominator: the mentions of this
  // type's non-singleton chains. They sum to exactly 100 when present.
  std::optional<double> named_mention_pct;
  std::optional<double> nonnamed_mention_pct;
  // Over non-singleton chains only.
  std::optional<double> avg_cluster_size;
  std::optional<double> named_chain_pct;
};

StatsReport corpus_stats(const std::vector<AnnotatedDocument>& docs,
                         const std::string& entity_type);

// Occurrence counts for the six third person singular animate pronoun
// forms; surface-form token match, case-insensitive, no lemmatization.
struct PronounCount {
  std::string form;
  int total = 0;
  int in_person_chain = 0;  // inside a mention of a PER-typed chain
  std::optional<double> in_person_pct;
};

struct PronounReport {
  std::vector<PronounCount> forms;  // he, him, his, she, her, hers
};

PronounReport pronoun_stats(const std::vector<AnnotatedDocument>& docs);

}  // namespace npc
