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

#include "npc/filter.hpp"
#include "npc/types.hpp"

namespace npc {

// Alignment of one gold NPC entity to the best system candidate. Candidates
// must share a name variant; among them the highest exact-span mention F1
// wins (ties: larger overlap, then fewer candidate mentions, then lowest
// chain id).
struct EntityMatch {
  std::string doc_id;
  int gold_chain_id = 0;
  std::vector<std::string> gold_variants;
  std::optional<int> predicted_chain_id;  // empty: no candidate shares a name
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  // Softer miss signal: no system entity shares even one exact mention span.
  bool span_overlap = false;
};

EntityMatch match_entity(const NpcEntity& gold,
                         const std::vector<NpcEntity>& candidates);

// One gold entity spread across several system chains sharing its name.
struct OverSplit {
  std::string doc_id;
  int gold_chain_id = 0;
  std::vector<std::string> gold_variants;
  std::vector<int> sys_chain_ids;  // size >= 2
};

// One system chain naming at least two distinct gold entities.
struct OverMerge {
  std::string doc_id;
  int sys_chain_id = 0;
  std::vector<std::string> sys_variants;
  std::vector<int> gold_chain_ids;  // size >= 2
};

std::vector<OverSplit> detect_oversplit(const std::vector<NpcEntity>& gold,
                                        const std::vector<NpcEntity>& sys);
std::vector<OverMerge> detect_overmerge(const std::vector<NpcEntity>& gold,
                                        const std::vector<NpcEntity>& sys);

// One document's filtered gold and system entities.
struct NpcDocPair {
  std::string doc_id;
  std::vector<NpcEntity> gold;
  std::vector<NpcEntity> sys;
};

struct NpcReport {
  int gold_entity_count = 0;
  // Mean per-gold-entity F1, zeros included for entities not found; macro
  // average over gold entities across the whole corpus.
  std::optional<double> npc_f1;
  std::optional<double> chains_not_found_pct;
  std::optional<double> chains_without_overlap_pct;
  std::optional<double> f1_names;
  std::optional<double> f1_pronouns;
  std::optional<double> f1_nominals;
  std::vector<EntityMatch> matches;
  std::vector<OverSplit> oversplits;
  std::vector<OverMerge> overmerges;
};

// Per-type entity F1 keeps the entity alignment from match_entity fixed and
// rescores each pair over only type-t mentions; gold entities without a
// type-t mention are excluded, unmatched ones with such a mention count 0.
std::optional<double> per_type_f1(const std::vector<NpcDocPair>& docs,
                                  MentionType type);

std::optional<double> npc_f1(const std::vector<NpcDocPair>& docs);
std::optional<double> chains_not_found(const std::vector<NpcDocPair>& docs);

NpcReport evaluate_npc(const std::vector<NpcDocPair>& docs);

}  // namespace npc
