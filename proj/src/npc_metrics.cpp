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

#include "npc/npc_metrics.hpp"

#include <algorithm>
#include <set>

namespace npc {
namespace {

bool share_variant(const NpcEntity& a, const NpcEntity& b) {
  for (const std::string& v : a.name_variants)
    if (b.has_variant(v)) return true;
  return false;
}

int overlap_count(const Chain& a, const Chain& b) {
  int n = 0;
  auto i = a.mentions.begin();
  auto j = b.mentions.begin();
  while (i != a.mentions.end() && j != b.mentions.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

double f1_of(double recall, double precision) {
  if (recall + precision <= 0.0) return 0.0;
  return 2.0 * recall * precision / (recall + precision);
}

std::vector<Mention> mentions_of_type(const NpcEntity& e, MentionType t) {
  std::vector<Mention> out;
  for (const auto& [m, type] : e.mention_types)
    if (type == t) out.push_back(m);
  return out;
}

std::optional<double> percent(int part, int whole) {
  if (whole == 0) return std::nullopt;
  return 100.0 * part / whole;
}

}  // namespace

EntityMatch match_entity(const NpcEntity& gold,
                         const std::vector<NpcEntity>& candidates) {
  EntityMatch match;
  match.gold_chain_id = gold.chain.id;
  match.gold_variants = gold.name_variants;

  const int gold_size = static_cast<int>(gold.chain.mentions.size());
  int best_overlap = 0;
  int best_size = 0;
  for (const NpcEntity& cand : candidates) {
    const int common = overlap_count(gold.chain, cand.chain);
    if (common > 0) match.span_overlap = true;
    if (!share_variant(gold, cand)) continue;

    const int cand_size = static_cast<int>(cand.chain.mentions.size());
    const double recall = gold_size > 0 ? 1.0 * common / gold_size : 0.0;
    const double precision = cand_size > 0 ? 1.0 * common / cand_size : 0.0;
    const double f1 = f1_of(recall, precision);

    bool better = false;
    if (!match.predicted_chain_id) {
      better = true;
    } else if (f1 != match.f1) {
      better = f1 > match.f1;
    } else if (common != best_overlap) {
      better = common > best_overlap;
    } else if (cand_size != best_size) {
      better = cand_size < best_size;
    } else {
      better = cand.chain.id < *match.predicted_chain_id;
    }
    if (better) {
      match.predicted_chain_id = cand.chain.id;
      match.recall = recall;
      match.precision = precision;
      match.f1 = f1;
      best_overlap = common;
      best_size = cand_size;
    }
  }
  return match;
}

std::vector<OverSplit> detect_oversplit(const std::vector<NpcEntity>& gold,
                                        const std::vector<NpcEntity>& sys) {
  std::vector<OverSplit> out;
  for (const NpcEntity& g : gold) {
    std::vector<int> sharing;
    for (const NpcEntity& s : sys)
      if (share_variant(g, s)) sharing.push_back(s.chain.id);
    if (sharing.size() > 1)
      out.push_back({"", g.chain.id, g.name_variants, std::move(sharing)});
  }
  return out;
}

std::vector<OverMerge> detect_overmerge(const std::vector<NpcEntity>& gold,
                                        const std::vector<NpcEntity>& sys) {
  std::vector<OverMerge> out;
  for (const NpcEntity& s : sys) {
    std::vector<int> named;
    for (const NpcEntity& g : gold)
      if (share_variant(g, s)) named.push_back(g.chain.id);
    if (named.size() > 1)
      out.push_back({"", s.chain.id, s.name_variants, std::move(named)});
  }
  return out;
}

std::optional<double> npc_f1(const std::vector<NpcDocPair>& docs) {
  double sum = 0.0;
  int n = 0;
  for (const NpcDocPair& doc : docs) {
    for (const NpcEntity& g : doc.gold) {
      sum += match_entity(g, doc.sys).f1;
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

std::optional<double> chains_not_found(const std::vector<NpcDocPair>& docs) {
  int missing = 0;
  int total = 0;
  for (const NpcDocPair& doc : docs) {
    for (const NpcEntity& g : doc.gold) {
      ++total;
      if (!match_entity(g, doc.sys).predicted_chain_id) ++missing;
    }
  }
  return percent(missing, total);
}

std::optional<double> per_type_f1(const std::vector<NpcDocPair>& docs,
                                  MentionType type) {
  double sum = 0.0;
  int n = 0;
  for (const NpcDocPair& doc : docs) {
    for (const NpcEntity& g : doc.gold) {
      const std::vector<Mention> gold_t = mentions_of_type(g, type);
      if (gold_t.empty()) continue;
      ++n;
      const EntityMatch match = match_entity(g, doc.sys);
      if (!match.predicted_chain_id) continue;  // counts as zero
      const NpcEntity* pred = nullptr;
      for (const NpcEntity& s : doc.sys)
        if (s.chain.id == *match.predicted_chain_id) pred = &s;
      const std::vector<Mention> pred_t = mentions_of_type(*pred, type);
      int common = 0;
      for (const Mention& m : gold_t)
        if (std::find(pred_t.begin(), pred_t.end(), m) != pred_t.end())
          ++common;
      const double recall = 1.0 * common / gold_t.size();
      const double precision =
          pred_t.empty() ? 0.0 : 1.0 * common / pred_t.size();
      sum += f1_of(recall, precision);
    }
  }
  if (n == 0) return std::nullopt;
  return sum / n;
}

NpcReport evaluate_npc(const std::vector<NpcDocPair>& docs) {
  NpcReport report;
  double f1_sum = 0.0;
  int not_found = 0;
  int no_overlap = 0;
  for (const NpcDocPair& doc : docs) {
    for (const NpcEntity& g : doc.gold) {
      EntityMatch match = match_entity(g, doc.sys);
      match.doc_id = doc.doc_id;
      ++report.gold_entity_count;
      f1_sum += match.f1;
      if (!match.predicted_chain_id) ++not_found;
      if (!match.span_overlap) ++no_overlap;
      report.matches.push_back(std::move(match));
    }
    for (OverSplit split : detect_oversplit(doc.gold, doc.sys)) {
      split.doc_id = doc.doc_id;
      report.oversplits.push_back(std::move(split));
    }
    for (OverMerge merge : detect_overmerge(doc.gold, doc.sys)) {
      merge.doc_id = doc.doc_id;
      report.overmerges.push_back(std::move(merge));
    }
  }
  if (report.gold_entity_count > 0) {
    report.npc_f1 = f1_sum / report.gold_entity_count;
    report.chains_not_found_pct = percent(not_found, report.gold_entity_count);
    report.chains_without_overlap_pct =
        percent(no_overlap, report.gold_entity_count);
  }
  report.f1_names = per_type_f1(docs, MentionType::Name);
  report.f1_pronouns = per_type_f1(docs, MentionType::Pronoun);
  report.f1_nominals = per_type_f1(docs, MentionType::Nominal);
  return report;
}

}  // namespace npc
