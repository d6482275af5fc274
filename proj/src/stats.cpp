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

#include "npc/stats.hpp"

#include <map>
#include <optional>

#include "npc/filter.hpp"

namespace npc {
namespace {

const std::vector<std::string> kPronounForms = {"he",  "him", "his",
                                                "she", "her", "hers"};

std::optional<double> percent(int part, int whole) {
  if (whole == 0) return std::nullopt;
  return 100.0 * part / whole;
}

// Entity type of a chain: majority vote of the NER types covering its
// mentions' head tokens, ties broken by fixed priority. Empty when no head
// falls inside any NER span.
std::string chain_entity_type(const AnnotatedDocument& doc,
                              const Chain& chain) {
  std::map<std::string, int> votes;
  for (const Mention& m : chain.mentions) {
    const int head = mention_head(doc, m);
    for (const NerSpan& s : doc.ner)
      if (s.contains(head)) ++votes[s.type];
  }
  std::string best;
  int best_votes = 0;
  for (const auto& [type, count] : votes) {
    if (count > best_votes ||
        (count == best_votes &&
         entity_type_priority(type) < entity_type_priority(best))) {
      best = type;
      best_votes = count;
    }
  }
  return best;
}

bool is_named_mention(const AnnotatedDocument& doc, const Mention& m,
                      const std::string& type) {
  const int head = mention_head(doc, m);
  for (const NerSpan& s : doc.ner)
    if (s.type == type && s.contains(head)) return true;
  return false;
}

}  // namespace

StatsReport corpus_stats(const std::vector<AnnotatedDocument>& docs,
                         const std::string& entity_type) {
  StatsReport r;
  r.entity_type = entity_type;
  int named_chains = 0;
  long long size_sum = 0;

  for (const AnnotatedDocument& doc : docs) {
    for (const Chain& chain : doc.chains) {
      const int size = static_cast<int>(chain.mentions.size());
      const bool nonsingleton = size > 1;
      ++r.total_chain_count;
      r.total_mention_count += size;
      if (nonsingleton) r.total_nonsingleton_mention_count += size;

      if (chain_entity_type(doc, chain) != entity_type) continue;
      ++r.chain_count;
      r.mention_count += size;
      bool has_named = false;
      int named = 0;
      for (const Mention& m : chain.mentions) {
        if (is_named_mention(doc, m, entity_type)) {
          has_named = true;
          ++named;
        }
      }
      if (has_named) ++named_chains;
      if (nonsingleton) {
        ++r.nonsingleton_chain_count;
        r.nonsingleton_mention_count += size;
        r.named_mention_count += named;
        size_sum += size;
      }
    }
  }

  r.named_chain_count = named_chains;
  r.nonsingleton_pct = percent(r.nonsingleton_chain_count, r.chain_count);
  r.chain_share_pct = percent(r.chain_count, r.total_chain_count);
  r.mention_share_nonsingleton_pct = percent(
      r.nonsingleton_mention_count, r.total_nonsingleton_mention_count);
  r.mention_share_all_pct = percent(r.mention_count, r.total_mention_count);
  r.named_mention_pct =
      percent(r.named_mention_count, r.nonsingleton_mention_count);
  if (r.named_mention_pct)
    r.nonnamed_mention_pct = 100.0 - *r.named_mention_pct;
  if (r.nonsingleton_chain_count > 0)
    r.avg_cluster_size =
        static_cast<double>(size_sum) / r.nonsingleton_chain_count;
  r.named_chain_pct = percent(named_chains, r.chain_count);
  return r;
}

PronounReport pronoun_stats(const std::vector<AnnotatedDocument>& docs) {
  PronounReport report;
  for (const std::string& form : kPronounForms)
    report.forms.push_back({form, 0, 0, std::nullopt});

  for (const AnnotatedDocument& doc : docs) {
    // Token -> covered by a mention of a PER chain
    std::vector<bool> in_person(doc.tokens.size(), false);
    for (const Chain& chain : doc.chains) {
      if (chain_entity_type(doc, chain) != kPer) continue;
      for (const Mention& m : chain.mentions)
        for (int t = m.start; t < m.end; ++t) in_person[t] = true;
    }
    for (const Token& token : doc.tokens) {
      const std::string lower = ascii_lower(token.text);
      for (PronounCount& pc : report.forms) {
        if (pc.form != lower) continue;
        ++pc.total;
        if (in_person[token.index]) ++pc.in_person_chain;
      }
    }
  }
  for (PronounCount& pc : report.forms)
    pc.in_person_pct = percent(pc.in_person_chain, pc.total);
  return report;
}

}  // namespace npc
