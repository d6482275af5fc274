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

#include "npc/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "npc/assignment.hpp"

namespace npc {
namespace {

// Mention -> index of the containing chain; on (degenerate) duplicate
// membership the chain appearing first wins.
std::map<Mention, int> mention_index(const std::vector<Chain>& chains) {
  std::map<Mention, int> index;
  for (size_t c = 0; c < chains.size(); ++c)
    for (const Mention& m : chains[c].mentions)
      index.emplace(m, static_cast<int>(c));
  return index;
}

int total_mentions(const std::vector<Chain>& chains) {
  int n = 0;
  for (const Chain& c : chains) n += static_cast<int>(c.mentions.size());
  return n;
}

int intersection_size(const Chain& a, const Chain& b) {
  // both mention lists are sorted
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

// One direction of MUC: recovered links / total links over `keys`.
void muc_direction(const std::vector<Chain>& keys,
                   const std::map<Mention, int>& response_index, double* num,
                   double* den) {
  for (const Chain& k : keys) {
    const int size = static_cast<int>(k.mentions.size());
    if (size < 2) continue;  // singletons are omitted from both sums
    std::set<int> touched;
    int unmatched = 0;
    for (const Mention& m : k.mentions) {
      auto it = response_index.find(m);
      if (it == response_index.end())
        ++unmatched;
      else
        touched.insert(it->second);
    }
    const int parts = static_cast<int>(touched.size()) + unmatched;
    *num += size - parts;
    *den += size - 1;
  }
}

void bcubed_direction(const std::vector<Chain>& keys,
                      const std::vector<Chain>& response,
                      const std::map<Mention, int>& response_index,
                      double* num, double* den) {
  for (const Chain& k : keys) {
    const double size = static_cast<double>(k.mentions.size());
    for (const Mention& m : k.mentions) {
      *den += 1.0;
      auto it = response_index.find(m);
      if (it == response_index.end()) continue;  // twinless: contributes 0
      *num += intersection_size(k, response[it->second]) / size;
    }
  }
}

void lea_direction(const std::vector<Chain>& keys,
                   const std::vector<Chain>& response,
                   const std::map<Mention, int>& response_index, double* num,
                   double* den) {
  auto links = [](int size) { return size * (size - 1) / 2; };
  for (const Chain& k : keys) {
    const int size = static_cast<int>(k.mentions.size());
    *den += size;
    double resolved = 0.0;
    double total_links = 0.0;
    if (size == 1) {
      total_links = 1.0;  // self-link
      auto it = response_index.find(k.mentions.front());
      if (it != response_index.end() &&
          response[it->second].mentions.size() == 1)
        resolved = 1.0;
    } else {
      total_links = links(size);
      std::map<int, int> shared;  // response chain -> common mention count
      for (const Mention& m : k.mentions) {
        auto it = response_index.find(m);
        if (it != response_index.end()) ++shared[it->second];
      }
      for (const auto& [chain, common] : shared) resolved += links(common);
    }
    *num += size * resolved / total_links;
  }
}

}  // namespace

MetricCounts& MetricCounts::operator+=(const MetricCounts& o) {
  recall_num += o.recall_num;
  recall_den += o.recall_den;
  precision_num += o.precision_num;
  precision_den += o.precision_den;
  return *this;
}

MetricScore to_score(const MetricCounts& c) {
  MetricScore s;
  s.recall_absent = c.recall_den == 0.0;
  s.precision_absent = c.precision_den == 0.0;
  if (!s.recall_absent) s.recall = c.recall_num / c.recall_den;
  if (!s.precision_absent) s.precision = c.precision_num / c.precision_den;
  if (s.recall + s.precision > 0.0)
    s.f1 = 2.0 * s.recall * s.precision / (s.recall + s.precision);
  return s;
}

MetricCounts muc_counts(const std::vector<Chain>& gold,
                        const std::vector<Chain>& sys) {
  MetricCounts c;
  const auto gold_index = mention_index(gold);
  const auto sys_index = mention_index(sys);
  muc_direction(gold, sys_index, &c.recall_num, &c.recall_den);
  muc_direction(sys, gold_index, &c.precision_num, &c.precision_den);
  return c;
}

MetricCounts bcubed_counts(const std::vector<Chain>& gold,
                           const std::vector<Chain>& sys) {
  MetricCounts c;
  const auto gold_index = mention_index(gold);
  const auto sys_index = mention_index(sys);
  bcubed_direction(gold, sys, sys_index, &c.recall_num, &c.recall_den);
  bcubed_direction(sys, gold, gold_index, &c.precision_num, &c.precision_den);
  return c;
}

MetricCounts ceaf_counts(const std::vector<Chain>& gold,
                         const std::vector<Chain>& sys, CeafVariant variant) {
  MetricCounts c;
  if (variant == CeafVariant::Mention) {
    c.recall_den = total_mentions(gold);
    c.precision_den = total_mentions(sys);
  } else {
    c.recall_den = static_cast<double>(gold.size());
    c.precision_den = static_cast<double>(sys.size());
  }
  if (gold.empty() || sys.empty()) return c;

  std::vector<std::vector<double>> weight(gold.size(),
                                          std::vector<double>(sys.size()));
  for (size_t i = 0; i < gold.size(); ++i) {
    for (size_t j = 0; j < sys.size(); ++j) {
      const int common = intersection_size(gold[i], sys[j]);
      weight[i][j] =
          variant == CeafVariant::Mention
              ? static_cast<double>(common)
              : 2.0 * common /
                    (gold[i].mentions.size() + sys[j].mentions.size());
    }
  }
  const double total = max_assignment(weight).total;
  c.recall_num = total;
  c.precision_num = total;
  return c;
}

MetricCounts lea_counts(const std::vector<Chain>& gold,
                        const std::vector<Chain>& sys) {
  MetricCounts c;
  const auto gold_index = mention_index(gold);
  const auto sys_index = mention_index(sys);
  lea_direction(gold, sys, sys_index, &c.recall_num, &c.recall_den);
  lea_direction(sys, gold, gold_index, &c.precision_num, &c.precision_den);
  return c;
}

MetricScore score_muc(const std::vector<Chain>& gold,
                      const std::vector<Chain>& sys) {
  return to_score(muc_counts(gold, sys));
}

MetricScore score_bcubed(const std::vector<Chain>& gold,
                         const std::vector<Chain>& sys) {
  return to_score(bcubed_counts(gold, sys));
}

MetricScore score_ceaf(const std::vector<Chain>& gold,
                       const std::vector<Chain>& sys, CeafVariant variant) {
  return to_score(ceaf_counts(gold, sys, variant));
}

MetricScore score_lea(const std::vector<Chain>& gold,
                      const std::vector<Chain>& sys) {
  return to_score(lea_counts(gold, sys));
}

double conll_average(const ScoreReport& report) {
  return (report.muc.f1 + report.bcubed.f1 + report.ceaf_e.f1) / 3.0;
}

ScoreReport score_all(const std::vector<Chain>& gold,
                      const std::vector<Chain>& sys) {
  std::vector<Chain> g = gold;
  std::vector<Chain> s = sys;
  ChainSetPair pair{&g, &s};
  return score_corpus({pair});
}

ScoreReport score_corpus(const std::vector<ChainSetPair>& pairs) {
  MetricCounts muc, bcubed, ceaf_m, ceaf_e, lea;
  for (const ChainSetPair& p : pairs) {
    muc += muc_counts(*p.gold, *p.sys);
    bcubed += bcubed_counts(*p.gold, *p.sys);
    ceaf_m += ceaf_counts(*p.gold, *p.sys, CeafVariant::Mention);
    ceaf_e += ceaf_counts(*p.gold, *p.sys, CeafVariant::Entity);
    lea += lea_counts(*p.gold, *p.sys);
  }
  ScoreReport report;
  report.muc = to_score(muc);
  report.bcubed = to_score(bcubed);
  report.ceaf_m = to_score(ceaf_m);
  report.ceaf_e = to_score(ceaf_e);
  report.lea = to_score(lea);
  report.conll_avg = conll_average(report);
  report.document_count = static_cast<int>(pairs.size());
  return report;
}

}  // namespace npc
