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

#include <vector>

#include "npc/types.hpp"

namespace npc {

// A 0/0 component is reported as 0 with the corresponding absent flag set
// rather than silently collapsing degenerate inputs into zeros.
struct MetricScore {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  bool recall_absent = false;
  bool precision_absent = false;
};

// Paired numerators and denominators of one metric on one document. Corpus
// scores add counts across documents before dividing (micro-average).
struct MetricCounts {
  double recall_num = 0.0;
  double recall_den = 0.0;
  double precision_num = 0.0;
  double precision_den = 0.0;

  MetricCounts& operator+=(const MetricCounts& o);
};

MetricScore to_score(const MetricCounts& c);

// MUC: link-based. Recall counts, per gold chain, the links recovered after
// partitioning the chain by the system response; precision swaps roles.
// Singleton chains contribute nothing to either sum.
MetricCounts muc_counts(const std::vector<Chain>& gold,
                        const std::vector<Chain>& sys);

// B^3: mention-based. A mention absent from the other side contributes 0;
// no synthetic singletons are injected.
MetricCounts bcubed_counts(const std::vector<Chain>& gold,
                           const std::vector<Chain>& sys);

enum class CeafVariant {
  Mention,  // phi3(K,R) = |K n R|, normalized by mention counts
  Entity,   // phi4(K,R) = 2|K n R| / (|K| + |R|), normalized by chain counts
};

// CEAF: optimal one-to-one chain alignment maximizing total similarity.
MetricCounts ceaf_counts(const std::vector<Chain>& gold,
                         const std::vector<Chain>& sys, CeafVariant variant);

// LEA: link-based, each chain weighted by its mention count. A singleton's
// self-link resolves iff the mention is a singleton on the other side too.
MetricCounts lea_counts(const std::vector<Chain>& gold,
                        const std::vector<Chain>& sys);

MetricScore score_muc(const std::vector<Chain>& gold,
                      const std::vector<Chain>& sys);
MetricScore score_bcubed(const std::vector<Chain>& gold,
                         const std::vector<Chain>& sys);
MetricScore score_ceaf(const std::vector<Chain>& gold,
                       const std::vector<Chain>& sys, CeafVariant variant);
MetricScore score_lea(const std::vector<Chain>& gold,
                      const std::vector<Chain>& sys);

struct ScoreReport {
  MetricScore muc, bcubed, ceaf_m, ceaf_e, lea;
  double conll_avg = 0.0;  // mean of MUC, B^3 and CEAFe F1
  int document_count = 0;
};

double conll_average(const ScoreReport& report);

ScoreReport score_all(const std::vector<Chain>& gold,
                      const std::vector<Chain>& sys);

// Micro-averaged corpus score over (gold, sys) chain-set pairs.
struct ChainSetPair {
  const std::vector<Chain>* gold = nullptr;
  const std::vector<Chain>* sys = nullptr;
};
ScoreReport score_corpus(const std::vector<ChainSetPair>& pairs);

}  // namespace npc
