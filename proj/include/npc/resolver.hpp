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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "npc/filter.hpp"
#include "npc/types.hpp"

namespace npc {

enum class Gender { M, F, Unisex };

std::string_view to_string(Gender g);

// M matches {M, Unisex}, F matches {F, Unisex}, Unisex matches everything.
bool gender_compatible(Gender chain, Gender pronoun);

// First-name -> gender lookup; names absent from the list are Unisex.
class Gazetteer {
 public:
  // TSV, one `token<TAB>M|F` entry per line; tokens are case-folded on load.
  static Gazetteer load_file(const std::string& path);
  static Gazetteer from_pairs(
      const std::vector<std::pair<std::string, Gender>>& pairs);

  Gender lookup(std::string_view token) const;
  size_t size() const { return gender_.size(); }

 private:
  std::unordered_map<std::string, Gender> gender_;
};

struct ResolverConfig {
  double similarity_threshold = 0.5;
  int window = 100;  // tokens a candidate name may precede a pronoun by
  std::string entity_type = std::string(kPer);
  // Pronoun attachment applies to PER resolution; for other entity types the
  // resolver runs name clustering only unless this is forced on.
  bool pronoun_rules_enabled = true;
  HonorificSet honorifics = HonorificSet::defaults();
};

// A name occurrence: the NER span, its derived noun phrase and surface text.
struct NameMention {
  Mention span;     // derived mention span
  NerSpan ner;      // the named entity tokens themselves
  std::string surface;  // NER span text, the string used for clustering
};

// A chain under construction: clustered names plus attached pronouns.
struct ResolvedChain {
  std::vector<NameMention> names;   // document order
  std::vector<Mention> pronouns;    // document order
  Gender name_gender = Gender::Unisex;     // from the gazetteer
  Gender pronoun_gender = Gender::Unisex;  // narrowed by attached pronouns
};

// The noun phrase headed by a named entity: the contiguous hull of the last
// NER token and its parse-tree descendants, clipped to the sentence. Then:
// an 'and' right after the name truncates the span at the name's end, and a
// (proper) noun right before the name pulls that token and its descendants
// into the span.
Mention derive_mention_span(const AnnotatedDocument& doc, const NerSpan& ner);

// Symmetric string similarity in [0, 1] used for name clustering:
//   1.0  equal after honorific stripping, case-insensitive
//   0.9  one name's tokens are a subsequence of the other's ("Curzio" in
//        "Francis X. Curzio"); an initial like "X." matches any token with
//        the same first letter
//   0.8  same final token (shared family name)
//   else average best per-token edit similarity, scaled into [0, 0.4]
double name_similarity(std::string_view a, std::string_view b,
                       const HonorificSet& honorifics =
                           HonorificSet::defaults());

// Agglomerative clustering: one chain per name in document order; chain j
// merges into chain i < j when the longest name of i is more similar than
// the threshold to any name of j; repeats to a fixpoint. Output preserves
// first-occurrence order.
std::vector<ResolvedChain> cluster_names(const std::vector<NameMention>& names,
                                         const ResolverConfig& cfg);

// Gender of the first token of the chain's longest named mention (token
// count, ties to the earliest); Unisex when absent from the gazetteer.
Gender chain_gender(const AnnotatedDocument& doc, const ResolvedChain& chain,
                    const Gazetteer& gazetteer);

// Pronoun attachment rules, gender-restricted:
//  (i)  a subject pronoun joins the chain of the nearest preceding subject
//       token that lies inside a named mention;
//  (ii) otherwise the chain of the nearest preceding name, unless the
//       pronoun is the subject of a verb whose object is a name of that
//       chain (or vice versa), and only if the name is within `window`
//       tokens;
//  (iii) otherwise none.
// Returns an index into `chains`.
std::optional<size_t> resolve_pronoun(const AnnotatedDocument& doc,
                                      int pronoun,
                                      const std::vector<ResolvedChain>& chains,
                                      const ResolverConfig& cfg);

// Full pipeline: derive name mentions, cluster, attach pronouns, drop
// singleton chains. Requires POS and dependency layers.
std::vector<Chain> run_ner_de(const AnnotatedDocument& doc,
                              const ResolverConfig& cfg,
                              const Gazetteer& gazetteer);

}  // namespace npc
