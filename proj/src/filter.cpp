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

#include "npc/filter.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "npc/error.hpp"

namespace npc {
namespace {

const std::vector<std::string> kDefaultHonorifics = {
    "Mr", "Mr.", "Mrs", "Mrs.", "Ms", "Ms.", "Dr", "Dr.", "Messrs.",
};

const std::set<std::string> kAnimatePronouns = {"he",  "him", "his",
                                                "she", "her", "hers"};

std::string strip_trailing_period(std::string s) {
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

// "X." style middle initial
bool is_initial(std::string_view token) {
  return token.size() == 2 && token.back() == '.' &&
         std::isalpha(static_cast<unsigned char>(token.front()));
}

const NerSpan* span_containing(const AnnotatedDocument& doc, int token,
                               std::string_view type) {
  for (const NerSpan& s : doc.ner)
    if (s.type == type && s.contains(token)) return &s;
  return nullptr;
}

}  // namespace

HonorificSet HonorificSet::defaults() {
  return from_tokens(kDefaultHonorifics);
}

HonorificSet HonorificSet::from_tokens(const std::vector<std::string>& tokens) {
  HonorificSet set;
  for (const std::string& t : tokens)
    set.normalized_.push_back(strip_trailing_period(ascii_lower(t)));
  return set;
}

HonorificSet HonorificSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput(path, "cannot open honorifics file");
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    tokens.push_back(line);
  }
  return from_tokens(tokens);
}

bool HonorificSet::contains(std::string_view token) const {
  const std::string norm = strip_trailing_period(ascii_lower(token));
  return std::find(normalized_.begin(), normalized_.end(), norm) !=
         normalized_.end();
}

bool NpcEntity::has_variant(std::string_view name) const {
  const std::string needle = ascii_lower(name);
  for (const std::string& v : name_variants)
    if (ascii_lower(v) == needle) return true;
  return false;
}

int mention_head(const AnnotatedDocument& doc, const Mention& m) {
  const int n = static_cast<int>(doc.tokens.size());
  if (m.start < 0 || m.start >= m.end || m.end > n)
    throw MalformedInput("document '" + doc.doc_id + "'",
                         "mention span out of bounds");
  int head = -1;
  for (int t = m.start; t < m.end; ++t) {
    bool ancestor_inside = false;
    int cur = t;
    int steps = 0;
    while (true) {
      const int h = doc.tokens[cur].head;
      if (h == kRootHead || h == cur) break;
      if (++steps > n)
        throw MalformedInput("document '" + doc.doc_id + "'",
                             "dependency cycle at token " +
                                 std::to_string(t));
      if (m.contains(h)) {
        ancestor_inside = true;
        break;
      }
      cur = h;
    }
    if (!ancestor_inside) head = t;  // rightmost qualifying token wins
  }
  if (head < 0)
    throw MalformedInput("document '" + doc.doc_id + "'",
                         "dependency cycle inside mention [" +
                             std::to_string(m.start) + "," +
                             std::to_string(m.end) + ")");
  return head;
}

bool is_person_headed(const AnnotatedDocument& doc, const Mention& m,
                      std::string_view type) {
  return span_containing(doc, mention_head(doc, m), type) != nullptr;
}

MentionType classify_mention(const AnnotatedDocument& doc, const Mention& m,
                             std::string_view type) {
  const int head = mention_head(doc, m);
  const std::string& pos = doc.tokens[head].pos;
  if (pos == "PRP" || pos == "PRP$") return MentionType::Pronoun;
  if (span_containing(doc, head, type) != nullptr) return MentionType::Name;
  return MentionType::Nominal;
}

std::vector<std::string> name_variants(const AnnotatedDocument& doc,
                                       const Chain& chain,
                                       std::string_view type,
                                       const HonorificSet& honorifics) {
  std::vector<std::string> variants;
  std::set<std::string> seen;  // lowercased
  auto add = [&](const std::string& v) {
    if (v.empty()) return;
    if (seen.insert(ascii_lower(v)).second) variants.push_back(v);
  };

  for (const Mention& m : chain.mentions) {
    if (classify_mention(doc, m, type) != MentionType::Name) continue;
    const NerSpan* span = span_containing(doc, mention_head(doc, m), type);
    std::vector<std::string> words;
    for (int t = span->start; t < span->end; ++t)
      words.push_back(doc.tokens[t].text);
    size_t first = 0;
    while (first < words.size() && honorifics.contains(words[first])) ++first;
    if (first == words.size()) continue;  // nothing but honorifics

    std::string surface;
    for (size_t i = first; i < words.size(); ++i) {
      if (!surface.empty()) surface += ' ';
      surface += words[i];
    }
    add(surface);
    if (words.size() - first > 1 && !is_initial(words.back()))
      add(words.back());  // family name
  }
  return variants;
}

std::vector<NpcEntity> filter_chains(const AnnotatedDocument& doc,
                                     const std::vector<Chain>& chains,
                                     std::string_view type,
                                     const HonorificSet& honorifics) {
  std::vector<NpcEntity> out;
  for (const Chain& chain : chains) {
    NpcEntity entity;
    entity.chain = chain;
    normalize(entity.chain);
    bool has_name = false;
    for (const Mention& m : entity.chain.mentions) {
      const MentionType t = classify_mention(doc, m, type);
      entity.mention_types[m] = t;
      has_name |= t == MentionType::Name;
    }
    if (!has_name) continue;
    entity.name_variants = name_variants(doc, entity.chain, type, honorifics);
    out.push_back(std::move(entity));
  }
  return out;
}

bool has_animate_pronoun(const AnnotatedDocument& doc, const Chain& chain) {
  for (const Mention& m : chain.mentions) {
    const int head = mention_head(doc, m);
    if (kAnimatePronouns.count(ascii_lower(doc.tokens[head].text)) > 0)
      return true;
  }
  return false;
}

}  // namespace npc
