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

#include "npc/types.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "npc/error.hpp"

namespace npc {

std::pair<int, int> AnnotatedDocument::sentence_range(int sentence) const {
  int begin = -1;
  int end = static_cast<int>(tokens.size());
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    if (tokens[i].sentence == sentence && begin < 0) begin = i;
    if (tokens[i].sentence > sentence) {
      end = i;
      break;
    }
  }
  if (begin < 0) return {0, 0};
  return {begin, end};
}

std::string AnnotatedDocument::text(int start, int end) const {
  std::string out;
  for (int i = start; i < end && i < static_cast<int>(tokens.size()); ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

std::string_view to_string(MentionType t) {
  switch (t) {
    case MentionType::Name: return "name";
    case MentionType::Pronoun: return "pronoun";
    case MentionType::Nominal: return "nominal";
  }
  return "?";
}

void normalize(Chain& chain) {
  std::sort(chain.mentions.begin(), chain.mentions.end());
  chain.mentions.erase(
      std::unique(chain.mentions.begin(), chain.mentions.end()),
      chain.mentions.end());
}

void validate(const AnnotatedDocument& doc) {
  const auto where = [&doc](const std::string& detail) {
    return "document '" + doc.doc_id + "' " + detail;
  };
  const int n = static_cast<int>(doc.tokens.size());
  int prev_sentence = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = doc.tokens[i];
    if (t.index != i)
      throw MalformedInput(where("tokens"), "token indices are not dense");
    if (t.sentence < prev_sentence)
      throw MalformedInput(where("tokens"), "sentence ordinals decrease");
    prev_sentence = t.sentence;
  }
  for (int i = 0; i < n; ++i) {
    const Token& t = doc.tokens[i];
    if (t.head == kRootHead || t.head == i) continue;
    if (t.head < 0 || t.head >= n ||
        doc.tokens[t.head].sentence != t.sentence)
      throw MalformedInput(where("tokens"),
                           "head of token " + std::to_string(i) +
                               " lies outside its sentence");
  }
  for (size_t i = 0; i < doc.ner.size(); ++i) {
    const NerSpan& s = doc.ner[i];
    if (s.start < 0 || s.start >= s.end || s.end > n)
      throw MalformedInput(where("ner[" + std::to_string(i) + "]"),
                           "span out of bounds");
    for (size_t j = 0; j < i; ++j) {
      const NerSpan& o = doc.ner[j];
      if (o.type == s.type && s.start < o.end && o.start < s.end)
        throw MalformedInput(where("ner[" + std::to_string(i) + "]"),
                             "overlapping spans of type " + s.type);
    }
  }
  std::set<int> ids;
  for (const Chain& c : doc.chains) {
    if (!ids.insert(c.id).second)
      throw MalformedInput(where("chains"),
                           "duplicate chain id " + std::to_string(c.id));
    for (size_t k = 0; k < c.mentions.size(); ++k) {
      const Mention& m = c.mentions[k];
      if (m.start < 0 || m.start >= m.end || m.end > n)
        throw MalformedInput(
            where("chain " + std::to_string(c.id)),
            "mention [" + std::to_string(m.start) + "," +
                std::to_string(m.end) + ") out of bounds");
      for (size_t j = 0; j < k; ++j) {
        if (c.mentions[j].overlaps(m))
          throw MalformedInput(where("chain " + std::to_string(c.id)),
                               "overlapping mentions within one chain");
      }
    }
  }
}

int entity_type_priority(std::string_view type) {
  if (type == kPer) return 0;
  if (type == kOrg) return 1;
  if (type == kGpe) return 2;
  if (type == kDate) return 3;
  return 4;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace npc
