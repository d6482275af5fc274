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

#include "npc/conll.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "npc/error.hpp"

namespace npc {
namespace {

constexpr std::string_view kBegin = "#begin document";
constexpr std::string_view kEnd = "#end document";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) cols.push_back(line.substr(i, j - i));
    i = j;
  }
  return cols;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

std::string location(const std::string& doc_id, int line_no) {
  return "document '" + doc_id + "' line " + std::to_string(line_no);
}

struct OpenMention {
  int chain_id;
  int start;
  int line_no;
};

void add_mention(std::map<int, Chain>& chains, int chain_id, Mention m,
                 const std::string& doc_id, int line_no) {
  Chain& chain = chains[chain_id];
  chain.id = chain_id;
  for (const Mention& other : chain.mentions) {
    if (other.overlaps(m))
      throw MalformedInput(location(doc_id, line_no),
                           "overlapping mentions of chain " +
                               std::to_string(chain_id));
  }
  chain.mentions.push_back(m);
}

}  // namespace

std::vector<AnnotatedDocument> parse_conll(std::string_view text) {
  std::vector<AnnotatedDocument> docs;
  AnnotatedDocument doc;
  bool in_doc = false;
  std::map<int, Chain> chains;
  std::vector<OpenMention> open;
  int sentence = 0;
  bool sentence_has_tokens = false;
  int line_no = 0;

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;

    if (line.starts_with(kBegin)) {
      if (in_doc)
        throw MalformedInput(location(doc.doc_id, line_no),
                             "'#begin document' inside an open document");
      doc = AnnotatedDocument{};
      std::string_view rest = line.substr(kBegin.size());
      while (!rest.empty() &&
             std::isspace(static_cast<unsigned char>(rest.front())))
        rest.remove_prefix(1);
      doc.doc_id = std::string(rest);
      in_doc = true;
      chains.clear();
      open.clear();
      sentence = 0;
      sentence_has_tokens = false;
    } else if (line.starts_with(kEnd)) {
      if (!in_doc)
        throw MalformedInput(location("", line_no),
                             "'#end document' without '#begin document'");
      if (!open.empty())
        throw MalformedInput(
            location(doc.doc_id, line_no),
            "unclosed chain marker for chain " +
                std::to_string(open.back().chain_id) + " opened at line " +
                std::to_string(open.back().line_no));
      for (auto& [id, chain] : chains) {
        normalize(chain);
        doc.chains.push_back(std::move(chain));
      }
      validate(doc);
      docs.push_back(std::move(doc));
      in_doc = false;
    } else if (!in_doc) {
      // Anything outside a document must be blank or a comment.
      if (!split_ws(line).empty() && line.front() != '#')
        throw MalformedInput(location("", line_no),
                             "token line outside any document");
    } else if (split_ws(line).empty()) {
      if (sentence_has_tokens) {
        ++sentence;
        sentence_has_tokens = false;
      }
    } else if (line.front() == '#') {
      // comment
    } else {
      auto cols = split_ws(line);
      if (cols.size() < 4)
        throw MalformedInput(location(doc.doc_id, line_no),
                             "expected at least 4 columns, got " +
                                 std::to_string(cols.size()));
      const int index = static_cast<int>(doc.tokens.size());
      Token token;
      token.index = index;
      token.text = std::string(cols[3]);
      if (cols.size() >= 6 && cols[4] != "-") token.pos = std::string(cols[4]);
      token.head = index;  // no dependency layer in CoNLL input
      token.sentence = sentence;
      if (!token.pos.empty()) doc.has_pos = true;

      std::string_view coref = cols.back();
      if (coref != "-") {
        size_t p = 0;
        while (p <= coref.size()) {
          size_t bar = coref.find('|', p);
          std::string_view part = coref.substr(
              p, bar == std::string_view::npos ? coref.size() - p : bar - p);
          const bool opens = part.starts_with("(");
          const bool closes = part.ends_with(")");
          std::string_view digits = part;
          if (opens) digits.remove_prefix(1);
          if (closes) digits.remove_suffix(1);
          if ((!opens && !closes) || !all_digits(digits))
            throw MalformedInput(location(doc.doc_id, line_no),
                                 "bad coreference field '" +
                                     std::string(part) + "'");
          const int chain_id = std::stoi(std::string(digits));
          if (opens && closes) {
            add_mention(chains, chain_id, {index, index + 1}, doc.doc_id,
                        line_no);
          } else if (opens) {
            for (const OpenMention& om : open) {
              if (om.chain_id == chain_id)
                throw MalformedInput(
                    location(doc.doc_id, line_no),
                    "chain " + std::to_string(chain_id) +
                        " opened twice without an intervening close");
            }
            open.push_back({chain_id, index, line_no});
          } else {
            auto it = std::find_if(open.rbegin(), open.rend(),
                                   [chain_id](const OpenMention& om) {
                                     return om.chain_id == chain_id;
                                   });
            if (it == open.rend())
              throw MalformedInput(location(doc.doc_id, line_no),
                                   "close without matching open for chain " +
                                       std::to_string(chain_id));
            add_mention(chains, chain_id, {it->start, index + 1}, doc.doc_id,
                        line_no);
            open.erase(std::next(it).base());
          }
          if (bar == std::string_view::npos) break;
          p = bar + 1;
        }
      }
      doc.tokens.push_back(std::move(token));
      sentence_has_tokens = true;
    }

    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  if (in_doc)
    throw MalformedInput(location(doc.doc_id, line_no),
                         "'#end document' missing at end of input");
  return docs;
}

std::string emit_conll(const AnnotatedDocument& doc) {
  for (const Token& t : doc.tokens) {
    if (t.text.empty() ||
        std::any_of(t.text.begin(), t.text.end(), [](char c) {
          return std::isspace(static_cast<unsigned char>(c));
        }))
      throw MalformedInput("document '" + doc.doc_id + "'",
                           "token text unfit for column output: '" + t.text +
                               "'");
  }

  struct Boundary {
    int chain_id;
    Mention mention;
  };
  const int n = static_cast<int>(doc.tokens.size());
  std::vector<std::vector<Boundary>> starts(n), ends(n);
  for (const Chain& c : doc.chains) {
    for (const Mention& m : c.mentions) {
      starts[m.start].push_back({c.id, m});
      if (m.size() > 1) ends[m.end - 1].push_back({c.id, m});
    }
  }
  for (auto& v : starts) {
    std::sort(v.begin(), v.end(), [](const Boundary& a, const Boundary& b) {
      if (a.mention.size() != b.mention.size())
        return a.mention.size() > b.mention.size();  // longest first
      return a.chain_id < b.chain_id;
    });
  }
  for (auto& v : ends) {
    std::sort(v.begin(), v.end(), [](const Boundary& a, const Boundary& b) {
      if (a.mention.start != b.mention.start)
        return a.mention.start > b.mention.start;  // innermost first
      return a.chain_id > b.chain_id;
    });
  }

  // Column 0 mirrors the first whitespace-free token of the doc id; identity
  // on re-parse comes from the '#begin document' line.
  std::string id0 = doc.doc_id.substr(0, doc.doc_id.find(' '));
  if (id0.empty()) id0 = "-";

  std::ostringstream out;
  out << "#begin document " << doc.doc_id << '\n';
  int word_no = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = doc.tokens[i];
    if (i > 0 && t.sentence != doc.tokens[i - 1].sentence) {
      out << '\n';
      word_no = 0;
    }
    std::string coref;
    for (const Boundary& b : starts[i]) {
      if (!coref.empty()) coref += '|';
      coref += '(' + std::to_string(b.chain_id);
      if (b.mention.size() == 1) coref += ')';
    }
    for (const Boundary& b : ends[i]) {
      if (!coref.empty()) coref += '|';
      coref += std::to_string(b.chain_id) + ')';
    }
    if (coref.empty()) coref = "-";
    out << id0 << "\t0\t" << word_no << '\t' << t.text << '\t'
        << (t.pos.empty() ? "-" : t.pos) << '\t' << coref << '\n';
    ++word_no;
  }
  out << "#end document\n";
  return out.str();
}

std::string emit_conll(const std::vector<AnnotatedDocument>& docs) {
  std::string out;
  for (const AnnotatedDocument& doc : docs) out += emit_conll(doc);
  return out;
}

}  // namespace npc
