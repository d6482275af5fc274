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

#include "npc/json_io.hpp"

#include <set>

#include "json.hpp"
#include "npc/error.hpp"

namespace npc {
namespace {

using nlohmann::json;

std::string idx(const std::string& base, size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

int require_int(const json& j, const std::string& path,
                const std::string& key) {
  if (!j.contains(key))
    throw MalformedInput(path + "." + key, "missing field");
  if (!j[key].is_number_integer())
    throw MalformedInput(path + "." + key, "expected an integer");
  return j[key].get<int>();
}

std::string require_string(const json& j, const std::string& path,
                           const std::string& key) {
  if (!j.contains(key))
    throw MalformedInput(path + "." + key, "missing field");
  if (!j[key].is_string())
    throw MalformedInput(path + "." + key, "expected a string");
  return j[key].get<std::string>();
}

AnnotatedDocument doc_from_json(const json& j, const std::string& root) {
  if (!j.is_object()) throw MalformedInput(root, "expected an object");
  AnnotatedDocument doc;
  doc.doc_id = require_string(j, root, "doc_id");

  if (!j.contains("sentences") || !j["sentences"].is_array())
    throw MalformedInput(root + ".sentences", "missing or not an array");
  int offset = 0;
  for (size_t si = 0; si < j["sentences"].size(); ++si) {
    const std::string spath = idx(root + ".sentences", si);
    const json& sent = j["sentences"][si];
    if (!sent.is_object() || !sent.contains("tokens") ||
        !sent["tokens"].is_array())
      throw MalformedInput(spath + ".tokens", "missing or not an array");
    const json& toks = sent["tokens"];
    const int len = static_cast<int>(toks.size());
    for (size_t ti = 0; ti < toks.size(); ++ti) {
      const std::string tpath = idx(spath + ".tokens", ti);
      const json& tj = toks[ti];
      if (!tj.is_object()) throw MalformedInput(tpath, "expected an object");
      Token t;
      t.index = offset + static_cast<int>(ti);
      t.text = require_string(tj, tpath, "text");
      t.sentence = static_cast<int>(si);
      if (tj.contains("pos")) {
        if (!tj["pos"].is_string())
          throw MalformedInput(tpath + ".pos", "expected a string");
        t.pos = tj["pos"].get<std::string>();
        if (!t.pos.empty()) doc.has_pos = true;
      }
      if (tj.contains("deprel")) {
        if (!tj["deprel"].is_string())
          throw MalformedInput(tpath + ".deprel", "expected a string");
        t.deprel = tj["deprel"].get<std::string>();
      }
      if (tj.contains("head")) {
        const int local = require_int(tj, tpath, "head");
        if (local < -1 || local >= len)
          throw MalformedInput(tpath + ".head",
                               "head " + std::to_string(local) +
                                   " outside sentence of length " +
                                   std::to_string(len));
        t.head = local == -1 ? kRootHead : offset + local;
        doc.has_deps = true;
      } else {
        t.head = t.index;
      }
      doc.tokens.push_back(std::move(t));
    }
    offset += len;
  }
  const int n = static_cast<int>(doc.tokens.size());

  if (j.contains("ner")) {
    if (!j["ner"].is_array())
      throw MalformedInput(root + ".ner", "expected an array");
    for (size_t i = 0; i < j["ner"].size(); ++i) {
      const std::string path = idx(root + ".ner", i);
      const json& sj = j["ner"][i];
      NerSpan span;
      span.type = require_string(sj, path, "type");
      span.start = require_int(sj, path, "start");
      span.end = require_int(sj, path, "end");
      if (span.start < 0 || span.start >= span.end)
        throw MalformedInput(path + ".start", "bad span bounds");
      if (span.end > n)
        throw MalformedInput(path + ".end",
                             "span end " + std::to_string(span.end) +
                                 " exceeds token count " + std::to_string(n));
      doc.ner.push_back(std::move(span));
    }
  }

  if (j.contains("chains")) {
    if (!j["chains"].is_array())
      throw MalformedInput(root + ".chains", "expected an array");
    std::set<int> ids;
    for (size_t i = 0; i < j["chains"].size(); ++i) {
      const std::string path = idx(root + ".chains", i);
      const json& cj = j["chains"][i];
      Chain chain;
      chain.id = require_int(cj, path, "id");
      if (!ids.insert(chain.id).second)
        throw MalformedInput(path + ".id",
                             "duplicate chain id " + std::to_string(chain.id));
      if (!cj.contains("mentions") || !cj["mentions"].is_array())
        throw MalformedInput(path + ".mentions", "missing or not an array");
      for (size_t k = 0; k < cj["mentions"].size(); ++k) {
        const std::string mpath = idx(path + ".mentions", k);
        const json& mj = cj["mentions"][k];
        Mention m;
        m.start = require_int(mj, mpath, "start");
        m.end = require_int(mj, mpath, "end");
        if (m.start < 0 || m.start >= m.end)
          throw MalformedInput(mpath + ".start", "bad span bounds");
        if (m.end > n)
          throw MalformedInput(mpath + ".end",
                               "span end " + std::to_string(m.end) +
                                   " exceeds token count " +
                                   std::to_string(n));
        chain.mentions.push_back(m);
      }
      normalize(chain);
      doc.chains.push_back(std::move(chain));
    }
  }

  validate(doc);
  return doc;
}

json doc_to_json(const AnnotatedDocument& doc) {
  json j;
  j["doc_id"] = doc.doc_id;
  j["sentences"] = json::array();
  for (int s = 0; s < doc.sentence_count(); ++s) {
    const auto [begin, end] = doc.sentence_range(s);
    json toks = json::array();
    for (int i = begin; i < end; ++i) {
      const Token& t = doc.tokens[i];
      json tj;
      tj["text"] = t.text;
      if (doc.has_pos) tj["pos"] = t.pos;
      if (doc.has_deps) {
        tj["head"] =
            (t.head == kRootHead || t.head == t.index) ? -1 : t.head - begin;
        tj["deprel"] = t.deprel;
      }
      toks.push_back(std::move(tj));
    }
    j["sentences"].push_back(json{{"tokens", std::move(toks)}});
  }
  j["ner"] = json::array();
  for (const NerSpan& s : doc.ner)
    j["ner"].push_back(
        json{{"type", s.type}, {"start", s.start}, {"end", s.end}});
  j["chains"] = json::array();
  for (const Chain& c : doc.chains) {
    json mentions = json::array();
    for (const Mention& m : c.mentions)
      mentions.push_back(json{{"start", m.start}, {"end", m.end}});
    j["chains"].push_back(json{{"id", c.id}, {"mentions", std::move(mentions)}});
  }
  return j;
}

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw MalformedInput("json", e.what());
  }
}

}  // namespace

AnnotatedDocument parse_json_doc(const std::string& text) {
  return doc_from_json(parse_or_throw(text), "$");
}

std::vector<AnnotatedDocument> parse_json_docs(const std::string& text) {
  const json j = parse_or_throw(text);
  std::vector<AnnotatedDocument> docs;
  if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i)
      docs.push_back(doc_from_json(j[i], idx("$", i)));
  } else {
    docs.push_back(doc_from_json(j, "$"));
  }
  return docs;
}

std::string emit_json_doc(const AnnotatedDocument& doc) {
  return doc_to_json(doc).dump(2) + "\n";
}

std::string emit_json_docs(const std::vector<AnnotatedDocument>& docs) {
  json arr = json::array();
  for (const AnnotatedDocument& doc : docs) arr.push_back(doc_to_json(doc));
  return arr.dump(2) + "\n";
}

}  // namespace npc
