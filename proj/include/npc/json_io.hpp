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

#include <string>
#include <vector>

#include "npc/types.hpp"

namespace npc {

// Reads one annotated document from JSON:
//
//   {"doc_id": "...",
//    "sentences": [{"tokens": [{"text","pos","head","deprel"}, ...]}, ...],
//    "ner":       [{"type","start","end"}, ...],
//    "chains":    [{"id", "mentions": [{"start","end"}, ...]}, ...]}
//
// `head` is sentence-local with -1 for the root and is converted to a
// document-global index on load; `ner` and `chains` use document-global
// token offsets; `ner` and `chains` may be absent. Errors carry the JSON
// path of the offending node.
AnnotatedDocument parse_json_doc(const std::string& text);

// Reads either a single document object or an array of them.
std::vector<AnnotatedDocument> parse_json_docs(const std::string& text);

// Serializes back to the same format (heads become sentence-local again).
std::string emit_json_doc(const AnnotatedDocument& doc);
std::string emit_json_docs(const std::vector<AnnotatedDocument>& docs);

}  // namespace npc
