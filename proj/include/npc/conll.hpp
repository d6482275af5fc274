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
#include <string_view>
#include <vector>

#include "npc/types.hpp"

namespace npc {

// Reads CoNLL-2012 style coreference files.
//
// Documents are delimited by `#begin document ...` / `#end document`, blank
// lines delimit sentences, and each token line holds whitespace-separated
// columns with the coreference field last:
//   `(12`  opens chain 12 at this token
//   `12)`  closes chain 12 here (span end is exclusive of the next token)
//   `(12)` single-token mention
//   `|`    separates several annotations on one token
//   `-`    no annotation
// Only columns 0 (doc id part), 3 (word) and the last (coref) are required;
// column 4 is read as POS when at least six columns are present. Tokens get
// a self head and empty deprel; CoNLL input carries no dependency layer.
std::vector<AnnotatedDocument> parse_conll(std::string_view text);

// Inverse of parse_conll on {doc_id, token texts, chains}. Mentions opening
// at the same token are emitted longest-first.
std::string emit_conll(const std::vector<AnnotatedDocument>& docs);
std::string emit_conll(const AnnotatedDocument& doc);

}  // namespace npc
