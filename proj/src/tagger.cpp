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

#include "supercon/tagger.hpp"

#include <algorithm>
#include <set>

#include "supercon/digest.hpp"
#include "supercon/quantity.hpp"
#include "supercon/segmenter.hpp"
#include "supercon/utf8.hpp"

namespace supercon {

namespace {

bool all_caps_no_digits(const std::u32string& token) {
  if (token.size() < 3) return false;
  for (char32_t cp : token)
    if (!(cp >= U'A' && cp <= U'Z')) return false;
  return true;
}

// Formula-shaped: decomposes cleanly into concrete elements with either
// several sites or explicit stoichiometry. Single bare elements and
// variable-laden acronyms ("NMR") stay untagged; known names belong in
// the lexicon instead.
bool formula_shaped(const std::u32string& token) {
  if (token.empty() || !(token[0] >= U'A' && token[0] <= U'Z')) return false;
  if (all_caps_no_digits(token)) return false;
  auto composition = try_decompose_formula(utf8::encode(token));
  if (!composition || composition->entries.empty()) return false;
  for (const CompositionEntry& entry : composition->entries)
    if (entry.site_is_variable) return false;
  if (composition->entries.size() >= 2) return true;
  for (char32_t cp : token)
    if (utf8::is_ascii_digit(cp)) return true;
  return false;
}

Entity make_entity(const std::u32string& text, Span span,
                   SuperconLabel label) {
  Entity entity;
  entity.span = span;
  entity.label = label;
  entity.surface =
      utf8::encode(std::u32string_view(text).substr(span.start,
                                                    span.end - span.start));
  return entity;
}

}  // namespace

std::vector<Entity> tag(const Sentence& sentence, const Lexicon& lexicon) {
  std::u32string text = utf8::decode(sentence.text);
  std::vector<TextToken> tokens = tokenize(text);
  std::vector<Entity> entities;

  for (const TermMatcher::Match& match :
       lexicon.matcher().find_all(text, tokens)) {
    entities.push_back(make_entity(
        text, match.span, static_cast<SuperconLabel>(match.payload)));
  }

  if (lexicon.quantity_patterns) {
    for (const QuantityMatch& match : scan_quantities(text)) {
      Entity entity = make_entity(
          text, match.span,
          match.quantity.kind == QuantityKind::temperature
              ? SuperconLabel::tc_value
              : SuperconLabel::pressure);
      entity.quantity = match.quantity;
      entities.push_back(std::move(entity));
    }
  }

  if (lexicon.formula_patterns) {
    // A formula mention may continue into a trailing variable-assignment
    // block, which belongs to the same material ("La2-xSrxCuO4
    // (x=0.1,0.2)").
    auto with_assignments = [&](Span span) {
      std::size_t open = span.end;
      while (open < text.size() && utf8::is_space(text[open])) ++open;
      if (open >= text.size() || text[open] != U'(') return span;
      int depth = 0;
      std::size_t close = open;
      while (close < text.size()) {
        if (text[close] == U'(') ++depth;
        if (text[close] == U')' && --depth == 0) break;
        ++close;
      }
      if (close >= text.size()) return span;
      std::string block = utf8::encode(text.substr(open, close - open + 1));
      if (is_variable_assignment_block(block))
        span.end = static_cast<std::int32_t>(close) + 1;
      return span;
    };

    // Adjacent doping prefixes ("2% Zn-doped") and shape suffixes
    // ("single crystal") belong to the mention; the material parser
    // segments them later.
    std::string sentence_utf8 = utf8::encode(text);
    std::vector<Span> doping_spans = find_doping_phrases(sentence_utf8);
    std::vector<Span> shape_spans = find_shape_terms(sentence_utf8);
    auto only_space_between = [&](std::int32_t from, std::int32_t to) {
      if (from > to) return false;
      for (std::int32_t k = from; k < to; ++k)
        if (!utf8::is_space(text[k])) return false;
      return true;
    };
    auto with_context = [&](Span span) {
      for (const Span& doping : doping_spans)
        if (doping.end <= span.start &&
            only_space_between(doping.end, span.start)) {
          span.start = doping.start;
          break;
        }
      for (const Span& shape : shape_spans)
        if (shape.start >= span.end &&
            only_space_between(span.end, shape.start)) {
          span.end = shape.end;
          break;
        }
      return span;
    };

    // Chains of '-'-joined alphanumeric tokens form one candidate
    // ("W-C"); each bare token is a fallback candidate.
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!utf8::is_letter(tokens[i].text[0])) continue;
      std::size_t j = i;
      while (j + 2 < tokens.size() && tokens[j + 1].text == U"-" &&
             tokens[j + 1].span.start == tokens[j].span.end &&
             tokens[j + 2].span.start == tokens[j + 1].span.end &&
             (utf8::is_letter(tokens[j + 2].text[0]) ||
              utf8::is_ascii_digit(tokens[j + 2].text[0])))
        j += 2;
      if (j > i) {
        Span chain{tokens[i].span.start, tokens[j].span.end};
        std::u32string chained =
            text.substr(chain.start, chain.end - chain.start);
        if (formula_shaped(chained)) {
          entities.push_back(make_entity(
              text, with_context(with_assignments(chain)),
              SuperconLabel::material));
          i = j;
          continue;
        }
      }
      if (formula_shaped(tokens[i].text))
        entities.push_back(make_entity(
            text, with_context(with_assignments(tokens[i].span)),
            SuperconLabel::material));
    }
  }

  std::sort(entities.begin(), entities.end(),
            [](const Entity& a, const Entity& b) {
              if (a.span != b.span) return a.span < b.span;
              return a.label < b.label;
            });
  entities.erase(std::unique(entities.begin(), entities.end(),
                             [](const Entity& a, const Entity& b) {
                               return a.span == b.span && a.label == b.label;
                             }),
                 entities.end());
  return entities;
}

std::vector<Entity> merge_entities(
    const std::vector<std::pair<TaggerSource, std::vector<Entity>>>&
        streams) {
  std::set<std::string> names;
  for (const auto& [source, entities] : streams)
    if (!names.insert(source.name).second)
      throw std::invalid_argument("duplicate tagger source name '" +
                                  source.name + "'");

  struct Candidate {
    Entity entity;
    int rank;
    std::size_t order;
  };
  std::vector<Candidate> candidates;
  std::size_t order = 0;
  for (const auto& [source, entities] : streams)
    for (const Entity& entity : entities)
      candidates.push_back(Candidate{entity, source.rank, order++});

  // Exact duplicates (span+label) collapse to the best-ranked one.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.entity.span != b.entity.span)
                       return a.entity.span < b.entity.span;
                     if (a.entity.label != b.entity.label)
                       return a.entity.label < b.entity.label;
                     if (a.rank != b.rank) return a.rank < b.rank;
                     return a.order < b.order;
                   });
  candidates.erase(
      std::unique(candidates.begin(), candidates.end(),
                  [](const Candidate& a, const Candidate& b) {
                    return a.entity.span == b.entity.span &&
                           a.entity.label == b.entity.label;
                  }),
      candidates.end());

  // Overlap clusters (connected components along the span axis); the
  // longest entity survives per cluster so every dropped entity overlaps
  // something at least as long.
  std::vector<Entity> merged;
  std::size_t i = 0;
  while (i < candidates.size()) {
    std::size_t j = i;
    std::int32_t cluster_end = candidates[i].entity.span.end;
    while (j + 1 < candidates.size() &&
           candidates[j + 1].entity.span.start < cluster_end) {
      ++j;
      cluster_end = std::max(cluster_end, candidates[j].entity.span.end);
    }
    const Candidate* winner = &candidates[i];
    for (std::size_t k = i + 1; k <= j; ++k) {
      const Candidate& challenger = candidates[k];
      std::int32_t best = winner->entity.span.length();
      std::int32_t length = challenger.entity.span.length();
      if (length > best ||
          (length == best && (challenger.rank < winner->rank ||
                              (challenger.rank == winner->rank &&
                               challenger.entity.span < winner->entity.span))))
        winner = &challenger;
    }
    merged.push_back(winner->entity);
    i = j + 1;
  }
  return merged;
}

AnnotatedDocument document_from_text(std::string id, std::string_view text) {
  AnnotatedDocument document;
  document.id = std::move(id);
  document.digest = sha256_hex(text);

  std::u32string decoded = utf8::decode(text);
  std::size_t line_start = 0;
  for (std::size_t i = 0; i <= decoded.size(); ++i) {
    if (i < decoded.size() && decoded[i] != U'\n') continue;
    std::u32string_view line =
        std::u32string_view(decoded).substr(line_start, i - line_start);
    std::string paragraph = utf8::encode(line);
    auto markers = detect_reference_markers(paragraph);
    for (const SentencePiece& piece : split_sentences(paragraph, markers)) {
      Sentence sentence;
      sentence.text = piece.text;
      sentence.offset = static_cast<std::int32_t>(line_start) + piece.offset;
      sentence.subsection = Subsection::paragraph;
      document.sentences.push_back(std::move(sentence));
    }
    line_start = i + 1;
  }
  return document;
}

AnnotatedDocument ingest_annotations(std::string id, std::string_view text,
                                     const nlohmann::json& annotations) {
  AnnotatedDocument document = document_from_text(std::move(id), text);
  if (!annotations.is_array())
    throw IngestError("annotation payload must be a JSON array");

  std::size_t index = 0;
  for (const nlohmann::json& row : annotations) {
    ++index;
    std::string where = "annotation #" + std::to_string(index);
    if (!row.is_object() || !row.contains("sentence_index") ||
        !row.contains("start") || !row.contains("end") ||
        !row.contains("label"))
      throw IngestError(where +
                        ": expected fields sentence_index, start, end, label");
    auto sentence_index = row["sentence_index"].get<std::int64_t>();
    if (sentence_index < 0 ||
        sentence_index >= static_cast<std::int64_t>(document.sentences.size()))
      throw IngestError(
          where + ": sentence_index " + std::to_string(sentence_index) +
          " out of range (" + std::to_string(document.sentences.size()) +
          " sentences)");
    Sentence& sentence = document.sentences[sentence_index];
    Span span{row["start"].get<std::int32_t>(),
              row["end"].get<std::int32_t>()};
    auto length = static_cast<std::int32_t>(utf8::length(sentence.text));
    if (!(0 <= span.start && span.start < span.end && span.end <= length))
      throw IngestError(where + ": span [" + std::to_string(span.start) +
                        "," + std::to_string(span.end) +
                        ") out of bounds for sentence " +
                        std::to_string(sentence_index) + " of length " +
                        std::to_string(length));
    auto label = supercon_label_from(row["label"].get<std::string>());
    if (!label)
      throw IngestError(where + ": unknown label '" +
                        row["label"].get<std::string>() + "'");
    Entity entity;
    entity.span = span;
    entity.label = *label;
    entity.surface = utf8::substr(sentence.text, span.start, span.end);
    sentence.entities.push_back(std::move(entity));
  }

  for (Sentence& sentence : document.sentences) {
    if (sentence.entities.empty()) continue;
    sentence.entities = merge_entities(
        {{TaggerSource{"gold", 0}, std::move(sentence.entities)}});
  }
  return document;
}

}  // namespace supercon
