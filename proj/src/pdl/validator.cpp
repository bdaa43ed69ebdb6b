// Copyright 2026 The PDL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdl/validator.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "pdl/text.hpp"

namespace pdl {

struct ResolveAccess {
  static ResolvedModel& mut(Resolution& r) { return r.model; }
  static auto& chunks(ResolvedModel& m) { return m.chunks_; }
  static auto& products(ResolvedModel& m) { return m.products_; }
  static auto& maps(ResolvedModel& m) { return m.maps_; }
  static auto& document(ResolvedModel& m) { return m.document_; }
  static auto& catalog(ResolvedModel& m) { return m.catalog_; }
};

namespace {

template <typename T>
const T* lookup(const std::unordered_map<std::string, const T*>& index,
                std::string_view id) {
  const auto it = index.find(std::string(id));
  return it == index.end() ? nullptr : it->second;
}

std::string squote(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string level_tag(const Chunk& chunk) {
  return "@" + std::string(level_name(chunk.level));
}

}  // namespace

const Chunk* ResolvedModel::find_chunk(std::string_view id) const {
  return lookup(chunks_, id);
}

const Product* ResolvedModel::find_product(std::string_view id) const {
  return lookup(products_, id);
}

const ProcessMap* ResolvedModel::find_map(std::string_view id) const {
  return lookup(maps_, id);
}

bool ResolvedModel::is_document_chunk(const Chunk* chunk) const {
  const auto& chunks = document_->chunks;
  return !chunks.empty() && chunk >= chunks.data() &&
         chunk < chunks.data() + chunks.size();
}

Resolution resolve(PipelineDocument doc,
                   std::shared_ptr<const Catalog> catalog) {
  if (!catalog) catalog = std::make_shared<const Catalog>();
  Resolution result;
  ResolvedModel& model = result.model;
  ResolveAccess::document(model) =
      std::make_shared<const PipelineDocument>(std::move(doc));
  ResolveAccess::catalog(model) = catalog;
  const PipelineDocument& d = *ResolveAccess::document(model);
  const std::string& source = d.source_name;
  auto& diags = result.diagnostics;

  auto duplicate = [&](std::string_view what, const std::string& id,
                       SourceLoc loc) {
    diags.push_back(Diagnostic::make(
        codes::kDuplicateId,
        std::string(what) + " " + squote(id) + " is already defined", source,
        loc, id));
  };

  auto& products = ResolveAccess::products(model);
  for (const auto& p : d.products) {
    if (!products.emplace(p.id, &p).second) duplicate("product", p.id, p.loc);
  }
  auto& chunks = ResolveAccess::chunks(model);
  for (const auto& c : d.chunks) {
    if (const CatalogEntry* entry = catalog->find(c.id)) {
      diags.push_back(Diagnostic::make(
          codes::kDuplicateId,
          "chunk " + squote(c.id) + " shadows a catalog chunk (" +
              entry->origin + "); catalog ids are reserved",
          source, c.loc, c.id));
      chunks.emplace(c.id, &c);
      continue;
    }
    if (!chunks.emplace(c.id, &c).second) duplicate("chunk", c.id, c.loc);
  }
  for (const auto& entry : catalog->entries()) {
    chunks.emplace(entry.chunk.id, &entry.chunk);
  }
  auto& maps = ResolveAccess::maps(model);
  for (const auto& m : d.maps) {
    if (!maps.emplace(m.id, &m).second) duplicate("map", m.id, m.loc);
  }

  auto dangling = [&](std::string_view what, const Ref& ref,
                      std::string_view context) {
    diags.push_back(Diagnostic::make(
        codes::kDanglingRef,
        "unknown " + std::string(what) + " " + squote(ref.id) + " " +
            std::string(context),
        source, ref.loc, ref.id));
  };
  for (const auto& c : d.chunks) {
    const Guideline& g = c.guideline;
    const std::string context = "referenced by chunk " + squote(c.id);
    for (const auto* list : {&g.inputs, &g.outputs}) {
      if (!*list) continue;
      for (const auto& ref : **list) {
        if (!products.contains(ref.id)) dangling("product", ref, context);
      }
    }
    if (const auto* compose = c.compose()) {
      for (const auto& ref : compose->children) {
        if (!chunks.contains(ref.id)) {
          dangling("chunk", ref, "composed by chunk " + squote(c.id));
        }
      }
    }
  }
  for (const auto& m : d.maps) {
    for (const auto& s : m.sections) {
      if (!chunks.contains(s.via.id)) {
        dangling("chunk", s.via, "used as strategy in map " + squote(m.id));
      }
    }
  }
  return result;
}

namespace {

// Tarjan's strongly connected components over string-labelled nodes.
class SccFinder {
 public:
  explicit SccFinder(const std::map<std::string, std::vector<std::string>>& graph)
      : graph_(graph) {}

  std::vector<std::vector<std::string>> run() {
    for (const auto& [node, edges] : graph_) {
      if (!state_.contains(node)) visit(node);
    }
    return std::move(components_);
  }

 private:
  struct NodeState {
    int index;
    int lowlink;
    bool on_stack;
  };

  void visit(const std::string& node) {
    state_[node] = NodeState{counter_, counter_, true};
    ++counter_;
    stack_.push_back(node);
    if (const auto it = graph_.find(node); it != graph_.end()) {
      for (const auto& next : it->second) {
        if (!state_.contains(next)) {
          visit(next);
          state_[node].lowlink =
              std::min(state_[node].lowlink, state_[next].lowlink);
        } else if (state_[next].on_stack) {
          state_[node].lowlink =
              std::min(state_[node].lowlink, state_[next].index);
        }
      }
    }
    if (state_[node].lowlink == state_[node].index) {
      std::vector<std::string> component;
      for (;;) {
        std::string member = stack_.back();
        stack_.pop_back();
        state_[member].on_stack = false;
        const bool done = member == node;
        component.push_back(std::move(member));
        if (done) break;
      }
      components_.push_back(std::move(component));
    }
  }

  const std::map<std::string, std::vector<std::string>>& graph_;
  std::map<std::string, NodeState> state_;
  std::vector<std::string> stack_;
  std::vector<std::vector<std::string>> components_;
  int counter_ = 0;
};

}  // namespace

std::vector<Diagnostic> check_structure(const ResolvedModel& model) {
  const PipelineDocument& doc = model.document();
  std::vector<Diagnostic> diags;
  // Edges that do not point to a coarser level. Every composition cycle
  // either runs through a coarser-pointing edge or stays on one level; only
  // the latter are reported as E003.
  std::map<std::string, std::vector<std::string>> graph;

  for (const auto& parent : doc.chunks) {
    const auto* compose = parent.compose();
    if (!compose) continue;
    const bool canonical = model.find_chunk(parent.id) == &parent;
    for (const auto& ref : compose->children) {
      const Chunk* child = model.find_chunk(ref.id);
      if (!child) continue;
      if (level_rank(child->level) <= level_rank(parent.level)) {
        diags.push_back(Diagnostic::make(
            codes::kLevelOrder,
            "chunk " + squote(parent.id) + " (" + level_tag(parent) +
                ") composes " + squote(child->id) + " (" + level_tag(*child) +
                "); composed chunks must be at a strictly finer level",
            doc.source_name, ref.loc, child->id));
      }
      if (canonical && level_rank(child->level) >= level_rank(parent.level)) {
        graph[parent.id].push_back(child->id);
      }
    }
  }

  for (auto& component : SccFinder(graph).run()) {
    const auto& edges_of = [&](const std::string& id) {
      const auto it = graph.find(id);
      return it == graph.end() ? std::vector<std::string>{} : it->second;
    };
    const bool self_loop =
        component.size() == 1 &&
        std::ranges::count(edges_of(component.front()), component.front()) > 0;
    if (component.size() < 2 && !self_loop) continue;
    std::sort(component.begin(), component.end());
    const Chunk* anchor = model.find_chunk(component.front());
    std::string members;
    for (const auto& id : component) {
      if (!members.empty()) members += ", ";
      members += id;
    }
    diags.push_back(Diagnostic::make(
        codes::kCompositionCycle, "composition cycle among chunks: " + members,
        doc.source_name, anchor ? anchor->loc : SourceLoc{1, 1},
        component.front()));
  }
  return diags;
}

std::vector<Diagnostic> check_product_flow(const ResolvedModel& model) {
  const PipelineDocument& doc = model.document();
  std::vector<Diagnostic> diags;
  for (const auto& parent : doc.chunks) {
    const auto* compose = parent.compose();
    if (!compose) continue;
    const Guideline& pg = parent.guideline;

    bool skip = false;
    if (!pg.inputs || !pg.outputs) {
      diags.push_back(Diagnostic::make(
          codes::kFlowCheckSkipped,
          "product flow of chunk " + squote(parent.id) +
              " not checked: its inputs or outputs are unreported",
          doc.source_name, parent.loc, parent.id));
      skip = true;
    }
    std::vector<const Chunk*> children;
    for (const auto& ref : compose->children) {
      const Chunk* child = model.find_chunk(ref.id);
      if (!child) {
        skip = true;  // dangling, already E002
        children.push_back(nullptr);
        continue;
      }
      if (!child->guideline.inputs || !child->guideline.outputs) {
        diags.push_back(Diagnostic::make(
            codes::kFlowCheckSkipped,
            "product flow of chunk " + squote(parent.id) +
                " not checked: inputs or outputs of " + squote(child->id) +
                " are unreported",
            doc.source_name, ref.loc, child->id));
        skip = true;
      }
      children.push_back(child);
    }
    if (skip) continue;

    std::set<std::string> available;
    for (const auto& ref : *pg.inputs) available.insert(ref.id);
    for (std::size_t i = 0; i < children.size(); ++i) {
      const Chunk& child = *children[i];
      const Ref& child_ref = compose->children[i];
      for (const auto& in : *child.guideline.inputs) {
        // Unknown products are E002 already.
        if (!model.find_product(in.id)) continue;
        if (!available.contains(in.id)) {
          diags.push_back(Diagnostic::make(
              codes::kInputUnavailable,
              "chunk " + squote(child.id) + " needs product " + squote(in.id) +
                  ", which is not available at this step of " +
                  squote(parent.id),
              doc.source_name, child_ref.loc, in.id));
        }
      }
      for (const auto& out : *child.guideline.outputs) available.insert(out.id);
    }
    for (const auto& out : *pg.outputs) {
      if (!model.find_product(out.id)) continue;
      if (!available.contains(out.id)) {
        diags.push_back(Diagnostic::make(
            codes::kOutputNotProduced,
            "output " + squote(out.id) + " of chunk " + squote(parent.id) +
                " is not produced by any of its composed chunks",
            doc.source_name, out.loc, out.id));
      }
    }
  }
  return diags;
}

namespace {

std::string near_miss_hint(std::string_view actual, std::string_view expected) {
  if (differ_only_by_case(actual, expected)) {
    return " (the texts differ only in letter case; intentions are "
           "case-sensitive)";
  }
  return "";
}

}  // namespace

std::vector<Diagnostic> check_maps(const ResolvedModel& model) {
  const PipelineDocument& doc = model.document();
  std::vector<Diagnostic> diags;
  for (const auto& map : doc.maps) {
    const std::string* expected = &map.start;
    for (std::size_t i = 0; i < map.sections.size(); ++i) {
      const Section& s = map.sections[i];
      if (!intentions_equal(s.from, *expected)) {
        const std::string what =
            i == 0 ? "the map start" : "the target of section " + std::to_string(i);
        diags.push_back(Diagnostic::make(
            codes::kChainBreak,
            "section " + std::to_string(i + 1) + " of map " + squote(map.id) +
                " starts from \"" + s.from + "\" but " + what + " is \"" +
                *expected + "\"" + near_miss_hint(s.from, *expected),
            doc.source_name, s.from_loc, map.id));
      }
      expected = &s.to;

      const Chunk* via = model.find_chunk(s.via.id);
      if (!via) continue;
      if (!via->guideline.intention) {
        diags.push_back(Diagnostic::make(
            codes::kIntentionCheckSkipped,
            "section " + std::to_string(i + 1) + " of map " + squote(map.id) +
                " not checked: intention of " + squote(via->id) +
                " is unreported",
            doc.source_name, s.to_loc, via->id));
        continue;
      }
      if (!intentions_equal(s.to, *via->guideline.intention)) {
        diags.push_back(Diagnostic::make(
            codes::kIntentionMismatch,
            "section " + std::to_string(i + 1) + " of map " + squote(map.id) +
                " targets \"" + s.to + "\" but chunk " + squote(via->id) +
                " has intention \"" + *via->guideline.intention + "\"" +
                near_miss_hint(s.to, *via->guideline.intention),
            doc.source_name, s.to_loc, via->id));
      }
    }
  }
  return diags;
}

std::vector<Diagnostic> check_transparency(const ResolvedModel& model) {
  const PipelineDocument& doc = model.document();
  const std::string& source = doc.source_name;
  std::vector<Diagnostic> diags;
  for (const auto& p : doc.products) {
    if (p.properties.empty()) {
      diags.push_back(Diagnostic::make(codes::kProductWithoutProperties,
                                       "product " + squote(p.id) +
                                           " declares no properties",
                                       source, p.loc, p.id));
    }
  }
  for (const auto& c : doc.chunks) {
    const Guideline& g = c.guideline;
    if (!g.intention) {
      diags.push_back(Diagnostic::make(
          codes::kUnreportedIntention,
          "intention of chunk " + squote(c.id) + " is unreported", source,
          g.intention_loc, c.id));
    }
    if (std::holds_alternative<Unreported>(g.strategy)) {
      diags.push_back(Diagnostic::make(
          codes::kUnreportedStrategy,
          "strategy of chunk " + squote(c.id) + " is unreported", source,
          g.strategy_loc, c.id));
    }
    const bool any_reported =
        std::any_of(g.hyperparameters.begin(), g.hyperparameters.end(),
                    [](const Property& p) { return !p.value.is_unreported(); });
    if (!any_reported) {
      diags.push_back(Diagnostic::make(
          codes::kNoHyperparameters,
          "chunk " + squote(c.id) + " reports no hyperparameter values", source,
          g.hyperparameters_loc, c.id));
    }
  }
  for (const auto& m : doc.maps) {
    for (std::size_t i = 0; i < m.sections.size(); ++i) {
      const Section& s = m.sections[i];
      std::string missing;
      if (!s.why_intention) missing = "why_intention";
      if (!s.why_strategy) {
        if (!missing.empty()) missing += " and ";
        missing += "why_strategy";
      }
      if (missing.empty()) continue;
      diags.push_back(Diagnostic::make(
          codes::kMissingSelectionGuideline,
          "section " + std::to_string(i + 1) + " of map " + squote(m.id) +
              " does not report " + missing,
          source, s.loc, m.id));
    }
  }
  return diags;
}

ValidationReport validate(const Resolution& resolution) {
  std::vector<Diagnostic> all = resolution.diagnostics;
  for (auto* check : {&check_structure, &check_product_flow, &check_maps,
                      &check_transparency}) {
    auto found = (*check)(resolution.model);
    all.insert(all.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  return ValidationReport::from(std::move(all));
}

ValidationReport validate(PipelineDocument doc,
                          std::shared_ptr<const Catalog> catalog) {
  return validate(resolve(std::move(doc), std::move(catalog)));
}

}  // namespace pdl
