/*
 * Copyright 2026 The FSS Analytics Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fss/index.hpp"

#include <algorithm>
#include <set>

namespace fss {

CorpusIndex::CorpusIndex(const Corpus& corpus) : corpus_(&corpus) {
  const auto& pubs = corpus.publications;
  const auto& profs = corpus.professors;

  std::set<std::string_view> codes;
  for (const auto& p : pubs) codes.insert(p.sc_list.begin(), p.sc_list.end());
  sc_codes_.assign(codes.begin(), codes.end());
  sc_info_.reserve(sc_codes_.size());
  for (ScId id = 0; id < sc_codes_.size(); ++id) {
    sc_info_.push_back(corpus.config.subject_category(sc_codes_[id]));
  }
  for (ScId id = 0; id < sc_codes_.size(); ++id) sc_lookup_.emplace(sc_codes_[id], id);

  pub_sc_offsets_.reserve(pubs.size() + 1);
  pub_sc_offsets_.push_back(0);
  pub_convention_.reserve(pubs.size());
  for (std::size_t i = 0; i < pubs.size(); ++i) {
    auto convention = OrderingConvention::alphabetical;
    for (const auto& code : pubs[i].sc_list) {
      const ScId id = sc_lookup_.at(code);
      pub_sc_ids_.push_back(id);
      if (sc_info_[id].convention == OrderingConvention::positional) convention = OrderingConvention::positional;
    }
    pub_sc_offsets_.push_back(pub_sc_ids_.size());
    pub_convention_.push_back(convention);
    pub_lookup_.emplace(pubs[i].pub_id, i);
  }

  std::set<std::string> countries;
  for (std::size_t i = 0; i < profs.size(); ++i) {
    professor_lookup_.emplace(profs[i].professor_id, i);
    countries.insert(profs[i].country);
  }
  countries_.assign(countries.begin(), countries.end());

  // Counting sort of links by professor, then by publication index.
  std::vector<std::uint32_t> link_prof(corpus.links.size());
  std::vector<Authorship> resolved(corpus.links.size());
  link_offsets_.assign(profs.size() + 1, 0);
  for (std::size_t i = 0; i < corpus.links.size(); ++i) {
    const auto& l = corpus.links[i];
    auto prof = professor_lookup_.find(l.professor_id);
    if (prof == professor_lookup_.end()) throw ReferenceError(l.professor_id);
    auto pub = pub_lookup_.find(l.pub_id);
    if (pub == pub_lookup_.end()) throw ReferenceError(l.pub_id);
    link_prof[i] = static_cast<std::uint32_t>(prof->second);
    resolved[i] = {static_cast<std::uint32_t>(pub->second), static_cast<std::uint32_t>(l.position)};
    ++link_offsets_[prof->second + 1];
  }
  for (std::size_t i = 0; i < profs.size(); ++i) link_offsets_[i + 1] += link_offsets_[i];
  links_.resize(corpus.links.size());
  std::vector<std::size_t> cursor(link_offsets_.begin(), link_offsets_.end() - 1);
  for (std::size_t i = 0; i < corpus.links.size(); ++i) links_[cursor[link_prof[i]]++] = resolved[i];
  for (std::size_t p = 0; p < profs.size(); ++p) {
    std::sort(links_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[p]),
              links_.begin() + static_cast<std::ptrdiff_t>(link_offsets_[p + 1]),
              [](const Authorship& a, const Authorship& b) { return a.pub < b.pub; });
  }
}

std::optional<ScId> CorpusIndex::find_sc(std::string_view code) const {
  auto it = sc_lookup_.find(code);
  if (it == sc_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CorpusIndex::find_professor(std::string_view id) const {
  auto it = professor_lookup_.find(id);
  if (it == professor_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> CorpusIndex::find_publication(std::string_view id) const {
  auto it = pub_lookup_.find(id);
  if (it == pub_lookup_.end()) return std::nullopt;
  return it->second;
}

}  // namespace fss
