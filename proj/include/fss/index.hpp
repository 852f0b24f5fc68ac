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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fss/corpus.hpp"

namespace fss {

using ScId = std::uint32_t;

struct Authorship {
  std::uint32_t pub = 0;
  std::uint32_t position = 0;
};

/// Integer-keyed view over a validated corpus. Subject categories are
/// interned in ascending code order, so comparing ids compares codes.
/// Authorships of each professor are sorted by publication index, which
/// fixes the summation order for every per-professor reduction.
class CorpusIndex {
 public:
  /// Throws ReferenceError when a link names an unknown id.
  explicit CorpusIndex(const Corpus& corpus);

  const Corpus& corpus() const noexcept { return *corpus_; }
  const Config& config() const noexcept { return corpus_->config; }

  std::size_t professor_count() const noexcept { return corpus_->professors.size(); }
  std::size_t publication_count() const noexcept { return corpus_->publications.size(); }
  std::size_t sc_count() const noexcept { return sc_codes_.size(); }

  const ProfessorRecord& professor(std::size_t i) const { return corpus_->professors[i]; }
  const PublicationRecord& publication(std::size_t i) const { return corpus_->publications[i]; }

  std::span<const ScId> pub_scs(std::size_t pub) const {
    return {pub_sc_ids_.data() + pub_sc_offsets_[pub], pub_sc_offsets_[pub + 1] - pub_sc_offsets_[pub]};
  }
  std::span<const Authorship> authorships(std::size_t professor) const {
    return {links_.data() + link_offsets_[professor], link_offsets_[professor + 1] - link_offsets_[professor]};
  }

  /// Positional when any listed SC belongs to a positional discipline.
  OrderingConvention pub_convention(std::size_t pub) const { return pub_convention_[pub]; }

  const std::string& sc_code(ScId id) const { return sc_codes_[id]; }
  const SubjectCategory& sc_info(ScId id) const { return sc_info_[id]; }
  const std::vector<std::string>& sc_codes() const noexcept { return sc_codes_; }
  std::optional<ScId> find_sc(std::string_view code) const;

  std::optional<std::size_t> find_professor(std::string_view id) const;
  std::optional<std::size_t> find_publication(std::string_view id) const;

  /// Distinct roster countries, ascending.
  const std::vector<std::string>& countries() const noexcept { return countries_; }

  int window_start() const noexcept { return corpus_->config.analysis.window_start; }
  int window_years() const noexcept { return corpus_->config.analysis.window_years(); }

 private:
  const Corpus* corpus_;
  std::vector<std::string> sc_codes_;
  std::vector<SubjectCategory> sc_info_;
  std::unordered_map<std::string_view, ScId> sc_lookup_;
  std::vector<std::size_t> pub_sc_offsets_;
  std::vector<ScId> pub_sc_ids_;
  std::vector<OrderingConvention> pub_convention_;
  std::vector<std::size_t> link_offsets_;
  std::vector<Authorship> links_;
  std::unordered_map<std::string_view, std::size_t> professor_lookup_;
  std::unordered_map<std::string_view, std::size_t> pub_lookup_;
  std::vector<std::string> countries_;
};

}  // namespace fss
