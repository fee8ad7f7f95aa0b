#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "samu/triplet.hpp"

namespace samu {

/// An ordered training text: raw sentences plus the triplet stream read
/// from them. `by_sentence` keeps the sentence/triplet alignment when the
/// triplets were extracted here; it is empty when they came from a cache.
struct Corpus {
  std::string name;
  std::vector<std::string> sentences;
  std::vector<Triplet> triplets;
  std::vector<std::vector<Triplet>> by_sentence;

  /// Triplets of the first `n_sentences` sentences (all of them when the
  /// alignment is unknown and n_sentences covers the corpus; otherwise the
  /// first n_sentences triplets, one sentence per triplet being the best
  /// guess for cache-loaded corpora).
  std::vector<Triplet> prefix_triplets(std::size_t n_sentences) const;
};

/// Loads a corpus. The file may be either a plain sentence file (one
/// sentence per line; '#'-prefixed lines are comments; the preprocessing
/// substitutions are applied) or a linkage interchange file ('#S' records),
/// in which case triplets are extracted from the linkages.
///
/// When `triplet_cache` names an existing file the triplets are read from
/// it instead of being extracted; when it names a missing file and
/// extraction ran, the extracted triplets are written back to it.
Corpus load_corpus(const std::filesystem::path& sentence_file,
                   std::optional<std::filesystem::path> triplet_cache = std::nullopt);

/// Cache format: one `S P O` line per triplet.
std::vector<Triplet> read_triplet_cache(const std::filesystem::path& path);
void write_triplet_cache(const std::filesystem::path& path,
                         const std::vector<Triplet>& triplets);

}  // namespace samu
