#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "samu/triplet.hpp"

namespace samu {

/// One grammatical link between two word positions of a sentence.
/// `link_word` is the token the upstream parser associates with the link
/// itself; externalising it keeps the engine parser-neutral.
struct Link {
  std::string label;
  int left = 0;
  int right = 0;
  std::string link_word;

  friend bool operator==(const Link&, const Link&) = default;
};

struct Linkage {
  std::vector<std::string> words;
  std::vector<Link> links;

  friend bool operator==(const Linkage&, const Linkage&) = default;
};

struct ParsedSentence {
  std::string sentence;
  std::vector<Linkage> linkages;

  friend bool operator==(const ParsedSentence&, const ParsedSentence&) = default;
};

/// Walks the links in order. A label starting with 'S' proposes subject and
/// predicate (the link word, with the link's right word as an alternative);
/// a label starting with 'O' supplies the object and emits a triplet when the
/// pending predicate matches the link's left word. Duplicates are kept.
std::vector<Triplet> extract_triplets(const Linkage& linkage);

/// Triplets of one sentence: all linkages extracted in order, concatenated,
/// then deduplicated (first occurrence wins).
std::vector<Triplet> sentence_triplets(const ParsedSentence& parsed);

// Linkage interchange files. One record per sentence:
//   #S <sentence>
//   #L                       (one per linkage)
//   <label> <left> <right> <link_word>   (one per link)
//   <blank line>             (terminates the record)
// Words are the whitespace-split tokens of the #S line.
std::vector<ParsedSentence> read_linkages(std::istream& in, const std::string& name);
std::vector<ParsedSentence> read_linkage_file(const std::filesystem::path& path);
void write_linkages(std::ostream& out, const std::vector<ParsedSentence>& records);
void write_linkage_file(const std::filesystem::path& path,
                        const std::vector<ParsedSentence>& records);

/// Thin adapter: CoNLL-U dependency rows to linkage records. Subject
/// relations (nsubj/csubj) become S links, object relations (obj/iobj/dobj)
/// become O links; the head's form is used as the link word.
std::vector<ParsedSentence> conllu_to_linkages(std::istream& in, const std::string& name);

}  // namespace samu
