#include "samu/corpus.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "samu/nlp.hpp"

namespace samu {

std::vector<Triplet> Corpus::prefix_triplets(std::size_t n_sentences) const {
  std::vector<Triplet> out;
  if (!by_sentence.empty()) {
    for (std::size_t i = 0; i < by_sentence.size() && i < n_sentences; ++i)
      out.insert(out.end(), by_sentence[i].begin(), by_sentence[i].end());
    return out;
  }
  for (std::size_t i = 0; i < triplets.size() && i < n_sentences; ++i)
    out.push_back(triplets[i]);
  return out;
}

std::vector<Triplet> read_triplet_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open triplet cache: " + path.string());
  std::vector<Triplet> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream is(line);
    std::string s, p, o, extra;
    if (!(is >> s >> p >> o) || (is >> extra))
      throw std::runtime_error(path.filename().string() + ":" +
                               std::to_string(lineno) + ": expected 'S P O'");
    out.emplace_back(s, p, o);
  }
  return out;
}

void write_triplet_cache(const std::filesystem::path& path,
                         const std::vector<Triplet>& triplets) {
  for (const Triplet& t : triplets) {
    for (const std::string* tok : {&t.s(), &t.p(), &t.o()})
      for (char c : *tok)
        if (std::isspace(static_cast<unsigned char>(c)))
          throw std::invalid_argument("triplet token contains whitespace: '" + *tok + "'");
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write triplet cache: " + path.string());
  for (const Triplet& t : triplets) out << t.words() << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Corpus load_corpus(const std::filesystem::path& sentence_file,
                   std::optional<std::filesystem::path> triplet_cache) {
  std::ifstream in(sentence_file);
  if (!in) throw std::runtime_error("cannot open corpus file: " + sentence_file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  // A linkage interchange file starts with a '#S ' record.
  bool linkage_format = false;
  {
    std::size_t pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text.compare(pos, 3, "#S ") == 0)
      linkage_format = true;
  }

  Corpus corpus;
  corpus.name = sentence_file.stem().string();

  std::vector<ParsedSentence> records;
  if (linkage_format) {
    std::istringstream is(text);
    records = read_linkages(is, sentence_file.filename().string());
    for (const ParsedSentence& rec : records) corpus.sentences.push_back(rec.sentence);
  } else {
    // drop '#' comment lines before the character substitutions run
    std::string filtered;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line[0] == '#') continue;
      filtered += line;
      filtered += '\n';
    }
    corpus.sentences = preprocess_raw(filtered);
  }

  if (triplet_cache && std::filesystem::exists(*triplet_cache)) {
    corpus.triplets = read_triplet_cache(*triplet_cache);
    return corpus;
  }

  if (linkage_format) {
    for (const ParsedSentence& rec : records) {
      corpus.by_sentence.push_back(sentence_triplets(rec));
      corpus.triplets.insert(corpus.triplets.end(), corpus.by_sentence.back().begin(),
                             corpus.by_sentence.back().end());
    }
    if (triplet_cache) write_triplet_cache(*triplet_cache, corpus.triplets);
    return corpus;
  }

  if (!corpus.sentences.empty())
    throw std::runtime_error("corpus '" + sentence_file.string() +
                             "' has no triplet source: provide a triplet cache or a "
                             "linkage interchange file");
  return corpus;
}

}  // namespace samu
