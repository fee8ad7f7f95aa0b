#include "samu/nlp.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace samu {

std::vector<Triplet> extract_triplets(const Linkage& linkage) {
  std::vector<Triplet> out;
  std::string s, p, o, alter_p;
  for (const Link& link : linkage.links) {
    if (link.label.empty()) continue;
    if (link.label[0] == 'S') {
      p = link.link_word;
      alter_p = linkage.words.at(link.right);
      s = linkage.words.at(link.left);
    }
    if (link.label[0] == 'O') {
      o = linkage.words.at(link.right);
      const std::string& left_word = linkage.words.at(link.left);
      if (!p.empty() && p == left_word) {
        out.emplace_back(s, p, o);
      } else if (!alter_p.empty() && alter_p == left_word) {
        p = alter_p;
        out.emplace_back(s, p, o);
      }
    }
  }
  return out;
}

std::vector<Triplet> sentence_triplets(const ParsedSentence& parsed) {
  std::vector<Triplet> out;
  for (const Linkage& lk : parsed.linkages)
    for (Triplet& t : extract_triplets(lk))
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
  return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

std::vector<ParsedSentence> read_linkages(std::istream& in, const std::string& name) {
  std::vector<ParsedSentence> records;
  ParsedSentence current;
  bool in_record = false;
  std::string line;
  int lineno = 0;
  auto flush = [&] {
    if (in_record) {
      records.push_back(std::move(current));
      current = {};
      in_record = false;
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t'))
      trimmed.pop_back();
    if (trimmed.empty()) {
      flush();
      continue;
    }
    if (trimmed.rfind("#S ", 0) == 0) {
      flush();
      current.sentence = trimmed.substr(3);
      if (current.sentence.empty()) fail(name, lineno, "empty sentence after #S");
      in_record = true;
      continue;
    }
    if (trimmed == "#L") {
      if (!in_record) fail(name, lineno, "#L outside of a sentence record");
      current.linkages.emplace_back();
      current.linkages.back().words = split_ws(current.sentence);
      continue;
    }
    if (!in_record || current.linkages.empty())
      fail(name, lineno, "link line outside of a linkage (missing #S/#L?)");
    auto toks = split_ws(trimmed);
    if (toks.size() != 4)
      fail(name, lineno, "expected '<label> <left> <right> <link_word>'");
    Link link;
    link.label = toks[0];
    link.link_word = toks[3];
    auto parse_index = [&](const std::string& tok, int& value) {
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
        fail(name, lineno, "bad word index '" + tok + "'");
    };
    parse_index(toks[1], link.left);
    parse_index(toks[2], link.right);
    const auto nwords = static_cast<int>(current.linkages.back().words.size());
    if (link.left >= nwords || link.right >= nwords)
      fail(name, lineno, "word index out of range");
    if (link.left >= link.right) fail(name, lineno, "link must satisfy left < right");
    current.linkages.back().links.push_back(std::move(link));
  }
  flush();
  return records;
}

std::vector<ParsedSentence> read_linkage_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open linkage file: " + path.string());
  return read_linkages(in, path.filename().string());
}

void write_linkages(std::ostream& out, const std::vector<ParsedSentence>& records) {
  auto single_token = [](const std::string& s) {
    return !s.empty() && s.find_first_of(" \t\r\n") == std::string::npos;
  };
  for (const ParsedSentence& rec : records) {
    if (rec.sentence.empty() || rec.sentence.find('\n') != std::string::npos)
      throw std::invalid_argument("sentence must be a non-empty single line");
    out << "#S " << rec.sentence << '\n';
    const auto words = split_ws(rec.sentence);
    for (const Linkage& lk : rec.linkages) {
      if (lk.words != words)
        throw std::invalid_argument("linkage words must match the sentence tokens");
      out << "#L\n";
      for (const Link& link : lk.links) {
        if (!single_token(link.label) || !single_token(link.link_word))
          throw std::invalid_argument("link label and link word must be single tokens");
        if (link.left < 0 || link.right >= static_cast<int>(words.size()) ||
            link.left >= link.right)
          throw std::invalid_argument("link indices out of range");
        out << link.label << ' ' << link.left << ' ' << link.right << ' '
            << link.link_word << '\n';
      }
    }
    out << '\n';
  }
}

void write_linkage_file(const std::filesystem::path& path,
                        const std::vector<ParsedSentence>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write linkage file: " + path.string());
  write_linkages(out, records);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

struct ConlluRow {
  int id = 0;
  std::string form;
  int head = 0;
  std::string deprel;
};

bool subject_rel(const std::string& r) {
  return r.rfind("nsubj", 0) == 0 || r.rfind("csubj", 0) == 0;
}

bool object_rel(const std::string& r) {
  return r.rfind("obj", 0) == 0 || r.rfind("dobj", 0) == 0 || r.rfind("iobj", 0) == 0;
}

}  // namespace

std::vector<ParsedSentence> conllu_to_linkages(std::istream& in, const std::string& name) {
  std::vector<ParsedSentence> records;
  std::vector<ConlluRow> rows;
  std::string text;
  std::string line;
  int lineno = 0;

  auto flush = [&] {
    if (rows.empty()) return;
    ParsedSentence rec;
    Linkage lk;
    for (const ConlluRow& r : rows) lk.words.push_back(r.form);
    struct Cand {
      int head;
      int rank;  // S before O under the same head
      int dep;
      Link link;
    };
    std::vector<Cand> cands;
    for (const ConlluRow& r : rows) {
      if (r.head <= 0 || r.head > static_cast<int>(rows.size())) continue;
      const bool subj = subject_rel(r.deprel);
      const bool obj = !subj && object_rel(r.deprel);
      if (!subj && !obj) continue;
      Link link;
      link.label = subj ? "Ss" : "Os";
      link.left = std::min(r.id, r.head) - 1;
      link.right = std::max(r.id, r.head) - 1;
      link.link_word = rows[static_cast<std::size_t>(r.head) - 1].form;
      if (link.left >= link.right) continue;
      cands.push_back({r.head, subj ? 0 : 1, r.id, std::move(link)});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.head != b.head) return a.head < b.head;
      if (a.rank != b.rank) return a.rank < b.rank;
      return a.dep < b.dep;
    });
    for (Cand& c : cands) lk.links.push_back(std::move(c.link));
    if (!text.empty()) {
      // words in the record come from the sentence line, so it must tokenise
      // to the same forms; fall back to the joined forms when it does not
      if (split_ws(text) != lk.words) text.clear();
    }
    if (text.empty()) {
      for (std::size_t i = 0; i < lk.words.size(); ++i) {
        if (i) text += ' ';
        text += lk.words[i];
      }
    }
    rec.sentence = text;
    rec.linkages.push_back(std::move(lk));
    records.push_back(std::move(rec));
    rows.clear();
    text.clear();
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      const std::string key = "# text =";
      if (line.rfind(key, 0) == 0) {
        text = line.substr(key.size());
        while (!text.empty() && text.front() == ' ') text.erase(text.begin());
      }
      continue;
    }
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) tab = line.size();
      cols.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (cols.size() < 8) fail(name, lineno, "expected at least 8 tab-separated columns");
    ConlluRow row;
    {
      const std::string& tok = cols[0];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), row.id);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) continue;  // ranges, empty nodes
    }
    row.form = cols[1];
    {
      const std::string& tok = cols[6];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), row.head);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(name, lineno, "bad HEAD column '" + tok + "'");
    }
    row.deprel = cols[7];
    if (row.form.empty()) fail(name, lineno, "empty FORM column");
    rows.push_back(std::move(row));
  }
  flush();
  return records;
}

}  // namespace samu
