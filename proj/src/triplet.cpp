#include "samu/triplet.hpp"

#include <cctype>
#include <stdexcept>

namespace samu {

std::string to_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

Triplet::Triplet(std::string subject, std::string predicate, std::string object)
    : s_(to_lower(subject)), p_(to_lower(predicate)), o_(to_lower(object)) {
  if (s_.empty() || p_.empty() || o_.empty())
    throw std::invalid_argument("triplet members must be non-empty");
}

std::string Triplet::statement() const { return s_ + "." + p_ + "(" + o_ + ");"; }

std::string Triplet::words() const { return s_ + " " + p_ + " " + o_; }

static int match_count(const Triplet& a, const Triplet& b) {
  return (a.s() == b.s()) + (a.p() == b.p()) + (a.o() == b.o());
}

double cmp(const Triplet& a, const Triplet& b) { return match_count(a, b) / 3.0; }

double reward_partial(const Triplet& actual, const Triplet& predicted) {
  // 3*cmp - 1.5, evaluated on the integer match count so the four possible
  // rewards come out exact.
  return match_count(actual, predicted) - 1.5;
}

double reward_strict(const Triplet& actual, const Triplet& predicted) {
  return actual == predicted ? 1.0 : -2.0;
}

static std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> preprocess_raw(std::string_view text) {
  std::string mapped;
  mapped.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '9') continue;
    if (c == '.' || c == ':' || c == ';') {
      mapped.push_back('\n');
      continue;
    }
    mapped.push_back(c);
  }
  std::vector<std::string> sentences;
  std::size_t pos = 0;
  while (pos <= mapped.size()) {
    std::size_t nl = mapped.find('\n', pos);
    if (nl == std::string::npos) nl = mapped.size();
    std::string_view line = trim(std::string_view(mapped).substr(pos, nl - pos));
    if (!line.empty()) sentences.emplace_back(line);
    pos = nl + 1;
  }
  return sentences;
}

}  // namespace samu
