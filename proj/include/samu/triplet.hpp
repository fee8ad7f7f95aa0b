#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace samu {

/// One Subject-Predicate-Object word triple. The same type serves as the
/// unit of perception (what was just read) and as an action (a prediction
/// of what comes next). Tokens are folded to lower case on construction so
/// that equality, and therefore rewards, ignore source-text capitalisation.
class Triplet {
public:
  Triplet(std::string subject, std::string predicate, std::string object);

  const std::string& s() const { return s_; }
  const std::string& p() const { return p_; }
  const std::string& o() const { return o_; }

  /// "s.p(o);" — the statement form used by the visual imagery.
  std::string statement() const;
  /// "s p o" — the plain space-joined form used by logs and caches.
  std::string words() const;

  friend bool operator==(const Triplet&, const Triplet&) = default;
  friend auto operator<=>(const Triplet&, const Triplet&) = default;

private:
  std::string s_, p_, o_;
};

std::string to_lower(std::string_view text);

/// Fraction of positionally matching members: one of 0, 1/3, 2/3, 1.
double cmp(const Triplet& a, const Triplet& b);

/// Graded reward 3*cmp(actual, predicted) - 1.5, in [-1.5, +1.5].
double reward_partial(const Triplet& actual, const Triplet& predicted);

/// All-or-nothing reward: +1.0 on exact equality, -2.0 otherwise.
double reward_strict(const Triplet& actual, const Triplet& predicted);

/// Sentence splitting for raw text: '.', ':' and ';' become line breaks,
/// decimal digits are deleted, lines are trimmed and empty lines dropped.
std::vector<std::string> preprocess_raw(std::string_view text);

}  // namespace samu
