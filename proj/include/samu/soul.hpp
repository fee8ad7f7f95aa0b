#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "samu/triplet.hpp"

namespace samu {

/// Everything the engine needs to shut down and come back identical:
/// hyperparameters, one weight block per action, and the optional runtime
/// sections (frequency table, lookup-table entries, statement window,
/// previous step, LZW tree).
///
/// Text format:
///   SAMU-SOUL 1
///   key=value key=value ...
///   ACTION <s> <p> <o> <n_in> <n_hidden>
///   <n_hidden rows of n_in input weights>
///   <one row of n_hidden output weights>
///   [<one row of n_hidden hidden biases> and <one output bias>, if bias=1]
///   END
///   FREQ <hex state key> <s> <p> <o> <count>
///   QTAB <hex state key> <s> <p> <o> <value>
///   WINDOW <s> <p> <o>
///   PREV <s> <p> <o> <reward>
///   LZW <depth> <s> <p> <o>          (pre-order)
///   LZWCURSOR <n> <s p o>*n
/// Weights are written with 17 significant digits so doubles round-trip
/// exactly.
struct SoulFile {
  struct ActionNet {
    Triplet action;
    int n_in = 0;
    int n_hidden = 0;
    std::vector<double> w_ih;
    std::vector<double> w_ho;
    std::vector<double> b_h;  // empty when bias is off
    double b_o = 0.0;
  };
  struct FreqEntry {
    std::uint64_t state = 0;
    Triplet action;
    std::uint64_t count = 0;
  };
  struct TableEntry {
    std::uint64_t state = 0;
    Triplet action;
    double value = 0.0;
  };
  struct PrevEntry {
    Triplet action;
    double reward = 0.0;
  };

  std::map<std::string, std::string> params;
  std::vector<ActionNet> actions;
  std::vector<FreqEntry> freq;
  std::vector<TableEntry> table;
  std::vector<Triplet> window;
  std::optional<PrevEntry> prev;
  std::vector<std::pair<int, Triplet>> lzw;
  std::vector<Triplet> lzw_cursor;
};

void write_soul(std::ostream& out, const SoulFile& soul);
SoulFile read_soul(std::istream& in, const std::string& name);

/// Atomic save: writes to a temporary sibling first, then renames.
void save_soul(const std::filesystem::path& path, const SoulFile& soul);
SoulFile load_soul(const std::filesystem::path& path);

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_weight(double value);

}  // namespace samu
