#include "samu/soul.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace samu {

std::string format_weight(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

namespace {

void write_triplet(std::ostream& out, const Triplet& t) {
  for (const std::string* tok : {&t.s(), &t.p(), &t.o()})
    if (tok->find_first_of(" \t\r\n") != std::string::npos)
      throw std::invalid_argument("triplet token contains whitespace: '" + *tok + "'");
  out << t.s() << ' ' << t.p() << ' ' << t.o();
}

void write_row(std::ostream& out, const double* values, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out << ' ';
    out << format_weight(values[i]);
  }
  out << '\n';
}

// Whitespace tokenizer that remembers line numbers for error messages.
class TokenStream {
public:
  TokenStream(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

  std::optional<std::string> next() {
    while (buffer_.empty()) {
      if (!std::getline(in_, line_)) return std::nullopt;
      ++lineno_;
      std::istringstream is(line_);
      std::string tok;
      while (is >> tok) buffer_.push_back(std::move(tok));
      pos_ = 0;
    }
    std::string tok = std::move(buffer_[pos_]);
    if (++pos_ == buffer_.size()) buffer_.clear();
    return tok;
  }

  std::string expect(const char* what) {
    auto tok = next();
    if (!tok) fail(std::string("unexpected end of file, expected ") + what);
    return *tok;
  }

  double expect_double(const char* what) {
    const std::string tok = expect(what);
    double value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail("bad number '" + tok + "' for " + what);
    return value;
  }

  std::uint64_t expect_u64(const char* what, int base = 10) {
    const std::string tok = expect(what);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, base);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail("bad count '" + tok + "' for " + what);
    return value;
  }

  Triplet expect_triplet(const char* what) {
    std::string s = expect(what);
    std::string p = expect(what);
    std::string o = expect(what);
    return Triplet(std::move(s), std::move(p), std::move(o));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error(name_ + ":" + std::to_string(lineno_) + ": " + msg);
  }

private:
  std::istream& in_;
  std::string name_;
  std::string line_;
  std::vector<std::string> buffer_;
  std::size_t pos_ = 0;
  int lineno_ = 0;
};

}  // namespace

void write_soul(std::ostream& out, const SoulFile& soul) {
  out << "SAMU-SOUL 1\n";
  bool first = true;
  for (const auto& [k, v] : soul.params) {
    if (!first) out << ' ';
    out << k << '=' << v;
    first = false;
  }
  out << '\n';
  for (const auto& net : soul.actions) {
    out << "ACTION ";
    write_triplet(out, net.action);
    out << ' ' << net.n_in << ' ' << net.n_hidden << '\n';
    for (int j = 0; j < net.n_hidden; ++j)
      write_row(out, net.w_ih.data() + static_cast<std::size_t>(j) * net.n_in,
                static_cast<std::size_t>(net.n_in));
    write_row(out, net.w_ho.data(), net.w_ho.size());
    if (!net.b_h.empty()) {
      write_row(out, net.b_h.data(), net.b_h.size());
      out << format_weight(net.b_o) << '\n';
    }
    out << "END\n";
  }
  char hex[32];
  for (const auto& e : soul.freq) {
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(e.state));
    out << "FREQ " << hex << ' ';
    write_triplet(out, e.action);
    out << ' ' << e.count << '\n';
  }
  for (const auto& e : soul.table) {
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(e.state));
    out << "QTAB " << hex << ' ';
    write_triplet(out, e.action);
    out << ' ' << format_weight(e.value) << '\n';
  }
  for (const Triplet& t : soul.window) {
    out << "WINDOW ";
    write_triplet(out, t);
    out << '\n';
  }
  if (soul.prev) {
    out << "PREV ";
    write_triplet(out, soul.prev->action);
    out << ' ' << format_weight(soul.prev->reward) << '\n';
  }
  for (const auto& [depth, t] : soul.lzw) {
    out << "LZW " << depth << ' ';
    write_triplet(out, t);
    out << '\n';
  }
  if (!soul.lzw_cursor.empty()) {
    out << "LZWCURSOR " << soul.lzw_cursor.size();
    for (const Triplet& t : soul.lzw_cursor) {
      out << ' ';
      write_triplet(out, t);
    }
    out << '\n';
  }
}

SoulFile read_soul(std::istream& in, const std::string& name) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error(name + ":1: empty soul file");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != "SAMU-SOUL 1")
    throw std::runtime_error(name + ":1: unsupported soul version '" + header + "'");
  std::string params_line;
  if (!std::getline(in, params_line))
    throw std::runtime_error(name + ":2: missing hyperparameter line");

  SoulFile soul;
  {
    std::istringstream is(params_line);
    std::string tok;
    while (is >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0)
        throw std::runtime_error(name + ":2: expected key=value, got '" + tok + "'");
      soul.params[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
  }

  TokenStream ts(in, name);
  while (auto section = ts.next()) {
    if (*section == "ACTION") {
      SoulFile::ActionNet net{ts.expect_triplet("ACTION triplet"), 0, 0, {}, {}, {}, 0.0};
      net.n_in = static_cast<int>(ts.expect_u64("n_in"));
      net.n_hidden = static_cast<int>(ts.expect_u64("n_hidden"));
      if (net.n_in < 1 || net.n_hidden < 1) ts.fail("bad perceptron dimensions");
      const std::size_t n_ih = static_cast<std::size_t>(net.n_in) * net.n_hidden;
      net.w_ih.reserve(n_ih);
      for (std::size_t i = 0; i < n_ih; ++i)
        net.w_ih.push_back(ts.expect_double("input weight"));
      for (int j = 0; j < net.n_hidden; ++j)
        net.w_ho.push_back(ts.expect_double("output weight"));
      const bool bias = soul.params.count("mlp_bias") && soul.params.at("mlp_bias") == "1";
      if (bias) {
        for (int j = 0; j < net.n_hidden; ++j)
          net.b_h.push_back(ts.expect_double("hidden bias"));
        net.b_o = ts.expect_double("output bias");
      }
      const std::string end = ts.expect("END");
      if (end != "END") ts.fail("expected END after weights, got '" + end + "'");
      soul.actions.push_back(std::move(net));
    } else if (*section == "FREQ") {
      const std::uint64_t key = ts.expect_u64("state key", 16);
      Triplet action = ts.expect_triplet("FREQ triplet");
      const std::uint64_t count = ts.expect_u64("count");
      soul.freq.push_back({key, std::move(action), count});
    } else if (*section == "QTAB") {
      const std::uint64_t key = ts.expect_u64("state key", 16);
      Triplet action = ts.expect_triplet("QTAB triplet");
      const double value = ts.expect_double("value");
      soul.table.push_back({key, std::move(action), value});
    } else if (*section == "WINDOW") {
      soul.window.push_back(ts.expect_triplet("WINDOW triplet"));
    } else if (*section == "PREV") {
      Triplet action = ts.expect_triplet("PREV triplet");
      const double reward = ts.expect_double("reward");
      soul.prev = SoulFile::PrevEntry{std::move(action), reward};
    } else if (*section == "LZW") {
      const int depth = static_cast<int>(ts.expect_u64("depth"));
      soul.lzw.emplace_back(depth, ts.expect_triplet("LZW triplet"));
    } else if (*section == "LZWCURSOR") {
      const std::uint64_t n = ts.expect_u64("cursor length");
      for (std::uint64_t i = 0; i < n; ++i)
        soul.lzw_cursor.push_back(ts.expect_triplet("cursor triplet"));
    } else {
      ts.fail("unknown soul section '" + *section + "'");
    }
  }
  return soul;
}

void save_soul(const std::filesystem::path& path, const SoulFile& soul) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write soul file: " + tmp.string());
    write_soul(out, soul);
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SoulFile load_soul(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open soul file: " + path.string());
  return read_soul(in, path.filename().string());
}

}  // namespace samu
