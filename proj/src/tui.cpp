#include "samu/tui.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <istream>
#include <ostream>

#include <sys/ioctl.h>
#include <unistd.h>

namespace samu {

std::string render_imagery_pane(const MentalImage& img) {
  if (img.rows == kCharRows && img.cols == kCharCols) return char_dump(img);
  // pixel image: block preview, one cell per 26x4-ish pixel tile
  std::string out;
  const int rows = kCharRows, cols = kCharCols;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int y0 = r * img.rows / rows, y1 = (r + 1) * img.rows / rows;
      const int x0 = c * img.cols / cols, x1 = (c + 1) * img.cols / cols;
      double sum = 0.0;
      int count = 0;
      for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x) {
          sum += img.at(y, x);
          ++count;
        }
      const double mean = count ? sum / count : 0.0;
      out.push_back(mean > 0.125 ? '#' : (mean > 0.0 ? '.' : ' '));
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

struct TermSize {
  int rows = 24;
  int cols = 80;
};

TermSize terminal_size() {
  TermSize size;
  winsize ws{};
  if (ioctl(STDOUT_FILENO, TIOCGWINSZ, &ws) == 0 && ws.ws_row > 0 && ws.ws_col > 0) {
    size.rows = ws.ws_row;
    size.cols = ws.ws_col;
  }
  return size;
}

void repaint(AgentSession& session, std::ostream& out,
             const std::deque<std::string>& scrollback) {
  const TermSize size = terminal_size();
  out << "\x1b[H\x1b[2J";
  out << render_imagery_pane(session.brain().image());
  const std::string rule(static_cast<std::size_t>(std::max(10, size.cols)), '-');
  out << rule << '\n';
  // imagery (10) + two rules + input line
  const int middle = std::max(1, size.rows - kCharRows - 3);
  const std::size_t take = std::min<std::size_t>(scrollback.size(), middle);
  for (std::size_t i = scrollback.size() - take; i < scrollback.size(); ++i)
    out << scrollback[i] << '\n';
  for (std::size_t i = take; i < static_cast<std::size_t>(middle); ++i) out << '\n';
  out << rule << '\n';
  out << session.caregiver() << "@Caregiver> " << std::flush;
}

}  // namespace

int run_tui(AgentSession& session, std::istream& in, std::ostream& out, bool interactive) {
  std::deque<std::string> scrollback;
  std::string line;
  if (interactive) repaint(session, out, scrollback);
  while (true) {
    if (!interactive) out << session.caregiver() << "@Caregiver> " << std::flush;
    if (!std::getline(in, line)) {
      // EOF, or a termination signal interrupted the read
      session.save();
      out << '\n';
      return 0;
    }
    if (signal_pending()) {
      session.save();
      return 0;
    }
    const std::string echoed = session.caregiver() + "@Caregiver> " + line;
    const AgentResponse res = session.handle_line(line);
    const std::string reply = session.format_prompt() + " " + res.text;
    if (interactive) {
      scrollback.push_back(echoed);
      if (!res.text.empty()) scrollback.push_back(reply);
      while (scrollback.size() > 1000) scrollback.pop_front();
    } else {
      out << echoed << '\n';
      if (!res.text.empty()) out << reply << '\n';
    }
    if (res.quit) {
      session.save();
      if (interactive) out << "\x1b[H\x1b[2J" << std::flush;
      return 0;
    }
    if (interactive) repaint(session, out, scrollback);
  }
}

}  // namespace samu
