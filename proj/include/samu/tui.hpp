#pragma once

#include <iosfwd>
#include <string>

#include "samu/agent.hpp"
#include "samu/imagery.hpp"

namespace samu {

/// Character grid of a char-mode image for the imagery pane; pixel images
/// get a downsampled block preview.
std::string render_imagery_pane(const MentalImage& img);

/// Fig.-5-style terminal loop: imagery pane on top, responses in the
/// middle, input line at the bottom. With `interactive` false (or when the
/// streams are not a terminal) it degrades to a plain line-mode REPL with
/// identical semantics, which is also the scriptable test surface.
/// Returns the process exit status; the soul is saved on quit, EOF and
/// termination signals.
int run_tui(AgentSession& session, std::istream& in, std::ostream& out, bool interactive);

}  // namespace samu
