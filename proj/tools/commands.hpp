#ifndef CRJET_TOOLS_COMMANDS_HPP
#define CRJET_TOOLS_COMMANDS_HPP

#include "job.hpp"

namespace crjet::cli {

void run_classify(Report& r);
void run_invariant(Report& r);
void run_frame(Report& r);
void run_darboux(Report& r);
void run_jets(Report& r);
void run_siu_yeung(Report& r);
void run_egregium(Report& r);
void run_presets(Report& r);

} // namespace crjet::cli

#endif
