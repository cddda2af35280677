#pragma once

#include <spdlog/spdlog.h>

namespace diffdim {

// stderr logger; level taken from DIFFDIM_LOG (trace, debug, info, warn, error, off), default warn
spdlog::logger& log();

} // namespace diffdim
