#pragma once

#include <string>

namespace geomtl::log {

enum class Level { kQuiet = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Current level comes from the GEOMTL_LOG env var (quiet|warn|info|debug),
// default info. Resolved once on first use.
Level level();
void set_level(Level lvl);

void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace geomtl::log
