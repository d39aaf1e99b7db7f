#include "schrome/error.hpp"

#include <cstdlib>

namespace schrome {

bool guard_override() {
    const char* v = std::getenv("SCHROME_GUARD_OVERRIDE");
    return v != nullptr && *v != '\0';
}

void guard(bool cond, const std::string& msg) {
    if (!cond && !guard_override())
        throw GuardExceeded(msg + " (set SCHROME_GUARD_OVERRIDE to lift)");
}

}  // namespace schrome
