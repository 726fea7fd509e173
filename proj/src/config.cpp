#include "mforge/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace mforge {

Budget Budget::from_env() {
    Budget b;
    if (const char* s = std::getenv("MFORGE_BUDGET_STATES"); s != nullptr && *s != '\0') {
        b.max_states = static_cast<std::size_t>(std::stoull(s));
    }
    if (const char* s = std::getenv("MFORGE_JOBS"); s != nullptr && *s != '\0') {
        b.jobs = std::max(1, std::stoi(s));
    }
    return b;
}

} // namespace mforge
