#include "liftcut/log.hpp"

namespace liftcut {

namespace {
std::ostream* g_warning_stream = &std::cerr;
}

void set_warning_stream(std::ostream* out) { g_warning_stream = out; }

std::ostream* warning_stream() { return g_warning_stream; }

void warn(const std::string& message) {
    if (g_warning_stream) *g_warning_stream << "warning: " << message << '\n';
}

} // namespace liftcut
