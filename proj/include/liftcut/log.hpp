#pragma once

#include <iostream>

namespace liftcut {

/// Sink for configuration/input warnings. Defaults to stderr; tests may
/// redirect or silence it. Pass nullptr to suppress warnings.
void set_warning_stream(std::ostream* out);
std::ostream* warning_stream();

void warn(const std::string& message);

} // namespace liftcut
