/*
 * Copyright 2026 The spsmc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "spsmc/diagnostics.hpp"

#include <sstream>

namespace spsmc {

std::string to_string(const Diagnostic& diagnostic) {
  std::ostringstream out;
  out << (diagnostic.severity == Diagnostic::Severity::Error ? "error" : "warning");
  if (diagnostic.span.has_value()) {
    out << " at " << diagnostic.span->line << ":" << diagnostic.span->column;
  }
  out << ": " << diagnostic.message;
  return out.str();
}

}  // namespace spsmc
