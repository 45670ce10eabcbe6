#pragma once

#include <string>

#include "falpha/probability.hpp"

namespace falpha {

// File formats shared by the library and the CLI. Two encodings are accepted
// and detected by sniffing the first non-space byte:
//   JSON:  {"probs": [...]} for distributions, {"rows": [[...], ...]} for
//          channels
//   CSV:   comma-separated values, one row per line, no header; a
//          distribution is a single line

Distribution load_distribution(const std::string& path);
Channel load_channel(const std::string& path);

Distribution parse_distribution(const std::string& text,
                                const std::string& origin = "<input>");
Channel parse_channel(const std::string& text,
                      const std::string& origin = "<input>");

}  // namespace falpha
