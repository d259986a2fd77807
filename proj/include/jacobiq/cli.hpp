#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jacobiq::cli {

// args excludes the program name. Writes one JSON document (plus newline) to out.
// Exit codes: 0 success, 1 domain error, 2 parse or validation error.
int run(const std::vector<std::string>& args, std::ostream& out);

int run(int argc, char** argv, std::ostream& out);

// Accepts JSON with bare rational tokens such as [[3/2, -1]] or 0.25.
std::string normalize_lenient_json(const std::string& text);

}  // namespace jacobiq::cli
