#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace strkit::utf8 {

// Decodes UTF-8 into codepoints. Throws strkit::Error (invariant) on
// malformed sequences.
std::vector<char32_t> decode(std::string_view text);

std::string encode(char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

}  // namespace strkit::utf8
