#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace krsx::textnorm {

// Lenient UTF-8 decoding: malformed byte sequences become U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(const std::u32string& scalars);

// Replaces the Unicode compatibility ligatures U+FB00..U+FB06 with their
// ASCII letter sequences. Everything else passes through. Idempotent.
std::string fold_ligatures(std::string_view text);

// Comparison form used by the scoring metrics and header matching:
// ligatures folded, diacritics stripped to base letters, lowercased,
// everything outside [a-z0-9] dropped. Idempotent.
std::string comparison_key(std::string_view text);

// Unit-cost edit distance over Unicode scalar values.
std::size_t levenshtein(std::string_view a, std::string_view b);

// 1 - distance / max(length); 1.0 when both strings are empty.
double similarity(std::string_view a, std::string_view b);

namespace detail {
// The two distance kernels behind levenshtein(). The bit-parallel one
// handles patterns up to 64 scalars; the rolling-row DP handles the rest.
// Exposed so the equivalence tests can drive each path directly.
std::size_t levenshtein_dp(const std::u32string& a, const std::u32string& b);
std::size_t levenshtein_bitparallel(const std::u32string& a, const std::u32string& b);
}  // namespace detail

}  // namespace krsx::textnorm
