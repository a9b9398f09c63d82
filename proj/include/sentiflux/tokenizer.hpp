#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sentiflux {

enum class TokenKind { Word, Hashtag, Emoticon, Mention, Url };

std::string_view to_string(TokenKind kind);

// One tokenizer output unit. `surface` is lowercased for Word/Hashtag and
// verbatim otherwise; hashtag and mention surfaces exclude their sigil.
// [begin, end) are byte offsets into the raw text covering the surface as it
// appeared (sigils excluded), so raw.substr(begin, end - begin) reproduces the
// pre-normalization surface.
struct Token {
    TokenKind kind = TokenKind::Word;
    std::string surface;
    std::size_t begin = 0;
    std::size_t end = 0;

    bool operator==(const Token&) const = default;
};

// Verbatim emoticon surfaces indexed for longest-match scanning. Built once
// from a lexicon's emoticon entries and shared by all tokenize calls.
class EmoticonSet {
public:
    EmoticonSet() = default;
    explicit EmoticonSet(std::span<const std::string> surfaces);

    // Length of the longest emoticon matching at text[pos..), 0 when none.
    std::size_t longest_match(std::string_view text, std::size_t pos) const;

    bool empty() const;

private:
    // Per leading byte, candidate surfaces sorted by descending length.
    std::vector<std::vector<std::string>> buckets_;
    std::vector<int> by_first_byte_;  // 256 slots, -1 = no bucket
};

// Splits raw tweet text into non-overlapping tokens, left to right. Matching
// priority at each position: url, mention, hashtag, longest emoticon, word.
// Everything else is a separator. Never fails; empty input gives no tokens.
std::vector<Token> tokenize(std::string_view raw, const EmoticonSet& emoticons);

// Distinct hashtag surfaces in first-occurrence order.
std::vector<std::string> extract_hashtags(std::span<const Token> tokens);

}  // namespace sentiflux
