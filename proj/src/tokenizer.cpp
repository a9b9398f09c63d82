#include "sentiflux/tokenizer.hpp"

#include <algorithm>
#include <unordered_set>

namespace sentiflux {

namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Non-ASCII bytes count as letters so multi-byte UTF-8 sequences stay inside
// one token instead of being shredded into separators.
bool is_word_char(unsigned char c) {
    return is_ascii_alnum(c) || c == '\'' || c >= 0x80;
}

bool is_mention_char(unsigned char c) { return is_ascii_alnum(c) || c == '_'; }

bool is_hashtag_char(unsigned char c) { return is_ascii_alnum(c) || c == '_' || c >= 0x80; }

bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
    }
    return out;
}

bool url_scheme_at(std::string_view text, std::size_t pos) {
    static constexpr std::string_view kHttp = "http://";
    static constexpr std::string_view kHttps = "https://";
    const auto matches = [&](std::string_view scheme) {
        if (text.size() - pos < scheme.size()) return false;
        for (std::size_t i = 0; i < scheme.size(); ++i) {
            char c = text[pos + i];
            if (c >= 'A' && c <= 'Z') c += 'a' - 'A';
            if (c != scheme[i]) return false;
        }
        return true;
    };
    return matches(kHttp) || matches(kHttps);
}

}  // namespace

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::Word: return "word";
        case TokenKind::Hashtag: return "hashtag";
        case TokenKind::Emoticon: return "emoticon";
        case TokenKind::Mention: return "mention";
        case TokenKind::Url: return "url";
    }
    return "?";
}

bool EmoticonSet::empty() const { return buckets_.empty(); }

EmoticonSet::EmoticonSet(std::span<const std::string> surfaces)
    : by_first_byte_(256, -1) {
    for (const std::string& s : surfaces) {
        if (s.empty()) continue;
        const unsigned char first = static_cast<unsigned char>(s.front());
        if (by_first_byte_[first] < 0) {
            by_first_byte_[first] = static_cast<int>(buckets_.size());
            buckets_.emplace_back();
        }
        buckets_[static_cast<std::size_t>(by_first_byte_[first])].push_back(s);
    }
    for (auto& bucket : buckets_) {
        std::sort(bucket.begin(), bucket.end(), [](const std::string& a, const std::string& b) {
            return a.size() != b.size() ? a.size() > b.size() : a < b;
        });
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
}

std::size_t EmoticonSet::longest_match(std::string_view text, std::size_t pos) const {
    if (by_first_byte_.empty() || pos >= text.size()) return 0;
    const int slot = by_first_byte_[static_cast<unsigned char>(text[pos])];
    if (slot < 0) return 0;
    for (const std::string& candidate : buckets_[static_cast<std::size_t>(slot)]) {
        if (text.compare(pos, candidate.size(), candidate) == 0) return candidate.size();
    }
    return 0;
}

std::vector<Token> tokenize(std::string_view raw, const EmoticonSet& emoticons) {
    std::vector<Token> tokens;
    const std::size_t n = raw.size();
    std::size_t pos = 0;
    std::size_t word_start = std::string_view::npos;

    const auto flush_word = [&](std::size_t end) {
        if (word_start == std::string_view::npos) return;
        Token t;
        t.kind = TokenKind::Word;
        t.surface = ascii_lower(raw.substr(word_start, end - word_start));
        t.begin = word_start;
        t.end = end;
        tokens.push_back(std::move(t));
        word_start = std::string_view::npos;
    };

    while (pos < n) {
        const unsigned char c = static_cast<unsigned char>(raw[pos]);

        if (url_scheme_at(raw, pos)) {
            flush_word(pos);
            std::size_t end = pos;
            while (end < n && !is_space(static_cast<unsigned char>(raw[end]))) ++end;
            tokens.push_back({TokenKind::Url, std::string(raw.substr(pos, end - pos)), pos, end});
            pos = end;
            continue;
        }

        if (c == '@' && pos + 1 < n && is_mention_char(static_cast<unsigned char>(raw[pos + 1]))) {
            flush_word(pos);
            std::size_t end = pos + 1;
            while (end < n && is_mention_char(static_cast<unsigned char>(raw[end]))) ++end;
            tokens.push_back(
                {TokenKind::Mention, std::string(raw.substr(pos + 1, end - pos - 1)), pos + 1, end});
            pos = end;
            continue;
        }

        if (c == '#' && pos + 1 < n && is_hashtag_char(static_cast<unsigned char>(raw[pos + 1]))) {
            flush_word(pos);
            std::size_t end = pos + 1;
            while (end < n && is_hashtag_char(static_cast<unsigned char>(raw[end]))) ++end;
            tokens.push_back(
                {TokenKind::Hashtag, ascii_lower(raw.substr(pos + 1, end - pos - 1)), pos + 1, end});
            pos = end;
            continue;
        }

        if (const std::size_t len = emoticons.longest_match(raw, pos); len > 0) {
            flush_word(pos);
            tokens.push_back(
                {TokenKind::Emoticon, std::string(raw.substr(pos, len)), pos, pos + len});
            pos += len;
            continue;
        }

        if (is_word_char(c)) {
            if (word_start == std::string_view::npos) word_start = pos;
            ++pos;
            continue;
        }

        flush_word(pos);
        ++pos;
    }
    flush_word(n);
    return tokens;
}

std::vector<std::string> extract_hashtags(std::span<const Token> tokens) {
    std::vector<std::string> out;
    std::unordered_set<std::string_view> seen;
    for (const Token& t : tokens) {
        if (t.kind != TokenKind::Hashtag) continue;
        if (seen.insert(t.surface).second) out.push_back(t.surface);
    }
    return out;
}

}  // namespace sentiflux
