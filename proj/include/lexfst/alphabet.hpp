#ifndef LEXFST_ALPHABET_HPP
#define LEXFST_ALPHABET_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexfst {

using StateId = uint32_t;
using SymbolId = uint32_t;

/// A word over some alphabet, as a sequence of symbol ids.
using Word = std::vector<SymbolId>;

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// True if `token` is usable as a symbol or state name in the text formats:
/// nonempty, no whitespace, none of the characters reserved by the formats
/// ('#' opens comments, '.' joins output words, '-' denotes the empty word).
bool is_valid_token(std::string_view token);

/// An ordered, indexed set of symbol tokens. For weight alphabets the
/// position of a symbol is its rank: position 0 is the smallest weight.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    /// Appends a token; throws ValidationError on malformed or duplicate tokens.
    SymbolId add(std::string token);

    /// Appends a token bypassing the grammar check (duplicates still
    /// rejected). Used for the single-tape separator "#", which is kept
    /// outside the token grammar precisely so it can never collide with a
    /// user-declared symbol.
    SymbolId add_reserved(std::string token);

    std::optional<SymbolId> find(std::string_view token) const;

    /// Like find() but throws ValidationError if the token is absent.
    SymbolId require(std::string_view token) const;

    const std::string& token(SymbolId id) const { return tokens_.at(id); }
    size_t size() const { return tokens_.size(); }
    bool empty() const { return tokens_.empty(); }
    bool contains(SymbolId id) const { return id < tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
};

/// Renders a word as tokens joined by '.', or "-" for the empty word.
std::string format_word(const Alphabet& alphabet, const Word& word);

/// Parses a '.'-joined token list ("-" for the empty word) against `alphabet`.
Word parse_word(const Alphabet& alphabet, std::string_view text);

} // namespace lexfst

#endif
