#include "lexfst/alphabet.hpp"

#include <cctype>
#include <sstream>

namespace lexfst {

bool is_valid_token(std::string_view token) {
    if (token.empty() || token == "-") return false;
    for (char c : token) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (c == '#' || c == '.') return false;
    }
    return true;
}

Alphabet::Alphabet(std::vector<std::string> tokens) {
    for (auto& t : tokens) add(std::move(t));
}

SymbolId Alphabet::add(std::string token) {
    if (!is_valid_token(token))
        throw ValidationError("malformed symbol token '" + token + "'");
    if (index_.count(token))
        throw ValidationError("duplicate symbol token '" + token + "'");
    SymbolId id = static_cast<SymbolId>(tokens_.size());
    index_.emplace(token, id);
    tokens_.push_back(std::move(token));
    return id;
}

SymbolId Alphabet::add_reserved(std::string token) {
    if (token.empty()) throw ValidationError("empty symbol token");
    if (index_.count(token))
        throw ValidationError("duplicate symbol token '" + token + "'");
    SymbolId id = static_cast<SymbolId>(tokens_.size());
    index_.emplace(token, id);
    tokens_.push_back(std::move(token));
    return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::require(std::string_view token) const {
    auto id = find(token);
    if (!id) throw ValidationError("unknown symbol '" + std::string(token) + "'");
    return *id;
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    if (word.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out += '.';
        out += alphabet.token(word[i]);
    }
    return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word word;
    if (text == "-") return word;
    size_t start = 0;
    while (start <= text.size()) {
        size_t dot = text.find('.', start);
        std::string_view piece = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
        word.push_back(alphabet.require(piece));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return word;
}

} // namespace lexfst
