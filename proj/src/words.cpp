#include "ratser/words.hpp"

namespace ratser {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ParseError("alphabet must be non-empty");
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i] == letters_[j])
                throw ParseError(std::string("duplicate letter '") + letters_[i] + "'");
}

std::size_t Alphabet::index(char c) const {
    const auto pos = letters_.find(c);
    if (pos == std::string::npos)
        throw ParseError(std::string("unknown letter '") + c + "'");
    return pos;
}

bool Alphabet::has(char c) const { return letters_.find(c) != std::string::npos; }

Word Word::append(std::uint32_t letter) const {
    Word w = *this;
    w.letters.push_back(letter);
    return w;
}

Word Word::concat(const Word& other) const {
    Word w = *this;
    w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    if (w.empty()) return "_";
    std::string out;
    out.reserve(w.size());
    for (const auto i : w.letters) out.push_back(alphabet.letter(i));
    return out;
}

Word parse_word(const Alphabet& alphabet, const std::string& text) {
    if (text == "_") return Word{};
    Word w;
    w.letters.reserve(text.size());
    for (const char c : text) w.letters.push_back(static_cast<std::uint32_t>(alphabet.index(c)));
    return w;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t maxlen) {
    constexpr std::size_t kMaxWords = std::size_t{1} << 22;
    std::vector<Word> out;
    out.emplace_back();
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= maxlen; ++len) {
        const std::size_t level_end = out.size();
        if ((level_end - level_begin) > kMaxWords / std::max<std::size_t>(alphabet.size(), 1) ||
            out.size() > kMaxWords)
            throw ParseError("word enumeration past " + std::to_string(kMaxWords) +
                             " words");
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (std::uint32_t x = 0; x < alphabet.size(); ++x)
                out.push_back(out[i].append(x));
        level_begin = level_end;
    }
    return out;
}

} // namespace ratser
