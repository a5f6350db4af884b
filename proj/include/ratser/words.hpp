#ifndef RATSER_WORDS_HPP
#define RATSER_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratser/errors.hpp"

namespace ratser {

// Ordered, non-empty set of distinct single-character letters.
class Alphabet {
public:
    explicit Alphabet(std::string letters);

    [[nodiscard]] std::size_t size() const { return letters_.size(); }
    [[nodiscard]] char letter(std::size_t i) const { return letters_[i]; }
    [[nodiscard]] const std::string& letters() const { return letters_; }

    // Index of a letter; throws ParseError on unknown letters.
    [[nodiscard]] std::size_t index(char c) const;
    [[nodiscard]] bool has(char c) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    std::string letters_;
};

// Word over an alphabet, stored as letter indices.
struct Word {
    std::vector<std::uint32_t> letters;

    Word() = default;
    explicit Word(std::vector<std::uint32_t> ls) : letters(std::move(ls)) {}

    [[nodiscard]] std::size_t size() const { return letters.size(); }
    [[nodiscard]] bool empty() const { return letters.empty(); }

    [[nodiscard]] Word append(std::uint32_t letter) const;
    [[nodiscard]] Word concat(const Word& other) const;

    friend bool operator==(const Word&, const Word&) = default;
    // Length-lexicographic order; canonical everywhere words are sorted.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    }
};

// Text form of a word; the empty word prints as "_".
std::string format_word(const Alphabet& alphabet, const Word& w);
Word parse_word(const Alphabet& alphabet, const std::string& text);

// All words of length <= maxlen in breadth-first (length, letter) order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t maxlen);

} // namespace ratser

#endif // RATSER_WORDS_HPP
