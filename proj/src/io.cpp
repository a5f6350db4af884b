#include "ratser/io.hpp"

#include <fstream>
#include <sstream>

namespace ratser {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

// Non-empty token lines with comments stripped.
std::vector<std::vector<std::string>> token_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto tokens = tokenize(line);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

Field parse_field_line(const std::vector<std::string>& tokens) {
    if (tokens.size() != 2 || tokens[0] != "field")
        throw ParseError("expected 'field Q' or 'field F<p>'");
    if (tokens[1] == "Q") return Field::rationals();
    if (tokens[1].size() > 1 && tokens[1][0] == 'F') {
        const std::string digits = tokens[1].substr(1);
        for (const char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad field '" + tokens[1] + "'");
        return Field::prime(std::stoull(digits));
    }
    throw ParseError("bad field '" + tokens[1] + "'");
}

Alphabet parse_alphabet_line(const std::vector<std::string>& tokens) {
    if (tokens.size() < 2 || tokens[0] != "alphabet")
        throw ParseError("expected 'alphabet <letters>'");
    std::string letters;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].size() != 1)
            throw ParseError("letters must be single characters, got '" + tokens[i] + "'");
        letters.push_back(tokens[i][0]);
    }
    return Alphabet(letters);
}

std::string format_alphabet(const Alphabet& alphabet) {
    std::string out = "alphabet";
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        out += ' ';
        out += alphabet.letter(i);
    }
    return out;
}

} // namespace

Wfa parse_wfa(const std::string& text) {
    const auto lines = token_lines(text);
    if (lines.size() < 3 || lines[0] != std::vector<std::string>{"wfa"})
        throw ParseError("expected 'wfa' header");
    const Field field = parse_field_line(lines[1]);
    const Alphabet alphabet = parse_alphabet_line(lines[2]);
    Wfa a(alphabet, field);
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t[0] == "state") {
            if (t.size() < 2) throw ParseError("state line needs a name");
            Scalar init = Scalar::zero(field);
            Scalar term = Scalar::zero(field);
            std::size_t j = 2;
            while (j < t.size()) {
                if (t[j] == "initial" && j + 1 < t.size())
                    init = Scalar::parse(field, t[j + 1]);
                else if (t[j] == "terminal" && j + 1 < t.size())
                    term = Scalar::parse(field, t[j + 1]);
                else
                    throw ParseError("bad state attribute '" + t[j] + "'");
                j += 2;
            }
            a.add_state(t[1], init, term);
        } else if (t[0] == "edge") {
            if (t.size() != 5) throw ParseError("edge line needs src letter dst weight");
            const auto src = a.state_index(t[1]);
            const auto dst = a.state_index(t[3]);
            if (!src || !dst) throw ParseError("edge references unknown state");
            if (t[2].size() != 1) throw ParseError("bad edge letter '" + t[2] + "'");
            const auto letter = static_cast<std::uint32_t>(alphabet.index(t[2][0]));
            a.add_edge(*src, letter, *dst, Scalar::parse(field, t[4]));
        } else {
            throw ParseError("unexpected line '" + t[0] + "'");
        }
    }
    return a;
}

std::string serialize(const Wfa& a) {
    std::string out = "wfa\n";
    out += "field " + a.field().to_string() + "\n";
    out += format_alphabet(a.alphabet()) + "\n";
    for (std::size_t q = 0; q < a.state_count(); ++q) {
        out += "state " + a.state_name(q);
        if (!a.initial(q).is_zero()) out += " initial " + a.initial(q).to_string();
        if (!a.terminal(q).is_zero()) out += " terminal " + a.terminal(q).to_string();
        out += "\n";
    }
    for (std::size_t q = 0; q < a.state_count(); ++q)
        for (const auto& e : a.edges_from(q)) {
            out += "edge " + a.state_name(q) + " ";
            out += a.alphabet().letter(e.letter);
            out += " " + a.state_name(e.dst) + " " + e.weight.to_string() + "\n";
        }
    return out;
}

LinearRep parse_linear_rep(const std::string& text) {
    const auto lines = token_lines(text);
    if (lines.size() < 6 || lines[0] != std::vector<std::string>{"rep"})
        throw ParseError("expected 'rep' header");
    const Field field = parse_field_line(lines[1]);
    const Alphabet alphabet = parse_alphabet_line(lines[2]);
    if (lines[3].size() != 2 || lines[3][0] != "dim")
        throw ParseError("expected 'dim <n>'");
    const std::size_t n = std::stoull(lines[3][1]);
    LinearRep r(alphabet, field, n);

    const auto parse_vector_line = [&](const std::vector<std::string>& t, const char* what) {
        if (t.size() != n + 1)
            throw ParseError(std::string(what) + " needs exactly " + std::to_string(n) +
                             " scalars");
        RowVec v;
        for (std::size_t i = 1; i < t.size(); ++i) v.push_back(Scalar::parse(field, t[i]));
        return v;
    };
    if (lines[4].empty() || lines[4][0] != "u") throw ParseError("expected 'u <scalars>'");
    const RowVec u = parse_vector_line(lines[4], "u");
    if (lines[5].empty() || lines[5][0] != "v") throw ParseError("expected 'v <scalars>'");
    const RowVec v = parse_vector_line(lines[5], "v");
    for (std::size_t i = 0; i < n; ++i) {
        r.u().at(0, i) = u[i];
        r.v().at(i, 0) = v[i];
    }

    std::vector<bool> seen(alphabet.size(), false);
    std::size_t i = 6;
    while (i < lines.size()) {
        const auto& t = lines[i];
        if (t.size() != 2 || t[0] != "mu" || t[1].size() != 1)
            throw ParseError("expected 'mu <letter>'");
        const std::size_t letter = alphabet.index(t[1][0]);
        if (seen[letter]) throw ParseError("duplicate mu block for '" + t[1] + "'");
        seen[letter] = true;
        if (i + n >= lines.size()) throw ParseError("mu block truncated");
        for (std::size_t row = 0; row < n; ++row) {
            const auto& rowt = lines[i + 1 + row];
            if (rowt.size() != n) throw ParseError("mu row needs " + std::to_string(n) + " scalars");
            for (std::size_t col = 0; col < n; ++col)
                r.mu(letter).at(row, col) = Scalar::parse(field, rowt[col]);
        }
        i += 1 + n;
    }
    for (std::size_t x = 0; x < alphabet.size(); ++x)
        if (!seen[x])
            throw ParseError(std::string("missing mu block for '") + alphabet.letter(x) + "'");
    return r;
}

std::string serialize(const LinearRep& r) {
    std::string out = "rep\n";
    out += "field " + r.field().to_string() + "\n";
    out += format_alphabet(r.alphabet()) + "\n";
    out += "dim " + std::to_string(r.dim()) + "\n";
    out += "u";
    for (std::size_t i = 0; i < r.dim(); ++i) out += " " + r.u().at(0, i).to_string();
    out += "\nv";
    for (std::size_t i = 0; i < r.dim(); ++i) out += " " + r.v().at(i, 0).to_string();
    out += "\n";
    for (std::size_t x = 0; x < r.alphabet().size(); ++x) {
        out += "mu ";
        out += r.alphabet().letter(x);
        out += "\n";
        for (std::size_t row = 0; row < r.dim(); ++row) {
            for (std::size_t col = 0; col < r.dim(); ++col) {
                if (col > 0) out += " ";
                out += r.mu(x).at(row, col).to_string();
            }
            out += "\n";
        }
    }
    return out;
}

LinearRep parse_rep_or_wfa(const std::string& text) {
    const auto lines = token_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    if (lines[0] == std::vector<std::string>{"rep"}) return parse_linear_rep(text);
    if (lines[0] == std::vector<std::string>{"wfa"}) return to_linear_rep(parse_wfa(text));
    throw ParseError("expected 'rep' or 'wfa' header");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace ratser
