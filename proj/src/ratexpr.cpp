#include "ratser/ratexpr.hpp"

#include <sstream>

namespace ratser {

namespace {

Nfa poly_support(const Alphabet& alphabet, const std::map<Word, Scalar>& coeffs) {
    Nfa out = Nfa::empty_language(alphabet);
    for (const auto& [w, c] : coeffs) out = union_nfa(out, Nfa::single_word(alphabet, w));
    return out;
}

// Concatenation automaton whose accepting paths correspond one-to-one to
// split points w = uv with u in L, v in K; built over determinized parts so
// within-part paths are unique. Unit weights.
Wfa split_wfa(const Nfa& l, const Nfa& k, const Field& f) {
    const Nfa dl = l.determinize();
    const Nfa dk = k.determinize();
    const bool eps_l = dl.accepts_empty_word();
    const bool eps_k = dk.accepts_empty_word();
    const Scalar one = Scalar::one(f);
    const Scalar zero = Scalar::zero(f);

    Wfa out(l.alphabet(), f);
    out.add_state("src", one, eps_l && eps_k ? one : zero);
    const std::size_t ol = 1;
    for (std::size_t q = 0; q < dl.state_count(); ++q)
        out.add_state("l" + std::to_string(q), zero,
                      dl.is_final(q) && eps_k ? one : zero);
    const std::size_t ok = ol + dl.state_count();
    for (std::size_t q = 0; q < dk.state_count(); ++q)
        out.add_state("k" + std::to_string(q), zero, dk.is_final(q) ? one : zero);

    for (std::size_t q = 0; q < dl.state_count(); ++q)
        for (const auto& [x, dst] : dl.edges_from(q)) {
            out.add_edge(ol + q, x, ol + dst, one);
            if (dl.is_initial(q)) out.add_edge(0, x, ol + dst, one);
        }
    for (std::size_t q = 0; q < dk.state_count(); ++q)
        for (const auto& [x, dst] : dk.edges_from(q)) {
            out.add_edge(ok + q, x, ok + dst, one);
            if (dk.is_initial(q)) {
                if (eps_l) out.add_edge(0, x, ok + dst, one);
                for (std::size_t fin = 0; fin < dl.state_count(); ++fin)
                    if (dl.is_final(fin)) out.add_edge(ol + fin, x, ok + dst, one);
            }
        }
    return out;
}

bool unique_splits(const Nfa& l, const Nfa& k) {
    return !ambiguity_witness(split_wfa(l, k, Field::rationals())).has_value();
}

} // namespace

ExprPtr RatExpr::poly(const Alphabet& alphabet, const Field& field,
                      std::map<Word, Scalar> coefficients) {
    for (auto it = coefficients.begin(); it != coefficients.end();) {
        if (it->second.field() != field) throw FieldMismatch();
        it = it->second.is_zero() ? coefficients.erase(it) : std::next(it);
    }
    auto node = std::shared_ptr<RatExpr>(
        new RatExpr(ExprKind::Poly, alphabet, field,
                    poly_support(alphabet, coefficients).trimmed()));
    node->poly_ = std::move(coefficients);
    node->unambiguous_ = true;
    return node;
}

ExprPtr RatExpr::sum(ExprPtr left, ExprPtr right) {
    if (left->field_ != right->field_ || left->alphabet_ != right->alphabet_)
        throw FieldMismatch();
    auto node = std::shared_ptr<RatExpr>(
        new RatExpr(ExprKind::Sum, left->alphabet_, left->field_,
                    union_nfa(left->support_, right->support_).trimmed()));
    node->unambiguous_ = disjoint_languages(left->support_, right->support_);
    node->left_ = std::move(left);
    node->right_ = std::move(right);
    return node;
}

ExprPtr RatExpr::prod(ExprPtr left, ExprPtr right) {
    if (left->field_ != right->field_ || left->alphabet_ != right->alphabet_)
        throw FieldMismatch();
    auto node = std::shared_ptr<RatExpr>(
        new RatExpr(ExprKind::Prod, left->alphabet_, left->field_,
                    concat_nfa(left->support_, right->support_).trimmed()));
    node->unambiguous_ = unique_splits(left->support_, right->support_);
    node->left_ = std::move(left);
    node->right_ = std::move(right);
    return node;
}

ExprPtr RatExpr::star(ExprPtr child) {
    if (!child->constant_coefficient().is_zero()) throw StarOnNonproper();
    auto node = std::shared_ptr<RatExpr>(new RatExpr(
        ExprKind::Star, child->alphabet_, child->field_,
        star_nfa(child->support_).trimmed()));
    node->unambiguous_ = code_check(child->support_).is_code;
    node->left_ = std::move(child);
    return node;
}

Scalar RatExpr::constant_coefficient() const {
    switch (kind_) {
        case ExprKind::Poly: {
            const auto it = poly_.find(Word{});
            return it == poly_.end() ? Scalar::zero(field_) : it->second;
        }
        case ExprKind::Sum:
            return left_->constant_coefficient() + right_->constant_coefficient();
        case ExprKind::Prod:
            return left_->constant_coefficient() * right_->constant_coefficient();
        case ExprKind::Star:
            return Scalar::one(field_); // child constant is zero by invariant
    }
    throw Error("unreachable");
}

bool RatExpr::fully_unambiguous() const {
    if (kind_ == ExprKind::Poly) return true;
    if (!unambiguous_) return false;
    if (kind_ == ExprKind::Star) return left_->fully_unambiguous();
    return left_->fully_unambiguous() && right_->fully_unambiguous();
}

// ---- representation constructions -----------------------------------------

namespace {

LinearRep rep_monomial(const Alphabet& alphabet, const Field& f, const Word& w,
                       const Scalar& c) {
    LinearRep r(alphabet, f, w.size() + 1);
    r.u().at(0, 0) = c;
    r.v().at(w.size(), 0) = Scalar::one(f);
    for (std::size_t i = 0; i < w.size(); ++i)
        r.mu(w.letters[i]).at(i, i + 1) = Scalar::one(f);
    return r;
}

} // namespace

LinearRep sum_rep(const LinearRep& a, const LinearRep& b) {
    LinearRep r(a.alphabet(), a.field(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        r.u().at(0, i) = a.u().at(0, i);
        r.v().at(i, 0) = a.v().at(i, 0);
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        r.u().at(0, a.dim() + i) = b.u().at(0, i);
        r.v().at(a.dim() + i, 0) = b.v().at(i, 0);
    }
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                r.mu(x).at(i, j) = a.mu(x).at(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                r.mu(x).at(a.dim() + i, a.dim() + j) = b.mu(x).at(i, j);
    }
    return r;
}

// Product: paths run through the left part, then hop into the right part
// while consuming the first letter of the right factor.
LinearRep prod_rep(const LinearRep& a, const LinearRep& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    LinearRep r(a.alphabet(), a.field(), na + nb);
    for (std::size_t i = 0; i < na; ++i) r.u().at(0, i) = a.u().at(0, i);
    const Scalar b_const = nb == 0 ? Scalar::zero(b.field()) : dot(b.u_row(), b.v_col());
    for (std::size_t i = 0; i < na; ++i) r.v().at(i, 0) = a.v().at(i, 0) * b_const;
    for (std::size_t i = 0; i < nb; ++i) r.v().at(na + i, 0) = b.v().at(i, 0);
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j) r.mu(x).at(i, j) = a.mu(x).at(i, j);
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                r.mu(x).at(na + i, na + j) = b.mu(x).at(i, j);
        if (nb > 0) {
            const RowVec entry = row_times_matrix(b.u_row(), b.mu(x));
            for (std::size_t i = 0; i < na; ++i) {
                const Scalar& vi = a.v().at(i, 0);
                if (vi.is_zero()) continue;
                for (std::size_t j = 0; j < nb; ++j)
                    r.mu(x).at(i, na + j) = vi * entry[j];
            }
        }
    }
    return r;
}

// Star of a proper series: a fresh start state plus restart edges from the
// terminal weights back through the initial behavior.
LinearRep star_rep(const LinearRep& a) {
    const std::size_t n = a.dim();
    LinearRep r(a.alphabet(), a.field(), n + 1);
    r.u().at(0, 0) = Scalar::one(a.field());
    r.v().at(0, 0) = Scalar::one(a.field());
    for (std::size_t i = 0; i < n; ++i) r.v().at(1 + i, 0) = a.v().at(i, 0);
    for (std::size_t x = 0; x < a.alphabet().size(); ++x) {
        const RowVec entry = row_times_matrix(a.u_row(), a.mu(x));
        for (std::size_t j = 0; j < n; ++j) r.mu(x).at(0, 1 + j) = entry[j];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                r.mu(x).at(1 + i, 1 + j) = a.mu(x).at(i, j);
            const Scalar& vi = a.v().at(i, 0);
            if (vi.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                r.mu(x).at(1 + i, 1 + j) += vi * entry[j];
        }
    }
    return r;
}

LinearRep scale_rep(const Scalar& c, const LinearRep& a) {
    LinearRep r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.u().at(0, i) = c * a.u().at(0, i);
    return r;
}

LinearRep poly_rep(const Alphabet& alphabet, const Field& f,
                   const std::map<Word, Scalar>& coefficients) {
    LinearRep r(alphabet, f, 0);
    for (const auto& [w, c] : coefficients) {
        if (c.is_zero()) continue;
        r = sum_rep(r, rep_monomial(alphabet, f, w, c));
    }
    return r;
}

LinearRep to_linear_rep(const RatExpr& e) {
    switch (e.kind()) {
        case ExprKind::Poly:
            return poly_rep(e.alphabet(), e.field(), e.coefficients());
        case ExprKind::Sum:
            return sum_rep(to_linear_rep(*e.left()), to_linear_rep(*e.right()));
        case ExprKind::Prod:
            return prod_rep(to_linear_rep(*e.left()), to_linear_rep(*e.right()));
        case ExprKind::Star: {
            const LinearRep child = to_linear_rep(*e.child());
            if (child.dim() > 0 && !dot(child.u_row(), child.v_col()).is_zero())
                throw StarOnNonproper();
            return star_rep(child);
        }
    }
    throw Error("unreachable");
}

// ---- text form -------------------------------------------------------------

std::string format_expr(const RatExpr& e) {
    switch (e.kind()) {
        case ExprKind::Poly: {
            std::string out = "(poly";
            for (const auto& [w, c] : e.coefficients())
                out += " (" + format_word(e.alphabet(), w) + " " + c.to_string() + ")";
            return out + ")";
        }
        case ExprKind::Sum:
            return "(+ " + format_expr(*e.left()) + " " + format_expr(*e.right()) + ")";
        case ExprKind::Prod:
            return "(. " + format_expr(*e.left()) + " " + format_expr(*e.right()) + ")";
        case ExprKind::Star:
            return "(* " + format_expr(*e.child()) + ")";
    }
    throw Error("unreachable");
}

namespace {

struct Tokens {
    std::vector<std::string> items;
    std::size_t pos = 0;

    [[nodiscard]] const std::string& peek() const {
        if (pos >= items.size()) throw ParseError("unexpected end of expression");
        return items[pos];
    }
    std::string next() {
        if (pos >= items.size()) throw ParseError("unexpected end of expression");
        return items[pos++];
    }
    void expect(const std::string& tok) {
        if (next() != tok) throw ParseError("expected '" + tok + "'");
    }
};

Tokens lex_expr(const std::string& text) {
    Tokens tokens;
    std::string cur;
    const auto flush = [&] {
        if (!cur.empty()) {
            tokens.items.push_back(cur);
            cur.clear();
        }
    };
    for (const char c : text) {
        if (c == '(' || c == ')') {
            flush();
            tokens.items.emplace_back(1, c);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            cur.push_back(c);
        }
    }
    flush();
    return tokens;
}

ExprPtr parse_node(Tokens& tokens, const Alphabet& alphabet, const Field& field) {
    tokens.expect("(");
    const std::string head = tokens.next();
    if (head == "poly") {
        std::map<Word, Scalar> coeffs;
        while (tokens.peek() != ")") {
            tokens.expect("(");
            const Word w = parse_word(alphabet, tokens.next());
            const Scalar c = Scalar::parse(field, tokens.next());
            tokens.expect(")");
            if (c.is_zero()) throw ParseError("zero coefficient in poly");
            if (!coeffs.emplace(w, c).second)
                throw ParseError("duplicate word in poly");
        }
        tokens.expect(")");
        return RatExpr::poly(alphabet, field, std::move(coeffs));
    }
    if (head == "+" || head == ".") {
        ExprPtr a = parse_node(tokens, alphabet, field);
        ExprPtr b = parse_node(tokens, alphabet, field);
        tokens.expect(")");
        return head == "+" ? RatExpr::sum(std::move(a), std::move(b))
                           : RatExpr::prod(std::move(a), std::move(b));
    }
    if (head == "*") {
        ExprPtr a = parse_node(tokens, alphabet, field);
        tokens.expect(")");
        return RatExpr::star(std::move(a));
    }
    throw ParseError("unknown expression head '" + head + "'");
}

} // namespace

ExprPtr parse_expr(const Alphabet& alphabet, const Field& field, const std::string& text) {
    Tokens tokens = lex_expr(text);
    ExprPtr e = parse_node(tokens, alphabet, field);
    if (tokens.pos != tokens.items.size()) throw ParseError("trailing expression tokens");
    return e;
}

ExprPtr parse_expr_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string header[3];
    int have = 0;
    std::string rest;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (const char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        if (have < 3)
            header[have++] = line;
        else
            rest += line + "\n";
    }
    if (have < 3) throw ParseError("expression file needs expr/field/alphabet headers");
    std::istringstream h0(header[0]);
    std::string tag;
    h0 >> tag;
    if (tag != "expr") throw ParseError("expected 'expr' header");

    std::istringstream h1(header[1]);
    std::vector<std::string> field_tokens;
    std::string tok;
    while (h1 >> tok) field_tokens.push_back(tok);
    if (field_tokens.size() != 2 || field_tokens[0] != "field")
        throw ParseError("expected 'field' line");
    Field field = Field::rationals();
    if (field_tokens[1] != "Q") {
        if (field_tokens[1].size() < 2 || field_tokens[1][0] != 'F')
            throw ParseError("bad field '" + field_tokens[1] + "'");
        field = Field::prime(std::stoull(field_tokens[1].substr(1)));
    }

    std::istringstream h2(header[2]);
    std::string alpha_tag;
    h2 >> alpha_tag;
    if (alpha_tag != "alphabet") throw ParseError("expected 'alphabet' line");
    std::string letters;
    while (h2 >> tok) {
        if (tok.size() != 1) throw ParseError("letters must be single characters");
        letters += tok;
    }
    return parse_expr(Alphabet(letters), field, rest);
}

std::string serialize_expr_file(const RatExpr& e) {
    std::string out = "expr\n";
    out += "field " + e.field().to_string() + "\n";
    out += "alphabet";
    for (std::size_t i = 0; i < e.alphabet().size(); ++i) {
        out += ' ';
        out += e.alphabet().letter(i);
    }
    out += "\n" + format_expr(e) + "\n";
    return out;
}

} // namespace ratser
