#include "ratser/minimize.hpp"

#include <algorithm>
#include <deque>

namespace ratser {

namespace {

// Row echelon accumulator that tracks, for each stored row, its coordinates
// with respect to the accepted (non-reduced) vectors.
class SpanTracker {
public:
    SpanTracker(const Field& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }

    // Residue of v after elimination, plus its coordinates over the accepted
    // vectors contributing to the eliminated part.
    struct Reduction {
        RowVec residue;
        RowVec coords; // length = number of accepted vectors
    };

    [[nodiscard]] Reduction reduce(const RowVec& v) const {
        Reduction red{v, RowVec(accepted_, Scalar::zero(field_))};
        for (const auto& row : rows_) {
            const Scalar& c = red.residue[row.pivot];
            if (c.is_zero()) continue;
            const Scalar factor = c; // rows are pivot-normalized
            for (std::size_t j = 0; j < ambient_; ++j)
                red.residue[j] -= factor * row.vec[j];
            for (std::size_t j = 0; j < accepted_; ++j)
                red.coords[j] += factor * row.coords[j];
        }
        return red;
    }

    // Accepts v as a new basis vector when independent; returns true then.
    bool add(const RowVec& v) {
        Reduction red = reduce(v);
        if (is_zero_vec(red.residue)) return false;
        std::size_t pivot = 0;
        while (red.residue[pivot].is_zero()) ++pivot;
        const Scalar inv = red.residue[pivot].inverse();
        Row row{pivot, red.residue, red.coords};
        for (auto& s : row.vec) s *= inv;
        for (auto& s : row.coords) s *= inv;
        // v = sum(old coords) + residue, so the new accepted vector enters
        // with coefficient +1 and the eliminated part with -1.
        for (auto& s : row.coords) s = -s;
        row.coords.push_back(inv);
        for (auto& r : rows_) r.coords.push_back(Scalar::zero(field_));
        ++accepted_;
        rows_.push_back(std::move(row));
        return true;
    }

    // Coordinates of v over the accepted vectors; throws when v is outside
    // the span.
    [[nodiscard]] RowVec coordinates(const RowVec& v) const {
        Reduction red = reduce(v);
        if (!is_zero_vec(red.residue))
            throw DimensionMismatch("vector outside the tracked span");
        return red.coords;
    }

private:
    struct Row {
        std::size_t pivot;
        RowVec vec;    // pivot entry 1
        RowVec coords; // vec expressed over the accepted vectors
    };
    Field field_;
    std::size_t ambient_;
    std::size_t accepted_ = 0;
    std::vector<Row> rows_;
};

struct Closure {
    std::vector<Word> words;
    std::vector<RowVec> vectors;
    SpanTracker tracker;
};

// Breadth-first closure of { seed * mu(w) } under right multiplication,
// keeping the vectors that enlarge the span (words by length, then letter).
Closure left_closure(const LinearRep& r, const RowVec& seed) {
    Closure c{{}, {}, SpanTracker(r.field(), r.dim())};
    std::deque<std::size_t> queue;
    if (c.tracker.add(seed)) {
        c.words.emplace_back();
        c.vectors.push_back(seed);
        queue.push_back(0);
    }
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
            RowVec child = row_times_matrix(c.vectors[i], r.mu(x));
            if (c.tracker.add(child)) {
                c.words.push_back(c.words[i].append(x));
                c.vectors.push_back(std::move(child));
                queue.push_back(c.vectors.size() - 1);
            }
        }
    }
    return c;
}

LinearRep transpose_rep(const LinearRep& r) {
    LinearRep t(r.alphabet(), r.field(), r.dim());
    t.u() = r.v().transpose();
    t.v() = r.u().transpose();
    for (std::size_t x = 0; x < r.alphabet().size(); ++x) t.mu(x) = r.mu(x).transpose();
    return t;
}

// Right closure of { mu(w) * v } under left multiplication; words carry the
// letters in application order (children prepend a letter).
Closure right_closure(const LinearRep& r) {
    Closure c = left_closure(transpose_rep(r), r.v().transpose().row(0));
    for (auto& w : c.words) std::reverse(w.letters.begin(), w.letters.end());
    return c;
}

// Quotient onto the span of the left closure: dimension = closure rank,
// u' = e_1, row i of mu'(x) = coordinates of a_i * mu(x).
LinearRep left_reduce(const LinearRep& r, const Closure& c) {
    const std::size_t m = c.vectors.size();
    LinearRep out(r.alphabet(), r.field(), m);
    if (m == 0) return out;
    out.u().at(0, 0) = Scalar::one(r.field());
    for (std::size_t i = 0; i < m; ++i) {
        out.v().at(i, 0) = dot(c.vectors[i], r.v_col());
        for (std::uint32_t x = 0; x < r.alphabet().size(); ++x) {
            const RowVec coords =
                c.tracker.coordinates(row_times_matrix(c.vectors[i], r.mu(x)));
            for (std::size_t j = 0; j < m; ++j) out.mu(x).at(i, j) = coords[j];
        }
    }
    return out;
}

LinearRep right_reduce(const LinearRep& r) {
    const LinearRep t = transpose_rep(r);
    const Closure c = left_closure(t, t.u_row());
    return transpose_rep(left_reduce(t, c));
}

} // namespace

MinimizationResult minimize(const LinearRep& r) {
    const Closure left = left_closure(r, r.u_row());
    LinearRep reduced = right_reduce(left_reduce(r, left));

    // Two-sided span assertion on the result.
    Closure lc = left_closure(reduced, reduced.u_row());
    Closure rc = right_closure(reduced);
    if (lc.vectors.size() != reduced.dim() || rc.vectors.size() != reduced.dim())
        throw NotMinimal("reduction left a span defect");
    return MinimizationResult{std::move(reduced),
                              MinimalityCertificate{std::move(lc.words), std::move(rc.words)}};
}

std::size_t hankel_rank(const Alphabet& alphabet, const Field& field,
                        const std::function<Scalar(const Word&)>& coefficient,
                        std::size_t l) {
    const std::vector<Word> words = words_up_to(alphabet, l);
    Matrix h(field, words.size(), words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = 0; j < words.size(); ++j)
            h.at(i, j) = coefficient(words[i].concat(words[j]));
    return rref(h).pivots.size();
}

LinearRep good_basis(const LinearRep& r) {
    const std::size_t n = r.dim();
    if (n == 0) throw NotMinimal("good basis requires dimension >= 1");
    const Closure rc = right_closure(r);
    if (rc.vectors.size() != n)
        throw NotMinimal("right spanning words cover only rank " +
                         std::to_string(rc.vectors.size()));
    if (!rc.words.front().empty())
        throw NotMinimal("v vanishes, first right word is not the empty word");

    // Columns of B are mu(w_i) * v in breadth-first order, so B^{-1} v = e_1.
    Matrix b(r.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t row = 0; row < n; ++row) b.at(row, i) = rc.vectors[i][row];
    const Matrix b_inv = b.inverse();

    LinearRep out(r.alphabet(), r.field(), n);
    out.u() = r.u() * b;
    out.v() = b_inv * r.v();
    for (std::uint32_t x = 0; x < r.alphabet().size(); ++x)
        out.mu(x) = b_inv * r.mu(x) * b;

    for (std::size_t i = 0; i < n; ++i) {
        const bool want_one = i == 0;
        const Scalar& got = out.v().at(i, 0);
        if (got.is_one() != want_one || (!want_one && !got.is_zero()))
            throw NotMinimal("conjugation failed to normalize v to e_1");
    }
    return out;
}

} // namespace ratser
