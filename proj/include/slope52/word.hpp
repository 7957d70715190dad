#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "slope52/matrix.hpp"

namespace slope52 {

enum class Generator : std::uint8_t { X, Y };

struct Letter {
    Generator gen;
    int exponent;  // +1 or -1
};

/// A word in the free group on {x, y}, stored as fully expanded letters.
class GroupWord {
  public:
    GroupWord() = default;
    GroupWord(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    long long exponent_sum(Generator g) const {
        long long sum = 0;
        for (const Letter& l : letters_)
            if (l.gen == g) sum += l.exponent;
        return sum;
    }

    long long total_exponent_sum() const {
        return exponent_sum(Generator::X) + exponent_sum(Generator::Y);
    }

    GroupWord inverse() const {
        std::vector<Letter> rev;
        rev.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            rev.push_back({it->gen, -it->exponent});
        return GroupWord(std::move(rev));
    }

    GroupWord& append(const GroupWord& other) {
        letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
        return *this;
    }

  private:
    std::vector<Letter> letters_;
};

inline GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    GroupWord r = a;
    r.append(b);
    return r;
}

/// Group-carrier operations used by word_evaluate; specialize per carrier.
template <class G>
struct GroupOps;

template <class Scalar>
struct GroupOps<Mat2<Scalar>> {
    static Mat2<Scalar> identity() { return Mat2<Scalar>::Identity(); }
    static Mat2<Scalar> product(const Mat2<Scalar>& a, const Mat2<Scalar>& b) { return a * b; }
    static Mat2<Scalar> inverse(const Mat2<Scalar>& a) { return adjugate_inverse(a); }
};

/// Binds the two generators to values in a carrier group.
template <class G>
struct Assignment {
    G value_x;
    G value_y;
};

/// Left-to-right product of the assigned letters; the empty word yields the
/// carrier identity.
template <class G>
G word_evaluate(const GroupWord& word, const Assignment<G>& assignment) {
    G acc = GroupOps<G>::identity();
    for (const Letter& l : word) {
        const G& v = (l.gen == Generator::X) ? assignment.value_x : assignment.value_y;
        acc = GroupOps<G>::product(acc, l.exponent == 1 ? v : GroupOps<G>::inverse(v));
    }
    return acc;
}

namespace words {

inline GroupWord power(Generator g, long long k) {
    const int e = k >= 0 ? 1 : -1;
    std::vector<Letter> ls(static_cast<std::size_t>(k >= 0 ? k : -k), Letter{g, e});
    return GroupWord(std::move(ls));
}

/// w = x y x^-1 y^-1 x y
inline const GroupWord& w() {
    static const GroupWord val{{Generator::X, 1},  {Generator::Y, 1}, {Generator::X, -1},
                               {Generator::Y, -1}, {Generator::X, 1}, {Generator::Y, 1}};
    return val;
}

/// w* = y x y^-1 x^-1 y x (the reverse word of w)
inline const GroupWord& w_star() {
    static const GroupWord val{{Generator::Y, 1},  {Generator::X, 1}, {Generator::Y, -1},
                               {Generator::X, -1}, {Generator::Y, 1}, {Generator::X, 1}};
    return val;
}

/// Preferred longitude x^-4 w* w; 16 letters, exponent sums x:-2 y:+2.
inline const GroupWord& longitude() {
    static const GroupWord val = power(Generator::X, -4) * w_star() * w();
    return val;
}

/// The two sides of the defining relation w x = y w.
inline const GroupWord& relator_lhs() {
    static const GroupWord val = w() * power(Generator::X, 1);
    return val;
}
inline const GroupWord& relator_rhs() {
    static const GroupWord val = power(Generator::Y, 1) * w();
    return val;
}

/// The filling word x^p lambda^q (fully expanded, p + 16q letters).
inline GroupWord filling(long long p, long long q) {
    if (q < 1) throw std::invalid_argument("filling word requires q >= 1");
    GroupWord word = power(Generator::X, p);
    for (long long i = 0; i < q; ++i) word.append(longitude());
    return word;
}

}  // namespace words
}  // namespace slope52
