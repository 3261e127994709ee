#pragma once

#include <compare>
#include <string>
#include <vector>

namespace structsums {

/// Integer tuple p = (p_1, ..., p_n) indexing a structural sum, with the
/// derived exponent sequence t_0 = 1, t_j = p_j - t_{j-1}. Only tuples with
/// t_n = 1 are admissible; the constructor rejects everything else. The empty
/// tuple is allowed as the order-zero unit (its sum evaluates to 1).
class MultiOrder {
public:
    MultiOrder() = default; // empty tuple, order 0
    explicit MultiOrder(std::vector<int> p);

    const std::vector<int>& values() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    /// alpha = sum of p_j (always even for admissible tuples).
    int alpha() const { return alpha_; }
    /// order delta = alpha / 2.
    int order() const { return alpha_ / 2; }
    /// Exponents t_0..t_n.
    const std::vector<int>& exponents() const { return t_; }

    /// The mirror tuple (p_n, ..., p_1).
    MultiOrder mirror() const;
    bool is_palindrome() const;
    /// Lexicographically smaller of {p, mirror(p)}.
    MultiOrder canonical() const;

    /// Name used in CSV headers: "e_2", "e_2_3_3", ...
    std::string name() const;

    auto operator<=>(const MultiOrder& other) const { return p_ <=> other.p_; }
    bool operator==(const MultiOrder& other) const { return p_ == other.p_; }

private:
    std::vector<int> p_;
    std::vector<int> t_{1};
    int alpha_ = 0;
};

/// All multi-orders of order exactly q, lexicographically sorted. Generated
/// by iterating the two production rules (prepend 2; add 1 to the first two
/// entries) from the seeds (2) and (2,2).
std::vector<MultiOrder> generate_Mq(int q);

/// One canonical representative (lexicographically smaller tuple) per mirror
/// pair; palindromes pass through. Output sorted.
std::vector<MultiOrder> reduce_mirrors(const std::vector<MultiOrder>& orders);

/// Ordering used for feature keys: ascending order, then lexicographic.
bool feature_key_less(const MultiOrder& a, const MultiOrder& b);

} // namespace structsums
