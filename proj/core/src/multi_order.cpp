#include "structsums/multi_order.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace structsums {

MultiOrder::MultiOrder(std::vector<int> p) : p_(std::move(p)) {
    t_.assign(1, 1);
    t_.reserve(p_.size() + 1);
    for (int v : p_) {
        if (v < 2) throw std::invalid_argument("multi-order entries must be >= 2");
        alpha_ += v;
        t_.push_back(v - t_.back());
    }
    if (!p_.empty() && t_.back() != 1)
        throw std::invalid_argument("inadmissible multi-order: t_n != 1");
}

MultiOrder MultiOrder::mirror() const {
    std::vector<int> r(p_.rbegin(), p_.rend());
    return MultiOrder(std::move(r));
}

bool MultiOrder::is_palindrome() const {
    return std::equal(p_.begin(), p_.end(), p_.rbegin());
}

MultiOrder MultiOrder::canonical() const {
    MultiOrder m = mirror();
    return (m.p_ < p_) ? m : *this;
}

std::string MultiOrder::name() const {
    std::string s = "e";
    for (int v : p_) {
        s += '_';
        s += std::to_string(v);
    }
    return s;
}

std::vector<MultiOrder> generate_Mq(int q) {
    if (q < 1) throw std::invalid_argument("generate_Mq: q must be >= 1");
    // Seeds (2) and (2,2); each application of either rule raises the order
    // by one, so M_q is reached after q-2 iterations from M_2.
    std::set<std::vector<int>> current;
    if (q == 1) {
        current.insert({2});
    } else {
        current.insert({2, 2});
        for (int step = 3; step <= q; ++step) {
            std::set<std::vector<int>> next;
            for (const auto& m : current) {
                std::vector<int> prepended;
                prepended.reserve(m.size() + 1);
                prepended.push_back(2);
                prepended.insert(prepended.end(), m.begin(), m.end());
                next.insert(std::move(prepended));
                if (m.size() > 1) {
                    std::vector<int> bumped = m;
                    ++bumped[0];
                    ++bumped[1];
                    next.insert(std::move(bumped));
                }
            }
            current = std::move(next);
        }
    }
    std::vector<MultiOrder> out;
    out.reserve(current.size());
    for (const auto& m : current) out.emplace_back(m);
    return out; // std::set iteration is already lexicographic
}

std::vector<MultiOrder> reduce_mirrors(const std::vector<MultiOrder>& orders) {
    std::set<std::vector<int>> kept;
    for (const auto& o : orders) kept.insert(o.canonical().values());
    std::vector<MultiOrder> out;
    out.reserve(kept.size());
    for (const auto& m : kept) out.emplace_back(m);
    return out;
}

bool feature_key_less(const MultiOrder& a, const MultiOrder& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.values() < b.values();
}

} // namespace structsums
