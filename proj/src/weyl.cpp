#include "orbitcalc/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace orbitcalc {

namespace {

// Counts LR tableaux of shape gamma/alpha and content beta, filled in reading order.
class LrCounter {
public:
    LrCounter(const Partition& alpha, const Partition& beta, const Partition& gamma)
        : alpha_(alpha), beta_(beta), gamma_(gamma), count_(beta.length() + 1, 0) {
        for (int r = 0; r < gamma.length(); ++r) {
            rows_.push_back(std::vector<int>(gamma[r], 0));
            for (int c = gamma[r] - 1; c >= alpha[r]; --c) cells_.push_back({r, c});
        }
    }

    long long run() { return fill(0); }

private:
    long long fill(std::size_t k) {
        if (k == cells_.size()) return 1;
        const auto [r, c] = cells_[k];
        int hi = beta_.length();
        if (c + 1 < gamma_[r]) hi = std::min(hi, rows_[r][c + 1]);
        const int lo = (r > 0 && c >= alpha_[r - 1]) ? rows_[r - 1][c] + 1 : 1;
        long long total = 0;
        for (int v = lo; v <= hi; ++v) {
            if (count_[v] + 1 > beta_[v - 1]) continue;
            if (v > 1 && count_[v] + 1 > count_[v - 1]) continue;
            ++count_[v];
            rows_[r][c] = v;
            total += fill(k + 1);
            --count_[v];
        }
        rows_[r][c] = 0;
        return total;
    }

    const Partition& alpha_;
    const Partition& beta_;
    const Partition& gamma_;
    std::vector<int> count_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::pair<int, int>> cells_;
};

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::mutex lr_mutex;
std::map<LrKey, long long> lr_memo;

std::vector<Bipartition> orderings(const WeylLabel& w) {
    if (w.kind == WeylKind::B || w.label.degenerate()) return {w.label};
    return {w.label, w.label.flip()};
}

bool contained(const Bipartition& small, const Bipartition& big) {
    auto inside = [](const Partition& s, const Partition& b) {
        if (s.length() > b.length()) return false;
        for (int i = 0; i < s.length(); ++i)
            if (s[i] > b[i]) return false;
        return true;
    };
    return inside(small.first, big.first) && inside(small.second, big.second);
}

}  // namespace

long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (alpha.size() + beta.size() != gamma.size()) return 0;
    if (alpha.length() > gamma.length()) return 0;
    for (int i = 0; i < alpha.length(); ++i)
        if (alpha[i] > gamma[i]) return 0;
    if (alpha.empty()) return beta == gamma ? 1 : 0;
    if (beta.empty()) return alpha == gamma ? 1 : 0;
    LrKey key{alpha.parts(), beta.parts(), gamma.parts()};
    {
        std::lock_guard<std::mutex> lock(lr_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end()) return it->second;
    }
    const long long value = LrCounter(alpha, beta, gamma).run();
    std::lock_guard<std::mutex> lock(lr_mutex);
    lr_memo.emplace(std::move(key), value);
    return value;
}

long long bip_restriction_mult(const Bipartition& F, const Bipartition& F1, const Bipartition& F2) {
    if (F1.size() + F2.size() != F.size()) return 0;
    return lr_coefficient(F1.first, F2.first, F.first) * lr_coefficient(F1.second, F2.second, F.second);
}

bool restriction_nonzero(const WeylLabel& E, const WeylLabel& F1, const WeylLabel& F2) {
    const int rest = E.label.size() - F1.label.size();
    const int gap = rest - F2.label.size();
    if (gap < 0) return false;
    const auto rest_labels = bipartitions_of(rest);
    for (const auto& e : orderings(E))
        for (const auto& f1 : orderings(F1))
            for (const auto& f2 : orderings(F2)) {
                if (gap == 0) {
                    if (bip_restriction_mult(e, f1, f2) > 0) return true;
                    continue;
                }
                for (const auto& g : rest_labels)
                    if (contained(f2, g) && bip_restriction_mult(e, f1, g) > 0) return true;
            }
    return false;
}

Symbol j_induce_ssymbol(const std::vector<Symbol>& specials) {
    if (specials.empty()) throw DomainError("j-induction needs at least one factor");
    Symbol sum = specials.front();
    for (std::size_t i = 1; i < specials.size(); ++i) sum = add(sum, specials[i]);
    return special_of(sum);
}

std::vector<int> j_induce_spin(const Symbol& s1_special, const Partition& lambda2) {
    const Symbol c = canonicalize(s1_special);
    int L = std::max(c.content(), lambda2.length());
    if ((L - c.content()) % 2) ++L;
    const auto z = entries(with_content(c, L));
    const auto beta = beta_from_partition(lambda2, L);
    std::vector<int> out(L);
    for (int i = 0; i < L; ++i) out[i] = 2 * z[i] + beta[i] - i;
    return out;
}

}  // namespace orbitcalc
