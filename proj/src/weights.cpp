#include "ratschur/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ratschur {

bool is_dominant(const Weight& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

std::vector<std::vector<int>> partitions_of(int m, int max_parts) {
    std::vector<std::vector<int>> out;
    if (m < 0) return out;
    if (m == 0) {
        out.push_back({});
        return out;
    }
    if (max_parts <= 0) return out;
    std::vector<int> cur;
    // descending lex: largest first part first
    auto rec = [&](auto&& self, int remaining, int max_part, int parts_left) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (parts_left == 0) return;
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p, parts_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, m, m, max_parts);
    return out;
}

static void check_nrs(int n, int r, int s) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (r < 0 || s < 0) throw std::invalid_argument("r and s must be nonnegative");
}

std::vector<Weight> enum_weights(int n, int r, int s) {
    check_nrs(n, r, s);
    std::set<Weight> seen;
    for (int t = 0; t <= std::min(r, s); ++t) {
        for (const auto& plus : partitions_of(r - t, n)) {
            for (const auto& minus : partitions_of(s - t, n - static_cast<int>(plus.size()))) {
                Weight dom(static_cast<size_t>(n), 0);
                std::copy(plus.begin(), plus.end(), dom.begin());
                for (size_t j = 0; j < minus.size(); ++j)
                    dom[static_cast<size_t>(n) - 1 - j] = -minus[j];
                Weight perm = dom;
                std::sort(perm.begin(), perm.end());
                do {
                    seen.insert(perm);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    std::vector<Weight> out(seen.rbegin(), seen.rend());
    return out;
}

std::vector<Weight> enum_dominant(int n, int r, int s) {
    std::vector<Weight> out;
    for (const auto& w : enum_weights(n, r, s))
        if (is_dominant(w)) out.push_back(w);
    return out;  // already descending lex
}

bool member_by_partial_sums(const Weight& lam, int n, int r, int s) {
    check_nrs(n, r, s);
    if (static_cast<int>(lam.size()) != n)
        throw std::invalid_argument("weight length does not match n");
    int total = std::accumulate(lam.begin(), lam.end(), 0);
    if (total != r - s) return false;
    int pos = 0, neg = 0, npos = 0, nneg = 0;
    int mx = lam[0], mn = lam[0];
    for (int v : lam) {
        if (v > 0) {
            pos += v;
            ++npos;
        } else if (v < 0) {
            neg += v;
            ++nneg;
        }
        mx = std::max(mx, v);
        mn = std::min(mn, v);
    }
    // extreme sums over nonempty proper subsets
    int max_proper = npos == 0 ? mx : (npos == n ? pos - mn : pos);
    int min_proper = nneg == 0 ? mn : (nneg == n ? neg - mx : neg);
    return max_proper <= r && min_proper >= -s;
}

bool dominance_leq(const Weight& lam, const Weight& mu) {
    if (lam.size() != mu.size()) throw std::invalid_argument("dominance: length mismatch");
    long prefix_lam = 0, prefix_mu = 0;
    for (size_t i = 0; i + 1 < lam.size(); ++i) {
        prefix_lam += lam[i];
        prefix_mu += mu[i];
        if (prefix_mu < prefix_lam) return false;
    }
    prefix_lam += lam.back();
    prefix_mu += mu.back();
    return prefix_lam == prefix_mu;
}

std::vector<Weight> dominant_below(const Weight& mu) {
    if (!is_dominant(mu)) throw std::invalid_argument("dominant_below: mu not dominant");
    const int n = static_cast<int>(mu.size());
    const int total = std::accumulate(mu.begin(), mu.end(), 0);
    const int floor_entry = mu.back();  // lambda_n >= mu_n forces all entries >= mu_n
    std::vector<Weight> out;
    Weight cur;
    std::vector<long> mu_prefix(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) mu_prefix[static_cast<size_t>(i) + 1] = mu_prefix[i] + mu[i];
    auto rec = [&](auto&& self, int i, long prefix) -> void {
        if (i == n - 1) {
            long last = total - prefix;
            if (last <= (cur.empty() ? mu[0] : cur.back()) && last >= floor_entry) {
                cur.push_back(static_cast<int>(last));
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        int hi = cur.empty() ? mu[0] : cur.back();
        for (int c = hi; c >= floor_entry; --c) {
            long p = prefix + c;
            if (p > mu_prefix[static_cast<size_t>(i) + 1]) continue;
            long remaining = total - p;
            long slots = n - 1 - i;
            if (remaining > slots * static_cast<long>(c) ||
                remaining < slots * static_cast<long>(floor_entry))
                continue;
            cur.push_back(c);
            self(self, i + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool is_saturated(const std::vector<Weight>& pi, int n, int r, int s) {
    check_nrs(n, r, s);
    std::set<Weight> members;
    for (const auto& w : pi) {
        if (static_cast<int>(w.size()) != n)
            throw std::invalid_argument("is_saturated: weight length does not match n");
        if (!is_dominant(w)) throw std::invalid_argument("is_saturated: non-dominant member");
        members.insert(w);
    }
    for (const auto& mu : pi)
        for (const auto& lam : dominant_below(mu))
            if (!members.count(lam)) return false;
    return true;
}

BipartitionPair to_bipartition(const Weight& lam) {
    if (!is_dominant(lam)) throw std::invalid_argument("to_bipartition: weight not dominant");
    BipartitionPair p;
    for (int v : lam)
        if (v > 0) p.plus.push_back(v);
    for (auto it = lam.rbegin(); it != lam.rend(); ++it)
        if (*it < 0) p.minus.push_back(-*it);
    return p;
}

Weight from_bipartition(const BipartitionPair& p, int n) {
    auto check_partition = [](const std::vector<int>& parts, const char* which) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument(std::string(which) + ": nonpositive part");
            if (i > 0 && parts[i - 1] < parts[i])
                throw std::invalid_argument(std::string(which) + ": parts not weakly decreasing");
        }
    };
    check_partition(p.plus, "plus");
    check_partition(p.minus, "minus");
    if (static_cast<int>(p.plus.size() + p.minus.size()) > n)
        throw std::invalid_argument("from_bipartition: pair too long for n");
    Weight w(static_cast<size_t>(n), 0);
    std::copy(p.plus.begin(), p.plus.end(), w.begin());
    for (size_t j = 0; j < p.minus.size(); ++j)
        w[static_cast<size_t>(n) - 1 - j] = -p.minus[j];
    return w;
}

Weight shift(const Weight& lam, int s) {
    Weight out = lam;
    for (int& v : out) v += s;
    return out;
}

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    return os.str();
}

Weight parse_weight(const std::string& s) {
    Weight out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad weight string: " + s);
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty weight string");
    return out;
}

std::string bipartition_str(const BipartitionPair& p) {
    auto join = [](const std::vector<int>& v) {
        std::ostringstream os;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
        return os.str();
    };
    return "plus=" + join(p.plus) + "|minus=" + join(p.minus);
}

BipartitionPair parse_bipartition(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos || s.rfind("plus=", 0) != 0 ||
        s.compare(bar + 1, 6, "minus=") != 0)
        throw std::invalid_argument("bad bipartition string: " + s);
    auto parse_parts = [](const std::string& body) {
        std::vector<int> out;
        if (body.empty()) return out;
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    BipartitionPair p;
    p.plus = parse_parts(s.substr(5, bar - 5));
    p.minus = parse_parts(s.substr(bar + 7));
    return p;
}

}  // namespace ratschur
