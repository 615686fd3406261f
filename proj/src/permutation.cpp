#include "sphaera/permutation.hpp"

#include "sphaera/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace sphaera {

Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DomainError("composing permutations of different degree");
    Permutation out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = x;
    return out;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> hit(p.size(), false);
    for (std::size_t y : p) {
        if (y >= p.size() || hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

bool is_identity(const Permutation& p) {
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p[x] != x) return false;
    return true;
}

std::vector<std::vector<std::size_t>> cycles(const Permutation& p) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> done(p.size(), false);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (done[x]) continue;
        std::vector<std::size_t> c;
        for (std::size_t y = x; !done[y]; y = p[y]) {
            done[y] = true;
            c.push_back(y);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
    std::vector<std::size_t> t;
    for (const auto& c : cycles(p)) t.push_back(c.size());
    std::sort(t.begin(), t.end());
    return t;
}

std::string cycle_notation(const Permutation& p) {
    std::ostringstream os;
    for (const auto& c : cycles(p)) {
        os << '(';
        for (std::size_t q = 0; q < c.size(); ++q) os << (q ? " " : "") << c[q];
        os << ')';
    }
    return os.str();
}

Permutation parse_cycle_notation(const std::string& text, std::size_t n) {
    Permutation p = identity_permutation(n);
    std::vector<bool> seen(n, false);
    std::size_t pos = 0;
    auto fail = [&] { throw DomainError("bad cycle notation: '" + text + "'"); };
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text[pos] != '(') fail();
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos) fail();
        std::istringstream is(text.substr(pos + 1, close - pos - 1));
        std::vector<std::size_t> c;
        std::size_t x;
        while (is >> x) {
            if (x >= n || seen[x]) fail();
            seen[x] = true;
            c.push_back(x);
        }
        if (!is.eof() || c.empty()) fail();
        for (std::size_t q = 0; q < c.size(); ++q) p[c[q]] = c[(q + 1) % c.size()];
        pos = close + 1;
    }
    return p;
}

bool is_transitive(const std::vector<Permutation>& gens) {
    if (gens.empty()) return true;
    std::size_t n = gens[0].size();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    seen[0] = true;
    q.push(0);
    std::size_t count = 1;
    // finite order: forward moves alone reach the whole orbit
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop();
        for (const auto& g : gens)
            for (std::size_t y : {g[x]})
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    q.push(y);
                }
    }
    return count == n;
}

bool is_regular(const std::vector<Permutation>& gens) {
    if (!is_transitive(gens)) return false;
    if (gens.empty()) return true;
    std::size_t n = gens[0].size();
    // For every target y, try to build c commuting with all generators and
    // mapping 0 to y; c is forced along the Schreier graph from 0.
    for (std::size_t y = 0; y < n; ++y) {
        std::vector<std::size_t> c(n, n);
        c[0] = y;
        std::queue<std::size_t> q;
        q.push(0);
        bool ok = true;
        while (!q.empty() && ok) {
            std::size_t x = q.front();
            q.pop();
            for (const auto& g : gens) {
                std::size_t gx = g[x], gcx = g[c[x]];
                if (c[gx] == n) {
                    c[gx] = gcx;
                    q.push(gx);
                } else if (c[gx] != gcx) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok || !is_permutation(c)) return false;
    }
    return true;
}

}  // namespace sphaera
