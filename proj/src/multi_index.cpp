#include "grasscoh/multi_index.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace grasscoh {

namespace {

void trim(std::vector<uint32_t>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

MultiIndex::MultiIndex(std::vector<uint32_t> exponents) : e_(std::move(exponents)) {
    trim(e_);
}

MultiIndex MultiIndex::variable(size_t i, uint32_t k) {
    if (k == 0) return MultiIndex();
    std::vector<uint32_t> e(i + 1, 0);
    e[i] = k;
    return MultiIndex(std::move(e));
}

uint32_t MultiIndex::total_degree() const {
    uint32_t d = 0;
    for (uint32_t x : e_) d += x;
    return d;
}

uint64_t MultiIndex::weighted_degree() const {
    uint64_t d = 0;
    for (size_t i = 0; i < e_.size(); ++i) d += static_cast<uint64_t>(i + 1) * e_[i];
    return d;
}

MultiIndex MultiIndex::times(const MultiIndex& o) const {
    std::vector<uint32_t> e(std::max(e_.size(), o.e_.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) e[i] = exponent(i) + o.exponent(i);
    return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.exponent(i)) return false;
    return true;
}

std::optional<MultiIndex> MultiIndex::divide_into(const MultiIndex& o) const {
    if (!divides(o)) return std::nullopt;
    std::vector<uint32_t> e(o.e_.size(), 0);
    for (size_t i = 0; i < o.e_.size(); ++i) e[i] = o.e_[i] - exponent(i);
    return MultiIndex(std::move(e));
}

int MultiIndex::cmp(const MultiIndex& a, const MultiIndex& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    size_t w = std::max(a.e_.size(), b.e_.size());
    for (size_t i = w; i-- > 0;) {
        uint32_t ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea < eb ? 1 : -1;  // smaller rightmost exponent wins
    }
    return 0;
}

int MultiIndex::cmp_listing(const MultiIndex& a, const MultiIndex& b) {
    uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    return -cmp(a, b);
}

std::string MultiIndex::str(std::string_view prefix) const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << prefix << (i + 1);
        if (e_[i] > 1) os << '^' << e_[i];
    }
    return os.str();
}

namespace {

void gen_degree(size_t nvars, uint32_t degree, size_t var, std::vector<uint32_t>& cur,
                std::vector<MultiIndex>& out) {
    if (var + 1 == nvars) {
        cur[var] = degree;
        out.emplace_back(cur);
        cur[var] = 0;
        return;
    }
    for (uint32_t k = 0; k <= degree; ++k) {
        cur[var] = k;
        gen_degree(nvars, degree - k, var + 1, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(size_t nvars, uint32_t degree) {
    std::vector<MultiIndex> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    std::vector<uint32_t> cur(nvars, 0);
    gen_degree(nvars, degree, 0, cur, out);
    return out;
}

std::vector<MultiIndex> monomials_up_to_degree(size_t nvars, uint32_t degree) {
    std::vector<MultiIndex> out;
    for (uint32_t d = 0; d <= degree; ++d) {
        auto block = monomials_of_degree(nvars, d);
        std::sort(block.begin(), block.end(), ListingLess{});
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<MultiIndex> monomials_of_weighted_degree(size_t nvars, uint64_t wdeg) {
    std::vector<MultiIndex> out;
    std::vector<uint32_t> cur(nvars, 0);
    // Choose exponents from the heaviest variable down.
    std::function<void(size_t, uint64_t)> rec = [&](size_t var, uint64_t rest) {
        if (var == 0) {
            cur[0] = static_cast<uint32_t>(rest);
            out.emplace_back(cur);
            cur[0] = 0;
            return;
        }
        uint64_t w = var + 1;
        for (uint64_t k = 0; k * w <= rest; ++k) {
            cur[var] = static_cast<uint32_t>(k);
            rec(var - 1, rest - k * w);
        }
        cur[var] = 0;
    };
    if (nvars == 0) {
        if (wdeg == 0) out.emplace_back();
        return out;
    }
    rec(nvars - 1, wdeg);
    return out;
}

}  // namespace grasscoh
