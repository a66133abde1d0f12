#include "frobspec/perm.hpp"

#include "frobspec/errors.hpp"
#include "frobspec/numtheory.hpp"

#include <numeric>
#include <sstream>

namespace frobspec {

Permutation Permutation::identity(std::size_t degree) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    return raw(std::move(img));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (std::uint32_t v : images) {
        if (v >= images.size() || seen[v])
            throw DomainError("image vector is not a bijection");
        seen[v] = true;
    }
    return raw(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycs) {
    std::vector<std::uint32_t> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycs) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::uint32_t a = cyc[i];
            std::uint32_t b = cyc[(i + 1) % cyc.size()];
            if (a >= degree)
                throw DomainError("cycle point " + std::to_string(a) +
                                  " exceeds degree " + std::to_string(degree));
            if (used[a])
                throw DomainError("point " + std::to_string(a) +
                                  " appears in two cycles");
            used[a] = true;
            img[a] = b;
        }
    }
    return raw(std::move(img));
}

Permutation Permutation::raw(std::vector<std::uint32_t> images) {
    Permutation p;
    p.img_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DomainError("cannot compose permutations of different degrees");
    std::vector<std::uint32_t> img(p.degree());
    for (std::size_t i = 0; i < img.size(); ++i)
        img[i] = p[q[i]];
    return Permutation::raw(std::move(img));
}

void compose_into(const Permutation& p, const Permutation& q, std::vector<std::uint32_t>& out) {
    out.resize(p.degree());
    const auto& pi = p.images();
    const auto& qi = q.images();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = pi[qi[i]];
}

Permutation inverse(const Permutation& p) {
    std::vector<std::uint32_t> img(p.degree());
    for (std::size_t i = 0; i < img.size(); ++i)
        img[p[i]] = static_cast<std::uint32_t>(i);
    return Permutation::raw(std::move(img));
}

Permutation power(const Permutation& p, std::uint64_t e) {
    Permutation r = Permutation::identity(p.degree());
    Permutation b = p;
    while (e) {
        if (e & 1) r = compose(r, b);
        b = compose(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t element_order(const Permutation& p) {
    std::uint64_t ord = 1;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t start = 0; start < p.degree(); ++start) {
        if (seen[start]) continue;
        std::uint64_t len = 0;
        std::uint32_t x = static_cast<std::uint32_t>(start);
        do {
            seen[x] = true;
            x = p[x];
            ++len;
        } while (x != start);
        ord = checked_lcm(ord, len);
    }
    return ord;
}

std::vector<std::vector<std::uint32_t>> cycles(const Permutation& p) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t start = 0; start < p.degree(); ++start) {
        if (seen[start] || p[start] == start) {
            seen[start] = true;
            continue;
        }
        std::vector<std::uint32_t> cyc;
        std::uint32_t x = static_cast<std::uint32_t>(start);
        do {
            seen[x] = true;
            cyc.push_back(x);
            x = p[x];
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string cycle_string(const Permutation& p) {
    auto cycs = cycles(p);
    if (cycs.empty()) return "()";
    std::ostringstream os;
    for (const auto& cyc : cycs) {
        os << '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) os << ' ';
            os << cyc[i];
        }
        os << ')';
    }
    return os.str();
}

std::size_t PermHash::operator()(const Permutation& p) const noexcept {
    // FNV-1a over the image words; adequate spread for closure sets.
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t v : p.images()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace frobspec
