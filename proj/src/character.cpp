#include <algorithm>
#include <numeric>
#include <set>

#include "confcoh/errors.hpp"
#include "confcoh/repr.hpp"

namespace confcoh::repr {

namespace {

long dot(const WeightVector& a, const WeightVector& b) {
    long s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<long>(a[k]) * b[k];
    return s;
}

WeightVector rho_vector(int genus) {
    WeightVector rho(static_cast<std::size_t>(genus));
    for (int k = 0; k < genus; ++k) rho[k] = genus - k;
    return rho;
}

std::vector<WeightVector> positive_roots(int genus) {
    std::vector<WeightVector> roots;
    const auto g = static_cast<std::size_t>(genus);
    for (std::size_t k = 0; k < g; ++k) {
        for (std::size_t h = k + 1; h < g; ++h) {
            WeightVector minus(g, 0), plus(g, 0);
            minus[k] = 1;
            minus[h] = -1;
            plus[k] = 1;
            plus[h] = 1;
            roots.push_back(minus);
            roots.push_back(plus);
        }
        WeightVector twice(g, 0);
        twice[k] = 2;
        roots.push_back(twice);
    }
    return roots;
}

// Coefficients of lambda - mu in the simple roots e_1-e_2, ..., e_{g-1}-e_g, 2e_g.
// Returns -1 when mu is not below lambda in the dominance order.
long depth_below(const WeightVector& lambda, const WeightVector& mu) {
    long prefix = 0;
    long depth = 0;
    const std::size_t g = lambda.size();
    for (std::size_t k = 0; k + 1 < g; ++k) {
        prefix += lambda[k] - mu[k];
        if (prefix < 0) return -1;
        depth += prefix;
    }
    prefix += lambda[g - 1] - mu[g - 1];
    if (prefix < 0 || prefix % 2 != 0) return -1;
    return depth + prefix / 2;
}

void enumerate_dominant(const WeightVector& lambda, WeightVector& current, std::size_t pos, int bound,
                        std::vector<std::pair<long, WeightVector>>& out) {
    if (pos == lambda.size()) {
        long d = depth_below(lambda, current);
        if (d >= 0) out.emplace_back(d, current);
        return;
    }
    for (int v = 0; v <= bound; ++v) {
        current[pos] = v;
        enumerate_dominant(lambda, current, pos + 1, v, out);
    }
}

}  // namespace

WeightVector dominant_conjugate(const WeightVector& w) {
    WeightVector d(w.size());
    std::transform(w.begin(), w.end(), d.begin(), [](int x) { return x < 0 ? -x : x; });
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<WeightVector> weyl_orbit(const WeightVector& w) {
    WeightVector base = dominant_conjugate(w);
    std::sort(base.begin(), base.end());
    std::set<WeightVector> orbit;
    do {
        std::vector<std::size_t> nonzero;
        for (std::size_t k = 0; k < base.size(); ++k)
            if (base[k] != 0) nonzero.push_back(k);
        const std::size_t patterns = std::size_t{1} << nonzero.size();
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            WeightVector v = base;
            for (std::size_t b = 0; b < nonzero.size(); ++b)
                if (mask >> b & 1U) v[nonzero[b]] = -v[nonzero[b]];
            orbit.insert(std::move(v));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return {orbit.begin(), orbit.end()};
}

Integer Character::mass() const {
    Integer total = 0;
    for (const auto& [w, m] : multiplicities) total += m;
    return total;
}

void Character::add(const WeightVector& w, const Integer& m) {
    if (m == 0) return;
    auto [it, inserted] = multiplicities.try_emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) multiplicities.erase(it);
    }
}

Character& Character::operator+=(const Character& other) {
    for (const auto& [w, m] : other.multiplicities) add(w, m);
    return *this;
}

std::map<WeightVector, Integer> dominant_multiplicities(int genus, const RepLabel& label) {
    if (genus < 1) throw InvalidArgument("genus must be >= 1");
    if (label.is_zero()) return {};
    const WeightVector lambda = label.highest_weight(genus);

    std::vector<std::pair<long, WeightVector>> candidates;
    WeightVector scratch(lambda.size(), 0);
    enumerate_dominant(lambda, scratch, 0, lambda[0], candidates);
    std::sort(candidates.begin(), candidates.end());

    std::set<WeightVector> below;
    for (const auto& c : candidates) below.insert(c.second);

    const WeightVector rho = rho_vector(genus);
    const auto roots = positive_roots(genus);
    auto shifted_norm = [&](const WeightVector& w) {
        WeightVector v(w.size());
        for (std::size_t k = 0; k < w.size(); ++k) v[k] = w[k] + rho[k];
        return dot(v, v);
    };
    const long top_norm = shifted_norm(lambda);

    std::map<WeightVector, Integer> mult;
    for (const auto& [depth, mu] : candidates) {
        if (depth == 0) {
            mult[mu] = 1;
            continue;
        }
        Integer sum = 0;
        for (const auto& alpha : roots) {
            WeightVector nu = mu;
            for (int k = 1;; ++k) {
                for (std::size_t c = 0; c < nu.size(); ++c) nu[c] += alpha[c];
                WeightVector dom = dominant_conjugate(nu);
                if (!below.count(dom)) break;
                auto it = mult.find(dom);
                if (it != mult.end()) sum += it->second * dot(nu, alpha);
            }
        }
        const long denom = top_norm - shifted_norm(mu);
        Integer numer = 2 * sum;
        if (denom <= 0 || !mpz_divisible_ui_p(numer.get_mpz_t(), static_cast<unsigned long>(denom)))
            throw Error("Freudenthal recursion gave a non-integer multiplicity");
        Integer m = numer / denom;
        if (m != 0) mult[mu] = m;
    }
    return mult;
}

Character irreducible_character(int genus, const RepLabel& label, int budget) {
    if (genus > budget)
        throw BudgetExceeded("character expansion limited to genus <= " + std::to_string(budget));
    Character ch;
    ch.genus = genus;
    for (const auto& [mu, m] : dominant_multiplicities(genus, label))
        for (const auto& w : weyl_orbit(mu)) ch.add(w, m);
    return ch;
}

Character character_of(int genus, const VirtualRep& rep, int budget) {
    if (!rep.is_nonnegative()) throw InvalidArgument("character_of needs nonnegative coefficients");
    Character ch;
    ch.genus = genus;
    for (const auto& [label, c] : rep.terms()) {
        Character irr = irreducible_character(genus, label, budget);
        for (const auto& [w, m] : irr.multiplicities) ch.add(w, c * m);
    }
    return ch;
}

namespace {

// 2^(nonzero entries) * g! / prod(multiplicity of each absolute value)!
std::size_t orbit_size(const WeightVector& dominant) {
    std::size_t size = 1;
    std::map<int, std::size_t> counts;
    for (std::size_t k = 0; k < dominant.size(); ++k) {
        size *= k + 1;
        if (dominant[k] != 0) size *= 2;
        size /= ++counts[dominant[k]];
    }
    return size;
}

}  // namespace

VirtualRep peel_character(int genus, const Character& character) {
    std::map<WeightVector, Integer> dominant;
    for (const auto& [w, m] : character.multiplicities) {
        if (static_cast<int>(w.size()) != genus) throw InvalidArgument("weight length differs from genus");
        if (m < 0) throw NotACharacter("negative multiplicity in input character");
        if (m != 0 && w == dominant_conjugate(w)) dominant[w] = m;
    }
    std::map<WeightVector, std::size_t> orbit_seen;
    for (const auto& [w, m] : character.multiplicities) {
        if (m == 0) continue;
        const WeightVector rep = dominant_conjugate(w);
        auto it = dominant.find(rep);
        if (it == dominant.end() || it->second != m) throw NotACharacter("input character is not Weyl-invariant");
        ++orbit_seen[rep];
    }
    for (const auto& [w, seen] : orbit_seen)
        if (seen != orbit_size(w)) throw NotACharacter("input character is not Weyl-invariant");

    const WeightVector rho = rho_vector(genus);
    VirtualRep out;
    while (!dominant.empty()) {
        auto top = dominant.begin();
        long best = dot(top->first, rho);
        for (auto it = dominant.begin(); it != dominant.end(); ++it) {
            long v = dot(it->first, rho);
            if (v > best || (v == best && it->first > top->first)) {
                best = v;
                top = it;
            }
        }
        const WeightVector highest = top->first;
        const Integer count = top->second;
        RepLabel label = RepLabel::from_weight(highest);
        if (label.is_zero()) throw UnsupportedWeight("highest weight outside the hook family encountered while peeling");
        for (const auto& [mu, m] : dominant_multiplicities(genus, label)) {
            Integer& slot = dominant[mu];
            slot -= count * m;
            if (slot < 0) throw NotACharacter("peeling produced a negative multiplicity");
            if (slot == 0) dominant.erase(mu);
        }
        out.add(label, count);
    }
    return out;
}

}  // namespace confcoh::repr
