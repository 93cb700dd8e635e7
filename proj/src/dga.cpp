#include "confcoh/dga.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "confcoh/errors.hpp"

namespace confcoh::dga {

namespace {

void check_genus(int genus) {
    if (genus < 0) throw InvalidArgument("genus must be >= 0");
    // two bits per genus for a, b plus s1 and sp must fit the odd mask
    if (genus > 30) throw InvalidArgument("genus too large for the DGA oracle");
}

// odd generators in normal order: a's, b's, s1, sp
std::uint64_t odd_mask(const Monomial& m, int genus) {
    std::uint64_t mask = m.ext_mask;
    if (m.s1) mask |= std::uint64_t{1} << (2 * genus);
    if (m.sp) mask |= std::uint64_t{1} << (2 * genus + 1);
    return mask;
}

Monomial unit(int genus) {
    Monomial m;
    m.sym.assign(2 * static_cast<std::size_t>(genus), 0);
    return m;
}

Monomial ext_generator(int genus, int bit) {
    Monomial m = unit(genus);
    m.ext_mask = std::uint64_t{1} << bit;
    return m;
}

Monomial p_power(int genus, int e) {
    Monomial m = unit(genus);
    m.p_exp = e;
    return m;
}

using Terms = std::vector<std::pair<Integer, Monomial>>;

// Images of the generators under d.
Terms d_s1(int genus) {
    Terms out;
    out.emplace_back(1, p_power(genus, 1));
    for (int i = 0; i < genus; ++i) {
        Monomial ab = unit(genus);
        ab.ext_mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << (genus + i));
        out.emplace_back(-1, ab);
    }
    return out;
}

Terms d_sym(int genus, int index) {
    Monomial m = ext_generator(genus, index);
    m.p_exp = 1;
    return {{1, m}};
}

// before * image * after, accumulated into out with the given sign
void insert_image(const Monomial& before, const Terms& image, const Monomial& after, const Integer& factor,
                  int genus, Model model, std::map<Monomial, Integer>& out) {
    for (const auto& [c, gm] : image) {
        auto left = multiply(before, gm, genus, model);
        if (!left) continue;
        auto full = multiply(left->second, after, genus, model);
        if (!full) continue;
        out[full->second] += factor * c * (left->first * full->first);
    }
}

void enumerate_sym(std::vector<int>& exps, std::size_t pos, int remaining, const Monomial& base,
                   std::vector<Monomial>& out) {
    if (pos == exps.size()) {
        Monomial m = base;
        m.sym = exps;
        out.push_back(std::move(m));
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        exps[pos] = e;
        enumerate_sym(exps, pos + 1, remaining - e, base, out);
    }
    exps[pos] = 0;
}

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CONFCOH_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Group {
    Bidegree bidegree;
    repr::WeightVector weight;
    auto operator<=>(const Group&) const = default;
};

// F_n split into (bidegree, weight) blocks, each listing basis monomials in order.
std::map<Group, std::vector<Monomial>> split_basis(int genus, int n, Model model) {
    std::map<Group, std::vector<Monomial>> groups;
    for (auto& m : enumerate_basis(genus, n, model)) {
        Group key{m.bidegree(), m.weight(genus)};
        groups[key].push_back(std::move(m));
    }
    return groups;
}

linalg::SparseIntMatrix block_matrix(const std::vector<Monomial>& cols, const std::vector<Monomial>& rows,
                                     int genus, Model model) {
    std::map<Monomial, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    linalg::SparseIntMatrix mat(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& [coeff, target] : differential(cols[c], genus, model)) {
            auto it = row_index.find(target);
            if (it == row_index.end()) throw Error("differential left the filtration step: " + to_string(target, genus));
            mat.add(it->second, c, coeff);
        }
    }
    return mat;
}

Bidegree target_of(const Bidegree& b) { return {b.deg1 + 2, b.deg2 - 1}; }

void dump_blocks(int genus, int n, Model model, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::map<Bidegree, int> sources;
    for (const auto& m : enumerate_basis(genus, n, model)) sources[m.bidegree()] = 0;
    for (const auto& [b, unused] : sources) {
        if (b.deg2 == 0) continue;
        const BlockMatrix block = differential_block(genus, n, model, b);
        std::ostringstream name;
        name << "d_" << to_string(model) << "_g" << genus << "_n" << n << "_" << b.deg1 << "_" << b.deg2 << ".mtx";
        std::ofstream out(dir / name.str());
        if (!out) throw Error("cannot write " + (dir / name.str()).string());
        linalg::write_matrix_market(out, block.matrix);
    }
}

// dim H per (bidegree, weight) block.
std::map<Group, Integer> block_cohomology(int genus, int n, Model model, const OracleOptions& options) {
    check_genus(genus);
    if (n < 0) throw InvalidArgument("n must be >= 0");
    if (genus == 0 && n == 1) throw Genus0N1Unsupported("the DGA model does not apply to genus 0 with n = 1");
    if (options.debug_dir) dump_blocks(genus, n, model, *options.debug_dir);

    const auto groups = split_basis(genus, n, model);
    std::vector<const std::pair<const Group, std::vector<Monomial>>*> jobs;
    for (const auto& entry : groups) jobs.push_back(&entry);

    // rank of d on each source block; blocks with deg2 = 0 are cycles already
    std::vector<std::size_t> ranks(jobs.size(), 0);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed) {
            const std::size_t k = next++;
            if (k >= jobs.size()) return;
            const auto& [group, cols] = *jobs[k];
            if (group.bidegree.deg2 == 0) continue;
            auto it = groups.find(Group{target_of(group.bidegree), group.weight});
            if (it == groups.end()) continue;
            try {
                ranks[k] = linalg::rank(block_matrix(cols, it->second, genus, model));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(resolve_threads(options.threads), std::max<std::size_t>(1, jobs.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    std::map<Group, std::size_t> rank_into;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const auto& group = jobs[k]->first;
        if (ranks[k] > 0) rank_into[Group{target_of(group.bidegree), group.weight}] += ranks[k];
    }
    std::map<Group, Integer> out;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const auto& [group, basis] = *jobs[k];
        auto it = rank_into.find(group);
        const std::size_t incoming = it == rank_into.end() ? 0 : it->second;
        const std::size_t dim = basis.size() - ranks[k] - incoming;
        if (dim > 0) out[group] = Integer(static_cast<unsigned long>(dim));
    }
    return out;
}

}  // namespace

std::string to_string(Model model) { return model == Model::A ? "A" : "B"; }

std::vector<Generator> generator_set(int genus, Model model) {
    check_genus(genus);
    std::vector<Generator> out;
    for (int i = 1; i <= genus; ++i) out.push_back({"a" + std::to_string(i), 1, 0, 1, true});
    for (int i = 1; i <= genus; ++i) out.push_back({"b" + std::to_string(i), 1, 0, 1, true});
    out.push_back({"s1", 0, 1, 2, true});
    out.push_back({"p", 2, 0, 1, false});
    if (model == Model::B) out.push_back({"sp", 2, 1, 2, true});
    for (int i = 1; i <= genus; ++i) out.push_back({"sa" + std::to_string(i), 1, 1, 2, false});
    for (int i = 1; i <= genus; ++i) out.push_back({"sb" + std::to_string(i), 1, 1, 2, false});
    return out;
}

std::pair<int, int> degree_weight(const Bidegree& b) { return {b.deg1 + b.deg2, b.deg1 + 2 * b.deg2}; }

int Monomial::ext_count() const { return std::popcount(ext_mask); }

int Monomial::sym_total() const { return std::accumulate(sym.begin(), sym.end(), 0); }

repr::WeightVector Monomial::weight(int genus) const {
    repr::WeightVector w(static_cast<std::size_t>(genus), 0);
    for (int i = 0; i < genus; ++i) {
        if (ext_mask >> i & 1) ++w[i];
        if (ext_mask >> (genus + i) & 1) --w[i];
        w[i] += sym[i] - sym[genus + i];
    }
    return w;
}

std::string to_string(const Monomial& m, int genus) {
    std::vector<std::string> parts;
    for (int b = 0; b < 2 * genus; ++b)
        if (m.ext_mask >> b & 1) parts.push_back((b < genus ? "a" : "b") + std::to_string(b % genus + 1));
    if (m.s1) parts.push_back("s1");
    if (m.p_exp == 1) parts.push_back("p");
    if (m.p_exp > 1) parts.push_back("p^" + std::to_string(m.p_exp));
    if (m.sp) parts.push_back("sp");
    for (int x = 0; x < 2 * genus; ++x) {
        if (m.sym[x] == 0) continue;
        std::string name = (x < genus ? "sa" : "sb") + std::to_string(x % genus + 1);
        if (m.sym[x] > 1) name += "^" + std::to_string(m.sym[x]);
        parts.push_back(name);
    }
    if (parts.empty()) return "1";
    std::string out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out += " " + parts[k];
    return out;
}

std::optional<std::pair<int, Monomial>> multiply(const Monomial& x, const Monomial& y, int genus, Model model) {
    const std::uint64_t ox = odd_mask(x, genus);
    const std::uint64_t oy = odd_mask(y, genus);
    if (ox & oy) return std::nullopt;
    const int p = x.p_exp + y.p_exp;
    if (model == Model::A && p > 1) return std::nullopt;

    // moving each odd factor of y past the odd factors of x that sit after it
    int swaps = 0;
    for (std::uint64_t rest = oy; rest; rest &= rest - 1) {
        const int bit = std::countr_zero(rest);
        swaps += std::popcount(ox >> (bit + 1));
    }

    Monomial out;
    out.ext_mask = x.ext_mask | y.ext_mask;
    out.s1 = x.s1 || y.s1;
    out.sp = x.sp || y.sp;
    out.p_exp = p;
    out.sym.resize(2 * static_cast<std::size_t>(genus));
    for (int k = 0; k < 2 * genus; ++k) out.sym[k] = x.sym[k] + y.sym[k];
    return std::make_pair(swaps % 2 == 0 ? 1 : -1, std::move(out));
}

std::vector<std::pair<Integer, Monomial>> differential(const Monomial& m, int genus, Model model) {
    std::map<Monomial, Integer> acc;
    const int ext_parity = m.ext_count() % 2;

    if (m.s1) {
        Monomial before = unit(genus);
        before.ext_mask = m.ext_mask;
        Monomial after = m;
        after.ext_mask = 0;
        after.s1 = false;
        insert_image(before, d_s1(genus), after, ext_parity ? -1 : 1, genus, model, acc);
    }
    if (m.sp) {
        Monomial before = unit(genus);
        before.ext_mask = m.ext_mask;
        before.s1 = m.s1;
        before.p_exp = m.p_exp;
        Monomial after = unit(genus);
        after.sym = m.sym;
        const int parity = (ext_parity + static_cast<int>(m.s1)) % 2;
        insert_image(before, {{1, p_power(genus, 2)}}, after, parity ? -1 : 1, genus, model, acc);
    }
    const int odd_before_sym = (ext_parity + static_cast<int>(m.s1) + static_cast<int>(m.sp)) % 2;
    for (int x = 0; x < 2 * genus; ++x) {
        if (m.sym[x] == 0) continue;
        Monomial before = m;
        std::fill(before.sym.begin(), before.sym.end(), 0);
        Monomial after = unit(genus);
        after.sym = m.sym;
        --after.sym[x];
        insert_image(before, d_sym(genus, x), after, Integer(odd_before_sym ? -m.sym[x] : m.sym[x]), genus, model,
                     acc);
    }

    std::vector<std::pair<Integer, Monomial>> out;
    for (auto& [mon, c] : acc)
        if (c != 0) out.emplace_back(c, mon);
    return out;
}

std::vector<Monomial> enumerate_basis(int genus, int n, Model model) {
    check_genus(genus);
    if (n < 0) throw InvalidArgument("n must be >= 0");
    std::vector<Monomial> out;
    const std::uint64_t masks = std::uint64_t{1} << (2 * genus);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (int s1 = 0; s1 <= 1; ++s1) {
            for (int sp = 0; sp <= (model == Model::B ? 1 : 0); ++sp) {
                const int p_max = model == Model::A ? 1 : n;
                for (int p = 0; p <= p_max; ++p) {
                    Monomial base = unit(genus);
                    base.ext_mask = mask;
                    base.s1 = s1;
                    base.sp = sp;
                    base.p_exp = p;
                    const int used = base.deg3();
                    if (used > n) continue;
                    std::vector<int> exps(2 * static_cast<std::size_t>(genus), 0);
                    enumerate_sym(exps, 0, (n - used) / 2, base, out);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BlockMatrix differential_block(int genus, int n, Model model, Bidegree block) {
    BlockMatrix out;
    out.source = block;
    out.target = target_of(block);
    for (auto& m : enumerate_basis(genus, n, model)) {
        const Bidegree b = m.bidegree();
        if (b == out.source)
            out.cols.push_back(m);
        else if (b == out.target)
            out.rows.push_back(std::move(m));
    }
    out.matrix = block_matrix(out.cols, out.rows, genus, model);
    return out;
}

int default_budget(int genus) {
    switch (genus) {
        case 0: return 12;
        case 1: return 10;
        case 2: return 8;
        case 3: return 5;
        default: return 2;
    }
}

std::map<Bidegree, Integer> cohomology_dims(int genus, int n, Model model, const OracleOptions& options) {
    std::map<Bidegree, Integer> out;
    for (const auto& [group, dim] : block_cohomology(genus, n, model, options)) out[group.bidegree] += dim;
    return out;
}

std::map<Bidegree, repr::Character> cohomology_weights(int genus, int n, const OracleOptions& options) {
    if (genus < 1) throw InvalidArgument("weight-resolved cohomology needs genus >= 1");
    std::map<Bidegree, repr::Character> out;
    for (const auto& [group, dim] : block_cohomology(genus, n, Model::A, options)) {
        auto [it, inserted] = out.try_emplace(group.bidegree);
        it->second.genus = genus;
        it->second.add(group.weight, dim);
    }
    return out;
}

qformula::MixedTable cohomology_reps(int genus, int n, const OracleOptions& options) {
    qformula::MixedTable table;
    table.genus = genus;
    table.n = n;
    if (genus == 0) {
        for (const auto& [b, dim] : cohomology_dims(0, n, Model::A, options)) {
            const auto [k, h] = degree_weight(b);
            table.add(k, h, repr::VirtualRep::scalar(dim));
        }
        return table;
    }
    for (const auto& [b, character] : cohomology_weights(genus, n, options)) {
        const auto [k, h] = degree_weight(b);
        table.add(k, h, repr::peel_character(genus, character));
    }
    return table;
}

std::map<std::pair<int, int>, Integer> regraded_dims(const std::map<Bidegree, Integer>& dims) {
    std::map<std::pair<int, int>, Integer> out;
    for (const auto& [b, d] : dims)
        if (d != 0) out[degree_weight(b)] += d;
    return out;
}

std::vector<Integer> betti_from_dims(const std::map<Bidegree, Integer>& dims) {
    std::vector<Integer> b(1, 0);
    for (const auto& [kh, d] : regraded_dims(dims)) {
        if (static_cast<int>(b.size()) <= kh.first) b.resize(kh.first + 1, 0);
        b[kh.first] += d;
    }
    return b;
}

}  // namespace confcoh::dga
