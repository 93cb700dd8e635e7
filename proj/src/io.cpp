#include "confcoh/io.hpp"

#include <limits>
#include <sstream>

#include "confcoh/errors.hpp"

namespace confcoh::io {

using repr::RepLabel;
using repr::VirtualRep;

namespace {

const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string power(const char* var, int e) {
    if (e == 0) return "";
    return e == 1 ? std::string(var) : var + superscript(e);
}

template <class T>
T field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field \"") + name + "\": " + e.what());
    }
}

// "3", "[V(1,1)]" or "[2·V(0,1) + V(0,0)]"
std::string coefficient_text(const VirtualRep& rep) {
    if (rep.is_scalar()) return to_string(rep.scalar_value());
    return "[" + repr::to_string(rep) + "]";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
    return out;
}

}  // namespace

std::string superscript(int n) {
    if (n < 0) return "⁻" + superscript(-n);
    std::string out;
    for (char c : std::to_string(n)) out += kSuperscripts[c - '0'];
    return out;
}

std::string ts_monomial(int t, int s) { return power("t", t) + power("s", s); }

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("not an integer: " + j.get<std::string>());
        }
    }
    throw ParseError("expected an integer, got " + j.dump());
}

// --- representations ----------------------------------------------------

json to_json(const VirtualRep& rep) {
    json out = json::array();
    for (const auto& [label, mult] : rep.terms())
        out.push_back({{"i", label.i()}, {"j", label.j()}, {"mult", integer_json(mult)}});
    return out;
}

VirtualRep rep_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("representation must be a JSON array");
    VirtualRep rep;
    for (const auto& term : j) {
        const int i = field<int>(term, "i");
        const int jj = field<int>(term, "j");
        if (i < 0 || jj < 0 || (jj == 0 && i != 0)) throw ParseError("not a canonical label: V(" + std::to_string(i) + "," + std::to_string(jj) + ")");
        // labels are genus independent as long as j <= g; the genus is checked by the consumer
        rep.add(RepLabel::make(std::max(jj, 1), i, jj), integer_from_json(term.at("mult")));
    }
    return rep;
}

// --- series -------------------------------------------------------------

std::string render_series(const series::TriSeries& q) {
    // (u, t, s) lexicographic
    std::map<std::array<int, 3>, const VirtualRep*> ordered;
    for (const auto& [key, rep] : q.coeffs()) ordered[{key[2], key[0], key[1]}] = &rep;
    std::vector<std::string> terms;
    for (const auto& [uts, rep] : ordered) {
        std::vector<std::string> factors;
        const std::string ts = ts_monomial(uts[1], uts[2]);
        const std::string u = power("u", uts[0]);
        const bool unit = rep->is_scalar() && rep->scalar_value() == 1;
        if (!unit || (ts.empty() && u.empty())) factors.push_back(coefficient_text(*rep));
        if (!ts.empty()) factors.push_back(ts);
        if (!u.empty()) factors.push_back(u);
        terms.push_back(join(factors, "·"));
    }
    return terms.empty() ? "0" : join(terms, " + ");
}

std::string render_series_dims(const series::TriSeries& q, int genus) {
    std::map<int, std::map<std::pair<int, int>, Integer>> by_u;
    for (const auto& [key, rep] : q.coeffs()) {
        const Integer d = genus == 0 ? rep.scalar_value() : rep.dim(genus);
        if (d != 0) by_u[key[2]][{key[0], key[1]}] += d;
    }
    std::vector<std::string> terms;
    for (const auto& [u, poly] : by_u) {
        std::vector<std::string> inner;
        for (const auto& [ts, d] : poly) {
            const std::string mono = ts_monomial(ts.first, ts.second);
            if (mono.empty())
                inner.push_back(to_string(d));
            else if (d == 1)
                inner.push_back(mono);
            else if (d == -1)
                inner.push_back("-" + mono);
            else
                inner.push_back(to_string(d) + mono);
        }
        std::string coeff = join(inner, " + ");
        const std::string upow = power("u", u);
        if (upow.empty()) {
            terms.push_back(coeff);
        } else if (inner.size() > 1) {
            terms.push_back("(" + coeff + ")" + upow);
        } else if (coeff == "1") {
            terms.push_back(upow);
        } else {
            terms.push_back(coeff + upow);
        }
    }
    return terms.empty() ? "0" : join(terms, " + ");
}

json to_json(const series::TriSeries& q) {
    json out = json::array();
    std::map<std::array<int, 3>, const VirtualRep*> ordered;
    for (const auto& [key, rep] : q.coeffs()) ordered[{key[2], key[0], key[1]}] = &rep;
    for (const auto& [uts, rep] : ordered)
        out.push_back({{"t", uts[1]}, {"s", uts[2]}, {"u", uts[0]}, {"rep", to_json(*rep)}});
    return out;
}

series::TriSeries series_from_json(const json& j, int order) {
    if (!j.is_array()) throw ParseError("series must be a JSON array");
    series::TriSeries q(order);
    for (const auto& term : j) {
        const std::array<int, 3> key{field<int>(term, "t"), field<int>(term, "s"), field<int>(term, "u")};
        if (!q.admits(key)) throw ParseError("series term outside the truncation order");
        if (!term.contains("rep")) throw ParseError("missing field \"rep\"");
        q.add_term(key, rep_from_json(term.at("rep")));
    }
    return q;
}

// --- tables -------------------------------------------------------------

json to_json(const qformula::MixedTable& table) {
    json rows = json::array();
    const auto dims = table.dims();
    for (const auto& [kh, rep] : table.entries) {
        auto it = dims.find(kh);
        rows.push_back({{"degree", kh.first},
                        {"weight", kh.second},
                        {"dim", integer_json(it == dims.end() ? Integer(0) : it->second)},
                        {"decomposition", to_json(rep)}});
    }
    return {{"genus", table.genus}, {"n", table.n}, {"table", rows}};
}

json dims_to_json(int genus, int n, const DimMap& dims) {
    json rows = json::array();
    for (const auto& [kh, d] : dims) rows.push_back({{"degree", kh.first}, {"weight", kh.second}, {"dim", integer_json(d)}});
    return {{"genus", genus}, {"n", n}, {"table", rows}};
}

qformula::MixedTable table_from_json(const json& j) {
    qformula::MixedTable table;
    table.genus = field<int>(j, "genus");
    table.n = field<int>(j, "n");
    if (table.genus < 0 || table.n < 0) throw ParseError("genus and n must be >= 0");
    if (!j.at("table").is_array()) throw ParseError("\"table\" must be an array");
    for (const auto& row : j.at("table")) {
        if (!row.contains("decomposition")) throw ParseError("table row without a decomposition");
        VirtualRep rep = rep_from_json(row.at("decomposition"));
        for (const auto& [label, mult] : rep.terms())
            if (label.j() > table.genus || (table.genus == 0 && !label.is_trivial()))
                throw ParseError("label " + repr::to_string(label) + " does not exist in this genus");
        table.add(field<int>(row, "degree"), field<int>(row, "weight"), rep);
    }
    return table;
}

std::string render_table(const qformula::MixedTable& table) {
    std::ostringstream out;
    const auto dims = table.dims();
    out << "# genus " << table.genus << ", n " << table.n << "\n";
    out << "# k h dim decomposition\n";
    for (const auto& [kh, rep] : table.entries) {
        auto it = dims.find(kh);
        out << kh.first << ' ' << kh.second << ' ' << (it == dims.end() ? Integer(0) : it->second).get_str() << ' '
            << repr::to_string(rep) << '\n';
    }
    return out.str();
}

std::string render_dims(int genus, int n, const DimMap& dims) {
    std::ostringstream out;
    out << "# genus " << genus << ", n " << n << "\n";
    out << "# k h dim\n";
    for (const auto& [kh, d] : dims) out << kh.first << ' ' << kh.second << ' ' << d.get_str() << '\n';
    return out.str();
}

std::string csv_header() { return "n,k,h,dim\n"; }

std::string csv_rows(int n, const DimMap& dims) {
    std::ostringstream out;
    for (const auto& [kh, d] : dims) out << n << ',' << kh.first << ',' << kh.second << ',' << d.get_str() << '\n';
    return out.str();
}

// --- integer lists ------------------------------------------------------

std::string render_list(const std::vector<Integer>& values) {
    std::vector<std::string> parts;
    parts.reserve(values.size());
    for (const auto& v : values) parts.push_back(v.get_str());
    return join(parts, " ");
}

json to_json(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(integer_json(v));
    return out;
}

std::vector<Integer> integers_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of integers");
    std::vector<Integer> out;
    for (const auto& v : j) out.push_back(integer_from_json(v));
    return out;
}

}  // namespace confcoh::io
