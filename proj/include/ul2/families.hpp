#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "rooted_tree.hpp"
#include "unicyclic.hpp"

namespace ul2 {

enum class Family {
    StarComp,
    G0, H42, H4, H5,                                  // girth 5
    E0, H94, F0, D0, A8, A11, P0, A35, H65,           // girth 4
    B4, B7, B10, C2, B35, B42, B44, B45, B66,         // girth 3
};

struct FamilyId {
    Family tag = Family::StarComp;
    int girth = 0; // only read for StarComp

    bool operator==(const FamilyId& o) const {
        return tag == o.tag && (tag != Family::StarComp || girth == o.girth);
    }
};

// Slot of a family pattern: a fixed rooted tree, a broom with children of
// at most (arity-1) leaves, or a star of free order.
struct Slot {
    enum Kind { Fixed, Broom2, Broom3, StarVar } kind = Fixed;
    std::string code; // Fixed only
};

struct FamilyDef {
    Family tag;
    const char* name;
    int girth;
    std::vector<Slot> slots;
    int broom_slot = -1;
    int arity = 0; // number of broom parameters
};

namespace detail {

inline Slot fixed_star(int k) { return {Slot::Fixed, tree_code(star_tree(k))}; }
inline Slot fixed_broom(int l0, int l1) { return {Slot::Fixed, tree_code(broom_tree({{l0, l1}}))}; }
inline Slot broom2() { return {Slot::Broom2, {}}; }
inline Slot broom3() { return {Slot::Broom3, {}}; }

inline std::vector<FamilyDef> make_catalog() {
    auto S = fixed_star;
    std::vector<FamilyDef> c;
    auto add = [&](Family f, const char* name, std::vector<Slot> slots) {
        FamilyDef d{f, name, static_cast<int>(slots.size()), std::move(slots)};
        for (int i = 0; i < d.girth; ++i) {
            if (d.slots[i].kind == Slot::Broom2) { d.broom_slot = i; d.arity = 2; }
            if (d.slots[i].kind == Slot::Broom3) { d.broom_slot = i; d.arity = 3; }
        }
        c.push_back(std::move(d));
    };
    add(Family::G0, "G0", {S(2), broom2(), S(1), S(1), S(1)});
    add(Family::H42, "H42", {broom3(), S(1), S(1), S(1), S(1)});
    add(Family::H4, "H4", {S(2), fixed_broom(12, 1), S(2), S(1), S(1)});
    add(Family::H5, "H5", {S(2), fixed_broom(13, 1), S(2), S(1), S(1)});
    add(Family::E0, "E0", {S(2), S(2), broom2(), S(1)});
    add(Family::H94, "H94", {S(2), broom3(), S(2), S(1)});
    add(Family::F0, "F0", {S(3), broom2(), S(2), S(1)});
    add(Family::D0, "D0", {S(3), broom2(), S(3), S(1)});
    add(Family::A8, "A8", {S(1), broom3(), S(1), S(2)});
    add(Family::A11, "A11", {S(2), broom3(), S(1), S(1)});
    add(Family::P0, "P0", {S(3), broom2(), S(1), S(1)});
    add(Family::A35, "A35", {broom3(), S(1), S(1), S(1)});
    add(Family::H65, "H65", {S(2), S(2), S(2), fixed_broom(12, 1)});
    add(Family::B4, "B4", {S(2), S(2), broom3()});
    add(Family::B7, "B7", {S(2), S(3), broom3()});
    add(Family::B10, "B10", {S(2), S(4), broom2()});
    add(Family::C2, "C2", {S(3), S(3), broom2()});
    add(Family::B35, "B35", {S(3), S(4), fixed_broom(11, 1)});
    add(Family::B42, "B42", {S(2), broom3(), S(1)});
    add(Family::B44, "B44", {S(3), broom3(), S(1)});
    add(Family::B45, "B45", {S(4), broom2(), S(1)});
    add(Family::B66, "B66", {broom3(), S(1), S(1)});
    return c;
}

} // namespace detail

// every named family except StarComp, in catalog order
inline const std::vector<FamilyDef>& family_catalog() {
    static const std::vector<FamilyDef> c = detail::make_catalog();
    return c;
}

inline const FamilyDef& family_def(Family f) {
    for (const auto& d : family_catalog())
        if (d.tag == f) return d;
    throw Error(ErrorCode::UnknownFamily, "no catalog entry");
}

inline std::string family_name(const FamilyId& id) {
    if (id.tag == Family::StarComp) return "S" + std::to_string(id.girth);
    return family_def(id.tag).name;
}

inline std::optional<Family> family_from_name(const std::string& s) {
    for (const auto& d : family_catalog())
        if (s == d.name) return d.tag;
    return std::nullopt;
}

inline int family_girth(const FamilyId& id) {
    return id.tag == Family::StarComp ? id.girth : family_def(id.tag).girth;
}

struct FamilyInstance {
    FamilyId id;
    std::vector<int> params;
    Graph graph;
    int n = 0;
};

namespace detail {

inline void check_params(const FamilyId& id, const std::vector<int>& params) {
    if (id.tag == Family::StarComp) {
        if (id.girth < 3) throw Error(ErrorCode::GirthTooSmall, "girth " + std::to_string(id.girth) + " < 3");
        if (static_cast<int>(params.size()) != id.girth)
            throw Error(ErrorCode::MalformedParams, "S" + std::to_string(id.girth) + " needs " +
                                                        std::to_string(id.girth) + " sizes, got " +
                                                        std::to_string(params.size()));
        for (int s : params)
            if (s < 1) throw Error(ErrorCode::MalformedParams, "star sizes must be >= 1");
        return;
    }
    const FamilyDef& d = family_def(id.tag);
    if (static_cast<int>(params.size()) != d.arity)
        throw Error(ErrorCode::MalformedParams, std::string(d.name) + " takes " + std::to_string(d.arity) +
                                                    " parameters, got " + std::to_string(params.size()));
    for (int x : params)
        if (x < 0) throw Error(ErrorCode::MalformedParams, "broom counts must be >= 0");
}

} // namespace detail

inline int family_order(const FamilyId& id, const std::vector<int>& params) {
    detail::check_params(id, params);
    if (id.tag == Family::StarComp) {
        int n = 0;
        for (int s : params) n += s;
        return n;
    }
    const FamilyDef& d = family_def(id.tag);
    int n = 0;
    for (int i = 0; i < d.girth; ++i) {
        if (i == d.broom_slot) {
            n += 1;
            for (size_t k = 0; k < params.size(); ++k) n += static_cast<int>(k + 1) * params[k];
        } else {
            n += tree_from_code(d.slots[i].code).order();
        }
    }
    return n;
}

inline UnicyclicDesc family_desc(const FamilyId& id, const std::vector<int>& params) {
    detail::check_params(id, params);
    if (id.tag == Family::StarComp) {
        UnicyclicDesc u{id.girth, {}};
        for (int s : params) u.trees.push_back(star_tree(s));
        return u;
    }
    const FamilyDef& d = family_def(id.tag);
    UnicyclicDesc u{d.girth, {}};
    for (int i = 0; i < d.girth; ++i)
        u.trees.push_back(i == d.broom_slot ? broom_tree({params}) : tree_from_code(d.slots[i].code));
    return u;
}

inline FamilyInstance make_family(const FamilyId& id, const std::vector<int>& params) {
    UnicyclicDesc u = family_desc(id, params);
    FamilyInstance fi{id, params, realize_unicyclic(u), 0};
    fi.n = fi.graph.order();
    return fi;
}

// vertex index of the broom root in the realized graph
inline int broom_root(const FamilyId& id) {
    if (id.tag == Family::StarComp) return -1;
    return family_def(id.tag).broom_slot;
}

// Parameter tuples with family_order in [n_min, n_max], lexicographic.
// StarComp yields one size tuple per dihedral class (its smallest rotation/reflection).
class FamilySweep {
public:
    FamilySweep(const FamilyId& id, int n_min, int n_max) : id_(id) {
        if (n_min > n_max) return;
        if (id.tag == Family::StarComp) {
            int g = id.girth;
            if (g < 3) throw Error(ErrorCode::GirthTooSmall, "girth " + std::to_string(g) + " < 3");
            std::vector<int> cur;
            auto rec = [&](auto&& self, int sum) -> void {
                if (static_cast<int>(cur.size()) == g) {
                    if (sum >= n_min && is_dihedral_min(cur)) todo_.push_back(cur);
                    return;
                }
                int left = g - static_cast<int>(cur.size()) - 1;
                for (int s = 1; sum + s + left <= n_max; ++s) {
                    cur.push_back(s);
                    self(self, sum + s);
                    cur.pop_back();
                }
            };
            rec(rec, 0);
            return;
        }
        const FamilyDef& d = family_def(id.tag);
        int base = family_order(id, std::vector<int>(d.arity, 0));
        if (d.arity == 0) {
            if (base >= n_min && base <= n_max) todo_.push_back({});
            return;
        }
        int span = n_max - base;
        for (int l0 = 0; l0 <= span; ++l0)
            for (int l1 = 0; l0 + 2 * l1 <= span; ++l1) {
                if (d.arity == 2) {
                    int n = base + l0 + 2 * l1;
                    if (n >= n_min) todo_.push_back({l0, l1});
                    continue;
                }
                for (int l2 = 0; l0 + 2 * l1 + 3 * l2 <= span; ++l2) {
                    int n = base + l0 + 2 * l1 + 3 * l2;
                    if (n >= n_min) todo_.push_back({l0, l1, l2});
                }
            }
    }

    std::optional<FamilyInstance> next() {
        if (pos_ >= todo_.size()) return std::nullopt;
        return make_family(id_, todo_[pos_++]);
    }

    size_t count() const { return todo_.size(); }

private:
    FamilyId id_;
    std::vector<std::vector<int>> todo_;
    size_t pos_ = 0;

    static bool is_dihedral_min(const std::vector<int>& s) {
        int g = static_cast<int>(s.size());
        std::vector<int> c(g);
        for (int refl = 0; refl < 2; ++refl)
            for (int sh = 0; sh < g; ++sh) {
                for (int i = 0; i < g; ++i) c[i] = s[((refl ? sh - i : sh + i) % g + g) % g];
                if (c < s) return false;
            }
        return true;
    }
};

inline std::vector<FamilyInstance> sweep_family(const FamilyId& id, int n_min, int n_max) {
    FamilySweep sw(id, n_min, n_max);
    std::vector<FamilyInstance> out;
    while (auto fi = sw.next()) out.push_back(std::move(*fi));
    return out;
}

// "H42:l0=16,l1=0,l2=0", "S:g=4,sizes=2,2,2,17", "C:n=11", "H5"
struct FamilySpec {
    FamilyId id;
    std::vector<int> params;
};

namespace detail {

inline int parse_int(const std::string& s, const std::string& what) {
    if (s.empty()) throw Error(ErrorCode::Parse, "empty value for " + what);
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "not an integer for " + what + ": '" + s + "'");
    }
    if (used != s.size()) throw Error(ErrorCode::Parse, "not an integer for " + what + ": '" + s + "'");
    return v;
}

} // namespace detail

inline FamilySpec parse_family_spec(const std::string& text) {
    std::string name = text, rest;
    if (auto c = text.find(':'); c != std::string::npos) {
        name = text.substr(0, c);
        rest = text.substr(c + 1);
    }
    // key=value list; bare tokens extend the previous key's list
    std::vector<std::pair<std::string, std::vector<std::string>>> kv;
    size_t start = 0;
    while (!rest.empty() && start <= rest.size()) {
        size_t e = rest.find(',', start);
        std::string tok = rest.substr(start, e == std::string::npos ? std::string::npos : e - start);
        if (auto eq = tok.find('='); eq != std::string::npos) {
            kv.push_back({tok.substr(0, eq), {tok.substr(eq + 1)}});
        } else {
            if (kv.empty()) throw Error(ErrorCode::Parse, "expected key=value in '" + text + "'");
            kv.back().second.push_back(tok);
        }
        if (e == std::string::npos) break;
        start = e + 1;
    }
    auto take = [&](const std::string& key) -> std::optional<std::vector<std::string>> {
        for (auto& [k, v] : kv)
            if (k == key) return v;
        return std::nullopt;
    };
    auto known = [&](std::initializer_list<const char*> keys) {
        for (auto& [k, v] : kv) {
            bool ok = false;
            for (auto key : keys) ok = ok || k == key;
            if (!ok) throw Error(ErrorCode::Parse, "unknown key '" + k + "' for " + name);
        }
    };

    FamilySpec fs;
    if (name == "S") {
        known({"g", "sizes"});
        auto g = take("g");
        auto sizes = take("sizes");
        if (!sizes) throw Error(ErrorCode::Parse, "S needs sizes=");
        for (auto& s : *sizes) fs.params.push_back(detail::parse_int(s, "sizes"));
        int gg = g ? detail::parse_int(g->front(), "g") : static_cast<int>(fs.params.size());
        if (g && g->size() != 1) throw Error(ErrorCode::Parse, "g takes one value");
        fs.id = {Family::StarComp, gg};
    } else if (name == "C") {
        known({"n"});
        auto n = take("n");
        if (!n || n->size() != 1) throw Error(ErrorCode::Parse, "C needs n=");
        int nn = detail::parse_int(n->front(), "n");
        if (nn < 3) throw Error(ErrorCode::GirthTooSmall, "cycle length " + std::to_string(nn) + " < 3");
        fs.id = {Family::StarComp, nn};
        fs.params.assign(nn, 1);
    } else if (auto f = family_from_name(name)) {
        const FamilyDef& d = family_def(*f);
        fs.id = {*f, 0};
        static const char* keys[] = {"l0", "l1", "l2"};
        for (auto& [k, v] : kv) {
            bool ok = false;
            for (int i = 0; i < d.arity; ++i) ok = ok || k == keys[i];
            if (!ok) throw Error(ErrorCode::Parse, "unknown key '" + k + "' for " + name);
            if (v.size() != 1) throw Error(ErrorCode::Parse, "key " + k + " takes one value");
        }
        for (int i = 0; i < d.arity; ++i) {
            auto v = take(keys[i]);
            fs.params.push_back(v ? detail::parse_int(v->front(), keys[i]) : 0);
        }
    } else {
        throw Error(ErrorCode::UnknownFamily, "unknown family '" + name + "'");
    }
    detail::check_params(fs.id, fs.params);
    return fs;
}

inline std::string format_family_spec(const FamilyId& id, const std::vector<int>& params) {
    std::string s;
    if (id.tag == Family::StarComp) {
        s = "S:g=" + std::to_string(id.girth) + ",sizes=";
        for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
        return s;
    }
    s = family_def(id.tag).name;
    static const char* keys[] = {"l0", "l1", "l2"};
    for (size_t i = 0; i < params.size(); ++i)
        s += std::string(i ? "," : ":") + keys[i] + "=" + std::to_string(params[i]);
    return s;
}

inline FamilyInstance make_family(const FamilySpec& fs) { return make_family(fs.id, fs.params); }

} // namespace ul2
