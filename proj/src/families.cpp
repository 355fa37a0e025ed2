#include "schreier/families.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace schreier {

namespace {

enum class Sparsity { None, Sparse, Strong };

// Relation required between the two largest elements below the top.
enum class Tail {
    None,
    Script,       // top + a_{p-1} == 2 a_p, top = n + 1
    ScriptStrong, // (top - 1) + a_{p-1} == 2 a_p
};

struct SearchSpec {
    Int top = 1; // required maximum element
    Int ell = 0;
    Sparsity sparsity = Sparsity::None;
    std::optional<Int> size;
    std::optional<Int> min;
    Int min_size = 1;
    Tail tail = Tail::None;
};

// Depth-first search over increasing element lists ending at spec.top. Emits
// members in lexicographic order: every extension of a prefix is smaller than
// the prefix closed off with the top element.
template <typename Visit>
class SetSearch {
public:
    SetSearch(const SearchSpec &spec, Visit &visit) : spec_(spec), visit_(visit) {}

    void run()
    {
        Int lo = spec_.min.value_or(1);
        Int hi = spec_.min.value_or(spec_.top - 1);
        if (lo < 1)
            return;
        for (Int a1 = lo; a1 <= hi && a1 < spec_.top; ++a1) {
            cur_.push_back(a1);
            extend();
            cur_.pop_back();
        }
        // singleton {top}
        if (!spec_.min || *spec_.min == spec_.top)
            close();
    }

private:
    bool strong() const { return spec_.sparsity == Sparsity::Strong; }

    // Interior prefix of length j closes to a set of size j + 1, so an
    // ell-strong Schreier member needs a_1 >= ell * j + 1.
    bool schreier_allows(std::size_t interior) const
    {
        Int j = static_cast<Int>(interior);
        return cur_.empty() || cur_.front() >= checked_add(checked_mul(spec_.ell, j), Int{1});
    }

    void extend()
    {
        std::size_t j = cur_.size();
        bool may_grow = (!spec_.size || static_cast<Int>(j) + 2 <= *spec_.size) && schreier_allows(j + 1);
        if (may_grow) {
            Int back = cur_.back();
            Int step = 1;
            if (spec_.sparsity != Sparsity::None && j >= 2) {
                step = back - cur_[j - 2];
                if (strong())
                    ++step;
            }
            for (Int x = back + step; x < spec_.top; ++x) {
                Int gap = x - back;
                Int room = spec_.top - x;
                // later gaps are at least `gap`, and they sum to `room`
                if (spec_.sparsity == Sparsity::Sparse && room < gap)
                    break;
                if (spec_.sparsity == Sparsity::Strong && room <= gap)
                    break;
                // interior elements still needed strictly between x and top
                if (spec_.size && room - 1 < *spec_.size - static_cast<Int>(j) - 2)
                    break;
                cur_.push_back(x);
                extend();
                cur_.pop_back();
            }
        }
        close();
    }

    void close()
    {
        std::size_t j = cur_.size();
        Int size = static_cast<Int>(j) + 1;
        if (spec_.size && size != *spec_.size)
            return;
        if (size < spec_.min_size)
            return;
        if (!schreier_allows(j))
            return;
        if (j >= 2) {
            Int last_gap = spec_.top - cur_[j - 1];
            Int prev_gap = cur_[j - 1] - cur_[j - 2];
            if (spec_.sparsity == Sparsity::Sparse && last_gap < prev_gap)
                return;
            if (spec_.sparsity == Sparsity::Strong && last_gap <= prev_gap)
                return;
        }
        if (spec_.tail != Tail::None) {
            if (j < 2)
                return;
            Int apex = spec_.tail == Tail::Script ? spec_.top : spec_.top - 1;
            if (apex + cur_[j - 2] != 2 * cur_[j - 1])
                return;
        }
        cur_.push_back(spec_.top);
        visit_(std::span<const Int>(cur_));
        cur_.pop_back();
    }

    const SearchSpec &spec_;
    Visit &visit_;
    std::vector<Int> cur_;
};

template <typename Visit>
void search(const SearchSpec &spec, Visit &&visit)
{
    SetSearch<std::remove_reference_t<Visit>> s(spec, visit);
    s.run();
}

SearchSpec spec_for(const FamilyQuery &q)
{
    q.validate();
    SearchSpec s;
    s.ell = q.ell.value_or(0);
    switch (q.family) {
    case Family::A:
        s.top = q.n;
        s.sparsity = Sparsity::Sparse;
        break;
    case Family::A_strong:
        s.top = q.n;
        s.sparsity = Sparsity::Strong;
        break;
    case Family::B:
        s.top = q.n;
        break;
    case Family::B_sized:
        s.top = q.n;
        s.size = q.m;
        break;
    case Family::F_prop1:
        s.top = q.n;
        s.ell = 1;
        s.sparsity = Sparsity::Sparse;
        s.min = q.m;
        break;
    case Family::F_script:
    case Family::F_script_k:
    case Family::F_script_kq:
        s.top = checked_add(q.n, Int{1});
        s.sparsity = Sparsity::Sparse;
        s.min_size = 3;
        s.tail = Tail::Script;
        s.size = q.k;
        s.min = q.q;
        break;
    case Family::F_script_strong:
    case Family::F_script_strong_k:
    case Family::F_script_strong_kq:
        s.top = checked_add(q.n, Int{1});
        s.sparsity = Sparsity::Strong;
        s.min_size = 3;
        s.tail = Tail::ScriptStrong;
        s.size = q.k;
        s.min = q.q;
        break;
    }
    return s;
}

struct Needs {
    bool ell, k, q, m;
};

Needs needs(Family f)
{
    switch (f) {
    case Family::A:
    case Family::A_strong:
    case Family::B:
    case Family::F_script:
    case Family::F_script_strong:
        return {true, false, false, false};
    case Family::B_sized:
        return {true, false, false, true};
    case Family::F_prop1:
        return {false, false, false, true};
    case Family::F_script_k:
    case Family::F_script_strong_k:
        return {true, true, false, false};
    case Family::F_script_kq:
    case Family::F_script_strong_kq:
        return {true, true, true, false};
    }
    return {};
}

constexpr std::array<std::pair<Family, std::string_view>, 11> kNames{{
    {Family::A, "A"},
    {Family::A_strong, "A_strong"},
    {Family::B, "B"},
    {Family::B_sized, "B_sized"},
    {Family::F_prop1, "F_prop1"},
    {Family::F_script, "F_script"},
    {Family::F_script_k, "F_script_k"},
    {Family::F_script_kq, "F_script_kq"},
    {Family::F_script_strong, "F_script_strong"},
    {Family::F_script_strong_k, "F_script_strong_k"},
    {Family::F_script_strong_kq, "F_script_strong_kq"},
}};

} // namespace

std::string_view family_name(Family f)
{
    for (auto &[fam, name] : kNames)
        if (fam == f)
            return name;
    return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
    for (auto &[fam, n] : kNames)
        if (n == name)
            return fam;
    return std::nullopt;
}

const std::vector<Family> &all_families()
{
    static const std::vector<Family> all = [] {
        std::vector<Family> v;
        for (auto &entry : kNames)
            v.push_back(entry.first);
        return v;
    }();
    return all;
}

void FamilyQuery::validate() const
{
    auto fail = [this](const std::string &why) {
        throw ParamError(std::string(family_name(family)) + ": " + why);
    };
    Needs need = needs(family);
    auto check = [&](const std::optional<Int> &v, bool required, const char *name, Int lower) {
        if (required && !v)
            fail(std::string("missing parameter ") + name);
        if (!required && v)
            fail(std::string("unexpected parameter ") + name);
        if (v && *v < lower)
            fail(std::string("parameter ") + name + " must be >= " + std::to_string(lower));
    };
    if (n < 1)
        fail("n must be >= 1");
    check(ell, need.ell, "ell", 0);
    check(k, need.k, "k", 1);
    check(q, need.q, "q", 1);
    check(m, need.m, "m", 1);
}

std::string describe(const FamilyQuery &q)
{
    std::ostringstream os;
    os << family_name(q.family) << "(n=" << q.n;
    if (q.ell)
        os << ", ell=" << *q.ell;
    if (q.k)
        os << ", k=" << *q.k;
    if (q.q)
        os << ", q=" << *q.q;
    if (q.m)
        os << ", m=" << *q.m;
    os << ')';
    return os.str();
}

std::vector<FiniteSet> enum_family(const FamilyQuery &q)
{
    std::vector<FiniteSet> out;
    search(spec_for(q), [&](std::span<const Int> s) { out.emplace_back(std::vector<Int>(s.begin(), s.end())); });
    return out;
}

Count count_family(const FamilyQuery &q)
{
    Count c = 0;
    search(spec_for(q), [&](std::span<const Int>) { c = checked_add(c, Count{1}); });
    return c;
}

std::vector<FiniteSet> enum_script_candidates(Int n, Int ell, bool strong)
{
    if (n < 1 || ell < 0)
        throw ParamError("enum_script_candidates: need n >= 1 and ell >= 0");
    SearchSpec s;
    s.top = checked_add(n, Int{1});
    s.ell = ell;
    s.sparsity = strong ? Sparsity::Strong : Sparsity::Sparse;
    s.min_size = 3;
    std::vector<FiniteSet> out;
    search(s, [&](std::span<const Int> e) { out.emplace_back(std::vector<Int>(e.begin(), e.end())); });
    return out;
}

std::vector<Int> IntRange::values() const
{
    std::vector<Int> v;
    for (Int x = lo; x <= hi; ++x)
        v.push_back(x);
    return v;
}

CountTable count_table(const CellCounter &cell, IntRange n_range, IntRange ell_range)
{
    if (n_range.empty() || ell_range.empty())
        throw ParamError("count_table: ranges must be nonempty");
    CountTable t;
    t.ns = n_range.values();
    t.ells = ell_range.values();
    for (Int ell : t.ells) {
        auto &row = t.values.emplace_back();
        for (Int n : t.ns)
            row.push_back(cell(n, ell));
    }
    return t;
}

CountTable count_table(Family family, IntRange n_range, IntRange ell_range)
{
    if (needs(family).k || needs(family).q || needs(family).m || !needs(family).ell)
        throw ParamError(std::string("count_table: family ") + std::string(family_name(family)) +
                         " is not indexed by (n, ell) alone");
    return count_table(
        [family](Int n, Int ell) { return count_family(FamilyQuery{family, n, ell, {}, {}, {}}); }, n_range,
        ell_range);
}

} // namespace schreier
