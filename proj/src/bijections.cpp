#include "schreier/bijections.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace schreier {

namespace {

// (m + 1 - |F|) extra copies of `value` joined with F.
PartMultiset pad_to_size(const FiniteSet &f, std::size_t size, Int value)
{
    std::vector<Int> out(f.elements().begin(), f.elements().end());
    while (out.size() < size)
        out.push_back(value);
    return PartMultiset(std::move(out));
}

PartMultiset bump_max(const PartMultiset &m, Int delta)
{
    std::vector<Int> out(m.parts().begin(), m.parts().end());
    out.back() = checked_add(out.back(), delta);
    return PartMultiset(std::move(out));
}

[[noreturn]] void reject(const std::string &map, const std::string &why)
{
    throw DomainError(map + ": " + why);
}

void require_prop1_member(const FiniteSet &f, Int n, Int m)
{
    const char *name = "prop1";
    if (m < 1 || n < m + 1)
        reject(name, "need m >= 1 and n >= m + 1");
    if (f.empty() || f.max() != n)
        reject(name, to_string(f) + " does not have maximum " + std::to_string(n));
    if (f.min() != m + 1)
        reject(name, to_string(f) + " does not have minimum " + std::to_string(m + 1));
    if (!is_schreier(f) || !is_sparse(f))
        reject(name, to_string(f) + " is not Schreier and sparse");
}

// Shared membership test for the sparse and strongly sparse script families
// refined by size k + 1 and minimum ell k + q.
void require_script_member(const char *name, const FiniteSet &f, Int n, Int ell, Int k, Int q, bool strong)
{
    if (k < 2 || q < 1 || ell < 0 || n < ell + 1)
        reject(name, "need k >= 2, q >= 1, ell >= 0, n >= ell + 1");
    if (static_cast<Int>(f.size()) != k + 1)
        reject(name, to_string(f) + " does not have " + std::to_string(k + 1) + " elements");
    if (f.max() != n + 1)
        reject(name, to_string(f) + " does not have maximum " + std::to_string(n + 1));
    if (f.min() != ell * k + q)
        reject(name, to_string(f) + " does not have minimum " + std::to_string(ell * k + q));
    if (!is_ell_strong_schreier(f, ell))
        reject(name, to_string(f) + " is not ell-strong Schreier");
    if (strong ? !is_strongly_sparse(f) : !is_sparse(f))
        reject(name, to_string(f) + (strong ? " is not strongly sparse" : " is not sparse"));
    Int ap = f[f.size() - 2];
    Int ap1 = f[f.size() - 3];
    Int apex = strong ? n : n + 1;
    if (apex + ap1 != 2 * ap)
        reject(name, to_string(f) + " fails the condition on its two largest interior elements");
}

void require_partition(const char *name, const Partition &p, Int n, Int min_part, Int k, Int gap, bool distinct)
{
    if (p.target() != n)
        reject(name, to_string(p) + " does not sum to " + std::to_string(n));
    if (static_cast<Int>(p.size()) != k)
        reject(name, to_string(p) + " does not have " + std::to_string(k) + " parts");
    if (k >= 1 && p.parts()[0] < min_part)
        reject(name, to_string(p) + " has a part below " + std::to_string(min_part));
    if (distinct)
        for (std::size_t i = 1; i < p.size(); ++i)
            if (p.parts()[i] == p.parts()[i - 1])
                reject(name, to_string(p) + " has repeated parts");
    if (k >= 2 && p.parts()[p.size() - 1] - p.parts()[p.size() - 2] != gap)
        reject(name, to_string(p) + " two largest parts do not differ by " + std::to_string(gap));
}

Partition script_forward(const FiniteSet &f, Int ell, Int q)
{
    return Partition(bump_max(shift_multiset(diff_multiset(f), ell), q - 1));
}

FiniteSet script_inverse(const Partition &p, Int ell, Int k, Int q)
{
    auto parts = p.parts().parts();
    std::vector<Int> out{ell * k + q};
    for (Int i = 0; i < k; ++i) {
        Int step = parts[static_cast<std::size_t>(i)] - ell;
        if (i == k - 1)
            step -= q - 1;
        out.push_back(checked_add(out.back(), step));
    }
    return FiniteSet(std::move(out));
}

using Forward = std::function<Partition(const FiniteSet &)>;
using Inverse = std::function<FiniteSet(const Partition &)>;

BijectionCheck check_extensionally(const std::vector<FiniteSet> &domain, const std::vector<Partition> &codomain,
                                   const Forward &forward, const Inverse &inverse)
{
    BijectionCheck out;
    out.domain_size = domain.size();
    out.codomain_size = codomain.size();
    auto note = [&out](const std::string &s) {
        if (out.first_problem.empty())
            out.first_problem = s;
    };
    const std::set<Partition> targets(codomain.begin(), codomain.end());
    std::set<Partition> images;
    for (const auto &f : domain) {
        Partition img;
        try {
            img = forward(f);
        } catch (const DomainError &e) {
            out.well_defined = false;
            note(e.what());
            continue;
        }
        if (!targets.count(img)) {
            out.well_defined = false;
            note("image " + to_string(img) + " of " + to_string(f) + " is outside the codomain");
        }
        if (!images.insert(img).second) {
            out.injective = false;
            note("image " + to_string(img) + " is hit twice");
        }
        try {
            if (inverse(img) != f) {
                out.roundtrip = false;
                note("inverse does not recover " + to_string(f));
            }
        } catch (const DomainError &e) {
            out.roundtrip = false;
            note(e.what());
        }
    }
    for (const auto &p : codomain) {
        if (!images.count(p)) {
            out.surjective = false;
            note("partition " + to_string(p) + " has no preimage");
        }
        try {
            if (forward(inverse(p)) != p) {
                out.roundtrip = false;
                note("forward does not recover " + to_string(p));
            }
        } catch (const DomainError &e) {
            out.roundtrip = false;
            note(e.what());
        }
    }
    return out;
}

BijectionWitness make_witness(FamilyQuery domain, PartitionQuery codomain, const Forward &forward)
{
    BijectionWitness w{domain, codomain, {}};
    for (auto &f : enum_family(domain))
        w.pairs.emplace_back(f, forward(f));
    return w;
}

PartitionQuery prop1_codomain(Int n, Int m) { return {n - 1, 1, false, m, {}}; }

PartitionQuery lemma6_codomain(Int n, Int ell, Int k, Int q) { return {n, ell + 1, false, k, q - 1}; }

PartitionQuery lemma6s_codomain(Int n, Int ell, Int k, Int q)
{
    return {n, ell + kStrongCodomainShift, true, k, q};
}

} // namespace

Partition prop1_forward(const FiniteSet &f, Int n, Int m)
{
    require_prop1_member(f, n, m);
    auto padded = pad_to_size(f, static_cast<std::size_t>(m) + 1, m + 1);
    return Partition(shift_multiset(diff_multiset(padded), 1));
}

FiniteSet prop1_inverse(const Partition &p, Int n, Int m)
{
    if (m < 1 || static_cast<Int>(p.size()) != m)
        reject("prop1_inverse", to_string(p) + " does not have " + std::to_string(m) + " parts");
    if (p.target() != n - 1)
        reject("prop1_inverse", to_string(p) + " does not sum to " + std::to_string(n - 1));
    std::vector<Int> out{m + 1};
    // parts equal to 1 come first and contribute nothing
    for (Int part : p.parts().parts())
        if (part >= 2)
            out.push_back(out.back() + (part - 1));
    return FiniteSet(std::move(out));
}

Partition lemma6_forward(const FiniteSet &f, Int n, Int ell, Int k, Int q)
{
    require_script_member("lemma6", f, n, ell, k, q, false);
    return script_forward(f, ell, q);
}

FiniteSet lemma6_inverse(const Partition &p, Int n, Int ell, Int k, Int q)
{
    if (k < 2 || q < 1 || ell < 0)
        reject("lemma6_inverse", "need k >= 2, q >= 1, ell >= 0");
    require_partition("lemma6_inverse", p, n, ell + 1, k, q - 1, false);
    FiniteSet f = script_inverse(p, ell, k, q);
    require_script_member("lemma6_inverse", f, n, ell, k, q, false);
    return f;
}

Partition lemma6s_forward(const FiniteSet &f, Int n, Int ell, Int k, Int q)
{
    require_script_member("lemma6s", f, n, ell, k, q, true);
    return script_forward(f, ell, q);
}

FiniteSet lemma6s_inverse(const Partition &p, Int n, Int ell, Int k, Int q)
{
    if (k < 2 || q < 1 || ell < 0)
        reject("lemma6s_inverse", "need k >= 2, q >= 1, ell >= 0");
    require_partition("lemma6s_inverse", p, n, ell + kStrongCodomainShift, k, q, true);
    FiniteSet f = script_inverse(p, ell, k, q);
    require_script_member("lemma6s_inverse", f, n, ell, k, q, true);
    return f;
}

FiniteSet thm2_shift(const FiniteSet &a, Int n)
{
    if (a.empty() || a.max() != n)
        reject("thm2_shift", to_string(a) + " does not have maximum " + std::to_string(n));
    std::vector<Int> out(a.elements().begin(), a.elements().end());
    out.back() = checked_add(n, Int{1});
    return FiniteSet(std::move(out));
}

namespace {

void require_candidate(const FiniteSet &a, Int n)
{
    if (a.size() < 3)
        reject("claim9", to_string(a) + " needs at least three elements");
    if (a.max() != n + 1)
        reject("claim9", to_string(a) + " does not have maximum " + std::to_string(n + 1));
    if (!is_sparse(a))
        reject("claim9", to_string(a) + " is not sparse");
}

} // namespace

bool claim9_check(const FiniteSet &a, Int n, Int ell)
{
    require_candidate(a, n);
    if (!is_ell_strong_schreier(a, ell))
        reject("claim9", to_string(a) + " is not ell-strong Schreier");
    Int ap = a[a.size() - 2];
    Int ap1 = a[a.size() - 3];
    return n + 1 + ap1 == 2 * ap;
}

bool literal_condition_iii(const FiniteSet &a, Int n)
{
    require_candidate(a, n);
    Int ap = a[a.size() - 2];
    if (ap >= n)
        return true;
    std::vector<Int> lowered(a.elements().begin(), a.elements().end());
    lowered.back() = n;
    return !is_sparse(FiniteSet(std::move(lowered)));
}

PartitionConstraint PartitionQuery::constraint() const
{
    PartitionConstraint c;
    c.min_part = min_part;
    c.distinct = distinct;
    c.num_parts = num_parts;
    c.top_gap = top_gap;
    return c;
}

std::string PartitionQuery::describe() const
{
    std::ostringstream os;
    os << (distinct ? "E_distinct" : "E") << "(n=" << n << ", min_part=" << min_part << ", k=" << num_parts;
    if (top_gap)
        os << ", gap=" << *top_gap;
    os << ')';
    return os.str();
}

BijectionWitness prop1_witness(Int n, Int m)
{
    return make_witness(FamilyQuery::f_prop1(n, m + 1), prop1_codomain(n, m),
                        [=](const FiniteSet &f) { return prop1_forward(f, n, m); });
}

BijectionWitness lemma6_witness(Int n, Int ell, Int k, Int q)
{
    return make_witness(FamilyQuery::f_script_kq(n, ell, k + 1, ell * k + q), lemma6_codomain(n, ell, k, q),
                        [=](const FiniteSet &f) { return lemma6_forward(f, n, ell, k, q); });
}

BijectionWitness lemma6s_witness(Int n, Int ell, Int k, Int q)
{
    return make_witness(FamilyQuery::f_script_strong_kq(n, ell, k + 1, ell * k + q), lemma6s_codomain(n, ell, k, q),
                        [=](const FiniteSet &f) { return lemma6s_forward(f, n, ell, k, q); });
}

BijectionCheck check_prop1(Int n, Int m)
{
    return check_extensionally(
        enum_family(FamilyQuery::f_prop1(n, m + 1)), enum_partitions(n - 1, prop1_codomain(n, m).constraint()),
        [=](const FiniteSet &f) { return prop1_forward(f, n, m); },
        [=](const Partition &p) { return prop1_inverse(p, n, m); });
}

BijectionCheck check_lemma6(Int n, Int ell, Int k, Int q)
{
    return check_extensionally(
        enum_family(FamilyQuery::f_script_kq(n, ell, k + 1, ell * k + q)),
        enum_partitions(n, lemma6_codomain(n, ell, k, q).constraint()),
        [=](const FiniteSet &f) { return lemma6_forward(f, n, ell, k, q); },
        [=](const Partition &p) { return lemma6_inverse(p, n, ell, k, q); });
}

BijectionCheck check_lemma6s(Int n, Int ell, Int k, Int q)
{
    return check_extensionally(
        enum_family(FamilyQuery::f_script_strong_kq(n, ell, k + 1, ell * k + q)),
        enum_partitions(n, lemma6s_codomain(n, ell, k, q).constraint()),
        [=](const FiniteSet &f) { return lemma6s_forward(f, n, ell, k, q); },
        [=](const Partition &p) { return lemma6s_inverse(p, n, ell, k, q); });
}

} // namespace schreier
