#include "simcore/abacus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "simcore/errors.hpp"

namespace simcore {

long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

AbacusDiagram::AbacusDiagram(int s, int d) : s_(s), d_(d) {
    if (s < 1 || d < 1) throw HypothesisError("abacus needs s >= 1 and d >= 1");
    if (std::gcd(s, d) != 1)
        throw HypothesisError("abacus needs gcd(s, d) = 1, got gcd(" + std::to_string(s) +
                              ", " + std::to_string(d) + ") = " + std::to_string(std::gcd(s, d)));
}

long long AbacusDiagram::label(long long i, int j) const {
    if (j < 0 || j > max_col())
        throw std::out_of_range("abacus column " + std::to_string(j) + " out of range 0.." +
                                std::to_string(max_col()));
    return 1LL * period() * i + 1LL * d_ * j;
}

AbacusPosition AbacusDiagram::position_of(long long h) const {
    if (h < 1) throw std::invalid_argument("position_of needs h >= 1");
    const int m = period();
    int j0 = -1;
    for (int j = 0; j < m; ++j)
        if ((1LL * d_ * j - h) % m == 0) { // d*j = h (mod m); gcd(d, m) = 1
            j0 = j;
            break;
        }
    if (j0 == 0) return {h / m, 0};
    if (m % 2 == 0 && j0 == m / 2) return {(h - 1LL * d_ * j0) / m, j0};
    if (j0 <= max_col()) return {(h - 1LL * d_ * j0) / m, j0};
    int j1 = m - j0;
    return {(-h - 1LL * d_ * j1) / m, j1};
}

long long AbacusDiagram::r(int j) const {
    if (j < 0 || j > max_col()) throw std::out_of_range("abacus column out of range");
    return ceil_div(1 - 1LL * d_ * j, period());
}

std::vector<long long> AbacusFunction::extended() const {
    std::vector<long long> out = values;
    out.push_back(-((d + 1) / 2));
    return out;
}

AbacusFunction abacus_function(int s, int d, const StrictPartition& p) {
    AbacusDiagram a(s, d);
    std::vector<std::set<long long>> beads(a.max_col() + 1);
    for (int h : p.parts()) {
        AbacusPosition pos = a.position_of(h);
        beads[pos.col].insert(pos.row);
    }
    AbacusFunction f{s, d, {}};
    f.values.reserve(a.max_col() + 1);
    for (int j = 0; j <= a.max_col(); ++j) {
        long long rj = a.r(j);
        const auto& col = beads[j];
        auto top_positive = col.empty() ? col.end() : std::prev(col.end());
        if (!col.empty() && *top_positive >= rj) {
            f.values.push_back(*top_positive);
        } else {
            long long i = rj - 1;
            while (col.count(i)) --i;
            f.values.push_back(i);
        }
    }
    return f;
}

namespace {

const char* family_label(Family f) {
    switch (f) {
        case Family::BC: return "bar-core";
        case Family::CS: return "shifted-core";
        case Family::DD: return "doubled-distinct core";
        default: return "core";
    }
}

std::optional<std::string> family_violation(Family family, const StrictPartition& p, int m) {
    switch (family) {
        case Family::BC: return bar_core_violation(p, m);
        case Family::CS: return csyd_violation(p, m);
        case Family::DD: return dd_core_violation(p, m);
        default: throw std::invalid_argument("abacus families are bc|cs|dd");
    }
}

bool family_member_direct(Family family, const StrictPartition& p, int m) {
    switch (family) {
        case Family::BC: return is_bar_core(p, m);
        case Family::CS: return is_csyd(p, m);
        case Family::DD: return is_dd_core(p, m);
        default: throw std::invalid_argument("abacus families are bc|cs|dd");
    }
}

char step_char(long long diff) {
    if (diff == 1) return 'U';
    if (diff == 0) return 'F';
    if (diff == -1) return 'D';
    throw DomainViolation("abacus function increment " + std::to_string(diff) +
                          " out of range [-1, 1]");
}

} // namespace

MotzkinPathSpec family_path_set(int s, int d, Family family) {
    AbacusDiagram a(s, d); // validates s, d >= 1 coprime
    if (family == Family::SC) throw std::invalid_argument("path sets cover bc|cs|dd");
    const int m = s + d;
    MotzkinPathSpec spec;
    spec.forbidden_prefixes = {"U"};
    if (s % 2 == 1 && d % 2 == 0) { // case (a)
        spec.length = (m + 1) / 2;
        spec.end = -d / 2;
        spec.forbidden_suffixes = {"D"};
        spec.appended_final_step = true;
    } else if (s % 2 == 1 && d % 2 == 1) { // case (b)
        if (family == Family::DD) {
            spec.length = m / 2;
            spec.end = -((d + 1) / 2);
            spec.appended_final_step = false;
        } else {
            spec.length = (m + 2) / 2;
            spec.end = -((d + 1) / 2);
            spec.forbidden_suffixes = {"FD", "DD", "U"};
            spec.appended_final_step = true;
        }
    } else { // case (c): s even, d odd
        spec.end = -((d + 1) / 2);
        if (family == Family::DD) {
            spec.length = (m - 1) / 2;
            spec.appended_final_step = false;
        } else {
            spec.length = (m + 1) / 2;
            spec.appended_final_step = true;
            if (family == Family::CS) spec.forbidden_suffixes = {"UU", "DD"};
        }
    }
    return spec;
}

std::string to_motzkin(int s, int d, const StrictPartition& p, Family family) {
    for (int m : {s, s + d, s + 2 * d})
        if (auto v = family_violation(family, p, m))
            throw DomainViolation("not a " + std::string(family_label(family)) +
                                  " for moduli (" + std::to_string(s) + "," +
                                  std::to_string(s + d) + "," + std::to_string(s + 2 * d) +
                                  "): " + *v);

    AbacusFunction f = abacus_function(s, d, p);
    MotzkinPathSpec spec = family_path_set(s, d, family);

    std::string path;
    for (std::size_t j = 1; j < f.values.size(); ++j)
        path.push_back(step_char(f.values[j] - f.values[j - 1]));
    if (spec.appended_final_step)
        path.push_back(step_char(-((d + 1) / 2) - f.values.back()));

    if (static_cast<int>(path.size()) != spec.length)
        throw VerificationError("constructed path length mismatch");
    return path;
}

StrictPartition from_motzkin(int s, int d, const std::string& path, Family family) {
    MotzkinPathSpec spec = family_path_set(s, d, family);

    long long h = 0;
    for (char c : path) {
        if (c == 'U') ++h;
        else if (c == 'D') --h;
        else if (c != 'F') throw std::invalid_argument("path may contain only U, F, D");
    }
    if (static_cast<int>(path.size()) != spec.length)
        throw DomainViolation("path has " + std::to_string(path.size()) +
                              " steps; the family path set requires " +
                              std::to_string(spec.length));
    if (h != spec.end)
        throw DomainViolation("path ends at height " + std::to_string(h) +
                              "; the family path set requires " + std::to_string(spec.end));
    for (const auto& fp : spec.forbidden_prefixes)
        if (path.starts_with(fp))
            throw DomainViolation("path starts with forbidden prefix \"" + fp + "\"");
    for (const auto& fs : spec.forbidden_suffixes)
        if (path.ends_with(fs))
            throw DomainViolation("path ends with forbidden suffix \"" + fs + "\"");

    std::string core = path;
    if (spec.appended_final_step) core.pop_back();

    AbacusDiagram a(s, d);
    std::vector<long long> f{0};
    for (char c : core) f.push_back(f.back() + (c == 'U') - (c == 'D'));

    std::vector<int> parts;
    for (int j = 0; j <= a.max_col(); ++j) {
        long long rj = a.r(j);
        if (f[j] >= rj)
            for (long long i = rj; i <= f[j]; ++i) parts.push_back(static_cast<int>(a.label(i, j)));
        else if (f[j] < rj - 1)
            for (long long i = f[j] + 1; i <= rj - 1; ++i)
                parts.push_back(static_cast<int>(-a.label(i, j)));
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    StrictPartition result(std::move(parts));

    for (int m : {s, s + d, s + 2 * d})
        if (!family_member_direct(family, result, m))
            throw DomainViolation("reconstructed partition fails the direct " +
                                  std::string(family_label(family)) + " test for modulus " +
                                  std::to_string(m));
    return result;
}

std::vector<std::string> enumerate_motzkin(int length, long long end,
                                           const std::vector<std::string>& forbidden_prefixes,
                                           const std::vector<std::string>& forbidden_suffixes) {
    if (length < 0) throw std::invalid_argument("length must be >= 0");
    std::vector<std::string> out;
    std::string acc;
    auto banned_prefix = [&]() {
        for (const auto& fp : forbidden_prefixes)
            if (acc.size() == fp.size() && acc == fp) return true;
        return false;
    };
    auto rec = [&](auto&& self, long long h) -> void {
        if (banned_prefix()) return;
        int remaining = length - static_cast<int>(acc.size());
        if (std::llabs(end - h) > remaining) return;
        if (remaining == 0) {
            for (const auto& fs : forbidden_suffixes)
                if (acc.ends_with(fs)) return;
            out.push_back(acc);
            return;
        }
        for (char c : {'U', 'F', 'D'}) {
            acc.push_back(c);
            self(self, h + (c == 'U') - (c == 'D'));
            acc.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::string> enumerate_motzkin(const MotzkinPathSpec& spec) {
    return enumerate_motzkin(spec.length, spec.end, spec.forbidden_prefixes,
                             spec.forbidden_suffixes);
}

} // namespace simcore
