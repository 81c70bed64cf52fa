#include "simcore/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "simcore/errors.hpp"

namespace simcore {

const char* family_name(Family f) {
    switch (f) {
        case Family::BC: return "bc";
        case Family::CS: return "cs";
        case Family::DD: return "dd";
        case Family::SC: return "sc";
    }
    throw std::invalid_argument("bad family");
}

Family family_from_name(const std::string& name) {
    if (name == "bc") return Family::BC;
    if (name == "cs") return Family::CS;
    if (name == "dd") return Family::DD;
    if (name == "sc") return Family::SC;
    throw std::invalid_argument("unknown family '" + name + "' (expected bc|cs|dd|sc)");
}

int default_part_bound(const std::vector<int>& moduli) {
    if (moduli.empty()) throw std::invalid_argument("moduli must be nonempty");
    long long best = -1;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (std::gcd(moduli[i], moduli[j]) == 1) {
                long long prod = 1LL * moduli[i] * moduli[j];
                if (best < 0 || prod < best) best = prod;
            }
    if (best < 0)
        throw HypothesisError("no coprime pair among moduli; members are unbounded");
    int bound = static_cast<int>((best + 1) / 2);
    int max_mod = *std::max_element(moduli.begin(), moduli.end());
    return std::max(bound, max_mod);
}

namespace {

struct Enumerator {
    Family family;
    std::vector<int> moduli;
    int bound;
    std::vector<int> chosen;       // ascending
    std::vector<char> present;     // 1..bound
    std::vector<StrictPartition>* out;

    // Incremental membership test: with `chosen` already admissible, is
    // chosen + {p} still admissible?  Clause (b) needs only p's own descent
    // since smaller parts were checked when added.
    bool admits(int p) const {
        for (int s : moduli) {
            if (p == s) return false;
            if (p > s && !present[p - s]) return false;
            for (int q : chosen) {
                if ((p + q) % s != 0) continue;
                if (s % 2 == 0 && p % s == s / 2 && q % s == s / 2) continue;
                return false;
            }
            if (family == Family::DD && s % 2 == 0 && p == s / 2) return false;
            if (family == Family::CS && s % 2 == 0 && p == 3 * s / 2) return false;
        }
        return true;
    }

    void run(int next) {
        {
            std::vector<int> desc(chosen.rbegin(), chosen.rend());
            out->push_back(StrictPartition(std::move(desc)));
        }
        for (int p = next; p <= bound; ++p) {
            if (!admits(p)) continue;
            chosen.push_back(p);
            present[p] = 1;
            run(p + 1);
            present[p] = 0;
            chosen.pop_back();
        }
    }
};

} // namespace

std::vector<StrictPartition> enumerate_family(const EnumerationSpec& spec) {
    if (spec.family == Family::SC)
        throw std::invalid_argument("sc members are ordinary partitions; enumeration covers bc|cs|dd");
    if (spec.moduli.empty()) throw std::invalid_argument("moduli must be nonempty");
    for (int s : spec.moduli)
        if (s < 1) throw std::invalid_argument("moduli must be >= 1");
    int max_mod = *std::max_element(spec.moduli.begin(), spec.moduli.end());
    if (spec.part_bound < max_mod)
        throw std::invalid_argument("part_bound " + std::to_string(spec.part_bound) +
                                    " below max modulus " + std::to_string(max_mod));

    std::vector<StrictPartition> out;
    Enumerator e{spec.family, spec.moduli, spec.part_bound, {}, {}, &out};
    e.present.assign(spec.part_bound + 1, 0);
    e.run(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StrictPartition> enumerate_family(Family family, const std::vector<int>& moduli) {
    return enumerate_family({family, moduli, default_part_bound(moduli)});
}

std::vector<StrictPartition> strict_partitions_of(int n) {
    std::vector<StrictPartition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(StrictPartition(acc));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            if (remaining - p > (p - 1) * p / 2) break; // parts below p cannot cover the rest
            acc.push_back(p);
            self(self, remaining - p, p - 1);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(acc));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            acc.push_back(p);
            self(self, remaining - p, p);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

QSeries count_by_weight(Family family, int s, int max_n) {
    if (s < 1) throw std::invalid_argument("modulus must be >= 1");
    if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
    QSeries series(max_n);
    for (int n = 0; n <= max_n; ++n) {
        BigInt count = 0;
        switch (family) {
            case Family::SC:
                for (const Partition& p : partitions_of(n))
                    if (is_self_conjugate(p) && is_s_core(p, s)) ++count;
                break;
            case Family::BC:
                for (const StrictPartition& p : strict_partitions_of(n))
                    if (is_bar_core(p, s)) ++count;
                break;
            case Family::CS:
                for (const StrictPartition& p : strict_partitions_of(n))
                    if (is_csyd(p, s)) ++count;
                break;
            case Family::DD:
                if (n % 2 == 0)
                    for (const StrictPartition& p : strict_partitions_of(n / 2))
                        if (is_dd_core(p, s)) ++count;
                break;
        }
        series.set_coeff(n, count);
    }
    return series;
}

} // namespace simcore
