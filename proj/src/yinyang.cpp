#include "simcore/yinyang.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "simcore/errors.hpp"

namespace simcore {

YinYangDiagram YinYangDiagram::build(DiagramKind kind, int s, int t) {
    if (kind == DiagramKind::A) {
        if (s % 2 == 0 || t % 2 == 0)
            throw HypothesisError("kind-A diagram needs both moduli odd");
        if (!(1 < s && s < t))
            throw HypothesisError("kind-A diagram needs 1 < s < t");
    } else {
        if (s % 2 != 0 || s < 2) throw HypothesisError("kind-B diagram needs s even");
        if (t % 2 == 0 || t < 1) throw HypothesisError("kind-B diagram needs t odd");
    }
    if (std::gcd(s, t) != 1) throw HypothesisError("moduli must be coprime");
    int rows = (kind == DiagramKind::A) ? (s - 1) / 2 : s / 2;
    int cols = (t - 1) / 2;
    return YinYangDiagram(kind, s, t, rows, cols);
}

YinYangDiagram YinYangDiagram::for_pair(int s, int t) {
    if (std::gcd(s, t) != 1) throw HypothesisError("moduli must be coprime");
    if (s % 2 != 0 && t % 2 != 0)
        return build(DiagramKind::A, std::min(s, t), std::max(s, t));
    if (s % 2 == 0) return build(DiagramKind::B, s, t);
    return build(DiagramKind::B, t, s);
}

long long YinYangDiagram::entry(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::out_of_range("diagram cell out of range");
    long long base = (kind_ == DiagramKind::A) ? -(1LL * (s_ + 1) / 2) * t_
                                               : -(1LL * (s_ + 2) / 2) * t_;
    return base + 1LL * j * s_ + 1LL * i * t_;
}

std::vector<long long> YinYangDiagram::positive_entries() const {
    std::vector<long long> out;
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            if (long long e = entry(i, j); e > 0) out.push_back(e);
    return out;
}

namespace {

void validate_path(const YinYangDiagram& d, const std::string& path) {
    int e = 0, n = 0;
    for (char c : path) {
        if (c == 'E') ++e;
        else if (c == 'N') ++n;
        else throw std::invalid_argument("path may contain only N and E");
    }
    if (e != d.cols() || n != d.rows())
        throw std::invalid_argument("path needs " + std::to_string(d.cols()) + " E-steps and " +
                                    std::to_string(d.rows()) + " N-steps");
}

} // namespace

std::vector<int> column_heights(const YinYangDiagram& d, const std::string& path) {
    validate_path(d, path);
    std::vector<int> h(d.cols(), 0); // h[c-1] = N-steps before the c-th E
    int n_seen = 0, e_seen = 0;
    for (char c : path) {
        if (c == 'N') ++n_seen;
        else h[e_seen++] = n_seen;
    }
    return h;
}

std::set<long long> path_region_sets(const YinYangDiagram& d, const std::string& path) {
    std::vector<int> h = column_heights(d, path);
    std::set<long long> m;
    for (int j = 1; j <= d.cols(); ++j)
        for (int i = 1; i <= d.rows(); ++i) {
            long long e = d.entry(i, j);
            bool below = h[j - 1] >= d.rows() - i + 1;
            if (e > 0 && !below) m.insert(e);
            if (e < 0 && below) m.insert(-e);
        }
    return m;
}

StrictPartition from_path(const YinYangDiagram& d, const std::string& path) {
    std::set<long long> m = path_region_sets(d, path);
    std::vector<int> parts;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        if (*it > std::numeric_limits<int>::max())
            throw std::overflow_error("part exceeds int range");
        parts.push_back(static_cast<int>(*it));
    }
    return StrictPartition(std::move(parts));
}

std::string to_path(const YinYangDiagram& d, const StrictPartition& p) {
    for (int m : {d.s(), d.t()})
        if (auto v = bar_core_violation(p, m)) throw DomainViolation(*v);

    std::vector<int> h(d.cols() + 1, 0);
    for (int j = 1; j <= d.cols(); ++j) {
        int below = 0;
        for (int i = 1; i <= d.rows(); ++i) {
            long long e = d.entry(i, j);
            bool part = std::abs(e) <= std::numeric_limits<int>::max() &&
                        p.contains(static_cast<int>(std::abs(e)));
            if ((e < 0 && part) || (e > 0 && !part)) ++below;
        }
        h[j] = below;
    }
    for (int j = 2; j <= d.cols(); ++j)
        if (h[j] < h[j - 1])
            throw DomainViolation("marked cells do not form a monotone path region");

    std::string path;
    int prev = 0;
    for (int j = 1; j <= d.cols(); ++j) {
        path.append(h[j] - prev, 'N');
        path.push_back('E');
        prev = h[j];
    }
    path.append(d.rows() - prev, 'N');

    std::set<long long> m = path_region_sets(d, path);
    std::set<long long> want(p.parts().begin(), p.parts().end());
    if (m != want)
        throw DomainViolation("partition is not realized by any path of this diagram");
    return path;
}

std::vector<std::string> all_ne_paths(int e_steps, int n_steps) {
    if (e_steps < 0 || n_steps < 0) throw std::invalid_argument("negative step counts");
    std::vector<std::string> out;
    std::string acc;
    auto rec = [&](auto&& self, int e, int n) -> void {
        if (e == 0 && n == 0) {
            out.push_back(acc);
            return;
        }
        if (e > 0) {
            acc.push_back('E');
            self(self, e - 1, n);
            acc.pop_back();
        }
        if (n > 0) {
            acc.push_back('N');
            self(self, e, n - 1);
            acc.pop_back();
        }
    };
    rec(rec, e_steps, n_steps);
    return out;
}

bool ends_with_n(const std::string& path) { return !path.empty() && path.back() == 'N'; }

bool ends_with_ne(const std::string& path) {
    return path.size() >= 2 && path[path.size() - 2] == 'N' && path.back() == 'E';
}

std::vector<std::string> dd_paths(int s, int t) {
    YinYangDiagram d = YinYangDiagram::build(DiagramKind::B, s, t);
    std::vector<std::string> out;
    for (auto& p : all_ne_paths(d.cols(), d.rows()))
        if (ends_with_n(p)) out.push_back(std::move(p));
    return out;
}

std::vector<std::string> csyd_paths(int s, int t) {
    YinYangDiagram d = YinYangDiagram::build(DiagramKind::B, s, t);
    std::vector<std::string> out;
    for (auto& p : all_ne_paths(d.cols(), d.rows()))
        if (ends_with_n(p) || ends_with_ne(p)) out.push_back(std::move(p));
    return out;
}

} // namespace simcore
