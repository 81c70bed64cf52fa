#include "simcore/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace simcore {

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string trimmed;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "-") return parts;
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty part in partition text: " + text);
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad part '" + tok + "' in: " + text);
        parts.push_back(v);
    }
    return parts;
}

std::string parts_str(const std::vector<int>& parts) {
    if (parts.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("parts must be weakly decreasing");
    }
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::parse(const std::string& text) { return Partition(parse_parts(text)); }
std::string Partition::str() const { return parts_str(parts_); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("parts must be strictly decreasing");
    }
}

long long StrictPartition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool StrictPartition::contains(int value) const {
    return std::binary_search(parts_.begin(), parts_.end(), value, std::greater<int>());
}

StrictPartition StrictPartition::parse(const std::string& text) {
    return StrictPartition(parse_parts(text));
}
std::string StrictPartition::str() const { return parts_str(parts_); }

Partition conjugate(const Partition& p) {
    std::vector<int> conj;
    if (p.empty()) return Partition{};
    conj.reserve(p.part(0));
    for (int j = 1; j <= p.part(0); ++j) {
        int count = 0;
        for (int part : p.parts())
            if (part >= j) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

LengthTable hook_lengths(const Partition& p) {
    Partition conj = conjugate(p);
    LengthTable table(p.length());
    for (std::size_t i = 0; i < p.length(); ++i) {
        table[i].resize(p.part(i));
        for (int j = 0; j < p.part(i); ++j)
            table[i][j] = p.part(i) - (j + 1) + conj.part(j) - static_cast<int>(i + 1) + 1;
    }
    return table;
}

bool is_s_core(const Partition& p, int s) {
    if (s <= 0) throw std::invalid_argument("modulus must be positive");
    for (const auto& row : hook_lengths(p))
        for (int h : row)
            if (h % s == 0) return false;
    return true;
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

LengthTable shifted_hook_lengths(const StrictPartition& p) {
    // Row i of S(lambda) occupies columns i..i+lambda_i-1 (0-based).
    // For 0-based i <= j <= l-1:        h*_{i,j} = lambda_i + lambda_{j+1}.
    // For l <= j <= i+lambda_i-1:       h*_{i,j} = h_{i,j-l+1}(mu),
    // where mu_k = lambda_k - l + k (1-based k) and h is the ordinary hook.
    const int l = static_cast<int>(p.length());
    std::vector<int> mu_parts;
    for (int k = 1; k <= l; ++k) {
        int v = p.part(k - 1) - l + k;
        if (v > 0) mu_parts.push_back(v);
    }
    // lambda strict => mu weakly decreasing.
    Partition mu(mu_parts);
    LengthTable mu_hooks = hook_lengths(mu);

    LengthTable table(p.length());
    for (int i = 0; i < l; ++i) {
        table[i].reserve(p.part(i));
        for (int j = i; j <= i + p.part(i) - 1; ++j) {
            if (j < l - 1) {
                table[i].push_back(p.part(i) + p.part(j + 1));
            } else {
                table[i].push_back(mu_hooks[i][j - (l - 1)]);
            }
        }
    }
    return table;
}

LengthTable bar_lengths(const StrictPartition& p) {
    const std::size_t l = p.length();
    LengthTable table(l);
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<bool> removed(p.part(i) + 1, false);
        for (std::size_t k = i + 1; k < l; ++k) removed[p.part(i) - p.part(k)] = true;
        std::vector<int>& row = table[i];
        for (std::size_t k = i + 1; k < l; ++k) row.push_back(p.part(i) + p.part(k));
        for (int b = p.part(i); b >= 1; --b)
            if (!removed[b]) row.push_back(b);
    }
    return table;
}

bool is_bar_core(const StrictPartition& p, int s) {
    if (s <= 0) throw std::invalid_argument("modulus must be positive");
    for (const auto& row : bar_lengths(p))
        for (int b : row)
            if (b == s) return false;
    return true;
}

bool is_bar_core_char(const StrictPartition& p, int s) {
    return !bar_core_violation(p, s).has_value();
}

std::optional<std::string> bar_core_violation(const StrictPartition& p, int s) {
    if (s <= 0) throw std::invalid_argument("modulus must be positive");
    if (p.contains(s))
        return "bar-core clause (a) fails for modulus " + std::to_string(s) + ": " +
               std::to_string(s) + " is a part";
    for (int part : p.parts())
        if (part > s && !p.contains(part - s))
            return "bar-core clause (b) fails for modulus " + std::to_string(s) + ": part " +
                   std::to_string(part) + " present but " + std::to_string(part - s) +
                   " missing";
    for (std::size_t i = 0; i < p.length(); ++i)
        for (std::size_t j = i + 1; j < p.length(); ++j) {
            int a = p.part(i), b = p.part(j);
            if ((a + b) % s != 0) continue;
            if (s % 2 == 0 && a % s == s / 2 && b % s == s / 2) continue;
            return "bar-core clause (c) fails for modulus " + std::to_string(s) + ": parts " +
                   std::to_string(a) + " and " + std::to_string(b) + " sum to a multiple of " +
                   std::to_string(s);
        }
    return std::nullopt;
}

Partition doubled_distinct(const StrictPartition& p) {
    if (p.empty()) return Partition{};
    const int l = static_cast<int>(p.length());
    std::vector<int> rows;
    for (int i = 0; i < l; ++i) rows.push_back(p.part(i) + i + 1);
    for (int k = l + 1; k <= p.part(0); ++k) { // rows below the Durfee-like block
        int count = 0;
        for (int i = 0; i < l; ++i)
            if (p.part(i) - 1 + (i + 1) >= k) ++count;
        if (count == 0) break;
        rows.push_back(count);
    }
    return Partition(rows);
}

bool is_dd_core(const StrictPartition& p, int s) {
    return is_s_core(doubled_distinct(p), s);
}

bool is_dd_core_char(const StrictPartition& p, int s) {
    return !dd_core_violation(p, s).has_value();
}

std::optional<std::string> dd_core_violation(const StrictPartition& p, int s) {
    if (auto v = bar_core_violation(p, s)) return v;
    if (s % 2 == 0 && p.contains(s / 2))
        return "doubled-distinct clause fails for modulus " + std::to_string(s) + ": " +
               std::to_string(s / 2) + " (= s/2) is a part";
    return std::nullopt;
}

bool is_csyd(const StrictPartition& p, int s) {
    if (s <= 0) throw std::invalid_argument("modulus must be positive");
    for (const auto& row : shifted_hook_lengths(p))
        for (int h : row)
            if (h % s == 0) return false;
    return true;
}

bool is_csyd_char(const StrictPartition& p, int s) {
    return !csyd_violation(p, s).has_value();
}

std::optional<std::string> csyd_violation(const StrictPartition& p, int s) {
    if (auto v = bar_core_violation(p, s)) return v;
    if (s % 2 == 0 && p.contains(3 * s / 2))
        return "shifted-core clause fails for modulus " + std::to_string(s) + ": " +
               std::to_string(3 * s / 2) + " (= 3s/2) is a part";
    return std::nullopt;
}

} // namespace simcore
