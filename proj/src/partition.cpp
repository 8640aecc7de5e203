#include "cyclefactor/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cyclefactor {

namespace {

int parse_int(std::string_view tok, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(tok) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) next = text.size();
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
        n_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty partition text");
    std::vector<int> parts;
    if (text.find('^') != std::string_view::npos) {
        // exponent form: whitespace-separated "base^exp" factors
        std::istringstream in{std::string(text)};
        std::string factor;
        while (in >> factor) {
            size_t caret = factor.find('^');
            if (caret == std::string::npos || caret == 0 || caret + 1 == factor.size()) {
                throw std::invalid_argument("malformed exponent factor: '" + factor + "'");
            }
            int base = parse_int(std::string_view(factor).substr(0, caret), "part");
            int exp = parse_int(std::string_view(factor).substr(caret + 1), "exponent");
            if (base < 1) throw std::invalid_argument("partition parts must be positive");
            if (exp < 0) throw std::invalid_argument("negative exponent");
            for (int i = 0; i < exp; ++i) parts.push_back(base);
        }
    } else {
        for (std::string_view tok : split(text, ',')) {
            tok = trim(tok);
            if (tok.empty()) throw std::invalid_argument("empty part in partition text");
            parts.push_back(parse_int(tok, "part"));
        }
    }
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (parts_.size() != other.parts_.size()) {
        // longer partitions order first
        return other.parts_.size() <=> parts_.size();
    }
    return parts_ <=> other.parts_;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

Bigint z(const Partition& lambda) {
    Bigint den = 1;
    int run_value = 0, run_count = 0;
    auto flush = [&] {
        for (int j = 1; j <= run_count; ++j) den *= Bigint(run_value) * j;
    };
    for (int p : lambda.parts()) {
        if (p == run_value) {
            ++run_count;
        } else {
            flush();
            run_value = p;
            run_count = 1;
        }
    }
    flush();
    return exact_div(factorial(lambda.n()), den);
}

Partition down_shift(const Partition& lambda, int j) {
    if (j < 2) throw std::invalid_argument("down_shift: j must be >= 2");
    std::vector<int> parts = lambda.parts();
    auto it = std::find(parts.begin(), parts.end(), j);
    if (it == parts.end()) {
        throw std::invalid_argument("down_shift: no part " + std::to_string(j) + " in " + lambda.to_string());
    }
    *it = j - 1;
    return Partition(std::move(parts));
}

Partition up_shift(const Partition& lambda, int i) {
    if (i < 1) throw std::invalid_argument("up_shift: i must be >= 1");
    std::vector<int> parts = lambda.parts();
    auto it = std::find(parts.begin(), parts.end(), i);
    if (it == parts.end()) {
        throw std::invalid_argument("up_shift: no part " + std::to_string(i) + " in " + lambda.to_string());
    }
    *it = i + 1;
    return Partition(std::move(parts));
}

Bigint merge_count(const Partition& mu, const Partition& lambda, int arity) {
    if (arity < 2) throw std::invalid_argument("merge_count: arity must be >= 2");
    if (mu.n() != lambda.n()) return 0;
    if (mu.length() != lambda.length() + arity - 1) return 0;

    // Distinct part values of mu with multiplicities.
    std::vector<std::pair<int, int>> vals;  // (value, m_v)
    for (int p : mu.parts()) {
        if (!vals.empty() && vals.back().first == p) {
            ++vals.back().second;
        } else {
            vals.emplace_back(p, 1);
        }
    }

    Bigint total = 0;
    std::vector<int> chosen(vals.size(), 0);
    // Pick a sub-multiset S of `arity` parts; check mu \ S + {sum S} == lambda.
    std::function<void(size_t, int, int)> rec = [&](size_t idx, int left, int sum) {
        if (left == 0) {
            std::vector<int> rest;
            for (size_t v = 0; v < vals.size(); ++v) {
                for (int c = 0; c < vals[v].second - chosen[v]; ++c) rest.push_back(vals[v].first);
            }
            rest.push_back(sum);
            if (Partition(std::move(rest)) == lambda) {
                Bigint ways = 1;
                for (size_t v = 0; v < vals.size(); ++v) {
                    if (chosen[v]) ways *= binomial(vals[v].second, chosen[v]);
                }
                total += ways;
            }
            return;
        }
        if (idx == vals.size()) return;
        int cap = std::min(left, vals[idx].second);
        for (int c = 0; c <= cap; ++c) {
            chosen[idx] = c;
            rec(idx + 1, left - c, sum + c * vals[idx].first);
        }
        chosen[idx] = 0;
    };
    rec(0, arity, 0);
    return total;
}

std::vector<RefinementEdge> refinements_with_kappa(const Partition& lambda, int arity) {
    if (arity < 3 || arity % 2 == 0) {
        throw std::invalid_argument("refinements_with_kappa: arity must be odd and >= 3");
    }

    // Candidate mu's: split one distinct part value P into exactly `arity`
    // positive parts, in all ways. Dedupe, then compute kappa per mu.
    std::vector<Partition> candidates;
    int prev = -1;
    for (int part : lambda.parts()) {
        if (part == prev || part < arity) continue;
        prev = part;
        std::vector<int> rest = lambda.parts();
        rest.erase(std::find(rest.begin(), rest.end(), part));

        std::vector<int> piece;
        std::function<void(int, int, int)> split_rec = [&](int remaining, int max_piece, int slots) {
            if (slots == 0) {
                if (remaining != 0) return;
                std::vector<int> parts = rest;
                parts.insert(parts.end(), piece.begin(), piece.end());
                candidates.emplace_back(std::move(parts));
                return;
            }
            // each remaining slot needs at least 1
            for (int p = std::min(remaining - (slots - 1), max_piece); p >= 1; --p) {
                piece.push_back(p);
                split_rec(remaining - p, p, slots - 1);
                piece.pop_back();
            }
        };
        split_rec(part, part, arity);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<RefinementEdge> edges;
    for (auto& mu : candidates) {
        Bigint k = merge_count(mu, lambda, arity);
        if (k > 0) edges.push_back(RefinementEdge{std::move(mu), lambda, arity, std::move(k)});
    }
    return edges;
}

}  // namespace cyclefactor
