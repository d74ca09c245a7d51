#pragma once

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace slang {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

namespace util {

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), ascii_lower);
    return out;
}

inline std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Collapse runs of whitespace to single spaces and trim the ends.
inline std::string collapse_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true;  // leading space is dropped
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(c);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// Case-insensitive (ASCII) substring search. Returns npos when absent.
inline size_t ifind(std::string_view haystack, std::string_view needle, size_t from = 0) {
    if (needle.empty() || needle.size() > haystack.size()) return std::string::npos;
    for (size_t i = from; i + needle.size() <= haystack.size(); ++i) {
        bool match = true;
        for (size_t j = 0; j < needle.size(); ++j) {
            if (ascii_lower(haystack[i + j]) != ascii_lower(needle[j])) { match = false; break; }
        }
        if (match) return i;
    }
    return std::string::npos;
}

inline bool icontains(std::string_view haystack, std::string_view needle) {
    return ifind(haystack, needle) != std::string::npos;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        size_t b = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > b) out.emplace_back(s.substr(b, i - b));
    }
    return out;
}

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
}

// Case-insensitive whole-word containment ("art" does not match "party").
inline bool contains_word(std::string_view text, std::string_view term) {
    if (term.empty()) return false;
    size_t pos = 0;
    while ((pos = ifind(text, term, pos)) != std::string::npos) {
        bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
        size_t end = pos + term.size();
        bool right_ok = end == text.size() || !is_word_char(text[end]);
        if (left_ok && right_ok) return true;
        ++pos;
    }
    return false;
}

inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 1469598103934665603ull) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

// Levenshtein distance between two strings (unit costs).
inline size_t levenshtein(std::string_view a, std::string_view b) {
    if (a.size() > b.size()) std::swap(a, b);
    std::vector<size_t> row(a.size() + 1);
    for (size_t i = 0; i <= a.size(); ++i) row[i] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
        size_t prev_diag = row[0];
        row[0] = j;
        for (size_t i = 1; i <= a.size(); ++i) {
            size_t del = row[i] + 1;
            size_t ins = row[i - 1] + 1;
            size_t sub = prev_diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            prev_diag = row[i];
            row[i] = std::min({del, ins, sub});
        }
    }
    return row[a.size()];
}

// Minimum edit distance between `pattern` and any substring of `text`
// (semi-global alignment: free start and end positions in `text`).
inline size_t min_substring_distance(std::string_view pattern, std::string_view text) {
    if (pattern.empty()) return 0;
    std::vector<size_t> row(text.size() + 1, 0);  // row 0: free start
    for (size_t i = 1; i <= pattern.size(); ++i) {
        size_t prev_diag = row[0];
        row[0] = i;
        for (size_t j = 1; j <= text.size(); ++j) {
            size_t del = row[j] + 1;
            size_t ins = row[j - 1] + 1;
            size_t sub = prev_diag + (pattern[i - 1] == text[j - 1] ? 0 : 1);
            prev_diag = row[j];
            row[j] = std::min({del, ins, sub});
        }
    }
    return *std::min_element(row.begin(), row.end());
}

using Date = std::chrono::year_month_day;

// Accepts "YYYY-MM-DD" or an ISO-8601 timestamp ("...THH:MM:SS[Z|+HH:MM]").
// Timestamps are normalized to the UTC calendar date.
inline std::optional<Date> parse_iso_date(std::string_view s) {
    using namespace std::chrono;
    auto digits = [&](size_t pos, size_t n) -> std::optional<int> {
        if (pos + n > s.size()) return std::nullopt;
        int v = 0;
        for (size_t i = 0; i < n; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') return std::nullopt;
            v = v * 10 + (c - '0');
        }
        return v;
    };
    auto y = digits(0, 4);
    if (!y || s.size() < 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    auto mo = digits(5, 2), dy = digits(8, 2);
    if (!mo || !dy) return std::nullopt;
    Date date{year{*y}, month{static_cast<unsigned>(*mo)}, day{static_cast<unsigned>(*dy)}};
    if (!date.ok()) return std::nullopt;
    if (s.size() == 10) return date;

    if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
    auto hh = digits(11, 2), mi = digits(14, 2), ss = digits(17, 2);
    if (!hh || !mi || !ss || s[13] != ':' || s[16] != ':') return std::nullopt;
    if (*hh > 23 || *mi > 59 || *ss > 60) return std::nullopt;
    size_t rest = 19;
    // fractional seconds do not affect the date
    if (rest < s.size() && s[rest] == '.') {
        ++rest;
        while (rest < s.size() && s[rest] >= '0' && s[rest] <= '9') ++rest;
    }
    minutes offset{0};
    if (rest < s.size()) {
        char sign = s[rest];
        if (sign == 'Z') {
            if (rest + 1 != s.size()) return std::nullopt;
        } else if (sign == '+' || sign == '-') {
            auto oh = digits(rest + 1, 2);
            std::optional<int> om;
            if (rest + 3 < s.size() && s[rest + 3] == ':') om = digits(rest + 4, 2);
            else om = digits(rest + 3, 2);
            if (!oh || !om) return std::nullopt;
            offset = hours{*oh} + minutes{*om};
            if (sign == '-') offset = -offset;
        } else {
            return std::nullopt;
        }
    }
    auto tp = sys_days{date} + hours{*hh} + minutes{*mi} + seconds{*ss} - offset;
    return Date{floor<days>(tp)};
}

inline std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", int(d.year()),
                  unsigned(d.month()), unsigned(d.day()));
    return buf;
}

// Run fn(i) for i in [0, n) on up to `parallelism` worker threads.
// Exceptions from workers are rethrown on the calling thread (first one wins).
template <typename Fn>
void parallel_for(size_t n, size_t parallelism, Fn&& fn) {
    if (n == 0) return;
    parallelism = std::max<size_t>(1, std::min(parallelism, n));
    if (parallelism == 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(parallelism);
    for (size_t t = 0; t < parallelism; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

// Deterministic seed mix for deriving per-item seeds from a run seed.
inline uint64_t mix_seed(uint64_t seed, uint64_t salt) {
    uint64_t x = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27; x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

}  // namespace util
}  // namespace slang
