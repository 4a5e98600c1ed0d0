// Copyright 2026 The spacking Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spack/seq.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "spack/errors.hpp"

namespace spack {

PackingSequence::PackingSequence(std::vector<int> prefix, Tail tail, int tail_value)
    : prefix_(std::move(prefix)), tail_(tail), tail_value_(tail_value) {
    for (int s : prefix_) {
        if (s < 1) throw NotNonDecreasing("sequence terms must be positive");
    }
    if (!std::is_sorted(prefix_.begin(), prefix_.end())) {
        throw NotNonDecreasing("packing sequence must be non-decreasing");
    }
    switch (tail_) {
        case Tail::Finite:
            if (prefix_.empty()) throw NotNonDecreasing("empty finite sequence");
            break;
        case Tail::Constant:
            if (tail_value_ < 1) throw NotNonDecreasing("sequence terms must be positive");
            if (!prefix_.empty() && prefix_.back() > tail_value_) {
                throw NotNonDecreasing("constant tail below last prefix term");
            }
            // Fold prefix terms the tail already produces.
            while (!prefix_.empty() && prefix_.back() == tail_value_) prefix_.pop_back();
            break;
        case Tail::Identity:
            if (!prefix_.empty() &&
                prefix_.back() > static_cast<int>(prefix_.size()) + 1) {
                throw NotNonDecreasing("identity tail below last prefix term");
            }
            while (!prefix_.empty() &&
                   prefix_.back() == static_cast<int>(prefix_.size())) {
                prefix_.pop_back();
            }
            break;
    }
}

PackingSequence PackingSequence::finite(std::vector<int> prefix) {
    return PackingSequence(std::move(prefix), Tail::Finite, 0);
}

PackingSequence PackingSequence::constant_tail(std::vector<int> prefix, int t) {
    return PackingSequence(std::move(prefix), Tail::Constant, t);
}

PackingSequence PackingSequence::identity_tail(std::vector<int> prefix) {
    return PackingSequence(std::move(prefix), Tail::Identity, 0);
}

bool PackingSequence::has_term(int i) const {
    if (i < 1) return false;
    return !is_finite() || i <= length();
}

int PackingSequence::term(int i) const {
    if (i < 1) throw IndexOutOfRange("sequence index must be >= 1");
    if (i <= static_cast<int>(prefix_.size())) return prefix_[i - 1];
    switch (tail_) {
        case Tail::Constant:
            return tail_value_;
        case Tail::Identity:
            return i;
        case Tail::Finite:
            break;
    }
    throw IndexOutOfRange("index " + std::to_string(i) + " past end of finite sequence");
}

std::vector<int> PackingSequence::truncate(int k) const {
    if (k < 1) throw IndexOutOfRange("truncation length must be >= 1");
    if (is_finite() && k > length()) {
        throw IndexOutOfRange("finite sequence has fewer than " + std::to_string(k) + " terms");
    }
    std::vector<int> out(k);
    for (int i = 1; i <= k; ++i) out[i - 1] = term(i);
    return out;
}

int PackingSequence::first_term_at_least(int value) const {
    for (int i = 0; i < static_cast<int>(prefix_.size()); ++i) {
        if (prefix_[i] >= value) return i + 1;
    }
    int next = static_cast<int>(prefix_.size()) + 1;
    switch (tail_) {
        case Tail::Constant:
            return tail_value_ >= value ? next : 0;
        case Tail::Identity:
            return std::max(next, value);
        case Tail::Finite:
            return 0;
    }
    return 0;
}

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("expected integer, got '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

PackingSequence PackingSequence::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty sequence");
    std::vector<int> prefix;
    auto items = split(text, ',');
    for (std::size_t idx = 0; idx < items.size(); ++idx) {
        std::string_view item = items[idx];
        bool last = idx + 1 == items.size();
        if (item.empty()) throw ParseError("empty item in sequence");
        if (item == "id") {
            if (!last) throw ParseError("'id' is only allowed as the final item");
            return identity_tail(std::move(prefix));
        }
        std::size_t caret = item.find('^');
        if (caret == std::string_view::npos) {
            prefix.push_back(parse_int(item));
            continue;
        }
        int base = parse_int(item.substr(0, caret));
        std::string_view exp = item.substr(caret + 1);
        if (exp == "inf") {
            if (!last) throw ParseError("'^inf' is only allowed on the final item");
            return constant_tail(std::move(prefix), base);
        }
        int count = parse_int(exp);
        if (count < 1) throw ParseError("repeat count must be >= 1");
        prefix.insert(prefix.end(), count, base);
    }
    return finite(std::move(prefix));
}

std::string PackingSequence::format() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < prefix_.size();) {
        std::size_t j = i;
        while (j < prefix_.size() && prefix_[j] == prefix_[i]) ++j;
        if (!first) out << ',';
        first = false;
        out << prefix_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    if (tail_ == Tail::Constant) {
        if (!first) out << ',';
        out << tail_value_ << "^inf";
    } else if (tail_ == Tail::Identity) {
        if (!first) out << ',';
        out << "id";
    }
    return out.str();
}

}  // namespace spack
