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

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace spack {

/// Non-decreasing packing sequence S = (s_1, s_2, ...): a finite prefix plus
/// an optional infinite tail (constant, or the identity s_i = i).
/// Indices are 1-based, matching the usual s_1 notation.
///
/// Values are canonicalized on construction (trailing prefix terms that the
/// tail already produces are folded into the tail), so operator== compares
/// sequences, not representations. Immutable after construction.
class PackingSequence {
public:
    enum class Tail { Finite, Constant, Identity };

    /// Finite sequence (s_1, ..., s_m).
    static PackingSequence finite(std::vector<int> prefix);
    /// (prefix, t, t, t, ...). Requires t >= last prefix term.
    static PackingSequence constant_tail(std::vector<int> prefix, int t);
    /// (prefix, m+1, m+2, ...) where m = prefix length.
    static PackingSequence identity_tail(std::vector<int> prefix = {});

    /// Parses the grammar  item (',' item)*  with
    ///   item := INT | INT '^' INT | INT '^inf' | 'id'
    /// where 'INT^inf' and 'id' may only appear as the final item.
    /// Throws ParseError on bad syntax, NotNonDecreasing on bad semantics.
    static PackingSequence parse(std::string_view text);

    /// Canonical textual form; parse(format()) == *this.
    std::string format() const;

    Tail tail() const { return tail_; }
    bool is_finite() const { return tail_ == Tail::Finite; }
    /// Number of terms of a finite sequence; meaningless for infinite tails.
    int length() const { return static_cast<int>(prefix_.size()); }
    const std::vector<int>& prefix() const { return prefix_; }
    int tail_value() const { return tail_value_; }

    /// True iff the sequence is (1, 1, 1, ...), i.e. proper coloring.
    bool is_all_ones() const {
        return tail_ == Tail::Constant && tail_value_ == 1;
    }

    bool has_term(int i) const;
    /// s_i (1-based). Throws IndexOutOfRange past the end of a finite sequence.
    int term(int i) const;
    /// (s_1, ..., s_k). Throws IndexOutOfRange if fewer than k terms exist.
    std::vector<int> truncate(int k) const;

    /// Least i with s_i >= value, or 0 if no such term exists.
    int first_term_at_least(int value) const;

    bool operator==(const PackingSequence&) const = default;

private:
    PackingSequence(std::vector<int> prefix, Tail tail, int tail_value);

    std::vector<int> prefix_;
    Tail tail_ = Tail::Finite;
    int tail_value_ = 0;  // only meaningful for Tail::Constant
};

}  // namespace spack
