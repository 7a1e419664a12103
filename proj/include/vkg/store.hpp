#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vkg/term.hpp"

namespace vkg {

namespace detail {

// One immutable, fully sorted copy of the triple set. Published to
// snapshots via shared_ptr so later inserts never disturb readers.
struct IndexState {
    std::vector<Triple> spo;  // sorted (s,p,o)
    std::vector<Triple> pos;  // sorted (p,o,s)
    std::vector<Triple> osp;  // sorted (o,s,p)
    std::size_t triple_count = 0;
    std::uint64_t generation = 0;
    std::size_t dict_size = 0;
};

}  // namespace detail

// Forward-iterable view over one index range; applies a residual pattern
// check for the one binding shape (S and O bound, P wild) the indexes
// cannot answer with a contiguous range.
class MatchView {
public:
    class iterator {
    public:
        using value_type = Triple;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const Triple* cur, const Triple* end, const TriplePattern* residual)
            : cur_(cur), end_(end), residual_(residual) {
            skip();
        }
        const Triple& operator*() const { return *cur_; }
        iterator& operator++() {
            ++cur_;
            skip();
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& other) const { return cur_ == other.cur_; }

    private:
        void skip() {
            if (!residual_) return;
            while (cur_ != end_ && !residual_->matches(*cur_)) ++cur_;
        }
        const Triple* cur_ = nullptr;
        const Triple* end_ = nullptr;
        const TriplePattern* residual_ = nullptr;
    };

    MatchView() = default;
    MatchView(std::span<const Triple> range, TriplePattern residual, bool needs_filter,
              std::shared_ptr<const detail::IndexState> keepalive)
        : range_(range),
          residual_(residual),
          needs_filter_(needs_filter),
          keepalive_(std::move(keepalive)) {}

    iterator begin() const {
        return iterator(range_.data(), range_.data() + range_.size(),
                        needs_filter_ ? &residual_ : nullptr);
    }
    iterator end() const {
        return iterator(range_.data() + range_.size(), range_.data() + range_.size(),
                        needs_filter_ ? &residual_ : nullptr);
    }
    bool empty() const { return begin() == end(); }

    // Number of matching triples; O(1) unless a residual filter applies.
    std::size_t count() const {
        if (!needs_filter_) return range_.size();
        std::size_t n = 0;
        for (auto it = begin(); it != end(); ++it) ++n;
        return n;
    }

private:
    std::span<const Triple> range_;
    TriplePattern residual_;
    bool needs_filter_ = false;
    std::shared_ptr<const detail::IndexState> keepalive_;
};

class TripleStore;

// Frozen read view of a store state. Pattern matching against a snapshot
// is unaffected by later store mutations; safe to hand across threads as
// long as no writer runs concurrently (single-writer contract).
class Snapshot {
public:
    Snapshot() = default;

    // Triples matching `pattern`, in the order of the index chosen for the
    // binding shape: S bound -> SPO, else P bound -> POS, else O bound ->
    // OSP, fully unbound -> SPO.
    MatchView match(const TriplePattern& pattern) const;
    std::size_t count(const TriplePattern& pattern) const;

    const Term& resolve(TermId id) const;
    std::optional<TermId> lookup(const Term& term) const;

    // All triples in SPO order.
    std::span<const Triple> all() const;

    std::size_t triple_count() const { return state_ ? state_->triple_count : 0; }
    std::uint64_t generation() const { return state_ ? state_->generation : 0; }

private:
    friend class TripleStore;
    Snapshot(std::shared_ptr<const detail::IndexState> state, const TripleStore* store)
        : state_(std::move(state)), store_(store) {}

    std::shared_ptr<const detail::IndexState> state_;
    const TripleStore* store_ = nullptr;
};

// Dictionary-encoded triple set with SPO/POS/OSP orderings. Set semantics:
// duplicate inserts are rejected. Build-then-query; there is no delete.
//
// Concurrency: single writer, any number of readers over Snapshots.
// snapshot() itself is internally synchronized so concurrent readers may
// take snapshots; intern/insert require exclusive access.
class TripleStore {
public:
    TripleStore() = default;
    TripleStore(const TripleStore&) = delete;
    TripleStore& operator=(const TripleStore&) = delete;

    // Returns the existing id if `term` was interned before, else a fresh
    // id equal to the previous dictionary size. Validates the term.
    TermId intern(const Term& term);

    std::optional<TermId> lookup(const Term& term) const;
    const Term& resolve(TermId id) const;

    // Inserts the triple into all three indexes. Returns false (store
    // unchanged) if already present. The subject must resolve to an IRI or
    // blank node and the predicate to an IRI.
    bool insert(Triple triple);

    Snapshot snapshot() const;

    std::size_t triple_count() const { return log_.size(); }
    std::size_t term_count() const { return terms_.size(); }
    std::uint64_t generation() const { return generation_; }
    bool contains(const Triple& t) const { return triple_set_.contains(t); }

    // Triples in insertion order. Writer-side access for bulk algorithms.
    const std::vector<Triple>& log() const { return log_; }

private:
    std::shared_ptr<const detail::IndexState> current_state() const;

    std::deque<Term> terms_;  // deque: stable references across growth
    std::unordered_map<Term, TermId, TermHash> term_ids_;
    std::unordered_set<Triple, TripleHash> triple_set_;
    std::vector<Triple> log_;
    std::uint64_t generation_ = 0;

    mutable std::mutex snapshot_mutex_;
    mutable std::shared_ptr<const detail::IndexState> indexes_;
};

}  // namespace vkg
