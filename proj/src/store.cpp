#include "vkg/store.hpp"

#include <algorithm>

namespace vkg {

namespace {

struct SpoLess {
    bool operator()(const Triple& a, const Triple& b) const {
        return std::tie(a.subject, a.predicate, a.object) <
               std::tie(b.subject, b.predicate, b.object);
    }
};
struct PosLess {
    bool operator()(const Triple& a, const Triple& b) const {
        return std::tie(a.predicate, a.object, a.subject) <
               std::tie(b.predicate, b.object, b.subject);
    }
};
struct OspLess {
    bool operator()(const Triple& a, const Triple& b) const {
        return std::tie(a.object, a.subject, a.predicate) <
               std::tie(b.object, b.subject, b.predicate);
    }
};

// Extend a previously sorted prefix with `fresh` new triples: sort the new
// tail and merge. Keeps index rebuilds linear-ish for append workloads.
template <typename Less>
void extend_sorted(std::vector<Triple>& index, std::span<const Triple> fresh, Less less) {
    std::size_t old_size = index.size();
    index.insert(index.end(), fresh.begin(), fresh.end());
    std::sort(index.begin() + static_cast<std::ptrdiff_t>(old_size), index.end(), less);
    std::inplace_merge(index.begin(), index.begin() + static_cast<std::ptrdiff_t>(old_size),
                       index.end(), less);
}

std::span<const Triple> equal_span(const std::vector<Triple>& index, const Triple& lo,
                                   const Triple& hi, auto less) {
    auto first = std::lower_bound(index.begin(), index.end(), lo, less);
    auto last = std::upper_bound(first, index.end(), hi, less);
    return {&*index.begin() + (first - index.begin()), static_cast<std::size_t>(last - first)};
}

constexpr TermId kMaxId = 0xffffffffu;

}  // namespace

TermId TripleStore::intern(const Term& term) {
    if (auto it = term_ids_.find(term); it != term_ids_.end()) return it->second;
    validate_term(term);
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(term);
    term_ids_.emplace(terms_.back(), id);
    ++generation_;
    return id;
}

std::optional<TermId> TripleStore::lookup(const Term& term) const {
    auto it = term_ids_.find(term);
    if (it == term_ids_.end()) return std::nullopt;
    return it->second;
}

const Term& TripleStore::resolve(TermId id) const {
    if (id >= terms_.size())
        throw InternalError("unknown TermId " + std::to_string(id));
    return terms_[id];
}

bool TripleStore::insert(Triple triple) {
    if (triple.subject >= terms_.size() || triple.predicate >= terms_.size() ||
        triple.object >= terms_.size())
        throw InternalError("insert: triple references un-interned TermId");
    const Term& s = terms_[triple.subject];
    if (s.is_literal())
        throw ValidationError("insert: literal in subject position: '" + s.lexical + "'");
    const Term& p = terms_[triple.predicate];
    if (!p.is_iri())
        throw ValidationError("insert: predicate must be an IRI, got '" + p.lexical + "'");
    if (!triple_set_.insert(triple).second) return false;
    log_.push_back(triple);
    ++generation_;
    return true;
}

std::shared_ptr<const detail::IndexState> TripleStore::current_state() const {
    std::lock_guard lock(snapshot_mutex_);
    if (indexes_ && indexes_->triple_count == log_.size() &&
        indexes_->dict_size == terms_.size()) {
        return indexes_;
    }
    auto next = std::make_shared<detail::IndexState>();
    std::size_t old_count = indexes_ ? indexes_->triple_count : 0;
    if (indexes_) {
        next->spo = indexes_->spo;
        next->pos = indexes_->pos;
        next->osp = indexes_->osp;
    }
    std::span<const Triple> fresh(log_.data() + old_count, log_.size() - old_count);
#pragma omp parallel sections
    {
#pragma omp section
        extend_sorted(next->spo, fresh, SpoLess{});
#pragma omp section
        extend_sorted(next->pos, fresh, PosLess{});
#pragma omp section
        extend_sorted(next->osp, fresh, OspLess{});
    }
    next->triple_count = log_.size();
    next->generation = generation_;
    next->dict_size = terms_.size();
    indexes_ = next;
    return indexes_;
}

Snapshot TripleStore::snapshot() const {
    return Snapshot(current_state(), this);
}

MatchView Snapshot::match(const TriplePattern& pattern) const {
    if (!state_) return {};
    const auto& st = *state_;
    std::span<const Triple> range;
    bool needs_filter = false;
    if (pattern.subject) {
        TermId s = *pattern.subject;
        if (pattern.predicate) {
            TermId p = *pattern.predicate;
            if (pattern.object) {
                range = equal_span(st.spo, {s, p, *pattern.object}, {s, p, *pattern.object},
                                   SpoLess{});
            } else {
                range = equal_span(st.spo, {s, p, 0}, {s, p, kMaxId}, SpoLess{});
            }
        } else {
            range = equal_span(st.spo, {s, 0, 0}, {s, kMaxId, kMaxId}, SpoLess{});
            needs_filter = pattern.object.has_value();
        }
    } else if (pattern.predicate) {
        TermId p = *pattern.predicate;
        if (pattern.object) {
            range = equal_span(st.pos, {0, p, *pattern.object}, {kMaxId, p, *pattern.object},
                               PosLess{});
        } else {
            range = equal_span(st.pos, {0, p, 0}, {kMaxId, p, kMaxId}, PosLess{});
        }
    } else if (pattern.object) {
        TermId o = *pattern.object;
        range = equal_span(st.osp, {0, 0, o}, {kMaxId, kMaxId, o}, OspLess{});
    } else {
        range = {st.spo.data(), st.spo.size()};
    }
    return MatchView(range, pattern, needs_filter, state_);
}

std::size_t Snapshot::count(const TriplePattern& pattern) const {
    return match(pattern).count();
}

const Term& Snapshot::resolve(TermId id) const {
    if (!store_ || !state_ || id >= state_->dict_size)
        throw InternalError("snapshot: unknown TermId " + std::to_string(id));
    return store_->resolve(id);
}

std::optional<TermId> Snapshot::lookup(const Term& term) const {
    if (!store_ || !state_) return std::nullopt;
    auto id = store_->lookup(term);
    if (id && *id >= state_->dict_size) return std::nullopt;
    return id;
}

std::span<const Triple> Snapshot::all() const {
    if (!state_) return {};
    return {state_->spo.data(), state_->spo.size()};
}

}  // namespace vkg
