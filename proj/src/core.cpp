#include "bgp/core.hpp"

#include <algorithm>

namespace bgp {

namespace {

bool keysets_overlap(const std::set<std::string>& a, const std::set<std::string>& b) {
  // Both sets are ordered; walk them in lockstep.
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return true;
  }
  return false;
}

}  // namespace

bool CommutativityOracle::commute(const Command& a, const Command& b) const {
  if (a.universal || b.universal) return true;
  // C* pins ordering: it interferes with every non-universal command.
  if (a.is_checkpoint() || b.is_checkpoint()) return false;
  if (mode_ == Mode::kExplicit) {
    return interfering_.find(normalized(a.id, b.id)) == interfering_.end();
  }
  if (keysets_overlap(a.write_keys, b.read_keys)) return false;
  if (keysets_overlap(a.write_keys, b.write_keys)) return false;
  if (keysets_overlap(b.write_keys, a.read_keys)) return false;
  return true;
}

CmdSequence canonicalize(const CmdSequence& s, const CommutativityOracle& o) {
  const size_t n = s.items.size();
  // indegree[j] = number of earlier interfering commands not yet emitted.
  std::vector<size_t> indegree(n, 0);
  std::vector<std::vector<size_t>> successors(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (o.interferes(s.items[i], s.items[j])) {
        successors[i].push_back(j);
        ++indegree[j];
      }
    }
  }
  std::set<std::pair<CommandId, size_t>> ready;
  for (size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert({s.items[i].id, i});

  CmdSequence out;
  out.items.reserve(n);
  while (!ready.empty()) {
    size_t i = ready.begin()->second;
    ready.erase(ready.begin());
    out.items.push_back(s.items[i]);
    for (size_t j : successors[i]) {
      if (--indegree[j] == 0) ready.insert({s.items[j].id, j});
    }
  }
  return out;
}

bool equivalent(const CmdSequence& s1, const CmdSequence& s2, const CommutativityOracle& o) {
  if (s1.items.size() != s2.items.size()) return false;
  return canonicalize(s1, o) == canonicalize(s2, o);
}

bool eq_prefix(const CmdSequence& x, const CmdSequence& y, const CommutativityOracle& o) {
  const auto x_ids = x.ids();
  const auto y_ids = y.ids();
  if (!std::includes(y_ids.begin(), y_ids.end(), x_ids.begin(), x_ids.end())) return false;
  CmdSequence restricted;
  for (const auto& c : y.items)
    if (x_ids.count(c.id)) restricted.items.push_back(c);
  return equivalent(x, restricted, o);
}

CmdSequence concat(const CmdSequence& s, const CmdSequence& t) {
  CmdSequence out = s;
  auto present = s.ids();
  for (const auto& c : t.items) {
    if (present.insert(c.id).second) out.items.push_back(c);
  }
  return out;
}

CmdSequence merge_sequences(const CmdSequence& old_seq, const CmdSequence& new_seq) {
  return concat(old_seq, new_seq);
}

CmdSequence largest_seq(const std::map<ProcessId, CmdSequence>& proven_by_acceptor,
                        const CommutativityOracle& o) {
  std::vector<const CmdSequence*> seqs;
  seqs.reserve(proven_by_acceptor.size());
  for (const auto& [pid, seq] : proven_by_acceptor) seqs.push_back(&seq);
  for (size_t i = 0; i < seqs.size(); ++i) {
    for (size_t j = i + 1; j < seqs.size(); ++j) {
      if (!eq_prefix(*seqs[i], *seqs[j], o) && !eq_prefix(*seqs[j], *seqs[i], o)) {
        throw IncomparableProvenSequences();
      }
    }
  }
  const CmdSequence* best = nullptr;
  size_t ties = 0;
  for (const CmdSequence* s : seqs) {
    if (!best || s->size() > best->size()) {
      best = s;
      ties = 1;
    } else if (s->size() == best->size()) {
      ++ties;
    }
  }
  if (!best) return {};
  // Equal-length candidates are equivalent; hand back the class representative.
  if (ties > 1) return canonicalize(*best, o);
  return *best;
}

CmdSequence remove_duplicates(const CmdSequence& s) {
  CmdSequence out;
  std::set<CommandId> seen;
  for (const auto& c : s.items) {
    if (seen.insert(c.id).second) out.items.push_back(c);
  }
  return out;
}

bool is_universally_commutative(const CmdSequence& s) {
  return std::all_of(s.items.begin(), s.items.end(),
                     [](const Command& c) { return c.universal; });
}

CmdSequence subtract(const CmdSequence& s, const CmdSequence& t) {
  const auto drop = t.ids();
  CmdSequence out;
  for (const auto& c : s.items)
    if (!drop.count(c.id)) out.items.push_back(c);
  return out;
}

}  // namespace bgp
