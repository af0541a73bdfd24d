#ifndef BGP_BALLOT_HPP
#define BGP_BALLOT_HPP

#include <cstdint>
#include <string>
#include <utility>

namespace bgp {

enum class BallotKind : uint8_t { kClassic = 0, kFast = 1 };

inline const char* ballot_kind_name(BallotKind k) {
  return k == BallotKind::kFast ? "fast" : "classic";
}

// One extension round of the single ongoing consensus instance. Totally
// ordered by (view, number); kind is metadata and not part of the order.
struct Ballot {
  uint64_t view = 0;
  uint64_t number = 0;
  BallotKind kind = BallotKind::kClassic;

  std::pair<uint64_t, uint64_t> key() const { return {view, number}; }

  friend bool operator<(const Ballot& a, const Ballot& b) { return a.key() < b.key(); }
  friend bool operator>(const Ballot& a, const Ballot& b) { return b < a; }
  friend bool operator<=(const Ballot& a, const Ballot& b) { return !(b < a); }
  friend bool operator>=(const Ballot& a, const Ballot& b) { return !(a < b); }
  // Same round: kind intentionally ignored.
  friend bool operator==(const Ballot& a, const Ballot& b) { return a.key() == b.key(); }
  friend bool operator!=(const Ballot& a, const Ballot& b) { return !(a == b); }

  std::string str() const {
    return "(" + std::to_string(view) + "," + std::to_string(number) + "," +
           ballot_kind_name(kind) + ")";
  }
};

using BallotKey = std::pair<uint64_t, uint64_t>;

}  // namespace bgp

#endif  // BGP_BALLOT_HPP
