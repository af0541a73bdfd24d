#include "bgp/crypto.hpp"

#include <sodium.h>

#include <stdexcept>

namespace bgp {

namespace {

constexpr uint8_t kStmtVerify = 1;
constexpr uint8_t kStmtSuspicion = 2;
constexpr uint8_t kStmtViewChange = 3;

void ensure_sodium() {
  if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
}

Digest derive_key(const char* label, uint64_t run_seed, ProcessId pid) {
  ByteWriter w;
  w.str(label);
  w.u64(run_seed);
  w.u32(pid);
  return sha256(w.data());
}

}  // namespace

Digest sha256(const uint8_t* data, size_t n) {
  Digest out;
  crypto_hash_sha256(out.data(), data, n);
  return out;
}

Digest sha256(const std::vector<uint8_t>& b) { return sha256(b.data(), b.size()); }

Digest sequence_digest(const CmdSequence& s, const CommutativityOracle& o) {
  return sha256(encode_sequence(canonicalize(s, o)));
}

std::vector<uint8_t> verify_statement(const Ballot& ballot, const Digest& value_digest) {
  ByteWriter w;
  w.u8(kStmtVerify);
  w.u64(ballot.view);
  write_ballot(w, ballot);
  w.raw(value_digest.data(), value_digest.size());
  return w.take();
}

std::vector<uint8_t> suspicion_statement(uint64_t view) {
  ByteWriter w;
  w.u8(kStmtSuspicion);
  w.u64(view);
  return w.take();
}

std::vector<uint8_t> view_change_statement(uint64_t new_view) {
  ByteWriter w;
  w.u8(kStmtViewChange);
  w.u64(new_view);
  return w.take();
}

namespace {

class HmacScheme : public SignatureScheme {
 public:
  std::string name() const override { return "hmac"; }

  void provision(uint32_t n_processes, uint64_t run_seed) override {
    ensure_sodium();
    keys_.clear();
    for (ProcessId pid = 0; pid < n_processes; ++pid) {
      keys_.push_back(derive_key("bgp-hmac-key", run_seed, pid));
    }
  }

  Signature sign(ProcessId signer, const std::vector<uint8_t>& msg) const override {
    if (signer >= keys_.size()) throw std::out_of_range("unknown signer");
    Signature sig(crypto_auth_hmacsha256_BYTES);
    crypto_auth_hmacsha256(sig.data(), msg.data(), msg.size(), keys_[signer].data());
    return sig;
  }

  bool verify(ProcessId claimed, const std::vector<uint8_t>& msg,
              const Signature& sig) const override {
    if (claimed >= keys_.size()) return false;
    if (sig.size() != crypto_auth_hmacsha256_BYTES) return false;
    return crypto_auth_hmacsha256_verify(sig.data(), msg.data(), msg.size(),
                                         keys_[claimed].data()) == 0;
  }

 private:
  std::vector<Digest> keys_;
};

class Ed25519Scheme : public SignatureScheme {
 public:
  std::string name() const override { return "ed25519"; }

  void provision(uint32_t n_processes, uint64_t run_seed) override {
    ensure_sodium();
    pubs_.clear();
    privs_.clear();
    for (ProcessId pid = 0; pid < n_processes; ++pid) {
      Digest seed = derive_key("bgp-ed25519-seed", run_seed, pid);
      std::array<uint8_t, crypto_sign_PUBLICKEYBYTES> pub;
      std::array<uint8_t, crypto_sign_SECRETKEYBYTES> priv;
      crypto_sign_seed_keypair(pub.data(), priv.data(), seed.data());
      pubs_.push_back(pub);
      privs_.push_back(priv);
    }
  }

  Signature sign(ProcessId signer, const std::vector<uint8_t>& msg) const override {
    if (signer >= privs_.size()) throw std::out_of_range("unknown signer");
    Signature sig(crypto_sign_BYTES);
    crypto_sign_detached(sig.data(), nullptr, msg.data(), msg.size(), privs_[signer].data());
    return sig;
  }

  bool verify(ProcessId claimed, const std::vector<uint8_t>& msg,
              const Signature& sig) const override {
    if (claimed >= pubs_.size()) return false;
    if (sig.size() != crypto_sign_BYTES) return false;
    return crypto_sign_verify_detached(sig.data(), msg.data(), msg.size(),
                                       pubs_[claimed].data()) == 0;
  }

 private:
  std::vector<std::array<uint8_t, crypto_sign_PUBLICKEYBYTES>> pubs_;
  std::vector<std::array<uint8_t, crypto_sign_SECRETKEYBYTES>> privs_;
};

}  // namespace

std::unique_ptr<SignatureScheme> make_hmac_scheme() { return std::make_unique<HmacScheme>(); }

std::unique_ptr<SignatureScheme> make_ed25519_scheme() {
  return std::make_unique<Ed25519Scheme>();
}

std::unique_ptr<SignatureScheme> make_scheme(const std::string& name) {
  if (name == "hmac") return make_hmac_scheme();
  if (name == "ed25519") return make_ed25519_scheme();
  throw std::invalid_argument("unknown crypto provider: " + name);
}

bool check_proven_cert(const ProvenCert& cert, const std::set<ProcessId>& membership, uint32_t f,
                       const CommutativityOracle& oracle, const Verifier& verifier) {
  if (membership.size() <= f) return false;
  const size_t quorum = membership.size() - f;
  const Digest digest = sequence_digest(cert.value, oracle);
  const auto statement = verify_statement(cert.ballot, digest);
  size_t valid = 0;
  for (const auto& [pid, proof] : cert.proofs) {
    if (!membership.count(pid)) continue;
    if (proof.acceptor != pid) continue;
    if (verifier.verify(pid, statement, proof.sig)) ++valid;
  }
  return valid >= quorum;
}

bool CommandSigCache::valid(const Command& c) const {
  auto statement = command_statement(c);
  auto it = memo_.find(c.id);
  if (it != memo_.end() && it->second.first == statement) return it->second.second;
  bool ok = verifier_ && verifier_->verify(c.id.proposer, statement, c.proposer_sig);
  memo_[c.id] = {std::move(statement), ok};
  return ok;
}

bool CommandSigCache::all_valid(const CmdSequence& s) const {
  for (const auto& c : s.items)
    if (!valid(c)) return false;
  return true;
}

}  // namespace bgp
