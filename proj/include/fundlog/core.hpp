// Core value types shared by every module: fixed-capacity bit sets for
// subsets of indexed carriers, boolean relation matrices, error types and
// a small parallel sweep helper.
#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fundlog {

// ---------------------------------------------------------------------------
// Errors

struct ParseError : std::runtime_error {
  std::size_t pos;
  std::string expected;
  ParseError(std::size_t p, std::string exp)
      : std::runtime_error("parse error at position " + std::to_string(p) +
                           ": expected " + exp),
        pos(p), expected(std::move(exp)) {}
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Named axiom/shape violation with integer witnesses (carrier indices).
struct ValidationError : std::runtime_error {
  std::string code;
  std::vector<int> witness;
  ValidationError(std::string c, std::vector<int> w, const std::string& msg)
      : std::runtime_error(c + ": " + msg), code(std::move(c)),
        witness(std::move(w)) {}
};

// ---------------------------------------------------------------------------
// SmallSet: subset of an indexed universe of at most 128 elements.
// Element i lives at bit i; the numeric value (high word, low word) is the
// canonical listing order used everywhere for deterministic output.

class SmallSet {
public:
  static constexpr int kCapacity = 128;

  constexpr SmallSet() : w_{0, 0} {}
  static constexpr SmallSet from_low_bits(std::uint64_t low) {
    SmallSet s;
    s.w_[0] = low;
    return s;
  }
  static SmallSet full(int n) {
    check_size(n);
    SmallSet s;
    if (n >= 64) {
      s.w_[0] = ~0ull;
      s.w_[1] = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
    } else {
      s.w_[0] = (n == 64) ? ~0ull : ((1ull << n) - 1);
    }
    return s;
  }
  static SmallSet single(int i) {
    SmallSet s;
    s.set(i);
    return s;
  }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  bool empty() const { return w_[0] == 0 && w_[1] == 0; }
  bool any() const { return !empty(); }
  int count() const {
    return __builtin_popcountll(w_[0]) + __builtin_popcountll(w_[1]);
  }

  bool intersects(SmallSet o) const {
    return (w_[0] & o.w_[0]) || (w_[1] & o.w_[1]);
  }
  bool subset_of(SmallSet o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }

  friend SmallSet operator&(SmallSet a, SmallSet b) {
    a.w_[0] &= b.w_[0];
    a.w_[1] &= b.w_[1];
    return a;
  }
  friend SmallSet operator|(SmallSet a, SmallSet b) {
    a.w_[0] |= b.w_[0];
    a.w_[1] |= b.w_[1];
    return a;
  }
  friend SmallSet operator-(SmallSet a, SmallSet b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }
  SmallSet complement_within(int n) const { return full(n) - *this; }

  friend bool operator==(SmallSet a, SmallSet b) {
    return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
  }
  friend bool operator!=(SmallSet a, SmallSet b) { return !(a == b); }
  // Canonical order: numeric on (high word, low word).
  friend bool operator<(SmallSet a, SmallSet b) {
    if (a.w_[1] != b.w_[1]) return a.w_[1] < b.w_[1];
    return a.w_[0] < b.w_[0];
  }

  // -1 when no further element.
  int first() const { return next(-1); }
  int next(int i) const {
    for (int k = i + 1; k < 128;) {
      std::uint64_t word = w_[k >> 6] >> (k & 63);
      if (word) return k + __builtin_ctzll(word);
      k = (k < 64) ? 64 : 128;
    }
    return -1;
  }

  template <typename F> void for_each(F f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  std::uint64_t low_bits() const { return w_[0]; }
  std::uint64_t high_bits() const { return w_[1]; }
  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(w_[0] * 0x9e3779b97f4a7c15ull ^ w_[1]);
  }

  static void check_size(int n) {
    if (n < 0 || n > kCapacity)
      throw CapExceeded("universe of " + std::to_string(n) +
                        " elements exceeds the 128-element set capacity");
  }

private:
  std::uint64_t w_[2];
};

struct SmallSetHash {
  std::size_t operator()(SmallSet s) const { return s.hash(); }
};

// ---------------------------------------------------------------------------
// BoolMat: square boolean matrix with rows stored as SmallSets.

class BoolMat {
public:
  BoolMat() : n_(0) {}
  explicit BoolMat(int n) : n_(n), rows_(n) { SmallSet::check_size(n); }

  int size() const { return n_; }
  bool at(int i, int j) const { return rows_[i].test(j); }
  void set(int i, int j, bool v = true) {
    if (v)
      rows_[i].set(j);
    else
      rows_[i].reset(j);
  }
  SmallSet row(int i) const { return rows_[i]; }
  SmallSet& row_ref(int i) { return rows_[i]; }

  SmallSet col(int j) const {
    SmallSet c;
    for (int i = 0; i < n_; ++i)
      if (rows_[i].test(j)) c.set(i);
    return c;
  }

  BoolMat transposed() const {
    BoolMat t(n_);
    for (int j = 0; j < n_; ++j) t.rows_[j] = col(j);
    return t;
  }

  friend bool operator==(const BoolMat& a, const BoolMat& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

private:
  int n_;
  std::vector<SmallSet> rows_;
};

// ---------------------------------------------------------------------------
// Worker pool: chunked parallel sweep over [0, total). Each task writes only
// to its own slot, so merges stay deterministic regardless of worker count.

inline int worker_count(int requested = 0) {
  if (const char* env = std::getenv("FUNDLOG_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (requested > 0) return requested;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

template <typename F>
void parallel_for(std::size_t total, int workers, F fn) {
  workers = worker_count(workers);
  if (workers <= 1 || total < 64) {
    for (std::size_t i = 0; i < total; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace fundlog
