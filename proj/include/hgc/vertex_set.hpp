#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hgc/errors.hpp"

namespace hgc {

/// Vertices are 1-based and densely numbered; ascending id is the base order.
using VertexId = std::uint32_t;

/// Fixed-capacity bit vector over the ids [1, capacity].
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (VertexId v = 1; v <= capacity; ++v) s.insert(v);
    return s;
  }

  static VertexSet of(std::size_t capacity, std::span<const VertexId> ids) {
    VertexSet s(capacity);
    for (VertexId v : ids) s.insert(v);
    return s;
  }

  static VertexSet of(std::size_t capacity, std::initializer_list<VertexId> ids) {
    return of(capacity, std::span<const VertexId>(ids.begin(), ids.size()));
  }

  std::size_t capacity() const { return capacity_; }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool in_range(VertexId v) const { return v >= 1 && v <= capacity_; }

  bool contains(VertexId v) const {
    return in_range(v) && ((words_[(v - 1) / 64] >> ((v - 1) % 64)) & 1U);
  }

  void insert(VertexId v) {
    check(v);
    words_[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
  }

  void erase(VertexId v) {
    check(v);
    words_[(v - 1) / 64] &= ~(std::uint64_t{1} << ((v - 1) % 64));
  }

  bool is_subset_of(const VertexSet& other) const {
    same_space(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_space(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& other) {
    same_space(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    same_space(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& other) {
    same_space(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet&) const = default;

  /// Orders by the ascending id list, lexicographically.
  friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.ids() < b.ids(); }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int bit = std::countr_zero(bits);
        fn(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(bit) + 1));
        bits &= bits - 1;
      }
    }
  }

  std::vector<VertexId> ids() const {
    std::vector<VertexId> out;
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](VertexId v) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    });
    return out + "}";
  }

 private:
  void check(VertexId v) const {
    if (!in_range(v))
      throw InputError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(capacity_) + "]");
  }
  void same_space(const VertexSet& other) const {
    if (other.capacity_ != capacity_) throw InputError("vertex sets over different index spaces");
  }

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hgc
