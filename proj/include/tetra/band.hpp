#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetra/errors.hpp"
#include "tetra/scalar.hpp"

namespace tetra {

/// A scalar sequence indexed from `start`, backed either by an explicit finite
/// array or by a generator that can produce any index. Copies share storage.
template <Scalar T>
class Band {
 public:
  using Generator = std::function<T(Index)>;

  Band() : Band("band", 0, std::vector<T>{}) {}

  Band(std::string name, Index start, std::vector<T> values)
      : name_(std::move(name)),
        start_(start),
        values_(std::make_shared<const std::vector<T>>(std::move(values))) {}

  Band(std::string name, Index start, Generator gen)
      : name_(std::move(name)), start_(start), gen_(std::move(gen)) {}

  const std::string& name() const { return name_; }
  Index start() const { return start_; }
  bool is_generated() const { return static_cast<bool>(gen_); }

  /// Last index that can be materialized; empty for generator-backed bands.
  std::optional<Index> last() const {
    if (gen_) return std::nullopt;
    return start_ + static_cast<Index>(values_->size()) - 1;
  }

  bool has(Index i) const {
    if (i < start_) return false;
    auto l = last();
    return !l || i <= *l;
  }

  T at(Index i) const {
    if (i < start_)
      throw IndexOutOfRange("band '" + name_ + "' starts at " + std::to_string(start_) +
                            ", index " + std::to_string(i) + " requested");
    if (gen_) return gen_(i);
    auto offset = static_cast<std::size_t>(i - start_);
    if (offset >= values_->size()) throw BandExhausted(name_, i, *last());
    return (*values_)[offset];
  }

  T operator[](Index i) const { return at(i); }

  /// Values for indices start..last (inclusive).
  std::vector<T> materialize(Index last_index) const {
    std::vector<T> out;
    for (Index i = start_; i <= last_index; ++i) out.push_back(at(i));
    return out;
  }

  /// The band re-indexed so that entry `start + k` becomes entry `start`.
  Band drop_front(Index k) const {
    if (gen_) {
      auto g = gen_;
      return Band(name_, start_, Generator([g, k](Index i) { return g(i + k); }));
    }
    std::vector<T> rest;
    for (std::size_t i = static_cast<std::size_t>(k); i < values_->size(); ++i) rest.push_back((*values_)[i]);
    return Band(name_, start_, std::move(rest));
  }

 private:
  std::string name_;
  Index start_ = 0;
  std::shared_ptr<const std::vector<T>> values_;
  Generator gen_;
};

}  // namespace tetra
