#include "mckay/oracle.hpp"

#include <algorithm>
#include <set>

namespace mckay {

namespace {

class CutSearch {
 public:
  CutSearch(const McKayQuiver& q, const std::optional<TypeVector>& type)
      : q_(q), type_(type), chosen_(q.arrow_count()) {
    const auto cycles = elementary_cycles(q);
    on_arrow_.resize(q.arrow_count());
    hits_.assign(cycles.size(), 0);
    open_.assign(cycles.size(), 0);
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (ArrowId a : cycles[c].arrows) {
        on_arrow_[a].push_back(c);
        ++open_[c];
      }
    const auto k = static_cast<std::size_t>(q.type_count());
    used_.assign(k, 0);
    left_.assign(k, 0);
    for (const Arrow& a : q.arrows()) ++left_[static_cast<std::size_t>(a.type - 1)];
  }

  std::vector<Cut> run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void search(ArrowId a) {
    if (a == q_.arrow_count()) {
      found_.push_back(Cut::trusted(chosen_));
      return;
    }
    const auto t = static_cast<std::size_t>(q_.arrow(a).type - 1);
    --left_[t];
    for (std::size_t c : on_arrow_[a]) --open_[c];

    // Leave a out.
    bool ok = true;
    for (std::size_t c : on_arrow_[a])
      if (hits_[c] == 0 && open_[c] == 0) ok = false;
    if (ok && type_ && used_[t] + left_[t] < (*type_)[t]) ok = false;
    if (ok) search(a + 1);

    // Put a in.
    ok = true;
    for (std::size_t c : on_arrow_[a])
      if (hits_[c] != 0) ok = false;
    if (ok && type_ && used_[t] + 1 > (*type_)[t]) ok = false;
    if (ok) {
      for (std::size_t c : on_arrow_[a]) ++hits_[c];
      ++used_[t];
      chosen_.insert(a);
      search(a + 1);
      chosen_.erase(a);
      --used_[t];
      for (std::size_t c : on_arrow_[a]) --hits_[c];
    }

    for (std::size_t c : on_arrow_[a]) ++open_[c];
    ++left_[t];
  }

  const McKayQuiver& q_;
  const std::optional<TypeVector>& type_;
  std::vector<std::vector<std::size_t>> on_arrow_;
  std::vector<int> hits_;
  std::vector<int> open_;
  std::vector<Int> used_;
  std::vector<Int> left_;
  ArrowSet chosen_;
  std::vector<Cut> found_;
};

}  // namespace

std::vector<Cut> brute_force_cuts(const McKayQuiver& q, const std::optional<TypeVector>& type) {
  if (type && type->size() != static_cast<std::size_t>(q.type_count()))
    throw DimensionError("type vector must have n+1 entries");
  return CutSearch(q, type).run();
}

std::vector<TypeVector> brute_force_types(const McKayQuiver& q) {
  std::set<TypeVector> types;
  for (const Cut& c : brute_force_cuts(q)) types.insert(type_of(q, c));
  return {types.rbegin(), types.rend()};
}

}  // namespace mckay
