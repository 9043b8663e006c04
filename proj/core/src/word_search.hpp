#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "cyldom/cyclic_words.hpp"

namespace cyldom::detail {

// Depth-first generation of circular words where every length-3 window
// satisfies `ok(centre, l, c, r)`. Words are produced in ascending key
// order; `visit(std::span<const Trit>, key)` is called once per word.
template <class WindowOk, class Visit>
class CyclicSearch {
 public:
  CyclicSearch(std::size_t n, WindowOk ok, Visit visit) : n_(n), ok_(ok), visit_(visit) {}

  void run() {
    for (Trit a = 0; a < 3; ++a) {
      for (Trit b = 0; b < 3; ++b) {
        w_[0] = a;
        w_[1] = b;
        extend(2, std::uint64_t{a} * 3 + b);
      }
    }
  }

 private:
  void extend(std::size_t i, std::uint64_t key) {
    if (i == n_) {
      if (ok_(n_ - 1, w_[n_ - 2], w_[n_ - 1], w_[0]) && ok_(0, w_[n_ - 1], w_[0], w_[1]))
        visit_(std::span<const Trit>(w_.data(), n_), key);
      return;
    }
    for (Trit t = 0; t < 3; ++t) {
      if (!ok_(i - 1, w_[i - 2], w_[i - 1], t)) continue;
      w_[i] = t;
      extend(i + 1, key * 3 + t);
    }
  }

  std::size_t n_;
  WindowOk ok_;
  Visit visit_;
  std::array<Trit, kMaxWordLength> w_{};
};

template <class WindowOk, class Visit>
void for_each_cyclic_word(std::size_t n, WindowOk ok, Visit visit) {
  CyclicSearch<WindowOk&, Visit&>(n, ok, visit).run();
}

}  // namespace cyldom::detail
