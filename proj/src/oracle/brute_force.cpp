#include <set>

#include "reidemeister/error.hpp"
#include "reidemeister/oracle.hpp"

namespace reidemeister::oracle {

namespace {

// Walks every element of P in odometer order while keeping y = φ(x)
// up to date: whenever coordinate k changes (by +1, or by wrapping from
// p^{e_k} − 1 to 0) y moves by column k, since p^{e_k}·column k vanishes in P.
class ElementWalk {
 public:
  ElementWalk(const EndoMatrix& em, const EnumBudget& budget) {
    const PGroupType& g = em.group();
    const Integer order = g.order().value();
    if (order > budget.max_group_order) {
      throw Error(ErrorCode::BudgetExceeded, "|P| = " + order.get_str() + " exceeds cap " +
                                                 std::to_string(budget.max_group_order));
    }
    size_ = order.get_ui();
    n_ = g.rank();
    for (std::size_t i = 0; i < n_; ++i) moduli_.push_back(core::small_power(g.prime(), g.exponent(i)));
    columns_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) columns_[j * n_ + i] = em.matrix()(i, j).get_ui();
    }
    x_.assign(n_, 0);
    y_.assign(n_, 0);
  }

  std::uint64_t size() const { return size_; }
  std::size_t rank() const { return n_; }
  const std::vector<std::uint64_t>& x() const { return x_; }
  const std::vector<std::uint64_t>& y() const { return y_; }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }

  void advance() {
    for (std::size_t k = n_; k-- > 0;) {
      add_column(k);
      if (++x_[k] < moduli_[k]) return;
      x_[k] = 0;
    }
  }

 private:
  void add_column(std::size_t k) {
    const std::uint64_t* col = &columns_[k * n_];
    for (std::size_t i = 0; i < n_; ++i) {
      y_[i] += col[i];
      if (y_[i] >= moduli_[i]) y_[i] -= moduli_[i];
    }
  }

  std::uint64_t size_ = 1;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> columns_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> y_;
};

}  // namespace

std::uint64_t brute_fixed_points(const EndoMatrix& em, const EnumBudget& budget) {
  ElementWalk walk(em, budget);
  std::uint64_t fixed = 0;
  for (std::uint64_t step = 0; step < walk.size(); ++step) {
    if (walk.x() == walk.y()) ++fixed;
    walk.advance();
  }
  return fixed;
}

std::uint64_t twisted_class_count(const EndoMatrix& em, const EnumBudget& budget) {
  ElementWalk walk(em, budget);
  std::vector<bool> in_image(walk.size(), false);
  std::uint64_t image_size = 0;
  for (std::uint64_t step = 0; step < walk.size(); ++step) {
    // Mixed-radix index of x − φ(x).
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < walk.rank(); ++i) {
      const std::uint64_t q = walk.moduli()[i];
      const std::uint64_t diff = walk.x()[i] >= walk.y()[i] ? walk.x()[i] - walk.y()[i]
                                                            : walk.x()[i] + q - walk.y()[i];
      index = index * q + diff;
    }
    if (!in_image[index]) {
      in_image[index] = true;
      ++image_size;
    }
    walk.advance();
  }
  return walk.size() / image_size;
}

Spectrum oracle_spectrum(const PGroupType& group, bool use_pi, const EnumBudget& budget) {
  std::set<unsigned> exponents;
  AutomorphismStream stream(group, budget);
  while (auto em = stream.next()) {
    if (use_pi) {
      exponents.insert(spectra::product_number(*em).valuation(group.prime()));
    } else {
      exponents.insert(endo::fixed_point_exponent(*em));
    }
  }
  Spectrum out;
  for (unsigned k : exponents) out.insert(core::Factored::prime_power(group.prime(), k));
  return out;
}

}  // namespace reidemeister::oracle
