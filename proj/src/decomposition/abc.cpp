#include <algorithm>

#include "reidemeister/decomposition.hpp"

namespace reidemeister::decomposition {

char to_char(BlockKind kind) noexcept {
  switch (kind) {
    case BlockKind::A: return 'A';
    case BlockKind::B: return 'B';
    case BlockKind::C: return 'C';
  }
  return '?';
}

std::string BlockDecomposition::bracketed() const {
  std::string out = "(";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k) out += ',';
    out += '(';
    for (std::size_t i = 0; i < blocks[k].values.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks[k].values[i]);
    }
    out += ')';
  }
  out += ')';
  return out;
}

std::vector<std::size_t> BlockDecomposition::b_or_c_starts() const {
  std::vector<std::size_t> out;
  for (const Block& blk : blocks) {
    if (blk.kind != BlockKind::A) out.push_back(blk.start);
  }
  return out;
}

BlockDecomposition abc_decompose(std::span<const unsigned> e) {
  const std::size_t n = e.size();
  BlockDecomposition dec;
  std::vector<bool> used(n, false);

  // Step 1: maximal constant runs of length at least two.
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && e[j] == e[i]) ++j;
    if (j - i >= 2) {
      dec.blocks.push_back({BlockKind::A, i, j - i, {e.begin() + i, e.begin() + j}});
      std::fill(used.begin() + i, used.begin() + j, true);
      ++dec.a;
    }
    i = j;
  }

  // Step 2: pairs (v, v+1) among the rest, from the left.
  for (std::size_t i = 0; i + 1 < n;) {
    if (!used[i] && !used[i + 1] && e[i + 1] == e[i] + 1) {
      dec.blocks.push_back({BlockKind::B, i, 2, {e[i], e[i + 1]}});
      used[i] = used[i + 1] = true;
      ++dec.b;
      i += 2;
    } else {
      ++i;
    }
  }

  // Step 3: singletons.
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    dec.blocks.push_back({BlockKind::C, i, 1, {e[i]}});
    ++dec.c;
  }

  std::sort(dec.blocks.begin(), dec.blocks.end(),
            [](const Block& x, const Block& y) { return x.start < y.start; });
  dec.d = d_sequence(dec);
  return dec;
}

BlockDecomposition abc_decompose(const PGroupType& group) { return abc_decompose(group.exponents()); }

std::vector<unsigned> d_sequence(const BlockDecomposition& dec) {
  std::vector<unsigned> d;
  for (std::size_t k = 0; k < dec.blocks.size(); ++k) {
    const Block& blk = dec.blocks[k];
    for (std::size_t i = 0; i < blk.length; ++i) {
      if (d.empty()) {
        d.push_back(0);
      } else if (i == 0 && blk.kind != BlockKind::A) {
        d.push_back(d.back() + 1);
      } else {
        d.push_back(d.back());
      }
    }
  }
  return d;
}

}  // namespace reidemeister::decomposition
