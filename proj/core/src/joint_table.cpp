#include "hetpref/joint_table.hpp"

#include <stdexcept>

namespace hetpref {

double JointCell::j1() const {
  std::uint64_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(n11) / static_cast<double>(n);
}

double JointCell::j2() const {
  std::uint64_t n = total();
  return n == 0 ? 0.0 : static_cast<double>(n10 + n01) / (2.0 * static_cast<double>(n));
}

void JointLikelihoodTable::add(const PairedSample& rec) {
  const auto& a = rec.first;
  const auto& b = rec.second;
  if (a.x != b.x || a.y1 != b.y1 || a.y2 != b.y2) {
    throw std::invalid_argument("joint table: paired record halves must share the triple");
  }
  auto bump = [](JointCell& cell, int o, int o2) {
    if (o == 1 && o2 == 1) ++cell.n11;
    else if (o == 1 && o2 == 0) ++cell.n10;
    else if (o == 0 && o2 == 1) ++cell.n01;
    else ++cell.n00;
  };
  bump(cells_[key(a.x, a.y1, a.y2)], a.o, b.o);
  // Mirrored orientation: swapping y1 and y2 complements both labels.
  bump(cells_[key(a.x, a.y2, a.y1)], 1 - a.o, 1 - b.o);
}

const JointCell* JointLikelihoodTable::find(std::uint32_t x, std::uint32_t y1,
                                            std::uint32_t y2) const {
  auto it = cells_.find(key(x, y1, y2));
  return it == cells_.end() ? nullptr : &it->second;
}

JointLikelihoodTable estimate_joint(const PairedDataset& data, std::uint64_t n_min) {
  JointLikelihoodTable table(n_min);
  for (const auto& rec : data.records) table.add(rec);
  return table;
}

}  // namespace hetpref
