#include "leibext/subsets.hpp"

#include <array>

#include "leibext/errors.hpp"

namespace leibext {

std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::b00: return "b00";
    case Quantity::b01: return "b01";
    case Quantity::b11: return "b11";
    case Quantity::b12: return "b12";
    case Quantity::b14: return "b14";
    case Quantity::b16: return "b16";
    case Quantity::b: return "b";
    case Quantity::delta: return "delta";
  }
  return "?";
}

Complex quantity_value(const ExtensionParams& p, Quantity q) {
  const auto even = [&](int j) -> Complex {
    if (j > static_cast<int>(p.b_even.size())) {
      throw ArgumentError(quantity_name(q) + " is not a parameter for n=" + std::to_string(p.n));
    }
    return p.b_even[j - 1];
  };
  switch (q) {
    case Quantity::b00: return p.b00;
    case Quantity::b01: return p.b01;
    case Quantity::b11: return p.b11;
    case Quantity::b12: return even(1);
    case Quantity::b14: return even(2);
    case Quantity::b16: return even(3);
    case Quantity::b:
      if (p.n % 2 == 0) throw ArgumentError("b is not a parameter for even n");
      return p.b;
    case Quantity::delta: return p.b01 * p.b01 - 4.0 * p.b00 * p.b11;
  }
  return {};
}

namespace {

using Q = Quantity;

Condition nz(Q q) { return {q, true}; }
Condition z(Q q) { return {q, false}; }

SubsetSpec entry(int index, std::vector<Condition> conds, std::vector<double> rep,
                 bool parametric = false) {
  std::vector<Complex> r(rep.begin(), rep.end());
  return {index, std::move(conds), std::move(r), parametric};
}

// Partition driven first by the b00/b01/b11 block, then by a single b12.
std::vector<SubsetSpec> table_4() {
  return {
      entry(1, {nz(Q::b11), nz(Q::b12)}, {0, 0, 1, 1}, true),
      entry(2, {nz(Q::b11), z(Q::b12), nz(Q::delta)}, {1, 0, 1, 0}),
      entry(3, {nz(Q::b11), z(Q::b12), z(Q::delta)}, {0, 0, 1, 0}),
      entry(4, {z(Q::b11), nz(Q::b01), nz(Q::b12)}, {0, 1, 0, 1}),
      entry(5, {z(Q::b11), nz(Q::b01), z(Q::b12)}, {0, 1, 0, 0}),
      entry(6, {z(Q::b11), z(Q::b01), nz(Q::b00), nz(Q::b12)}, {1, 0, 0, 1}),
      entry(7, {z(Q::b11), z(Q::b01), nz(Q::b00), z(Q::b12)}, {1, 0, 0, 0}),
      entry(8, {z(Q::b11), z(Q::b01), z(Q::b00), nz(Q::b12)}, {0, 0, 0, 1}),
      entry(9, {z(Q::b11), z(Q::b01), z(Q::b00), z(Q::b12)}, {0, 0, 0, 0}),
  };
}

std::vector<SubsetSpec> table_5() {
  return {
      entry(1, {nz(Q::b), nz(Q::b11)}, {0, 0, 1, 0, 1}, true),
      entry(2, {nz(Q::b), z(Q::b11), nz(Q::b01)}, {0, 1, 0, 0, 1}),
      entry(3, {nz(Q::b), z(Q::b11), z(Q::b01), nz(Q::b00)}, {1, 0, 0, 0, 1}),
      entry(4, {nz(Q::b), z(Q::b11), z(Q::b01), z(Q::b00)}, {0, 0, 0, 0, 1}),
      entry(5, {z(Q::b), nz(Q::b11), nz(Q::b12)}, {0, 0, 1, 1, 0}, true),
      entry(6, {z(Q::b), nz(Q::b11), z(Q::b12), nz(Q::delta)}, {1, 0, 1, 0, 0}),
      entry(7, {z(Q::b), nz(Q::b11), z(Q::b12), z(Q::delta)}, {0, 0, 1, 0, 0}),
      entry(8, {z(Q::b), z(Q::b11), nz(Q::b01), nz(Q::b12)}, {0, 1, 0, 1, 0}),
      entry(9, {z(Q::b), z(Q::b11), nz(Q::b01), z(Q::b12)}, {0, 1, 0, 0, 0}),
      entry(10, {z(Q::b), z(Q::b11), z(Q::b01), nz(Q::b00), nz(Q::b12)}, {1, 0, 0, 1, 0}),
      entry(11, {z(Q::b), z(Q::b11), z(Q::b01), nz(Q::b00), z(Q::b12)}, {1, 0, 0, 0, 0}),
      entry(12, {z(Q::b), z(Q::b11), z(Q::b01), z(Q::b00), nz(Q::b12)}, {0, 0, 0, 1, 0}),
      entry(13, {z(Q::b), z(Q::b11), z(Q::b01), z(Q::b00), z(Q::b12)}, {0, 0, 0, 0, 0}),
  };
}

std::vector<SubsetSpec> table_6() {
  return {
      entry(1, {nz(Q::b11), nz(Q::b14)}, {0, 0, 1, 0, 1}, true),
      entry(2, {nz(Q::b11), z(Q::b14), nz(Q::b12)}, {0, 0, 1, 1, 0}, true),
      entry(3, {nz(Q::b11), z(Q::b14), z(Q::b12), nz(Q::delta)}, {1, 0, 1, 0, 0}),
      entry(4, {nz(Q::b11), z(Q::b14), z(Q::b12), z(Q::delta)}, {0, 0, 1, 0, 0}),
      entry(5, {z(Q::b11), nz(Q::b01), nz(Q::b14)}, {0, 1, 0, 0, 1}),
      entry(6, {z(Q::b11), nz(Q::b01), z(Q::b14), nz(Q::b12)}, {0, 1, 0, 1, 0}),
      entry(7, {z(Q::b11), nz(Q::b01), z(Q::b14), z(Q::b12)}, {0, 1, 0, 0, 0}),
      entry(8, {z(Q::b11), z(Q::b01), nz(Q::b00), nz(Q::b14)}, {1, 0, 0, 0, 1}),
      entry(9, {z(Q::b11), z(Q::b01), nz(Q::b00), z(Q::b14), nz(Q::b12)}, {1, 0, 0, 1, 0}),
      entry(10, {z(Q::b11), z(Q::b01), nz(Q::b00), z(Q::b14), z(Q::b12)}, {1, 0, 0, 0, 0}),
      entry(11, {z(Q::b11), z(Q::b01), z(Q::b00), nz(Q::b14)}, {0, 0, 0, 0, 1}),
      entry(12, {z(Q::b11), z(Q::b01), z(Q::b00), z(Q::b14), nz(Q::b12)}, {0, 0, 0, 1, 0}),
      entry(13, {z(Q::b11), z(Q::b01), z(Q::b00), z(Q::b14), z(Q::b12)}, {0, 0, 0, 0, 0}),
  };
}

// n = 7 and n = 8 share the layout; `top` is b for n = 7 and b16 for n = 8.
std::vector<SubsetSpec> table_78(Q top) {
  return {
      entry(1, {nz(top), nz(Q::b11)}, {0, 0, 1, 0, 0, 1}, true),
      entry(2, {nz(top), z(Q::b11), nz(Q::b01)}, {0, 1, 0, 0, 0, 1}),
      entry(3, {nz(top), z(Q::b11), z(Q::b01), nz(Q::b00)}, {1, 0, 0, 0, 0, 1}),
      entry(4, {nz(top), z(Q::b11), z(Q::b01), z(Q::b00)}, {0, 0, 0, 0, 0, 1}),
      entry(5, {z(top), nz(Q::b14), nz(Q::b11)}, {0, 0, 1, 0, 1, 0}, true),
      entry(6, {z(top), nz(Q::b14), z(Q::b11), nz(Q::b01)}, {0, 1, 0, 0, 1, 0}),
      entry(7, {z(top), nz(Q::b14), z(Q::b11), z(Q::b01), nz(Q::b00)}, {1, 0, 0, 0, 1, 0}),
      entry(8, {z(top), nz(Q::b14), z(Q::b11), z(Q::b01), z(Q::b00)}, {0, 0, 0, 0, 1, 0}),
      entry(9, {z(top), z(Q::b14), nz(Q::b12), nz(Q::b11)}, {0, 0, 1, 1, 0, 0}, true),
      entry(10, {z(top), z(Q::b14), nz(Q::b12), z(Q::b11), nz(Q::b01)}, {0, 1, 0, 1, 0, 0}),
      entry(11, {z(top), z(Q::b14), nz(Q::b12), z(Q::b11), z(Q::b01), nz(Q::b00)},
            {1, 0, 0, 1, 0, 0}),
      entry(12, {z(top), z(Q::b14), nz(Q::b12), z(Q::b11), z(Q::b01), z(Q::b00)},
            {0, 0, 0, 1, 0, 0}),
      entry(13, {z(top), z(Q::b14), z(Q::b12), nz(Q::b11), nz(Q::delta)}, {1, 0, 1, 0, 0, 0}),
      entry(14, {z(top), z(Q::b14), z(Q::b12), nz(Q::b11), z(Q::delta)}, {0, 0, 1, 0, 0, 0}),
      entry(15, {z(top), z(Q::b14), z(Q::b12), z(Q::b11), nz(Q::b01)}, {0, 1, 0, 0, 0, 0}),
      entry(16, {z(top), z(Q::b14), z(Q::b12), z(Q::b11), z(Q::b01), nz(Q::b00)},
            {1, 0, 0, 0, 0, 0}),
      entry(17, {z(top), z(Q::b14), z(Q::b12), z(Q::b11), z(Q::b01), z(Q::b00)},
            {0, 0, 0, 0, 0, 0}),
  };
}

}  // namespace

const std::vector<SubsetSpec>& subset_table(int n) {
  static const std::array<std::vector<SubsetSpec>, 5> tables{
      table_4(), table_5(), table_6(), table_78(Q::b), table_78(Q::b16)};
  if (n < kMinN || n > kMaxN) throw ArgumentError("subset_table: n out of range");
  return tables[n - kMinN];
}

const SubsetSpec& subset_spec(const SubsetId& id) {
  const auto& table = subset_table(id.n);
  if (id.index < 1 || id.index > static_cast<int>(table.size())) {
    throw ArgumentError("unknown subset " + id.label() + " for n=" + std::to_string(id.n));
  }
  return table[id.index - 1];
}

}  // namespace leibext
