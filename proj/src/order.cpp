#include "behrend/order.hpp"

#include <numeric>
#include <stdexcept>

namespace behrend {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<std::size_t> checked_permutation(std::size_t n, std::vector<std::size_t> perm) {
  if (perm.empty()) return identity(n);
  if (perm.size() != n) throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n, false);
  for (auto v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  return perm;
}

MonomialOrder::Row weight_row(std::size_t n, const std::vector<std::size_t>& vars) {
  MonomialOrder::Row r{MonomialOrder::Row::Kind::Weight, std::vector<int>(n, 0), {}};
  for (auto v : vars) r.weights[v] = 1;
  return r;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::size_t nvars, std::vector<Row> rows,
                             std::string description)
    : kind_(kind), nvars_(nvars), rows_(std::move(rows)), description_(std::move(description)) {
  for (const auto& r : rows_) {
    if (r.kind == Row::Kind::Weight && r.weights.size() != nvars_)
      throw std::invalid_argument("weight row length mismatch");
    for (auto v : r.vars)
      if (v >= nvars_) throw std::invalid_argument("order row refers to unknown variable");
  }
}

OrderPtr MonomialOrder::lex(std::size_t nvars, std::vector<std::size_t> permutation) {
  auto perm = checked_permutation(nvars, std::move(permutation));
  return std::make_shared<const MonomialOrder>(Kind::Lex, nvars,
                                               std::vector<Row>{{Row::Kind::Lex, {}, perm}}, "lex");
}

OrderPtr MonomialOrder::degrevlex(std::size_t nvars, std::vector<std::size_t> permutation) {
  auto perm = checked_permutation(nvars, std::move(permutation));
  std::vector<Row> rows{weight_row(nvars, perm), {Row::Kind::RevLex, {}, perm}};
  return std::make_shared<const MonomialOrder>(Kind::DegRevLex, nvars, std::move(rows), "degrevlex");
}

OrderPtr MonomialOrder::elimination(std::size_t nvars, std::vector<std::size_t> block) {
  std::vector<bool> in_block(nvars, false);
  for (auto v : block) {
    if (v >= nvars) throw std::invalid_argument("elimination block refers to unknown variable");
    in_block[v] = true;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < nvars; ++i)
    if (!in_block[i]) rest.push_back(i);
  std::vector<Row> rows;
  if (!block.empty()) {
    rows.push_back(weight_row(nvars, block));
    rows.push_back({Row::Kind::RevLex, {}, block});
  }
  if (!rest.empty()) {
    rows.push_back(weight_row(nvars, rest));
    rows.push_back({Row::Kind::RevLex, {}, rest});
  }
  return std::make_shared<const MonomialOrder>(Kind::Elimination, nvars, std::move(rows),
                                               "elimination(" + std::to_string(block.size()) + ")");
}

OrderPtr MonomialOrder::custom(std::size_t nvars, std::vector<Row> rows, std::string description) {
  return std::make_shared<const MonomialOrder>(Kind::Custom, nvars, std::move(rows),
                                               std::move(description));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : rows_) {
    switch (row.kind) {
      case Row::Kind::Weight: {
        long wa = 0, wb = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
          if (row.weights[i] == 0) continue;
          wa += static_cast<long>(row.weights[i]) * a[i];
          wb += static_cast<long>(row.weights[i]) * b[i];
        }
        if (wa != wb) return wa > wb ? 1 : -1;
        break;
      }
      case Row::Kind::Lex:
        for (auto v : row.vars)
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        break;
      case Row::Kind::RevLex:
        for (auto it = row.vars.rbegin(); it != row.vars.rend(); ++it)
          if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
        break;
    }
  }
  return 0;
}

std::vector<MonomialOrder::Row> MonomialOrder::rows_in(std::size_t nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("cannot shrink an order");
  auto out = rows_;
  for (auto& r : out)
    if (r.kind == Row::Kind::Weight) r.weights.resize(nvars, 0);
  return out;
}

bool MonomialOrder::operator==(const MonomialOrder& other) const {
  if (nvars_ != other.nvars_ || rows_.size() != other.rows_.size()) return false;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& a = rows_[i];
    const auto& b = other.rows_[i];
    if (a.kind != b.kind || a.weights != b.weights || a.vars != b.vars) return false;
  }
  return true;
}

bool same_order(const OrderPtr& a, const OrderPtr& b) { return a == b || *a == *b; }

OrderPtr order_from_name(const std::string& name, std::size_t nvars) {
  if (name == "lex") return MonomialOrder::lex(nvars);
  if (name == "degrevlex" || name == "grevlex" || name == "drl") return MonomialOrder::degrevlex(nvars);
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

}  // namespace behrend
