#include "hk/affine.hpp"

#include <stdexcept>

#include "hk/presentation.hpp"
#include "json.hpp"

namespace hk {

AffineMap AffineMap::identity(std::size_t dim) {
  AffineMap f;
  f.dim_ = dim;
  f.mat_.assign(dim * dim, 0);
  f.off_.assign(dim, 0);
  for (std::size_t i = 0; i < dim; ++i)
    f.mat_[i * dim + i] = 1;
  return f;
}

AffineMap AffineMap::compose(const AffineMap& g) const {
  if (dim_ != g.dim_)
    throw std::invalid_argument("AffineMap::compose: dimension mismatch");
  AffineMap out;
  out.dim_ = dim_;
  out.mat_.assign(dim_ * dim_, 0);
  out.off_.assign(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < dim_; ++j)
        out.mat_[i * dim_ + j] += a * g.at(k, j);
      out.off_[i] += a * g.off_[k];
    }
    out.off_[i] += off_[i];
  }
  return out;
}

std::vector<BigInt> AffineMap::apply(const std::vector<BigInt>& m) const {
  if (m.size() != dim_)
    throw std::invalid_argument("AffineMap::apply: dimension mismatch");
  std::vector<BigInt> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j)
      out[i] += at(i, j) * m[j];
    out[i] += off_[i];
  }
  return out;
}

AffineMap word_to_map(const std::vector<AffineMap>& maps, const Word& w) {
  if (maps.empty())
    throw std::invalid_argument("word_to_map: no maps");
  AffineMap acc = AffineMap::identity(maps[0].dim());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto g = static_cast<std::size_t>(static_cast<unsigned char>(*it));
    if (g >= maps.size())
      throw std::invalid_argument("word_to_map: letter out of range");
    acc = maps[g].compose(acc);
  }
  return acc;
}

std::vector<AffineMap> cycle_rep(std::size_t n) {
  if (n < 3)
    throw std::invalid_argument("cycle_rep: n must be >= 3");
  std::vector<AffineMap> maps;
  maps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    AffineMap f = AffineMap::identity(n);
    for (std::size_t j = 0; j < n; ++j)
      f.at(i, j) = 0;
    if (i + 1 < n) {
      f.at(i, i + 1) = 1;  // coordinate i copies coordinate i+1
    } else {
      f.at(i, 0) = 1;      // last coordinate becomes m_1 + 1
      f.offset(i) = 1;
    }
    maps.push_back(std::move(f));
  }
  return maps;
}

Digraph oriented_cycle(std::size_t n) {
  if (n < 3)
    throw std::invalid_argument("oriented_cycle: n must be >= 3");
  Digraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    g.add_arrow(static_cast<VertexId>(i),
                static_cast<VertexId>((i + 1) % n));
  return g;
}

RelationCheck check_relations(const std::vector<AffineMap>& maps,
                              const Digraph& q) {
  RelationCheck out;
  if (maps.size() != q.size())
    throw std::invalid_argument("check_relations: one map per vertex needed");
  for (const AffineMap& f : maps)
    if (f.dim() != maps[0].dim())
      throw std::invalid_argument("check_relations: dimension mismatch");
  Presentation p = build_presentation(q);
  for (const Rule& r : p.rules) {
    ++out.relations_checked;
    if (!(word_to_map(maps, r.lhs) == word_to_map(maps, r.rhs))) {
      out.ok = false;
      out.failing_relation = word_to_string(r.lhs, p.labels) + " = " +
                             word_to_string(r.rhs, p.labels);
      return out;
    }
  }
  return out;
}

bool distinct_powers(const AffineMap& f, std::size_t k) {
  if (k < 2)
    throw std::invalid_argument("distinct_powers: k must be >= 2");
  std::vector<AffineMap> powers;
  powers.reserve(k);
  AffineMap cur = f;
  for (std::size_t i = 1; i <= k; ++i) {
    for (const AffineMap& seen : powers)
      if (seen == cur)
        return false;
    powers.push_back(cur);
    if (i < k)
      cur = cur.compose(f);
  }
  return true;
}

std::string cycle_witness_certificate(std::size_t n, std::size_t power_k) {
  auto maps = cycle_rep(n);
  Digraph q = oriented_cycle(n);
  Presentation p = build_presentation(q);

  nlohmann::json j;
  j["cycle_length"] = n;
  nlohmann::json jmaps = nlohmann::json::array();
  for (std::size_t g = 0; g < n; ++g) {
    nlohmann::json jm;
    jm["generator"] = q.label(static_cast<VertexId>(g));
    nlohmann::json rows = nlohmann::json::array();
    nlohmann::json off = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t jx = 0; jx < n; ++jx)
        row.push_back(maps[g].at(i, jx).str());
      rows.push_back(row);
      off.push_back(maps[g].offset(i).str());
    }
    jm["matrix"] = rows;
    jm["offset"] = off;
    jmaps.push_back(jm);
  }
  j["maps"] = jmaps;

  nlohmann::json checks = nlohmann::json::array();
  for (const Rule& r : p.rules) {
    nlohmann::json c;
    c["relation"] = word_to_string(r.lhs, p.labels) + " = " +
                    word_to_string(r.rhs, p.labels);
    c["holds"] = word_to_map(maps, r.lhs) == word_to_map(maps, r.rhs);
    checks.push_back(c);
  }
  j["relations"] = checks;

  // Idempotency of each generator, stated separately for visibility even
  // though it is also among the defining relations.
  nlohmann::json idem = nlohmann::json::array();
  for (std::size_t g = 0; g < n; ++g)
    idem.push_back(maps[g].compose(maps[g]) == maps[g]);
  j["generators_idempotent"] = idem;

  // Product u_1 ... u_n and the orbit of the origin under its powers.
  Word full;
  for (std::size_t g = 0; g < n; ++g)
    full.push_back(static_cast<Letter>(g));
  AffineMap prod = word_to_map(maps, full);
  j["powers_checked"] = power_k;
  j["powers_distinct"] = distinct_powers(prod, power_k);
  nlohmann::json orbit = nlohmann::json::array();
  std::vector<BigInt> v(n, 0);
  for (std::size_t i = 0; i < std::min<std::size_t>(power_k, 10); ++i) {
    v = prod.apply(v);
    nlohmann::json pt = nlohmann::json::array();
    for (const BigInt& x : v)
      pt.push_back(x.str());
    orbit.push_back(pt);
  }
  j["orbit_of_origin"] = orbit;
  return j.dump(2);
}

}  // namespace hk
