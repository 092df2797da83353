// Copyright 2026 The qca-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qca/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace qca {

namespace {
void require_same_dim(const Site& a, const Site& b, const char* what) {
  if (a.dim() != b.dim())
    throw std::invalid_argument(std::string(what) + ": lattice dimension mismatch");
}
}  // namespace

Site Site::operator+(const Site& o) const {
  require_same_dim(*this, o, "site addition");
  Site r = *this;
  for (std::size_t i = 0; i < x.size(); ++i) r.x[i] += o.x[i];
  return r;
}

Site Site::operator-(const Site& o) const {
  require_same_dim(*this, o, "site subtraction");
  Site r = *this;
  for (std::size_t i = 0; i < x.size(); ++i) r.x[i] -= o.x[i];
  return r;
}

Site Site::operator-() const {
  Site r = *this;
  for (auto& c : r.x) c = -c;
  return r;
}

std::string to_string(const Site& s) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    if (i) os << ",";
    os << s.x[i];
  }
  os << ")";
  return os.str();
}

Region::Region(std::vector<Site> sites) : sites_(std::move(sites)) {
  if (!sites_.empty()) {
    const int s = sites_[0].dim();
    for (const auto& site : sites_)
      if (site.dim() != s)
        throw std::invalid_argument("region: mixed lattice dimensions");
  }
  std::sort(sites_.begin(), sites_.end());
  sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
}

Region Region::of_1d(std::initializer_list<std::int64_t> offsets) {
  std::vector<Site> s;
  for (auto o : offsets) s.push_back(Site({o}));
  return Region(std::move(s));
}

bool Region::contains(const Site& s) const {
  return std::binary_search(sites_.begin(), sites_.end(), s);
}

int Region::index_of(const Site& s) const {
  auto it = std::lower_bound(sites_.begin(), sites_.end(), s);
  if (it == sites_.end() || !(*it == s)) return -1;
  return static_cast<int>(it - sites_.begin());
}

std::string to_string(const Region& r) {
  std::ostringstream os;
  os << "{";
  for (int i = 0; i < r.size(); ++i) {
    if (i) os << ", ";
    os << to_string(r.sites()[i]);
  }
  os << "}";
  return os.str();
}

Region region_arith(const Region& a, const Region& b, RegionOp op) {
  if (!a.empty() && !b.empty() && a.dim() != b.dim())
    throw std::invalid_argument("region_arith: lattice dimension mismatch");
  std::vector<Site> out;
  out.reserve(static_cast<std::size_t>(a.size()) * b.size());
  for (const Site& x : a.sites())
    for (const Site& y : b.sites())
      out.push_back(op == RegionOp::kSum ? x + y : x - y);
  return Region(std::move(out));
}

Region region_union(const Region& a, const Region& b) {
  std::vector<Site> out = a.sites();
  out.insert(out.end(), b.sites().begin(), b.sites().end());
  return Region(std::move(out));
}

Region region_negate(const Region& a) {
  std::vector<Site> out;
  for (const Site& s : a.sites()) out.push_back(-s);
  return Region(std::move(out));
}

Region region_translate(const Region& a, const Site& t) {
  std::vector<Site> out;
  for (const Site& s : a.sites()) out.push_back(s + t);
  return Region(std::move(out));
}

TorusSpec::TorusSpec(std::vector<std::int64_t> p) : periods(std::move(p)) {
  for (auto L : periods)
    if (L < 1) throw std::invalid_argument("torus periods must be >= 1");
}

std::int64_t TorusSpec::site_count() const {
  std::int64_t n = 1;
  for (auto L : periods) n *= L;
  return n;
}

std::vector<Site> TorusSpec::all_sites() const {
  std::vector<Site> out;
  out.reserve(site_count());
  std::vector<std::int64_t> c(periods.size(), 0);
  while (true) {
    out.push_back(Site(c));
    int k = static_cast<int>(periods.size()) - 1;
    for (; k >= 0; --k) {
      if (++c[k] < periods[k]) break;
      c[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

std::int64_t TorusSpec::index_of(const Site& s) const {
  if (s.dim() != dim()) throw std::invalid_argument("index_of: dimension mismatch");
  std::int64_t idx = 0;
  for (int i = 0; i < dim(); ++i) {
    if (s.x[i] < 0 || s.x[i] >= periods[i])
      throw std::invalid_argument("index_of: site not canonical");
    idx = idx * periods[i] + s.x[i];
  }
  return idx;
}

Site wrap(const Site& s, const TorusSpec& torus) {
  if (s.dim() != torus.dim())
    throw std::invalid_argument("wrap: dimension mismatch");
  Site r = s;
  for (int i = 0; i < s.dim(); ++i) {
    std::int64_t m = r.x[i] % torus.periods[i];
    if (m < 0) m += torus.periods[i];
    r.x[i] = m;
  }
  return r;
}

Region wrap(const Region& r, const TorusSpec& torus) {
  std::vector<Site> out;
  for (const Site& s : r.sites()) out.push_back(wrap(s, torus));
  return Region(std::move(out));
}

bool is_regular(const NeighborhoodScheme& n, const TorusSpec& torus) {
  if (n.region.dim() != torus.dim())
    throw std::invalid_argument("is_regular: dimension mismatch");
  Region nn = region_arith(n.region, n.region, RegionOp::kSum);
  Region probe = region_arith(nn, n.region, RegionOp::kDifference);
  probe = region_arith(probe, n.region, RegionOp::kDifference);
  for (const Site& s : probe.sites()) {
    bool in_gamma = true;
    bool zero = true;
    for (int i = 0; i < s.dim(); ++i) {
      if (s.x[i] % torus.periods[i] != 0) in_gamma = false;
      if (s.x[i] != 0) zero = false;
    }
    if (in_gamma && !zero) return false;
  }
  return true;
}

TorusSpec smallest_regular_torus(const NeighborhoodScheme& n, int s,
                                 std::int64_t min_period, bool require_even) {
  for (std::int64_t L = std::max<std::int64_t>(1, min_period); L < 1000; ++L) {
    if (require_even && L % 2 != 0) continue;
    TorusSpec t(std::vector<std::int64_t>(s, L));
    if (is_regular(n, t)) return t;
  }
  throw std::runtime_error("no regular torus below period 1000");
}

}  // namespace qca
