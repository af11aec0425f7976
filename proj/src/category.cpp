#include "fihom/category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fihom {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw ContractViolation("group: empty Cayley table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw ContractViolation("group: Cayley table is not square");
    for (int x : row)
      if (x < 0 || x >= n) throw ContractViolation("group: table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool unit = true;
    for (int a = 0; a < n && unit; ++a) unit = table_[e][a] == a && table_[a][e] == a;
    if (unit) identity_ = e;
  }
  if (identity_ < 0) throw ContractViolation("group: no two-sided identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ContractViolation("group: operation is not associative");
  inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[b][a] == identity_ && table_[a][b] == identity_) inverses_[a] = b;
  if (std::find(inverses_.begin(), inverses_.end(), -1) != inverses_.end())
    throw ContractViolation("group: element without inverse");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int order) {
  if (order < 1) throw ContractViolation("group: order must be positive");
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) t[a][b] = (a + b) % order;
  return FiniteGroup(std::move(t));
}

FiGMorphism FiGMorphism::identity(int n) { return translation(n, 0); }

FiGMorphism FiGMorphism::standard_inclusion(int n) {
  FiGMorphism f = identity(n);
  f.target = n + 1;
  return f;
}

FiGMorphism FiGMorphism::translation(int n, int a) {
  FiGMorphism f;
  f.source = n;
  f.target = n + a;
  f.injection.resize(n);
  std::iota(f.injection.begin(), f.injection.end(), 1 + a);
  f.colors.assign(n, 0);
  return f;
}

std::string FiGMorphism::to_string() const {
  std::ostringstream os;
  os << source << "->" << target << " [";
  for (int i = 0; i < source; ++i) os << (i ? " " : "") << i + 1 << ":" << injection[i] << "/" << colors[i];
  os << "]";
  return os.str();
}

void check_morphism(const FiGMorphism& alpha, const FiniteGroup& group) {
  if (alpha.source < 0 || alpha.target < alpha.source) throw ContractViolation("morphism: bad degrees");
  if (static_cast<int>(alpha.injection.size()) != alpha.source ||
      static_cast<int>(alpha.colors.size()) != alpha.source)
    throw ContractViolation("morphism: data length does not match source degree");
  std::vector<bool> seen(alpha.target + 1, false);
  for (int v : alpha.injection) {
    if (v < 1 || v > alpha.target) throw ContractViolation("morphism: image out of range");
    if (seen[v]) throw ContractViolation("morphism: injection is not injective");
    seen[v] = true;
  }
  for (int c : alpha.colors)
    if (c < 0 || c >= group.order()) throw ContractViolation("morphism: color out of range");
}

FiGMorphism compose(const FiniteGroup& group, const FiGMorphism& beta, const FiGMorphism& alpha) {
  if (alpha.target != beta.source)
    throw ContractViolation("compose: target of alpha differs from source of beta");
  FiGMorphism r;
  r.source = alpha.source;
  r.target = beta.target;
  r.injection.resize(alpha.source);
  r.colors.resize(alpha.source);
  for (int i = 0; i < alpha.source; ++i) {
    const int mid = alpha.injection[i] - 1;
    r.injection[i] = beta.injection[mid];
    r.colors[i] = group.mul(beta.colors[mid], alpha.colors[i]);
  }
  return r;
}

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Number of injections [k] -> [n - (m - k)]-remaining: (n-i-1)!/(n-m)!.
std::int64_t falling(int top, int count) {
  std::int64_t r = 1;
  for (int j = 0; j < count; ++j) r *= top - j;
  return r;
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t hom_set_size(int m, int n, int group_order) {
  if (m > n || m < 0) return 0;
  return falling(n, m) * ipow(group_order, m);
}

std::int64_t hom_rank(const FiGMorphism& alpha, int group_order) {
  const int m = alpha.source, n = alpha.target;
  std::vector<bool> used(n + 1, false);
  std::int64_t inj = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int v = 1; v < alpha.injection[i]; ++v)
      if (!used[v]) ++smaller;
    used[alpha.injection[i]] = true;
    inj += smaller * falling(n - i - 1, m - i - 1);
  }
  std::int64_t col = 0;
  for (int i = 0; i < m; ++i) col = col * group_order + alpha.colors[i];
  return inj * ipow(group_order, m) + col;
}

FiGMorphism hom_unrank(std::int64_t rank, int m, int n, int group_order) {
  FiGMorphism f;
  f.source = m;
  f.target = n;
  f.injection.resize(m);
  f.colors.resize(m);
  const std::int64_t ncol = ipow(group_order, m);
  std::int64_t col = rank % ncol;
  std::int64_t inj = rank / ncol;
  for (int i = m - 1; i >= 0; --i) {
    f.colors[i] = static_cast<int>(col % group_order);
    col /= group_order;
  }
  std::vector<bool> used(n + 1, false);
  for (int i = 0; i < m; ++i) {
    const std::int64_t block = falling(n - i - 1, m - i - 1);
    std::int64_t idx = inj / block;
    inj %= block;
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (idx-- == 0) {
        f.injection[i] = v;
        used[v] = true;
        break;
      }
    }
  }
  return f;
}

std::vector<FiGMorphism> hom_set(int m, int n, const FiniteGroup& group) {
  std::vector<FiGMorphism> out;
  const std::int64_t size = hom_set_size(m, n, group.order());
  out.reserve(static_cast<std::size_t>(size));
  for (std::int64_t r = 0; r < size; ++r) out.push_back(hom_unrank(r, m, n, group.order()));
  return out;
}

FiGMorphism canonical_factor(const FiniteGroup& group, const FiGMorphism& alpha) {
  check_morphism(alpha, group);
  const int n = alpha.target;
  FiGMorphism tau;
  tau.source = tau.target = n;
  tau.injection = alpha.injection;
  tau.colors = alpha.colors;
  std::vector<bool> hit(n + 1, false);
  for (int v : alpha.injection) hit[v] = true;
  for (int v = 1; v <= n; ++v) {
    if (hit[v]) continue;
    tau.injection.push_back(v);
    tau.colors.push_back(group.identity());
  }
  return tau;
}

int generator_count(int n, int group_order) { return n == 0 ? 0 : n - 1 + group_order; }

FiGMorphism generator_morphism(int n, int index, int group_order) {
  if (index < 0 || index >= generator_count(n, group_order))
    throw ContractViolation("generator index out of range");
  FiGMorphism f = FiGMorphism::identity(n);
  if (index < n - 1)
    std::swap(f.injection[index], f.injection[index + 1]);
  else
    f.colors[0] = index - (n - 1);
  return f;
}

Word color_word(int n, int j, int g) {
  Word w;
  for (int i = j - 1; i >= 1; --i) w.push_back(i - 1);
  w.push_back(n - 1 + g);
  for (int i = 1; i <= j - 1; ++i) w.push_back(i - 1);
  return w;
}

Word wreath_word(const FiniteGroup& group, const FiGMorphism& tau) {
  if (tau.source != tau.target) throw ContractViolation("wreath_word: morphism is not invertible");
  const int n = tau.source;
  Word w;
  for (int j = 1; j <= n; ++j)
    if (tau.colors[j - 1] != group.identity()) {
      Word c = color_word(n, j, tau.colors[j - 1]);
      w.insert(w.end(), c.begin(), c.end());
    }
  std::vector<int> arr = tau.injection;
  for (int pass = 0; pass < n; ++pass)
    for (int k = 0; k + 1 < n - pass; ++k)
      if (arr[k] > arr[k + 1]) {
        std::swap(arr[k], arr[k + 1]);
        w.push_back(k);
      }
  return w;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::int64_t subset_rank(const std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  std::int64_t r = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < subset[i]; ++v) r += binomial(n - v, k - i - 1);
    prev = subset[i];
  }
  return r;
}

}  // namespace fihom
