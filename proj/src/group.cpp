#include "singer/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <sstream>

#include "singer/errors.hpp"
#include "singer/finite_field.hpp"
#include "singer/hash.hpp"

namespace singer {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) throw RangeError("group order overflows 64 bits");
  return a * b;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("expected an unsigned integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw DomainError("expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::map<std::string, std::uint64_t> parse_keyed(std::string_view body) {
  std::map<std::string, std::uint64_t> kv;
  for (auto item : split(body, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw DomainError("expected key=value, got '" + std::string(item) + "'");
    kv[std::string(item.substr(0, eq))] = parse_uint(item.substr(eq + 1));
  }
  return kv;
}

std::uint64_t factorial(unsigned k) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f = checked_mul(f, i);
  return f;
}

// Lexicographic rank / unrank of permutations of {0..k-1}.
std::uint64_t perm_rank(std::span<const std::int64_t> perm) {
  const auto k = perm.size();
  std::uint64_t rank = 0;
  std::vector<bool> used(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t smaller = 0;
    for (std::int64_t v = 0; v < perm[i]; ++v) smaller += used[v] ? 0 : 1;
    used[perm[i]] = true;
    rank += smaller * factorial(static_cast<unsigned>(k - 1 - i));
  }
  return rank;
}

void perm_unrank(std::uint64_t rank, std::size_t k, CanonicalForm& out) {
  std::vector<std::int64_t> pool(k);
  for (std::size_t i = 0; i < k; ++i) pool[i] = static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i < k; ++i) {
    auto f = factorial(static_cast<unsigned>(k - 1 - i));
    auto pick = rank / f;
    rank %= f;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
}

// Free-group letters: rank 2(k-1) is generator k, rank 2(k-1)+1 its inverse.
int letter_rank(std::int64_t letter) {
  return letter > 0 ? static_cast<int>(2 * (letter - 1)) : static_cast<int>(2 * (-letter - 1) + 1);
}
std::int64_t rank_letter(int rank) {
  return rank % 2 == 0 ? rank / 2 + 1 : -(rank / 2 + 1);
}
int min_letter_after(int prev_rank) { return (prev_rank ^ 1) == 0 ? 1 : 0; }

bool next_reduced_word(CanonicalForm& word, unsigned rank) {
  const int alphabet = static_cast<int>(2 * rank);
  for (std::size_t pos = word.size(); pos-- > 0;) {
    int current = letter_rank(word[pos]);
    for (int v = current + 1; v < alphabet; ++v) {
      if (pos > 0 && v == (letter_rank(word[pos - 1]) ^ 1)) continue;
      word[pos] = rank_letter(v);
      for (std::size_t t = pos + 1; t < word.size(); ++t) {
        word[t] = rank_letter(min_letter_after(letter_rank(word[t - 1])));
      }
      return true;
    }
  }
  const std::size_t len = word.size() + 1;
  word.clear();
  word.push_back(rank_letter(0));
  while (word.size() < len) word.push_back(rank_letter(min_letter_after(letter_rank(word.back()))));
  return true;
}

}  // namespace

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.group_id_ <=> b.group_id_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.form_.begin(), a.form_.end(), b.form_.begin(), b.form_.end());
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::uint64_t h = g.group_id() ^ 0x9e3779b97f4a7c15ULL;
  for (auto v : g.form()) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

GroupHandle::GroupHandle(GroupKind kind, std::vector<std::uint64_t> params)
    : kind_(kind), params_(std::move(params)) {
  switch (kind_) {
    case GroupKind::cyclic:
      if (params_.at(0) == 0) throw DomainError("cyclic group order must be positive");
      order_ = params_[0];
      break;
    case GroupKind::abelian: {
      if (params_.empty()) throw DomainError("abelian group needs at least one invariant factor");
      std::uint64_t o = 1;
      for (auto d : params_) {
        if (d == 0) throw DomainError("invariant factors must be positive");
        o = checked_mul(o, d);
      }
      order_ = o;
      break;
    }
    case GroupKind::integers:
      break;
    case GroupKind::free:
      if (params_.at(0) == 0 || params_[0] > 26) throw DomainError("free group rank must be in 1..26");
      break;
    case GroupKind::field_quotient: {
      auto p = params_.at(0), n = params_.at(1), m = params_.at(2);
      if (!is_prime(p)) throw DomainError("field-quotient characteristic must be prime");
      if (n == 0 || m == 0) throw DomainError("field-quotient degrees must be positive");
      std::uint64_t q = 1;
      for (std::uint64_t i = 0; i < n; ++i) q = checked_mul(q, p);
      std::uint64_t qm = 1;
      for (std::uint64_t i = 0; i < m; ++i) qm = checked_mul(qm, q);
      order_ = (qm - 1) / (q - 1);
      break;
    }
    case GroupKind::symmetric:
      if (params_.at(0) == 0 || params_[0] > 20) throw DomainError("symmetric degree must be in 1..20");
      order_ = factorial(static_cast<unsigned>(params_[0]));
      break;
    case GroupKind::monomial: {
      auto n = params_.at(0), m = params_.at(1);
      if (n == 0) throw DomainError("monomial twist order must be positive");
      if (m + 1 > 20) throw DomainError("monomial group supports at most 20 fibers");
      std::uint64_t o = factorial(static_cast<unsigned>(m + 1));
      for (std::uint64_t i = 0; i <= m; ++i) o = checked_mul(o, n);
      order_ = o;
      break;
    }
  }
  id_ = fnv1a(spec());
}

GroupHandle GroupHandle::cyclic(std::uint64_t order) { return GroupHandle(GroupKind::cyclic, {order}); }
GroupHandle GroupHandle::abelian(std::vector<std::uint64_t> f) { return GroupHandle(GroupKind::abelian, std::move(f)); }
GroupHandle GroupHandle::integers() { return GroupHandle(GroupKind::integers, {}); }
GroupHandle GroupHandle::free(unsigned rank) { return GroupHandle(GroupKind::free, {rank}); }
GroupHandle GroupHandle::field_quotient(std::uint64_t p, unsigned n, unsigned m) {
  return GroupHandle(GroupKind::field_quotient, {p, n, m});
}
GroupHandle GroupHandle::symmetric(unsigned degree) { return GroupHandle(GroupKind::symmetric, {degree}); }
GroupHandle GroupHandle::monomial(unsigned n, unsigned m) { return GroupHandle(GroupKind::monomial, {n, m}); }

GroupHandle GroupHandle::parse(std::string_view spec) {
  auto colon = spec.find(':');
  auto kind = spec.substr(0, colon);
  auto body = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "integers") {
    if (!body.empty()) throw DomainError("'integers' takes no parameters");
    return integers();
  }
  if (body.empty()) throw DomainError("group spec '" + std::string(spec) + "' is missing parameters");
  if (kind == "cyclic") return cyclic(parse_uint(body));
  if (kind == "free") return free(static_cast<unsigned>(parse_uint(body)));
  if (kind == "symmetric") return symmetric(static_cast<unsigned>(parse_uint(body)));
  if (kind == "abelian") {
    std::vector<std::uint64_t> f;
    for (auto item : split(body, ',')) f.push_back(parse_uint(item));
    return abelian(std::move(f));
  }
  if (kind == "fieldquot") {
    auto kv = parse_keyed(body);
    if (!kv.contains("p") || !kv.contains("n") || !kv.contains("m") || kv.size() != 3) {
      throw DomainError("fieldquot needs exactly p=, n=, m=");
    }
    return field_quotient(kv["p"], static_cast<unsigned>(kv["n"]), static_cast<unsigned>(kv["m"]));
  }
  if (kind == "monomial") {
    auto kv = parse_keyed(body);
    if (!kv.contains("n") || !kv.contains("m") || kv.size() != 2) throw DomainError("monomial needs exactly n=, m=");
    return monomial(static_cast<unsigned>(kv["n"]), static_cast<unsigned>(kv["m"]));
  }
  throw DomainError("unknown group kind '" + std::string(kind) + "'");
}

std::string GroupHandle::spec() const {
  std::ostringstream out;
  switch (kind_) {
    case GroupKind::cyclic: out << "cyclic:" << params_[0]; break;
    case GroupKind::abelian:
      out << "abelian:";
      for (std::size_t i = 0; i < params_.size(); ++i) out << (i ? "," : "") << params_[i];
      break;
    case GroupKind::integers: out << "integers"; break;
    case GroupKind::free: out << "free:" << params_[0]; break;
    case GroupKind::field_quotient:
      out << "fieldquot:p=" << params_[0] << ",n=" << params_[1] << ",m=" << params_[2];
      break;
    case GroupKind::symmetric: out << "symmetric:" << params_[0]; break;
    case GroupKind::monomial: out << "monomial:n=" << params_[0] << ",m=" << params_[1]; break;
  }
  return out.str();
}

bool GroupHandle::is_abelian() const noexcept {
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::abelian:
    case GroupKind::integers:
    case GroupKind::field_quotient: return true;
    case GroupKind::free: return params_[0] == 1;
    case GroupKind::symmetric: return params_[0] <= 2;
    case GroupKind::monomial: return params_[1] == 0;
  }
  return false;
}

GroupElement GroupHandle::make(CanonicalForm form) const {
  GroupElement g(id_, std::move(form));
  if (!contains(g)) throw DomainError("not a canonical element of " + spec());
  return g;
}

GroupElement GroupHandle::letter(unsigned generator, bool inverted) const {
  if (kind_ != GroupKind::free || generator == 0 || generator > params_[0]) {
    throw DomainError("letter() needs a free group and a generator index in range");
  }
  auto l = static_cast<std::int64_t>(generator);
  return GroupElement(id_, CanonicalForm{inverted ? -l : l});
}

void GroupHandle::check_same(const GroupElement& a) const {
  if (a.group_id() != id_) throw DomainError("element does not belong to group " + spec());
}

bool GroupHandle::contains(const GroupElement& a) const {
  if (a.group_id() != id_) return false;
  const auto& f = a.form();
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::field_quotient:
      return f.size() == 1 && f[0] >= 0 && static_cast<std::uint64_t>(f[0]) < *order_;
    case GroupKind::abelian:
      if (f.size() != params_.size()) return false;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || static_cast<std::uint64_t>(f[i]) >= params_[i]) return false;
      }
      return true;
    case GroupKind::integers: return f.size() == 1;
    case GroupKind::free:
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0 || static_cast<std::uint64_t>(f[i] < 0 ? -f[i] : f[i]) > params_[0]) return false;
        if (i > 0 && f[i] == -f[i - 1]) return false;
      }
      return true;
    case GroupKind::symmetric:
    case GroupKind::monomial: {
      const auto k = kind_ == GroupKind::symmetric ? params_[0] : params_[1] + 1;
      const auto expected = kind_ == GroupKind::symmetric ? k : 2 * k;
      if (f.size() != expected) return false;
      std::vector<bool> seen(k, false);
      for (std::size_t i = 0; i < k; ++i) {
        if (f[i] < 0 || static_cast<std::uint64_t>(f[i]) >= k || seen[f[i]]) return false;
        seen[f[i]] = true;
      }
      for (std::size_t i = k; i < f.size(); ++i) {
        if (f[i] < 0 || static_cast<std::uint64_t>(f[i]) >= params_[0]) return false;
      }
      return true;
    }
  }
  return false;
}

GroupElement GroupHandle::identity() const {
  CanonicalForm f;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::field_quotient:
    case GroupKind::integers: f.push_back(0); break;
    case GroupKind::abelian: f.assign(params_.size(), 0); break;
    case GroupKind::free: break;
    case GroupKind::symmetric:
      for (std::uint64_t i = 0; i < params_[0]; ++i) f.push_back(static_cast<std::int64_t>(i));
      break;
    case GroupKind::monomial:
      for (std::uint64_t i = 0; i <= params_[1]; ++i) f.push_back(static_cast<std::int64_t>(i));
      for (std::uint64_t i = 0; i <= params_[1]; ++i) f.push_back(0);
      break;
  }
  return GroupElement(id_, std::move(f));
}

GroupElement GroupHandle::mul(const GroupElement& a, const GroupElement& b) const {
  check_same(a);
  check_same(b);
  const auto& x = a.form();
  const auto& y = b.form();
  CanonicalForm r;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::field_quotient:
      r.push_back(mod(x[0] + y[0], static_cast<std::int64_t>(*order_)));
      break;
    case GroupKind::abelian:
      for (std::size_t i = 0; i < x.size(); ++i) r.push_back(mod(x[i] + y[i], static_cast<std::int64_t>(params_[i])));
      break;
    case GroupKind::integers: r.push_back(x[0] + y[0]); break;
    case GroupKind::free:
      r = x;
      for (auto l : y) {
        if (!r.empty() && r.back() == -l) {
          r.pop_back();
        } else {
          r.push_back(l);
        }
      }
      break;
    case GroupKind::symmetric:
      // a first, then b
      for (auto v : x) r.push_back(y[v]);
      break;
    case GroupKind::monomial: {
      const auto k = params_[1] + 1;
      const auto n = static_cast<std::int64_t>(params_[0]);
      for (std::size_t i = 0; i < k; ++i) r.push_back(y[x[i]]);
      for (std::size_t i = 0; i < k; ++i) r.push_back(mod(x[k + i] + y[k + x[i]], n));
      break;
    }
  }
  return GroupElement(id_, std::move(r));
}

GroupElement GroupHandle::inverse(const GroupElement& a) const {
  check_same(a);
  const auto& x = a.form();
  CanonicalForm r;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::field_quotient:
      r.push_back(mod(-x[0], static_cast<std::int64_t>(*order_)));
      break;
    case GroupKind::abelian:
      for (std::size_t i = 0; i < x.size(); ++i) r.push_back(mod(-x[i], static_cast<std::int64_t>(params_[i])));
      break;
    case GroupKind::integers: r.push_back(-x[0]); break;
    case GroupKind::free:
      for (auto it = x.rbegin(); it != x.rend(); ++it) r.push_back(-*it);
      break;
    case GroupKind::symmetric:
      r.assign(x.size(), 0);
      for (std::size_t i = 0; i < x.size(); ++i) r[x[i]] = static_cast<std::int64_t>(i);
      break;
    case GroupKind::monomial: {
      const auto k = params_[1] + 1;
      const auto n = static_cast<std::int64_t>(params_[0]);
      r.assign(2 * k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        r[x[i]] = static_cast<std::int64_t>(i);
        r[k + x[i]] = mod(-x[k + i], n);
      }
      break;
    }
  }
  return GroupElement(id_, std::move(r));
}

GroupElement GroupHandle::power(const GroupElement& a, std::int64_t k) const {
  GroupElement base = k < 0 ? inverse(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  GroupElement result = identity();
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GroupElement GroupHandle::element_at(std::uint64_t index) const {
  if (order_ && index >= *order_) throw RangeError("index exceeds the order of " + spec());
  CanonicalForm f;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::field_quotient: f.push_back(static_cast<std::int64_t>(index)); break;
    case GroupKind::abelian: {
      f.assign(params_.size(), 0);
      for (std::size_t i = params_.size(); i-- > 0;) {
        f[i] = static_cast<std::int64_t>(index % params_[i]);
        index /= params_[i];
      }
      break;
    }
    case GroupKind::integers: {
      auto half = static_cast<std::int64_t>((index + 1) / 2);
      f.push_back(index == 0 ? 0 : (index % 2 == 1 ? half : -half));
      break;
    }
    case GroupKind::free:
      throw UnsupportedError("free groups are enumerated sequentially; use Enumerator");
    case GroupKind::symmetric: perm_unrank(index, params_[0], f); break;
    case GroupKind::monomial: {
      const auto k = params_[1] + 1;
      const auto n = params_[0];
      std::uint64_t twist_count = 1;
      for (std::size_t i = 0; i < k; ++i) twist_count *= n;
      perm_unrank(index / twist_count, k, f);
      auto t = index % twist_count;
      CanonicalForm twists(k, 0);
      for (std::size_t i = k; i-- > 0;) {
        twists[i] = static_cast<std::int64_t>(t % n);
        t /= n;
      }
      f.insert(f.end(), twists.begin(), twists.end());
      break;
    }
  }
  return GroupElement(id_, std::move(f));
}

std::uint64_t GroupHandle::index_of(const GroupElement& a) const {
  check_same(a);
  const auto& f = a.form();
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::field_quotient: return static_cast<std::uint64_t>(f[0]);
    case GroupKind::abelian: {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < f.size(); ++i) idx = idx * params_[i] + static_cast<std::uint64_t>(f[i]);
      return idx;
    }
    case GroupKind::integers:
      return f[0] == 0 ? 0 : (f[0] > 0 ? 2 * static_cast<std::uint64_t>(f[0]) - 1 : 2 * static_cast<std::uint64_t>(-f[0]));
    case GroupKind::free: throw UnsupportedError("index_of is not available for free groups");
    case GroupKind::symmetric: return perm_rank(std::span<const std::int64_t>(f.data(), f.size()));
    case GroupKind::monomial: {
      const auto k = params_[1] + 1;
      std::uint64_t t = 0;
      for (std::size_t i = 0; i < k; ++i) t = t * params_[0] + static_cast<std::uint64_t>(f[k + i]);
      std::uint64_t twist_count = 1;
      for (std::size_t i = 0; i < k; ++i) twist_count *= params_[0];
      return perm_rank(std::span<const std::int64_t>(f.data(), k)) * twist_count + t;
    }
  }
  return 0;
}

std::vector<GroupElement> GroupHandle::enumerate(std::size_t count) const {
  if (order_ && count > *order_) {
    throw RangeError("cannot enumerate " + std::to_string(count) + " elements of " + spec() + " (order " +
                     std::to_string(*order_) + ")");
  }
  std::vector<GroupElement> out;
  out.reserve(count);
  Enumerator e(*this);
  while (out.size() < count) out.push_back(*e.next());
  return out;
}

std::string GroupHandle::format(const GroupElement& a) const {
  check_same(a);
  const auto& f = a.form();
  std::ostringstream out;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::integers: out << f[0]; break;
    case GroupKind::field_quotient: out << "g^" << f[0]; break;
    case GroupKind::abelian:
      out << '(';
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
      out << ')';
      break;
    case GroupKind::free:
      if (f.empty()) return "e";
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << '*';
        out << static_cast<char>('a' + (f[i] > 0 ? f[i] : -f[i]) - 1);
        if (f[i] < 0) out << "^-1";
      }
      break;
    case GroupKind::symmetric: {
      std::vector<bool> seen(f.size(), false);
      bool any = false;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (seen[i] || f[i] == static_cast<std::int64_t>(i)) continue;
        any = true;
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
          seen[j] = true;
          out << (first ? "" : ",") << j + 1;
          first = false;
          j = static_cast<std::size_t>(f[j]);
        }
        out << ')';
      }
      if (!any) out << "()";
      break;
    }
    case GroupKind::monomial: {
      const auto k = params_[1] + 1;
      out << '[';
      for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << f[i];
      out << '|';
      for (std::size_t i = 0; i < k; ++i) out << (i ? "," : "") << f[k + i];
      out << ']';
      break;
    }
  }
  return out.str();
}

GroupElement GroupHandle::parse_element(std::string_view text) const {
  CanonicalForm f;
  switch (kind_) {
    case GroupKind::cyclic:
    case GroupKind::integers: f.push_back(parse_int(text)); break;
    case GroupKind::field_quotient:
      if (!text.starts_with("g^")) throw DomainError("field-quotient elements look like g^i");
      f.push_back(parse_int(text.substr(2)));
      break;
    case GroupKind::abelian: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw DomainError("expected (a,b,...)");
      for (auto item : split(text.substr(1, text.size() - 2), ',')) f.push_back(parse_int(item));
      break;
    }
    case GroupKind::free: {
      if (text == "e") break;
      for (auto token : split(text, '*')) {
        bool inv = token.ends_with("^-1");
        if (inv) token.remove_suffix(3);
        if (token.size() != 1 || token[0] < 'a' || token[0] > 'z') {
          throw DomainError("bad free-group letter '" + std::string(token) + "'");
        }
        std::int64_t l = token[0] - 'a' + 1;
        f.push_back(inv ? -l : l);
      }
      break;
    }
    case GroupKind::symmetric: {
      const auto k = params_[0];
      for (std::uint64_t i = 0; i < k; ++i) f.push_back(static_cast<std::int64_t>(i));
      if (text == "()") break;
      std::vector<bool> moved(k, false);
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (text[pos] != '(') throw DomainError("expected cycle notation, got '" + std::string(text) + "'");
        auto close = text.find(')', pos);
        if (close == std::string_view::npos) throw DomainError("unterminated cycle");
        std::vector<std::int64_t> cycle;
        for (auto item : split(text.substr(pos + 1, close - pos - 1), ',')) {
          auto v = parse_int(item) - 1;
          if (v < 0 || static_cast<std::uint64_t>(v) >= k || moved[v]) throw DomainError("bad or repeated cycle point");
          moved[v] = true;
          cycle.push_back(v);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) f[cycle[i]] = cycle[(i + 1) % cycle.size()];
        pos = close + 1;
      }
      break;
    }
    case GroupKind::monomial: {
      if (text.size() < 3 || text.front() != '[' || text.back() != ']') throw DomainError("expected [perm|twists]");
      auto body = text.substr(1, text.size() - 2);
      auto bar = body.find('|');
      if (bar == std::string_view::npos) throw DomainError("expected [perm|twists]");
      for (auto item : split(body.substr(0, bar), ',')) f.push_back(parse_int(item));
      for (auto item : split(body.substr(bar + 1), ',')) f.push_back(parse_int(item));
      break;
    }
  }
  return make(std::move(f));
}

Enumerator::Enumerator(const GroupHandle& group) : group_(&group) {}

std::optional<GroupElement> Enumerator::next() {
  if (group_->order() && position_ >= *group_->order()) return std::nullopt;
  if (group_->kind() == GroupKind::free) {
    if (!last_) {
      last_ = group_->identity();
    } else {
      CanonicalForm word = last_->form();
      next_reduced_word(word, static_cast<unsigned>(group_->params()[0]));
      last_ = GroupElement(group_->id(), std::move(word));
    }
    ++position_;
    return last_;
  }
  return group_->element_at(position_++);
}

InvolutionScan has_involution(const GroupHandle& group, std::size_t bound) {
  InvolutionScan scan;
  const auto limit = group.order() ? std::min<std::uint64_t>(bound, *group.order()) : bound;
  const auto e = group.identity();
  Enumerator it(group);
  while (scan.scanned < limit) {
    auto h = *it.next();
    ++scan.scanned;
    if (h == e) continue;
    if (group.mul(h, h) == e) {
      scan.found = true;
      scan.witness = h;
      break;
    }
  }
  scan.exhaustive = group.order() && scan.scanned == *group.order();
  return scan;
}

std::vector<GroupElement> square_roots(const GroupHandle& group, const GroupElement& h, std::size_t bound) {
  if (!group.contains(h)) throw DomainError("element does not belong to group " + group.spec());
  const auto limit = group.order() ? std::min<std::uint64_t>(bound, *group.order()) : bound;
  std::vector<GroupElement> roots;
  Enumerator it(group);
  for (std::uint64_t i = 0; i < limit; ++i) {
    auto x = *it.next();
    if (group.mul(x, x) == h) roots.push_back(x);
  }
  return roots;
}

std::vector<GroupElement> conjugacy_sample(const GroupHandle& group, const GroupElement& h, std::size_t bound) {
  if (!group.contains(h)) throw DomainError("element does not belong to group " + group.spec());
  const auto limit = group.order() ? std::min<std::uint64_t>(bound, *group.order()) : bound;
  std::set<GroupElement> out;
  Enumerator it(group);
  for (std::uint64_t i = 0; i < limit; ++i) {
    auto g = *it.next();
    out.insert(group.mul(group.mul(group.inverse(g), h), g));
  }
  return {out.begin(), out.end()};
}

}  // namespace singer
