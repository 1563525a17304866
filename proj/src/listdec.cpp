#include "hmds/listdec.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace hmds::listdec {

CodeTooLarge::CodeTooLarge(std::uint64_t estimate)
    : std::runtime_error("code has about " + std::to_string(estimate) + " codewords; limit is " +
                         std::to_string(kMaxCodewords)),
      estimate_(estimate) {}

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > ~std::uint64_t{0} / base) return ~std::uint64_t{0};
    r *= base;
  }
  return r;
}

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

}  // namespace

std::vector<Word> codewords(const Matrix& g) {
  const auto& f = g.field();
  const auto basis = linalg::Subspace::from_rows(g).basis();
  const std::size_t k = basis.rows(), n = basis.cols();
  const std::uint64_t count = saturating_pow(f.q(), k);
  if (count > kMaxCodewords) throw CodeTooLarge(count);
  // Messages are ordered by value, but the basis is row-reduced, so use the
  // original generator rows when they are independent.
  const Matrix& gen = g.rows() == k ? g : basis;
  std::vector<Word> out;
  out.reserve(count);
  std::vector<Elem> msg(k, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = static_cast<Elem>(v % f.q());
      v /= f.q();
    }
    Word w(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (msg[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) w[j] = f.add(w[j], f.mul(msg[i], gen(i, j)));
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::size_t hamming_weight(std::span<const Elem> w) {
  return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Elem x) { return x != 0; }));
}

std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw std::invalid_argument("words of different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

Word optimal_center(std::span<const Word> words) {
  if (words.empty()) throw std::invalid_argument("no words");
  const std::size_t n = words.front().size();
  Word y(n, 0);
  std::vector<std::pair<Elem, int>> tally;
  for (std::size_t j = 0; j < n; ++j) {
    tally.clear();
    for (const auto& w : words) {
      if (w.size() != n) throw std::invalid_argument("words of different lengths");
      auto it = std::find_if(tally.begin(), tally.end(), [&](auto& t) { return t.first == w[j]; });
      if (it == tally.end())
        tally.emplace_back(w[j], 1);
      else
        ++it->second;
    }
    auto best = tally.front();
    for (const auto& t : tally)
      if (t.second > best.second || (t.second == best.second && t.first < best.first)) best = t;
    y[j] = best.first;
  }
  return y;
}

std::size_t total_distance(std::span<const Word> words, std::span<const Elem> center) {
  std::size_t s = 0;
  for (const auto& w : words) s += hamming_distance(w, center);
  return s;
}

namespace {

// Depth-first search over increasing index tuples of low-weight nonzero
// codewords, tracking per-column value counts.  The plurality cost of a tuple
// never decreases when a word is added, so partial tuples over budget are cut.
class TupleSearch {
 public:
  TupleSearch(const std::vector<const Word*>& cands, std::size_t n, int L, std::uint64_t budget)
      : cands_(cands), n_(n), L_(L), budget_(budget), counts_(n) {
    for (auto& c : counts_) c.emplace_back(0, 1);  // the zero codeword
  }

  bool run() { return dfs(0, 0); }
  std::uint64_t examined() const { return examined_; }
  const std::vector<std::size_t>& found() const { return chosen_; }

 private:
  std::uint64_t cost() const {
    std::uint64_t size = chosen_.size() + 1, c = 0;
    for (const auto& col : counts_) {
      int best = 0;
      for (const auto& t : col) best = std::max(best, t.second);
      c += size - static_cast<std::uint64_t>(best);
    }
    return c;
  }

  void push(std::size_t i) {
    chosen_.push_back(i);
    const Word& w = *cands_[i];
    for (std::size_t j = 0; j < n_; ++j) {
      auto& col = counts_[j];
      auto it = std::find_if(col.begin(), col.end(), [&](auto& t) { return t.first == w[j]; });
      if (it == col.end())
        col.emplace_back(w[j], 1);
      else
        ++it->second;
    }
  }

  void pop() {
    const Word& w = *cands_[chosen_.back()];
    for (std::size_t j = 0; j < n_; ++j) {
      auto& col = counts_[j];
      auto it = std::find_if(col.begin(), col.end(), [&](auto& t) { return t.first == w[j]; });
      if (--it->second == 0) col.erase(it);
    }
    chosen_.pop_back();
  }

  bool dfs(std::size_t from, int depth) {
    if (depth == L_) return true;
    for (std::size_t i = from; i < cands_.size(); ++i) {
      push(i);
      ++examined_;
      if (cost() <= budget_ && dfs(i + 1, depth + 1)) return true;
      pop();
    }
    return false;
  }

  const std::vector<const Word*>& cands_;
  std::size_t n_;
  int L_;
  std::uint64_t budget_;
  std::vector<std::vector<std::pair<Elem, int>>> counts_;
  std::vector<std::size_t> chosen_;
  std::uint64_t examined_ = 0;
};

}  // namespace

LDResult check_budget(const Matrix& g, int L, std::uint64_t budget) {
  if (L < 1) throw std::invalid_argument("list size must be at least 1");
  const auto start = std::chrono::steady_clock::now();
  const auto book = codewords(g);
  LDResult res;
  auto& rep = res.report;
  rep.property = "avg-radius(L=" + std::to_string(L) + ", budget=" + std::to_string(budget) + ")";
  rep.method = "plurality-center";
  rep.notes.push_back("budget " + std::to_string(budget));
  // With c_0 = 0 every other word c_i has wt(c_i) <= wt(c_i - y) + wt(y) <= budget.
  std::vector<const Word*> cands;
  for (const auto& w : book)
    if (hamming_weight(w) != 0 && hamming_weight(w) <= budget) cands.push_back(&w);
  TupleSearch search(cands, g.cols(), L, budget);
  if (search.run()) {
    LDWitness wit;
    wit.codewords.push_back(Word(g.cols(), 0));
    for (auto i : search.found()) wit.codewords.push_back(*cands[i]);
    wit.y = optimal_center(wit.codewords);
    wit.total_weight = total_distance(wit.codewords, wit.y);
    rep.holds = false;
    res.witness = std::move(wit);
  }
  rep.collections_checked = search.examined();
  rep.elapsed_ms = since(start);
  return res;
}

LDResult is_ld_mds(const Matrix& g, int L) {
  const auto& f = g.field();
  if (L < 1 || static_cast<std::uint64_t>(L) >= f.q())
    throw std::invalid_argument("LD-MDS(L) needs 1 <= L < q; got L=" + std::to_string(L) + ", q=" + std::to_string(f.q()));
  const std::size_t dim = linalg::rank(g);
  const std::uint64_t budget = static_cast<std::uint64_t>(L) * (g.cols() - dim);
  auto res = check_budget(g, L, budget);
  res.report.property = "LD-MDS(" + std::to_string(L) + ")";
  return res;
}

LDResult check_average_radius(const Matrix& g, int L, std::uint64_t rho_num, std::uint64_t rho_den) {
  if (rho_den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t budget = (static_cast<std::uint64_t>(L) + 1) * rho_num * g.cols() / rho_den;
  return check_budget(g, L, budget);
}

std::optional<std::uint64_t> min_total_weight(std::span<const Word> book, int L, bool containing_zero) {
  const std::size_t m = static_cast<std::size_t>(L) + 1;
  if (book.size() < m || book.empty()) return std::nullopt;
  std::optional<std::size_t> zero;
  for (std::size_t i = 0; i < book.size(); ++i)
    if (hamming_weight(book[i]) == 0) zero = i;
  if (containing_zero && !zero) return std::nullopt;
  std::optional<std::uint64_t> best;
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Word> pick(m);
  while (true) {
    const bool ok = !containing_zero || std::find(idx.begin(), idx.end(), *zero) != idx.end();
    if (ok) {
      for (std::size_t i = 0; i < m; ++i) pick[i] = book[idx[i]];
      const auto w = total_distance(pick, optimal_center(pick));
      if (!best || w < *best) best = w;
    }
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == book.size() - m + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

std::size_t ball_count(std::span<const Word> book, std::span<const Elem> center, std::size_t radius) {
  std::size_t c = 0;
  for (const auto& w : book) c += hamming_distance(w, center) <= radius;
  return c;
}

std::int64_t singleton_exponent(int n, int L, std::uint64_t rho_num, std::uint64_t rho_den) {
  if (L < 1 || rho_den == 0) throw std::invalid_argument("need L >= 1 and a nonzero denominator");
  const std::uint64_t num = (static_cast<std::uint64_t>(L) + 1) * rho_num * static_cast<std::uint64_t>(n);
  const std::uint64_t den = rho_den * static_cast<std::uint64_t>(L);
  return n - static_cast<std::int64_t>(num / den);
}

VerificationReport duality_check(const Matrix& g, int ell) {
  if (ell < 1) throw std::invalid_argument("duality check needs l >= 1");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.property = "MDS(" + std::to_string(ell + 1) + ") <=> dual LD-MDS(<=" + std::to_string(ell) + ")";
  rep.method = "duality";
  const auto lhs = verifier::is_mds_ell(g, ell + 1, verifier::Method::BlockDet);
  const Matrix h = linalg::dual(g);
  bool rhs = true;
  std::vector<std::string> parts;
  for (int L = 1; L <= ell; ++L) {
    const auto r = is_ld_mds(h, L);
    parts.push_back("dual LD-MDS(" + std::to_string(L) + "): " + (r.report.holds ? "holds" : "fails"));
    rep.collections_checked += r.report.collections_checked;
    rhs = rhs && r.report.holds;
  }
  rep.collections_checked += lhs.collections_checked;
  rep.notes.push_back(lhs.property + ": " + (lhs.holds ? "holds" : "fails"));
  for (auto& p : parts) rep.notes.push_back(std::move(p));
  rep.holds = lhs.holds == rhs;
  rep.witness = lhs.witness;
  rep.elapsed_ms = since(start);
  return rep;
}

}  // namespace hmds::listdec
