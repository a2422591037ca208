#include "arr/arrangement.hpp"

#include <algorithm>
#include <sstream>

#include "arr/errors.hpp"

namespace arr {

Vec normalize_normal(const Vec& v) {
  int lead = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) { lead = static_cast<int>(i); break; }
  }
  if (lead < 0) throw std::invalid_argument("zero normal vector");
  // Common denominator, then divide out the content, then fix the sign.
  mpz_class den_lcm = 1;
  for (const Rat& x : v) {
    mpz_class d = x.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> ints(v.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (den_lcm / v[i].den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (sgn(ints[lead]) < 0) content = -content;
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class q = ints[i] / content;
    out[i] = Rat::parse(q.get_str()).value();
  }
  return out;
}

Arrangement::Arrangement(int dim, std::vector<Vec> normals) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  normals_.reserve(normals.size());
  for (const Vec& v : normals) {
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("normal length does not match dimension");
    Vec n = normalize_normal(v);
    if (std::find(normals_.begin(), normals_.end(), n) != normals_.end())
      throw std::invalid_argument("duplicate hyperplane");
    normals_.push_back(std::move(n));
  }
  spaces_.reserve(normals_.size());
  for (const Vec& n : normals_) spaces_.push_back(Subspace::kernel_of(Mat::from_rows({n})));
  Mat nm = normals_matrix();
  center_ = Subspace::kernel_of(nm);
  rank_ = dim_ - center_.dim();
}

Mat Arrangement::normals_matrix() const {
  Mat m(size(), dim_);
  for (int i = 0; i < size(); ++i)
    for (int c = 0; c < dim_; ++c) m.at(i, c) = normals_[i][c];
  return m;
}

Mat Arrangement::forms_matrix() const { return normals_matrix().transpose(); }

std::string Arrangement::serialize() const {
  std::ostringstream os;
  os << "dim " << dim_ << "\n";
  for (const Vec& n : normals_) {
    for (int c = 0; c < dim_; ++c) os << (c ? " " : "") << n[c];
    os << "\n";
  }
  return os.str();
}

namespace {

// Strip comments, split into whitespace tokens, remember the line number.
struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string text = raw.substr(0, raw.find('#'));
    std::istringstream ls(text);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Arrangement parse_arrangement(std::istream& in) {
  std::vector<Line> lines = significant_lines(in);
  if (lines.empty()) throw ParseError("missing 'dim <n>' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0] != "dim")
    fail(head.number, "expected 'dim <n>' header");
  int dim = -1;
  try {
    std::size_t used = 0;
    dim = std::stoi(head.tokens[1], &used);
    if (used != head.tokens[1].size()) dim = -1;
  } catch (const std::exception&) {
    dim = -1;
  }
  if (dim < 0) fail(head.number, "bad dimension '" + head.tokens[1] + "'");

  std::vector<Vec> normals;
  std::vector<int> line_of;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    if (static_cast<int>(line.tokens.size()) != dim)
      fail(line.number, "expected " + std::to_string(dim) + " entries, got " +
                            std::to_string(line.tokens.size()));
    Vec v(dim);
    for (int c = 0; c < dim; ++c) {
      auto r = Rat::parse(line.tokens[c]);
      if (!r) fail(line.number, "bad rational '" + line.tokens[c] + "'");
      v[c] = *r;
    }
    if (is_zero_vec(v)) fail(line.number, "zero normal vector");
    Vec n = normalize_normal(v);
    for (std::size_t j = 0; j < normals.size(); ++j)
      if (normals[j] == n)
        fail(line.number, "duplicate of hyperplane on line " + std::to_string(line_of[j]));
    normals.push_back(std::move(n));
    line_of.push_back(line.number);
  }
  return Arrangement(dim, std::move(normals));
}

Arrangement parse_arrangement(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

Subarrangement subarrangement(const Arrangement& a, const IndexSet& keep) {
  if (keep.cap() != a.size()) throw std::invalid_argument("index set does not match arrangement");
  Subarrangement out{Arrangement::empty(a.dim()), {}};
  std::vector<Vec> normals;
  for (int i : keep.to_vector()) {
    normals.push_back(a.normal(i));
    out.parent.push_back(i);
  }
  out.arrangement = Arrangement(a.dim(), std::move(normals));
  return out;
}

Subarrangement deleted(const Arrangement& a, int h) {
  if (h < 1 || h > a.size()) throw std::invalid_argument("hyperplane index out of range");
  IndexSet keep = a.full_set();
  keep.remove(h);
  return subarrangement(a, keep);
}

namespace {

Subspace flat_of(const Arrangement& a, const IndexSet& hyps) {
  Subspace x = Subspace::full(a.dim());
  for (int i : hyps.to_vector()) x = intersect(x, a.hyperplane(i));
  return x;
}

}  // namespace

Subarrangement localization(const Arrangement& a, const IndexSet& hyps) {
  Subspace x = flat_of(a, hyps);
  IndexSet keep(a.size());
  for (int i = 1; i <= a.size(); ++i)
    if (a.hyperplane(i).contains(x)) keep.add(i);
  return subarrangement(a, keep);
}

Restriction restriction(const Arrangement& a, const IndexSet& hyps) {
  Subspace x = flat_of(a, hyps);
  Restriction out{Arrangement::empty(x.dim()), x, x.basis(), {}, {}};
  std::vector<Vec> normals;
  for (int i = 1; i <= a.size(); ++i) {
    if (a.hyperplane(i).contains(x)) continue;  // no trace, X lies inside H
    // Trace form in flat coordinates: evaluate the form on each basis vector.
    Vec t(x.dim());
    for (int j = 0; j < x.dim(); ++j) t[j] = dot(a.normal(i), x.basis().row(j));
    internal_check(!is_zero_vec(t), "trace of a hyperplane not containing the flat is nonzero");
    Vec n = normalize_normal(t);
    int idx = 0;
    for (std::size_t j = 0; j < normals.size(); ++j)
      if (normals[j] == n) { idx = static_cast<int>(j) + 1; break; }
    if (idx == 0) {
      normals.push_back(n);
      out.preimages.emplace_back();
      idx = static_cast<int>(normals.size());
    }
    out.trace[i] = idx;
    out.preimages[idx - 1].push_back(i);
  }
  out.arrangement = Arrangement(x.dim(), std::move(normals));
  return out;
}

Essentialization essentialize(const Arrangement& a) {
  Subspace span = Subspace::span_rows(a.normals_matrix());
  internal_check(span.dim() == a.rank(), "normal span dimension equals rank");
  std::vector<Vec> normals;
  for (int i = 1; i <= a.size(); ++i) {
    auto c = span.coords_of(a.normal(i));
    internal_check(c.has_value(), "normal lies in the span of normals");
    normals.push_back(*c);
  }
  return Essentialization{Arrangement(a.rank(), std::move(normals)), span.basis()};
}

}  // namespace arr
