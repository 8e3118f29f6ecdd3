#include "edbound/catalog.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "edbound/error.hpp"

namespace edbound {

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto error = [&](const std::string& why) {
    fail(ErrorCode::kParse, "cannot parse \"" + std::string(text) + "\": " + why);
  };

  skip_space();
  if (i == text.size()) error("empty text");
  while (i < text.size()) {
    if (text[i] != '(') error("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
      if (i == text.size()) error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) error("unexpected character");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) error("point out of range");
        ++i;
      }
      if (value == 0 || value > degree) error("point out of range");
      if (used[value - 1]) error("repeated point " + std::to_string(value));
      used[value - 1] = true;
      cycle.push_back(value - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return Permutation(std::move(images));
}

namespace {

Permutation from_cycle(std::size_t degree, const std::vector<std::size_t>& points) {
  auto p = Permutation::identity(degree);
  std::vector<Point> images = p.images();
  for (std::size_t k = 0; k < points.size(); ++k) {
    images[points[k]] = static_cast<Point>(points[(k + 1) % points.size()]);
  }
  return Permutation(std::move(images));
}

std::vector<std::size_t> range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t x = first; x < last; ++x) out.push_back(x);
  return out;
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::kValidation, "cyclic group needs n >= 1");
  return PermGroup::closure(n, {from_cycle(n, range(0, n))});
}

GroupPtr dihedral_group(std::size_t n) {
  if (n < 3) fail(ErrorCode::kValidation, "dihedral group needs n >= 3");
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return PermGroup::closure(n, {from_cycle(n, range(0, n)), Permutation(std::move(reflection))});
}

GroupPtr symmetric_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::kValidation, "symmetric group needs n >= 1");
  if (n == 1) return PermGroup::closure(1, {});
  if (n == 2) return PermGroup::closure(2, {from_cycle(2, {0, 1})});
  return PermGroup::closure(n, {from_cycle(n, {0, 1}), from_cycle(n, range(0, n))});
}

GroupPtr alternating_group(std::size_t n) {
  if (n == 0) fail(ErrorCode::kValidation, "alternating group needs n >= 1");
  if (n < 3) return PermGroup::closure(n, {});
  if (n == 3) return PermGroup::closure(3, {from_cycle(3, {0, 1, 2})});
  // (1 2 3) with (1 2 ... n) for odd n, (2 3 ... n) for even n.
  const std::size_t start = n % 2 == 1 ? 0 : 1;
  return PermGroup::closure(n, {from_cycle(n, {0, 1, 2}), from_cycle(n, range(start, n))});
}

GroupPtr elementary_abelian_group(std::size_t p, std::size_t k) {
  if (p < 2 || k == 0) fail(ErrorCode::kValidation, "elementary abelian group needs p >= 2, k >= 1");
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) fail(ErrorCode::kValidation, std::to_string(p) + " is not prime");
  }
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < k; ++b) gens.push_back(from_cycle(p * k, range(b * p, (b + 1) * p)));
  return PermGroup::closure(p * k, std::move(gens));
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  const std::size_t da = a->degree();
  const std::size_t degree = da + b->degree();
  std::vector<Permutation> gens;
  for (const auto& g : a->generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t x = 0; x < da; ++x) images[x] = g(static_cast<Point>(x));
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b->generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (std::size_t x = 0; x < b->degree(); ++x) {
      images[da + x] = static_cast<Point>(da + g(static_cast<Point>(x)));
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup::closure(degree, std::move(gens));
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

GroupPtr make_group(std::string_view spec_text) {
  const std::string spec = trim(spec_text);
  const std::string product = "direct_product(";
  if (spec.rfind(product, 0) == 0) {
    if (spec.back() != ')') fail(ErrorCode::kValidation, "malformed direct_product: " + spec);
    const std::string inner = spec.substr(product.size(), spec.size() - product.size() - 1);
    // Split at the top-level comma.
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        return direct_product(make_group(inner.substr(0, i)), make_group(inner.substr(i + 1)));
      }
    }
    fail(ErrorCode::kValidation, "direct_product needs two factors: " + spec);
  }
  std::istringstream in(spec);
  std::string kind;
  in >> kind;
  std::vector<std::size_t> params;
  for (std::size_t x; in >> x;) params.push_back(x);
  if (!in.eof()) fail(ErrorCode::kValidation, "malformed group parameters: " + spec);
  auto want = [&](std::size_t count) {
    if (params.size() != count) {
      fail(ErrorCode::kValidation, kind + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (kind == "cyclic") { want(1); return cyclic_group(params[0]); }
  if (kind == "dihedral") { want(1); return dihedral_group(params[0]); }
  if (kind == "symmetric") { want(1); return symmetric_group(params[0]); }
  if (kind == "alternating") { want(1); return alternating_group(params[0]); }
  if (kind == "elementary_abelian") {
    want(2);
    return elementary_abelian_group(params[0], params[1]);
  }
  fail(ErrorCode::kValidation, "unsupported group kind: " + kind);
}

std::vector<NamedGroup> catalog(std::size_t max_order) {
  struct Entry {
    const char* name;
    const char* spec;
    std::size_t order;
  };
  static const Entry entries[] = {
      {"S3", "symmetric 3", 6},
      {"S4", "symmetric 4", 24},
      {"A4", "alternating 4", 12},
      {"V4", "elementary_abelian 2 2", 4},
      {"E8", "elementary_abelian 2 3", 8},
      {"E16", "elementary_abelian 2 4", 16},
      {"E32", "elementary_abelian 2 5", 32},
      {"E9", "elementary_abelian 3 2", 9},
      {"E25", "elementary_abelian 5 2", 25},
      {"E27", "elementary_abelian 3 3", 27},
      {"C2xC4", "direct_product(cyclic 2, cyclic 4)", 8},
      {"C2xC6", "direct_product(cyclic 2, cyclic 6)", 12},
      {"C4xC4", "direct_product(cyclic 4, cyclic 4)", 16},
      {"C2xS3", "direct_product(cyclic 2, symmetric 3)", 12},
      {"C3xS3", "direct_product(cyclic 3, symmetric 3)", 18},
      {"C4xS3", "direct_product(cyclic 4, symmetric 3)", 24},
      {"C2xD4", "direct_product(cyclic 2, dihedral 4)", 16},
      {"C3xD4", "direct_product(cyclic 3, dihedral 4)", 24},
      {"C2xA4", "direct_product(cyclic 2, alternating 4)", 24},
      {"V4xS3", "direct_product(elementary_abelian 2 2, symmetric 3)", 24},
      {"S3xS3", "direct_product(symmetric 3, symmetric 3)", 36},
      {"C3xA4", "direct_product(cyclic 3, alternating 4)", 36},
      {"C2xS4", "direct_product(cyclic 2, symmetric 4)", 48},
      {"C4xA4", "direct_product(cyclic 4, alternating 4)", 48},
  };
  std::vector<NamedGroup> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_order, 24); ++n) {
    out.push_back({"C" + std::to_string(n), cyclic_group(n)});
  }
  for (std::size_t n = 3; 2 * n <= max_order && n <= 24; ++n) {
    out.push_back({"D" + std::to_string(n), dihedral_group(n)});
  }
  for (const auto& e : entries) {
    if (e.order <= max_order) out.push_back({e.name, make_group(e.spec)});
  }
  return out;
}

}  // namespace edbound
