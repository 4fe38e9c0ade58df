#include <doctest.h>

#include <random>

#include "bergfan/catalog.hpp"
#include "bergfan/error.hpp"
#include "bergfan/matroid.hpp"
#include "bergfan/qn.hpp"
#include "oracles/oracles.hpp"

using namespace bergfan;

namespace {

SplitMask S(std::initializer_list<int> ends) { return split_from_elements(ends); }

std::vector<Rational> raw_of(int n, const std::map<std::pair<int, int>, Rational>& d) {
  std::vector<Rational> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.push_back(d.at({i, j}));
  }
  return out;
}

MetricType random_metric(const TropicalType& t, std::mt19937& rng) {
  std::uniform_int_distribution<std::int64_t> num(1, 12);
  std::uniform_int_distribution<std::int64_t> den(1, 5);
  MetricType m{t, {}};
  for (std::size_t i = 0; i < t.bounded_edge_count(); ++i) m.lengths.emplace_back(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_CASE("pair indexing is lexicographic") {
  CHECK(pair_index(5, 1, 2) == 0);
  CHECK(pair_index(5, 2, 1) == 0);
  CHECK(pair_index(5, 1, 5) == 3);
  CHECK(pair_index(5, 2, 3) == 4);
  CHECK(pair_index(5, 4, 5) == 9);
}

TEST_CASE("the image of Phi is the zero class") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> x(-9, 9);
  for (int n = 3; n <= 8; ++n) {
    std::vector<Rational> xs;
    for (int i = 0; i < n; ++i) xs.emplace_back(x(rng));
    std::vector<Rational> raw;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) raw.push_back(xs[static_cast<std::size_t>(i)] + xs[static_cast<std::size_t>(j)]);
    }
    CHECK(QnVector::from_raw(n, raw).is_zero());
    // Adding Phi(x) does not change the class of anything else.
    std::vector<Rational> other(raw.size());
    for (auto& r : other) r = Rational(x(rng), 3);
    std::vector<Rational> sum(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) sum[i] = raw[i] + other[i];
    CHECK(QnVector::from_raw(n, sum) == QnVector::from_raw(n, other));
  }
  CHECK_THROWS_AS(QnVector::from_raw(5, std::vector<Rational>(3)), PreconditionError);
}

TEST_CASE("distances of a two-cherry curve with unit lengths") {
  const auto t = TropicalType::from_splits(5, {S({2, 3}), S({4, 5})});
  const MetricType m{t, {Rational(1), Rational(1)}};
  const auto d = pairwise_distances(m);
  auto at = [&](int i, int j) { return d[pair_index(5, i, j)]; };
  CHECK(at(2, 3) == Rational(0));
  CHECK(at(4, 5) == Rational(0));
  CHECK(at(2, 4) == Rational(2));
  CHECK(at(2, 5) == Rational(2));
  CHECK(at(3, 4) == Rational(2));
  CHECK(at(3, 5) == Rational(2));
  for (int j = 2; j <= 5; ++j) CHECK(at(1, j) == Rational(1));
  CHECK(dist_vector(MetricType{t, {Rational(2), Rational(2)}}) == Rational(2) * dist_vector(m));
  CHECK(dist_vector(MetricType{TropicalType::star(5), {}}).is_zero());
}

TEST_CASE("distances agree with shortest paths on random metrics") {
  std::mt19937 rng(11);
  for (int n = 4; n <= 7; ++n) {
    for (const auto& t : enumerate_types(n)) {
      const auto m = random_metric(t, rng);
      const auto expected = oracle::tree_distances(n, t.splits(), m.lengths);
      CHECK(pairwise_distances(m) == raw_of(n, expected));
      CHECK(dist_vector(m) == QnVector::from_raw(n, raw_of(n, expected)));
    }
  }
}

TEST_CASE("metric validation") {
  const auto t = TropicalType::from_splits(5, {S({2, 3})});
  CHECK_THROWS_AS((MetricType{t, {}}.validate()), PreconditionError);
  CHECK_THROWS_AS((MetricType{t, {Rational(0)}}.validate()), PreconditionError);
  CHECK_THROWS_AS((MetricType{t, {Rational(-1, 2)}}.validate()), PreconditionError);
  const MetricType ok{TropicalType::from_splits(5, {S({2, 3}), S({2, 3, 4})}), {Rational(1), Rational(3, 2)}};
  CHECK(ok.root_distances() == std::vector<Rational>{Rational(0), Rational(5, 2), Rational(3, 2)});
}

TEST_CASE("relations among split rays") {
  for (int n = 4; n <= 8; ++n) CHECK(qn_relations_check(n).ok());
  // Three-ray sum for n = 4.
  CHECK((ray_of_split(4, S({2, 3})) + ray_of_split(4, S({2, 4})) + ray_of_split(4, S({3, 4}))).is_zero());
  CHECK(ray_of_split(6, S({4, 5, 6})) ==
        ray_of_split(6, S({4, 5})) + ray_of_split(6, S({4, 6})) + ray_of_split(6, S({5, 6})));
  // A split and its complement in {2..n} give the same class up to the sum relation.
  CHECK(ray_of_split(5, S({2, 3, 4, 5})).is_zero());
  CHECK_THROWS_AS(ray_of_split(5, S({2})), PreconditionError);
  CHECK_THROWS_AS(ray_of_split(5, S({1, 2})), PreconditionError);
}

TEST_CASE("psi on the split basis") {
  const Graph k4 = ambient_complete(5);
  CHECK(psi_linear(ray_of_split(5, S({2, 3}))).to_integral() == QuotientVector::from_raw({-1, 0, 0, 0, 0, 0}));
  CHECK(psi_linear(ray_of_split(5, S({4, 5}))).to_integral() == QuotientVector::from_raw({0, 0, 0, 0, 0, -1}));
  CHECK(psi_linear(ray_of_split(5, S({3, 4, 5}))).to_integral() ==
        ray_of_flat(flat_from_blocks(k4, {{3, 4, 5}}), k4));
  CHECK(psi_linear(QnVector::zero(5)) == RationalQuotient::from_raw(std::vector<Rational>(6)));
  for (int n = 4; n <= 7; ++n) {
    const Graph k = ambient_complete(n);
    for (auto s : all_splits(n)) {
      std::vector<std::vector<Label>> blocks{{}};
      for (auto e : split_elements(s)) blocks[0].push_back(e);
      CHECK(psi_linear(ray_of_split(n, s)).to_integral() == ray_of_flat(flat_from_blocks(k, blocks), k));
    }
  }
}

TEST_CASE("psi matches the closed form on random tree metrics") {
  std::mt19937 rng(5);
  for (int n = 4; n <= 7; ++n) {
    for (const auto& t : enumerate_types(n)) {
      const auto m = random_metric(t, rng);
      const auto closed = oracle::psi_closed_form(n, oracle::tree_distances(n, t.splits(), m.lengths));
      CHECK(psi_linear(dist_vector(m)).coords() == closed);
    }
  }
}

TEST_CASE("rational quotient vectors") {
  const auto v = RationalQuotient::from_raw({Rational(1, 2), Rational(3, 2), Rational(1, 2)});
  CHECK(v.coords() == std::vector<Rational>{Rational(0), Rational(1), Rational(0)});
  CHECK(v.is_integral());
  const auto w = RationalQuotient::from_raw({Rational(1, 2), Rational(0), Rational(0)});
  CHECK_FALSE(w.is_integral());
  CHECK_THROWS_AS((void)w.to_integral(), PreconditionError);
  CHECK((Rational(2) * w).is_integral());
  CHECK(RationalQuotient::from_integral(v.to_integral()) == v);
  CHECK(v + w == RationalQuotient::from_raw({Rational(1), Rational(3, 2), Rational(1, 2)}));
}
