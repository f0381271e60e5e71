#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sublab/embedding.hpp"
#include "sublab/lie.hpp"
#include "sublab/types.hpp"

using namespace sublab;

namespace {

bool all_skew(const Embedding& e) {
  for (const auto& m : e.image)
    if (!(m + m.transpose()).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("every registry embedding is a closed skew subalgebra") {
  std::vector<Embedding> all = {
      embed_so_block(3, 7),       embed_u_in_so(2, 6),
      embed_su_in_so(3, 8),       embed_sp_in_so(2, 9),
      embed_spsp1_in_so(2, 8),    embed_diag_circle(7),
      embed_sp_in_su(2, 5),       embed_su_block_in_su(3, 5),
      embed_u_in_su(2, 4),
  };
  for (const auto& e : all) {
    INFO(e.label);
    CHECK_NOTHROW(verify_closed(e));
    CHECK(all_skew(e));
  }
}

TEST_CASE("embedded images have the abstract dimensions") {
  CHECK(embed_so_block(4, 9).dim() == 6);
  CHECK(embed_u_in_so(3, 8).dim() == 9);
  CHECK(embed_su_in_so(3, 8).dim() == 8);
  CHECK(embed_sp_in_so(2, 9).dim() == 10);
  CHECK(embed_spsp1_in_so(2, 8).dim() == 13);
  CHECK(embed_diag_circle(9).dim() == 1);
  CHECK(embed_sp_in_su(2, 5).dim() == 10);
  CHECK(embed_su_block_in_su(2, 5).dim() == 3);
  CHECK(embed_u_in_su(3, 4).dim() == 9);
}

TEST_CASE("size constraints raise input errors") {
  CHECK_THROWS_AS(embed_so_block(8, 7), InputError);
  CHECK_THROWS_AS(embed_u_in_so(4, 7), InputError);
  CHECK_THROWS_AS(embed_sp_in_so(2, 7), InputError);
  CHECK_THROWS_AS(embed_diag_circle(6), InputError);
  CHECK_THROWS_AS(embed_diag_circle(1), InputError);
  CHECK_THROWS_AS(embed_sp_in_su(3, 5), InputError);
}

TEST_CASE("the diagonal circle generator has the fixed sign pattern") {
  Embedding c = embed_diag_circle(5);
  REQUIRE(c.dim() == 1);
  RationalMatrix expected =
      e_matrix(5, 0, 1) + e_matrix(5, 2, 3);  // last coordinate fixed
  CHECK(c.image[0] == expected);
  CHECK(c.block == 4);
  CHECK(c.leading_block);

  Embedding c9 = embed_diag_circle(9);
  RationalMatrix e9 = e_matrix(9, 0, 1) + e_matrix(9, 2, 3) +
                      e_matrix(9, 4, 5) + e_matrix(9, 6, 7);
  CHECK(c9.image[0] == e9);
}

TEST_CASE("unitary realification acts by the fixed 2x2 block") {
  // multiplication by i on complex slot 1 inside so(4)
  Embedding u1 = embed_u_in_so(1, 4);
  REQUIRE(u1.dim() == 1);
  RationalMatrix gen = u1.image[0];
  CHECK(gen.at(0, 1) == -1);
  CHECK(gen.at(1, 0) == 1);
  for (std::size_t i = 2; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(gen.at(i, j) == 0);
}

TEST_CASE("quaternionic slots occupy four consecutive real coordinates") {
  Embedding sp1 = embed_sp_in_so(1, 4);
  Subspace span(so_dim(4));
  for (const auto& m : sp1.image) span.add(flatten_skew(m));
  for (int u = 1; u <= 3; ++u)
    CHECK(span.contains(flatten_skew(quaternion_left(u))));

  // the sp(1) tail of sp(n)+sp(1) is right multiplication on every slot
  Embedding ss = embed_spsp1_in_so(2, 8);
  RationalMatrix r_i(8, 8);
  for (std::size_t slot = 0; slot < 2; ++slot) {
    RationalMatrix q = quaternion_right(1);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        r_i.at(4 * slot + a, 4 * slot + b) = q.at(a, b);
  }
  CHECK(ss.image[ss.dim() - 3] == r_i);
  CHECK(form_q(r_i, r_i) == Rational(4));
}

TEST_CASE("symplectic columns inside su expand by the fixed complex blocks") {
  // sp(1) in su(2): quaternion units as diag(i,-i), [[0,-1],[1,0]], [[0,-i],[-i,0]]
  Embedding e = embed_sp_in_su(1, 2);
  REQUIRE(e.dim() == 3);
  Subspace span(so_dim(4));
  for (const auto& m : e.image) span.add(flatten_skew(m));

  auto realify = [](int a11r, int a11i, int a12r, int a12i, int a21r, int a21i,
                    int a22r, int a22i) {
    // complex 2x2 entry (re, im) becomes the real 2x2 block [[re,-im],[im,re]]
    RationalMatrix m(4, 4);
    auto put = [&](std::size_t bi, std::size_t bj, int re, int im) {
      m.at(2 * bi, 2 * bj) = re;
      m.at(2 * bi, 2 * bj + 1) = -im;
      m.at(2 * bi + 1, 2 * bj) = im;
      m.at(2 * bi + 1, 2 * bj + 1) = re;
    };
    put(0, 0, a11r, a11i);
    put(0, 1, a12r, a12i);
    put(1, 0, a21r, a21i);
    put(1, 1, a22r, a22i);
    return m;
  };
  RationalMatrix unit_i = realify(0, 1, 0, 0, 0, 0, 0, -1);
  RationalMatrix unit_j = realify(0, 0, -1, 0, 1, 0, 0, 0);
  RationalMatrix unit_k = realify(0, 0, 0, -1, 0, -1, 0, 0);
  CHECK(span.contains(flatten_skew(unit_i)));
  CHECK(span.contains(flatten_skew(unit_j)));
  CHECK(span.contains(flatten_skew(unit_k)));
}

TEST_CASE("u inside su uses the traceless diagonal circle") {
  // u(2) in su(3): the circle is i*diag(1, 1, -2) realified in so(6)
  Embedding e = embed_u_in_su(2, 3);
  verify_closed(e);
  REQUIRE(e.dim() == 4);
  RationalMatrix circle(6, 6);
  auto slot_i = [&](std::size_t p, long coef) {
    circle.at(2 * p, 2 * p + 1) = -coef;
    circle.at(2 * p + 1, 2 * p) = coef;
  };
  slot_i(0, 1);
  slot_i(1, 1);
  slot_i(2, -2);
  Subspace span(so_dim(6));
  for (const auto& m : e.image) span.add(flatten_skew(m));
  CHECK(span.contains(flatten_skew(circle)));

  // su(2) block sits inside
  Embedding inner = embed_su_block_in_su(2, 3);
  for (const auto& m : inner.image) CHECK(span.contains(flatten_skew(m)));
}

TEST_CASE("su sits inside u which sits inside so") {
  Embedding u = embed_u_in_so(3, 6);
  Embedding su = embed_su_in_so(3, 6);
  Subspace uspan(so_dim(6));
  for (const auto& m : u.image) uspan.add(flatten_skew(m));
  for (const auto& m : su.image) CHECK(uspan.contains(flatten_skew(m)));
  CHECK(u.dim() == su.dim() + 1);
}

TEST_CASE("compose pads leading blocks and rejects mismatches") {
  Embedding outer = embed_so_block(4, 6);
  Embedding inner = embed_u_in_so(2, 4);
  Embedding both = compose(outer, inner);
  CHECK(both.ambient == 6);
  CHECK(both.dim() == 4);
  CHECK_NOTHROW(verify_closed(both));
  // padded generators vanish outside the leading block
  for (const auto& m : both.image)
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 4; j < 6; ++j) {
        CHECK(m.at(i, j) == 0);
        CHECK(m.at(j, i) == 0);
      }

  CHECK_THROWS_AS(compose(outer, embed_u_in_so(2, 5)), InputError);
  Embedding not_leading = embed_so_block(6, 6);
  not_leading.leading_block = false;
  CHECK_THROWS_AS(compose(not_leading, inner), InputError);
}

TEST_CASE("verify_closed rejects a non-subalgebra") {
  Embedding broken;
  broken.label = "broken";
  broken.ambient = 4;
  broken.image = {e_matrix(4, 0, 1), e_matrix(4, 1, 2)};
  CHECK_THROWS_AS(verify_closed(broken), ComputeError);

  Embedding dependent;
  dependent.label = "dependent";
  dependent.ambient = 4;
  dependent.image = {e_matrix(4, 0, 1), e_matrix(4, 0, 1) * Rational(2)};
  CHECK_THROWS_AS(verify_closed(dependent), ComputeError);
}
