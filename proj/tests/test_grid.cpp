/// \file test_grid.cpp
/// \brief Grid geometry, field storage layout, and ghost-cell fills.
//
// This file is part of rtfp, released under the MIT License.
// See LICENSE at the repository root for full license text.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "core/errors.hpp"
#include "core/grid.hpp"

using namespace rtfp;

namespace {

/// Distinct, reproducible cell payload: component c of cell (i, j) is
/// 1000·j + 10·i + c/100.
Vec18 tag(int i, int j) {
  Vec18 q;
  for (int c = 0; c < kNumComp; ++c) {
    q(c) = 1000.0 * j + 10.0 * i + 0.01 * c;
  }
  return q;
}

void fill_interior(FieldArray& f) {
  for (int j = 0; j < f.ny(); ++j) {
    for (int i = 0; i < f.nx(); ++i) {
      f.at(i, j) = tag(i, j);
    }
  }
}

}  // namespace

TEST_CASE("grid geometry: spacing and cell centers") {
  GridSpec g;
  g.x_min = -0.5;
  g.x_max = 0.5;
  g.y_min = 0.0;
  g.y_max = 2.0;
  g.nx = 4;
  g.ny = 5;
  CHECK(g.dx() == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(g.dy() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(g.xc(0) == doctest::Approx(-0.375).epsilon(1e-15));
  CHECK(g.xc(3) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(g.yc(0) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(!g.one_dimensional());
  g.ny = 1;
  CHECK(g.one_dimensional());
}

TEST_CASE("field storage: 1D carries no y ghosts and zero-initializes") {
  GridSpec g;
  g.nx = 6;
  g.ny = 1;
  g.ghost = 3;
  FieldArray f(g);
  CHECK(f.ghost_x() == 3);
  CHECK(f.ghost_y() == 0);
  CHECK(f.at(-3, 0).cwiseAbs().maxCoeff() == 0.0);
  CHECK(f.at(8, 0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("interior flattening round-trips and orders j, then i, then c") {
  GridSpec g;
  g.nx = 3;
  g.ny = 2;
  g.ghost = 2;
  FieldArray f(g);
  fill_interior(f);

  const Eigen::VectorXd flat = f.interior();
  REQUIRE(flat.size() == 3 * 2 * kNumComp);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      for (int c = 0; c < kNumComp; ++c) {
        CHECK(flat((static_cast<long>(j) * g.nx + i) * kNumComp + c) ==
              tag(i, j)(c));
      }
    }
  }

  FieldArray back(g);
  back.set_interior(flat);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      CHECK((back.at(i, j) - f.at(i, j)).cwiseAbs().maxCoeff() == 0.0);
    }
  }

  CHECK_THROWS_AS(back.set_interior(Eigen::VectorXd::Zero(5)), Error);
}

TEST_CASE("periodic fill wraps interior cells, 1D") {
  GridSpec g;
  g.nx = 4;
  g.ny = 1;
  g.ghost = 2;
  FieldArray f(g);
  fill_interior(f);
  apply_bc(f, BoundarySet{});

  CHECK((f.at(-1, 0) - f.at(3, 0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((f.at(-2, 0) - f.at(2, 0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((f.at(4, 0) - f.at(0, 0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((f.at(5, 0) - f.at(1, 0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("extrapolation fill copies the nearest interior cell") {
  GridSpec g;
  g.nx = 5;
  g.ny = 1;
  g.ghost = 3;
  FieldArray f(g);
  fill_interior(f);
  BoundarySet bc;
  bc.x_lo = BcKind::Neumann;
  bc.x_hi = BcKind::Neumann;
  apply_bc(f, bc);

  for (int m = 1; m <= 3; ++m) {
    CHECK((f.at(-m, 0) - f.at(0, 0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.at(4 + m, 0) - f.at(4, 0)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("conducting wall reflects with the expected sign pattern") {
  GridSpec g;
  g.x_min = 0.0;
  g.x_max = 1.0;
  g.y_min = 0.0;
  g.y_max = 1.0;
  g.nx = 4;
  g.ny = 4;
  g.ghost = 2;
  FieldArray f(g);
  fill_interior(f);
  BoundarySet bc;
  bc.x_lo = BcKind::ConductingWall;
  bc.x_hi = BcKind::ConductingWall;
  bc.y_lo = BcKind::ConductingWall;
  bc.y_hi = BcKind::ConductingWall;
  apply_bc(f, bc);

  // Wall with normal x: the ghost layer m mirrors interior cell m-1.
  // Flipped entries are the normal momenta, normal B, tangential E, and
  // the electric correction potential.
  auto check_x_reflect = [&](int ghost_i, int mirror_i, int j) {
    const Vec18 gq = f.at(ghost_i, j);
    const Vec18 mq = f.at(mirror_i, j);
    for (int c = 0; c < kNumComp; ++c) {
      const bool flipped = c == comp::kIonOffset + comp::Mx ||
                           c == comp::kEleOffset + comp::Mx ||
                           c == comp::kEmOffset + comp::Bx ||
                           c == comp::kEmOffset + comp::Ey ||
                           c == comp::kEmOffset + comp::Ez ||
                           c == comp::kEmOffset + comp::Psi;
      CHECK(gq(c) == (flipped ? -mq(c) : mq(c)));
    }
  };
  for (int j = 0; j < 4; ++j) {
    check_x_reflect(-1, 0, j);
    check_x_reflect(-2, 1, j);
    check_x_reflect(4, 3, j);
    check_x_reflect(5, 2, j);
  }

  // Wall with normal y flips the y momenta, By, Ex, Ez, and Psi.
  const Vec18 gq = f.at(1, -1);
  const Vec18 mq = f.at(1, 0);
  for (int c = 0; c < kNumComp; ++c) {
    const bool flipped = c == comp::kIonOffset + comp::My ||
                         c == comp::kEleOffset + comp::My ||
                         c == comp::kEmOffset + comp::By ||
                         c == comp::kEmOffset + comp::Ex ||
                         c == comp::kEmOffset + comp::Ez ||
                         c == comp::kEmOffset + comp::Psi;
    CHECK(gq(c) == (flipped ? -mq(c) : mq(c)));
  }
}

TEST_CASE("wall reflection is an involution on the ghost pairing") {
  // Reflecting the reflected layer recovers the original interior cell.
  GridSpec g;
  g.nx = 4;
  g.ny = 1;
  g.ghost = 1;
  FieldArray f(g);
  fill_interior(f);
  BoundarySet bc;
  bc.x_lo = BcKind::ConductingWall;
  bc.x_hi = BcKind::Neumann;
  apply_bc(f, bc);
  const Vec18 ghost = f.at(-1, 0);

  FieldArray h(g);
  fill_interior(h);
  h.at(0, 0) = ghost;
  apply_bc(h, bc);
  CHECK((h.at(-1, 0) - tag(0, 0)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("2D corners combine the x fill with the y fill") {
  GridSpec g;
  g.nx = 4;
  g.ny = 3;
  g.ghost = 2;

  SUBCASE("fully periodic: corner equals the diagonally opposite cell") {
    FieldArray f(g);
    fill_interior(f);
    apply_bc(f, BoundarySet{});
    CHECK((f.at(-1, -1) - f.at(3, 2)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.at(4, 3) - f.at(0, 0)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((f.at(-2, 3) - f.at(2, 0)).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("periodic x with wall y: corner reflects the wrapped column") {
    FieldArray f(g);
    fill_interior(f);
    BoundarySet bc;
    bc.y_lo = BcKind::ConductingWall;
    bc.y_hi = BcKind::ConductingWall;
    apply_bc(f, bc);
    // The x pass wraps (-1, 0) to (3, 0); the y pass then reflects it.
    const Vec18 corner = f.at(-1, -1);
    const Vec18 src = f.at(3, 0);
    CHECK(corner(comp::kIonOffset + comp::D) == src(comp::kIonOffset + comp::D));
    CHECK(corner(comp::kIonOffset + comp::My) ==
          -src(comp::kIonOffset + comp::My));
    CHECK(corner(comp::kEmOffset + comp::By) ==
          -src(comp::kEmOffset + comp::By));
    CHECK(corner(comp::kEmOffset + comp::Bx) ==
          src(comp::kEmOffset + comp::Bx));
  }
}

TEST_CASE("unpaired periodic sides are rejected") {
  GridSpec g;
  g.nx = 4;
  g.ny = 4;
  g.ghost = 1;
  FieldArray f(g);
  fill_interior(f);

  BoundarySet bad_x;
  bad_x.x_lo = BcKind::Periodic;
  bad_x.x_hi = BcKind::Neumann;
  CHECK_THROWS_AS(apply_bc(f, bad_x), Error);

  BoundarySet bad_y;
  bad_y.y_lo = BcKind::ConductingWall;
  bad_y.y_hi = BcKind::Periodic;
  try {
    apply_bc(f, bad_y);
    FAIL("expected a pairing error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}
