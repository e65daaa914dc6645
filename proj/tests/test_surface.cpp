#include <gtest/gtest.h>

#include <random>

#include "ccs/ccs.hpp"

using namespace ccs;

namespace {

long euler(const SurfaceComplex& s) { return validate(s).euler_characteristic; }

/// Surfaces reached from the catalogue by a few random moves.
std::vector<SurfaceComplex> random_surfaces(std::uint64_t seed, std::size_t per_kind) {
  std::mt19937_64 rng(seed);
  std::vector<SurfaceComplex> out;
  for (SurfaceKind kind : all_surface_kinds()) {
    const SurfaceComplex s = make_surface(kind);
    out.push_back(s);
    for (std::size_t i = 0; i < per_kind; ++i) out.push_back(random_move_sequence(s, 1 + i % 6, rng, 10));
  }
  return out;
}

}  // namespace

TEST(Validate, CatalogueCounts) {
  const SurfaceReport sphere = validate(make_sphere());
  EXPECT_EQ(sphere.internal_vertices, 2u);
  EXPECT_EQ(sphere.internal_edges, 1u);
  EXPECT_EQ(sphere.n_in + sphere.n_out, 0u);
  EXPECT_EQ(sphere.euler_characteristic, 2);

  const SurfaceReport cyl = validate(make_cylinder());
  EXPECT_EQ(cyl.internal_vertices, 0u);
  EXPECT_EQ(cyl.internal_edges, 1u);
  EXPECT_EQ(cyl.n_in, 1u);
  EXPECT_EQ(cyl.n_out, 1u);
  EXPECT_EQ(cyl.euler_characteristic, 0);

  const SurfaceReport torus = validate(make_torus());
  EXPECT_EQ(torus.internal_vertices, 1u);
  EXPECT_EQ(torus.internal_edges, 2u);
  EXPECT_EQ(torus.euler_characteristic, 0);

  for (const auto& d : {make_disk_in(), make_disk_out()}) {
    const SurfaceReport r = validate(d);
    EXPECT_EQ(r.internal_vertices, 1u);
    EXPECT_EQ(r.internal_edges, 1u);
    EXPECT_EQ(r.n_in + r.n_out, 1u);
    EXPECT_EQ(r.euler_characteristic, 1);
  }
}

TEST(Validate, RejectsBrokenComplexes) {
  auto expect_invalid = [](const SurfaceComplex& s) {
    try {
      validate(s);
      FAIL() << "accepted " << canonical_form(s);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_complex);
    }
  };
  SurfaceComplex s = make_sphere();
  s.faces[0].word = {{0, true}, {0, true}};
  expect_invalid(s);

  s = make_torus();
  s.faces[0].word.pop_back();
  expect_invalid(s);

  s = make_cylinder();
  s.faces[0].word[2].forward = true;
  expect_invalid(s);

  s = make_cylinder();
  s.n_out = 2;
  expect_invalid(s);

  s = make_sphere();
  s.num_vertices = 3;
  expect_invalid(s);

  s = make_sphere();
  s.faces[0].basepoint = 2;
  expect_invalid(s);

  s = make_sphere();
  s.faces.push_back(s.faces[0]);
  expect_invalid(s);

  s = make_disk_in();
  s.edges[0].head = 1;
  expect_invalid(s);

  s = make_sphere();
  s.faces.clear();
  expect_invalid(s);
}

TEST(Catalogue, NamesRoundTrip) {
  for (SurfaceKind k : all_surface_kinds()) {
    EXPECT_EQ(surface_kind_from_string(to_string(k)), k);
    EXPECT_EQ(make_surface(k).name, to_string(k));
  }
  try {
    surface_kind_from_string("klein_bottle");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_kind);
  }
}

TEST(Catalogue, FaceWords) {
  // sphere: a a^-1
  const auto sphere = make_sphere().faces[0].word;
  EXPECT_EQ(sphere, (std::vector<EdgeRef>{{0, true}, {0, false}}));
  // torus: j1 j2 j1^-1 j2^-1
  const auto torus = make_torus().faces[0].word;
  EXPECT_EQ(torus, (std::vector<EdgeRef>{{0, true}, {1, true}, {0, false}, {1, false}}));
  // cylinder: g1 k g2^-1 k^-1
  const SurfaceComplex c = make_cylinder();
  EXPECT_EQ(c.edges[c.faces[0].word[0].edge].kind, EdgeKind::in_boundary);
  EXPECT_EQ(c.edges[c.faces[0].word[2].edge].kind, EdgeKind::out_boundary);
  EXPECT_FALSE(c.faces[0].word[2].forward);
}

TEST(MoveI, SplitSphereEdge) {
  const SurfaceComplex s = move_i_split(make_sphere(), 0);
  const SurfaceReport r = validate(s);
  EXPECT_EQ(r.internal_vertices, 3u);
  EXPECT_EQ(r.internal_edges, 2u);
  EXPECT_EQ(r.euler_characteristic, 2);
  EXPECT_TRUE(equal_up_to_relabeling(move_i_merge(s, 2), make_sphere()));
}

TEST(MoveI, Errors) {
  EXPECT_THROW(move_i_split(make_cylinder(), 0), Error);
  try {
    move_i_merge(make_cylinder(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_internal);
  }
  // the torus vertex has four edge ends
  try {
    move_i_merge(make_torus(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_mergeable);
  }
  // a vertex of the sphere carries a single edge end
  try {
    move_i_merge(make_sphere(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_mergeable);
  }
}

TEST(MoveII, SplitTorusFace) {
  const SurfaceComplex s = move_ii_split(make_torus(), 0, 0, 2);
  const SurfaceReport r = validate(s);
  EXPECT_EQ(r.faces, 2u);
  EXPECT_EQ(r.internal_edges, 3u);
  EXPECT_EQ(r.internal_vertices, 1u);
  EXPECT_EQ(r.euler_characteristic, 0);
  const SurfaceComplex back = move_ii_merge(s, 2);
  EXPECT_TRUE(equal_up_to_relabeling(back, make_torus()));
  // the merged word is a rotation of the original with the basepoint on the same letter
  EXPECT_EQ(back.faces[0].word[back.faces[0].basepoint], make_torus().faces[0].word[0]);
}

TEST(MoveII, Errors) {
  try {
    move_ii_split(make_torus(), 0, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::same_position);
  }
  try {
    move_ii_merge(make_torus(), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_internal);
  }
  // an internal edge with the same face on both sides
  SurfaceComplex t = make_torus();
  t.edges[0].kind = EdgeKind::internal;
  validate(t);
  try {
    move_ii_merge(t, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_separating);
  }
}

TEST(Moves, SplitThenMergeRestoresSurface) {
  std::size_t checked = 0;
  for (const SurfaceComplex& s : random_surfaces(7, 8)) {
    validate(s);
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
      if (s.edges[e].is_boundary()) continue;
      const SurfaceComplex split = move_i_split(s, e);
      EXPECT_EQ(validate(split).internal_vertices, validate(s).internal_vertices + 1);
      EXPECT_EQ(validate(split).internal_edges, validate(s).internal_edges + 1);
      EXPECT_EQ(euler(split), euler(s));
      EXPECT_TRUE(equal_up_to_relabeling(move_i_merge(split, s.num_vertices), s));
      ++checked;
    }
    for (std::size_t f = 0; f < s.faces.size(); ++f)
      for (std::size_t p = 0; p < s.faces[f].word.size(); ++p)
        for (std::size_t q = 0; q < s.faces[f].word.size(); ++q) {
          if (p == q) continue;
          const SurfaceComplex split = move_ii_split(s, f, p, q);
          EXPECT_EQ(validate(split).internal_edges, validate(s).internal_edges + 1);
          EXPECT_EQ(validate(split).internal_vertices, validate(s).internal_vertices);
          EXPECT_EQ(split.faces.size(), s.faces.size() + 1);
          EXPECT_EQ(euler(split), euler(s));
          EXPECT_TRUE(equal_up_to_relabeling(move_ii_merge(split, s.edges.size()), s));
          ++checked;
        }
  }
  EXPECT_GT(checked, 100u);
}

TEST(Moves, RandomSequencesStayValid) {
  std::mt19937_64 rng(11);
  for (SurfaceKind kind : all_surface_kinds()) {
    const SurfaceComplex s = make_surface(kind);
    for (int i = 0; i < 30; ++i) {
      const SurfaceComplex t = random_move_sequence(s, 6, rng, 12);
      EXPECT_EQ(euler(t), euler(s));
      EXPECT_EQ(t.n_in, s.n_in);
      EXPECT_EQ(t.n_out, s.n_out);
    }
  }
}

TEST(Moves, FlipAndBasepointEdits) {
  const SurfaceComplex t = flip_edge(make_torus(), 1);
  validate(t);
  EXPECT_TRUE(equal_up_to_relabeling(flip_edge(t, 1), make_torus()));
  EXPECT_THROW(flip_edge(make_cylinder(), 2), Error);
  const SurfaceComplex b = with_basepoint(make_cylinder(), 0, 2);
  EXPECT_EQ(b.faces[0].basepoint, 2u);
  EXPECT_FALSE(equal_up_to_relabeling(b, make_cylinder()));
  EXPECT_THROW(with_basepoint(make_cylinder(), 0, 4), Error);
}

TEST(Canonical, IgnoresRelabeling) {
  SurfaceComplex s = make_cylinder();
  SurfaceComplex r = s;
  // swap vertex ids and move edge 0 to the end
  for (Edge& e : r.edges) {
    e.tail = 1 - e.tail;
    e.head = 1 - e.head;
  }
  std::rotate(r.edges.begin(), r.edges.begin() + 1, r.edges.end());
  for (EdgeRef& ref : r.faces[0].word) ref.edge = (ref.edge + 2) % 3;
  validate(r);
  EXPECT_TRUE(equal_up_to_relabeling(s, r));
  EXPECT_FALSE(equal_up_to_relabeling(make_sphere(), make_torus()));
}

TEST(Glue, CylinderCylinder) {
  const SurfaceComplex g = glue(make_cylinder(), make_cylinder());
  const SurfaceReport r = validate(g);
  EXPECT_EQ(r.internal_vertices, 1u);
  EXPECT_EQ(r.internal_edges, 3u);
  EXPECT_EQ(r.n_in, 1u);
  EXPECT_EQ(r.n_out, 1u);
  EXPECT_EQ(r.euler_characteristic, 0);
}

TEST(Glue, DisksCloseUp) {
  const SurfaceComplex sphere = glue(make_disk_out(), make_disk_in());
  const SurfaceReport r = validate(sphere);
  EXPECT_EQ(r.n_in + r.n_out, 0u);
  EXPECT_EQ(r.euler_characteristic, 2);

  const SurfaceComplex disk = glue(make_cylinder(), make_disk_in());
  const SurfaceReport d = validate(disk);
  EXPECT_EQ(d.n_in, 1u);
  EXPECT_EQ(d.n_out, 0u);
  EXPECT_EQ(d.euler_characteristic, 1);
}

TEST(Glue, EulerCharacteristicIsAdditive) {
  const std::vector<SurfaceComplex> pieces = random_surfaces(3, 4);
  std::size_t glued = 0;
  for (const auto& a : pieces)
    for (const auto& b : pieces) {
      if (a.n_out != b.n_in || a.n_out == 0) continue;
      const SurfaceComplex g = glue(a, b);
      EXPECT_EQ(euler(g), euler(a) + euler(b));
      EXPECT_EQ(g.n_in, a.n_in);
      EXPECT_EQ(g.n_out, b.n_out);
      EXPECT_EQ(validate(g).internal_vertices, validate(a).internal_vertices + validate(b).internal_vertices + 1);
      ++glued;
    }
  EXPECT_GT(glued, 10u);
}

TEST(Glue, Mismatch) {
  try {
    glue(make_sphere(), make_cylinder());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::boundary_mismatch);
  }
  EXPECT_THROW(glue(make_disk_out(), make_torus()), Error);
  EXPECT_THROW(glue(make_sphere(), make_sphere()), Error);
}
