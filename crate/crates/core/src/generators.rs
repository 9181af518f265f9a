//! Instance generators.
//!
//! Three constructions that exercise the covering and inscribing machinery
//! at its extremes, plus seeded random convex bodies for test plumbing:
//!
//! * **Sharp simplex families** ([`gen_sharp_simplex`]): `d*n + 1` translates
//!   of a `1/s`-scaled corner simplex, placed on integer coordinates inside
//!   the full simplex `K` of side `s = d(d+1)n/2 + 1`. The family is
//!   non-separable, touches every facet of `K`, and its minimal covering
//!   homothet is `K` itself, so the ratio of covering scale to total member
//!   scale is exactly `s/(dn+1)` — which climbs to `(d+1)/2` as `n` grows.
//!   This shows the `(d+1)/2` covering factor cannot be improved.
//! * **Touching chains** ([`gen_touching_chain`]): members placed one after
//!   another in random directions, each moved outward by bisection until it
//!   barely overlaps its predecessor. The union is connected by
//!   construction, which makes the family non-separable in every direction.
//! * **Depth-bounded grids** ([`gen_depth_k_grid`]): `k` widely separated
//!   rows of disjoint members. No line meets more than `k` member interiors
//!   (a line steep enough to cross rows is too steep to meet two members of
//!   any single row), while a line down a column meets exactly `k`, so the
//!   depth bound is attained. The rows make the union deliberately
//!   disconnected: the inscribing theorem needs only the depth hypothesis,
//!   and these families witness that connectivity is not required.
//!
//! Every generator checks its own output before returning it. The sharp
//! simplex construction re-derives the claimed invariants (coordinate
//! permutations per axis, the extremal coordinate sum, facet contact, and
//! non-separability across the facet normals) and reports an internal error
//! rather than returning a family that fails them.

use crate::error::{Error, Result};
use crate::geometry::{
    homothet_support, homothets_intersect, interior_point, simplex_facet_normals, support,
    ConvexBody, Family, Homothet, Vector,
};
use crate::intervals::{rat, Rat};
use crate::sampling;
use crate::separability::{check_nonseparable, CheckMode, DirectionSet, VerdictStatus};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Bisection continues until the bracket around the touching distance is
/// narrower than this.
const TOUCH_BRACKET_TOL: f64 = 1e-10;

/// Final chain placements back off the feasible end of the bracket by this
/// much, so consecutive members overlap strictly instead of touching at a
/// single point that floating-point rounding could disconnect.
const TOUCH_OVERLAP_NUDGE: f64 = 1e-9;

/// A sharp covering instance: the family, its integer coordinate scheme,
/// and the exact covering-to-total-scale ratio it realizes.
#[derive(Debug, Clone)]
pub struct SharpSimplexInstance {
    /// Ambient dimension.
    pub d: usize,
    /// Refinement parameter; the family has `d*n + 1` members.
    pub n: usize,
    /// The family: `d*n + 1` translates of the `1/s`-scaled simplex.
    pub family: Family,
    /// Integer translation of each member (member `i` sits at
    /// `coordinates[i]`, occupying a unit corner simplex there).
    pub coordinates: Vec<Vec<i64>>,
    /// Minimal covering scale divided by total member scale, exactly:
    /// `s/(dn+1)` with `s = d(d+1)n/2 + 1`.
    pub exact_ratio: Rat,
}

/// Builds the sharp simplex family in dimension `d >= 2` with refinement
/// `n >= 1`.
///
/// The body is the corner simplex `K = conv{0, s e_1, ..., s e_d}` with
/// `s = d(d+1)n/2 + 1`. Member `i` (for `i = 0..=dn`) is the unit corner
/// simplex translated to the integer point
/// `b_i = (i mod (dn+1), (n + i) mod (dn+1), ..., ((d-1)n + i) mod (dn+1))`,
/// i.e. a copy of `K` scaled by `1/s`. Along every coordinate axis the
/// `b_i` values form a permutation of `{0, ..., dn}`, so the projections
/// onto each facet normal tile an interval without gaps; the coordinate
/// sums form a run of consecutive integers, so the same holds for the
/// diagonal facet. Together these force any covering homothet of the
/// family to contain `K` itself.
pub fn gen_sharp_simplex(d: usize, n: usize) -> Result<SharpSimplexInstance> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!(
            "sharp simplex families need dimension at least 2 (got {d})"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidArgument(
            "sharp simplex families need refinement n >= 1".into(),
        ));
    }
    let members_count = d
        .checked_mul(n)
        .and_then(|dn| dn.checked_add(1))
        .ok_or_else(|| Error::InvalidArgument("d*n overflows".into()))?;
    let side = d
        .checked_mul(d + 1)
        .and_then(|x| x.checked_mul(n))
        .map(|x| x / 2 + 1)
        .ok_or_else(|| Error::InvalidArgument("d*(d+1)*n overflows".into()))?;
    if side > (1usize << 52) {
        return Err(Error::InvalidArgument(format!(
            "simplex side {side} is too large for exact float coordinates"
        )));
    }
    let m = members_count as i64;
    let s = side as f64;

    let mut vertices = vec![Vector::zeros(d)];
    for axis in 0..d {
        vertices.push(Vector::axis(d, axis).scale(s));
    }
    let body = ConvexBody::polytope(vertices)?;

    let mut coordinates = Vec::with_capacity(members_count);
    let mut members = Vec::with_capacity(members_count);
    for i in 0..members_count as i64 {
        let b: Vec<i64> = (0..d as i64).map(|j| (j * n as i64 + i) % m).collect();
        let translation = Vector::new(b.iter().map(|&x| x as f64).collect());
        members.push(Homothet::new(translation, 1.0 / s)?);
        coordinates.push(b);
    }
    let family = Family::new(body.clone(), members)?;

    // Re-derive the invariants the construction is supposed to guarantee.
    let dn = (members_count - 1) as i64;
    for axis in 0..d {
        let mut column: Vec<i64> = coordinates.iter().map(|b| b[axis]).collect();
        column.sort_unstable();
        if column != (0..=dn).collect::<Vec<i64>>() {
            return Err(Error::Internal(format!(
                "sharp simplex axis {axis} coordinates are not a permutation of 0..={dn}"
            )));
        }
    }
    let max_sum = coordinates
        .iter()
        .map(|b| b.iter().sum::<i64>())
        .max()
        .expect("at least one member");
    if max_sum != side as i64 - 1 {
        return Err(Error::Internal(format!(
            "sharp simplex extremal coordinate sum is {max_sum}, expected {}",
            side - 1
        )));
    }
    for normal in simplex_facet_normals(&body)? {
        let h_body = support(&body, &normal)?;
        let mut h_family = f64::NEG_INFINITY;
        for member in family.members() {
            let h = homothet_support(&body, member, &normal)?;
            if h > h_body + 1e-9 * (1.0 + h_body.abs()) {
                return Err(Error::Internal(
                    "sharp simplex member extends outside the body".into(),
                ));
            }
            h_family = h_family.max(h);
        }
        if (h_family - h_body).abs() > 1e-9 * (1.0 + h_body.abs()) {
            return Err(Error::Internal(format!(
                "sharp simplex family does not touch the facet with normal {normal:?}"
            )));
        }
    }
    let verdict = check_nonseparable(
        &family,
        &CheckMode::Restricted(DirectionSet::facet_normals(&body)?),
    )?;
    if verdict.status != VerdictStatus::Satisfied {
        return Err(Error::Internal(
            "sharp simplex family is separable across a facet normal".into(),
        ));
    }

    Ok(SharpSimplexInstance {
        d,
        n,
        family,
        coordinates,
        exact_ratio: rat(side as i64, m),
    })
}

/// Builds a chain of `n` homothets of `body` with the given scales, each
/// placed against its predecessor in a seeded random direction.
///
/// Member `i+1` starts with its scaled interior reference point on top of
/// member `i`'s, then slides outward along a random unit direction. The
/// touching distance is bracketed by bisection on the intersection
/// predicate until the bracket is narrower than `1e-10`, and the member is
/// placed just inside the feasible end so consecutive members strictly
/// overlap. The union of the chain is therefore connected, which makes the
/// family non-separable in every direction.
pub fn gen_touching_chain(
    body: &ConvexBody,
    n: usize,
    scales: &[f64],
    seed: u64,
) -> Result<Family> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "a chain needs at least one member".into(),
        ));
    }
    if scales.len() != n {
        return Err(Error::InvalidArgument(format!(
            "expected {n} scales, got {}",
            scales.len()
        )));
    }
    let d = body.dim();
    let diam = body.diameter();
    let gamma = interior_point(body);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut members = vec![Homothet::new(Vector::zeros(d), scales[0])?];
    for &scale in &scales[1..] {
        let prev = members.last().expect("chain is non-empty").clone();
        // Start with both members' scaled reference points coincident, so
        // the pair overlaps at offset zero no matter how lopsided the
        // scales are.
        let base = prev
            .translation()
            .add(&gamma.scale(prev.scale() - scale));
        let direction = sampling::unit_vector(&mut rng, d);
        let candidate = |offset: f64| -> Result<Homothet> {
            Homothet::new(base.add(&direction.scale(offset)), scale)
        };
        let intersects = |offset: f64| -> Result<bool> {
            homothets_intersect(body, &prev, &candidate(offset)?, 1e-9)
        };

        let mut lo = 0.0;
        let mut hi = (prev.scale() + scale) * diam + 1.0;
        if !intersects(lo)? {
            return Err(Error::Internal(
                "chain seed placement does not overlap its predecessor".into(),
            ));
        }
        if intersects(hi)? {
            return Err(Error::Internal(
                "chain outer bracket still overlaps its predecessor".into(),
            ));
        }
        let mut rounds = 0;
        while hi - lo > TOUCH_BRACKET_TOL {
            let mid = 0.5 * (lo + hi);
            if intersects(mid)? {
                lo = mid;
            } else {
                hi = mid;
            }
            rounds += 1;
            if rounds > 200 {
                return Err(Error::Internal(
                    "touch bisection failed to converge".into(),
                ));
            }
        }
        members.push(candidate((lo - TOUCH_OVERLAP_NUDGE).max(0.0))?);
    }
    Family::new(body.clone(), members)
}

/// Builds a planar family of `k` rows, each holding `per_row` pairwise
/// disjoint unit-scale members, with rows `row_gap` apart.
///
/// Within a row, members sit `3 * diameter` apart along the first axis, so
/// a line through two members of one row has slope at most `1/2` relative
/// to the row. With `row_gap` at least `10 * per_row * diameter`, such a
/// shallow line cannot climb to a second row, and a line that does cross
/// rows meets at most one member per row. Either way no line meets more
/// than `max(per_row, k)` member interiors, which is why `per_row` may not
/// exceed `k`; a vertical line down the first column meets exactly `k`, so
/// the bound is attained.
///
/// The body must be centrally symmetric (these families feed the
/// inscribing construction) and two-dimensional — in higher dimensions a
/// hyperplane parallel to both the row and stacking axes would meet every
/// member at once, destroying the depth bound.
pub fn gen_depth_k_grid(
    body: &ConvexBody,
    k: usize,
    per_row: usize,
    row_gap: f64,
) -> Result<Family> {
    if body.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            got: body.dim(),
        });
    }
    if body.symmetry_center().is_none() {
        return Err(Error::InvalidArgument(
            "depth grids require a centrally symmetric body".into(),
        ));
    }
    if k == 0 || per_row == 0 {
        return Err(Error::InvalidArgument(
            "depth grids need at least one row and one member per row".into(),
        ));
    }
    if per_row > k {
        return Err(Error::InvalidArgument(format!(
            "a line along a row meets all {per_row} of its members, so per_row must not \
             exceed the depth bound k = {k}"
        )));
    }
    if !row_gap.is_finite() {
        return Err(Error::InvalidArgument("row_gap must be finite".into()));
    }
    let diam = body.diameter();
    let required = 10.0 * per_row as f64 * diam;
    if row_gap < required {
        return Err(Error::RowGapTooSmall {
            required,
            got: row_gap,
        });
    }

    let mut members = Vec::with_capacity(k * per_row);
    for row in 0..k {
        for col in 0..per_row {
            let translation = Vector::new(vec![3.0 * diam * col as f64, row_gap * row as f64]);
            members.push(Homothet::new(translation, 1.0)?);
        }
    }
    Family::new(body.clone(), members)
}

// ---------------------------------------------------------------------------
// Random bodies

const RANDOM_BODY_ATTEMPTS: usize = 10_000;

/// A seeded random triangle with vertices in `[-1, 1]^2` and area at
/// least `0.2`.
pub fn random_triangle(seed: u64) -> ConvexBody {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_BODY_ATTEMPTS {
        let pts: Vec<Vector> = (0..3)
            .map(|_| Vector::new(vec![rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)]))
            .collect();
        let ab = pts[1].sub(&pts[0]);
        let ac = pts[2].sub(&pts[0]);
        let area = 0.5 * (ab[0] * ac[1] - ab[1] * ac[0]).abs();
        if area < 0.2 {
            continue;
        }
        if let Ok(body) = ConvexBody::polytope(pts) {
            return body;
        }
    }
    unreachable!("random triangle generation kept producing degenerate candidates")
}

/// A seeded random tetrahedron with vertices in `[-1, 1]^3` and volume at
/// least `0.1`.
pub fn random_tetrahedron(seed: u64) -> ConvexBody {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_BODY_ATTEMPTS {
        let pts: Vec<Vector> = (0..4)
            .map(|_| {
                Vector::new(vec![
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                ])
            })
            .collect();
        let e1 = pts[1].sub(&pts[0]);
        let e2 = pts[2].sub(&pts[0]);
        let e3 = pts[3].sub(&pts[0]);
        let det = e1[0] * (e2[1] * e3[2] - e2[2] * e3[1])
            - e1[1] * (e2[0] * e3[2] - e2[2] * e3[0])
            + e1[2] * (e2[0] * e3[1] - e2[1] * e3[0]);
        if det.abs() / 6.0 < 0.1 {
            continue;
        }
        if let Ok(body) = ConvexBody::polytope(pts) {
            return body;
        }
    }
    unreachable!("random tetrahedron generation kept producing degenerate candidates")
}

/// A seeded random polygon: the convex hull of `points >= 3` samples from
/// the unit disk. The hull may have fewer vertices than samples.
pub fn random_polygon(seed: u64, points: usize) -> Result<ConvexBody> {
    if points < 3 {
        return Err(Error::InvalidArgument(
            "a polygon needs at least 3 sample points".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_BODY_ATTEMPTS {
        let pts: Vec<Vector> = (0..points).map(|_| disk_point(&mut rng)).collect();
        let hull = crate::geometry::convex_hull_2d(&pts);
        if hull.len() < 3 {
            continue;
        }
        if let Ok(body) = ConvexBody::polytope(hull) {
            return Ok(body);
        }
    }
    unreachable!("random polygon generation kept producing degenerate candidates")
}

/// A seeded random origin-symmetric polygon: the convex hull of
/// `half_points >= 2` disk samples together with their negatives.
pub fn random_symmetric_polygon(seed: u64, half_points: usize) -> Result<ConvexBody> {
    if half_points < 2 {
        return Err(Error::InvalidArgument(
            "a symmetric polygon needs at least 2 sample points".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_BODY_ATTEMPTS {
        let mut pts = Vec::with_capacity(2 * half_points);
        for _ in 0..half_points {
            let p = disk_point(&mut rng);
            pts.push(p.neg());
            pts.push(p);
        }
        let hull = crate::geometry::convex_hull_2d(&pts);
        if hull.len() < 4 {
            continue;
        }
        if let Ok(body) = ConvexBody::polytope(hull) {
            return Ok(body);
        }
    }
    unreachable!("random symmetric polygon generation kept producing degenerate candidates")
}

/// A seeded random 3-D cross-polytope: `±a_i u_i` for a random orthonormal
/// frame `u_1, u_2, u_3` and semi-axes `a_i` in `[0.5, 2)`.
pub fn random_cross_polytope_3d(seed: u64) -> ConvexBody {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_BODY_ATTEMPTS {
        let mut frame: Vec<Vector> = Vec::with_capacity(3);
        for _ in 0..3 {
            let mut v = sampling::unit_vector(&mut rng, 3);
            for u in &frame {
                v = v.sub(&u.scale(v.dot(u)));
            }
            if v.norm() < 1e-3 {
                break;
            }
            frame.push(v.scale(1.0 / v.norm()));
        }
        if frame.len() < 3 {
            continue;
        }
        let mut pts = Vec::with_capacity(6);
        for u in &frame {
            let a = rng.gen_range(0.5..2.0);
            pts.push(u.scale(a));
            pts.push(u.scale(-a));
        }
        if let Ok(body) = ConvexBody::polytope(pts) {
            return body;
        }
    }
    unreachable!("random cross-polytope generation kept producing degenerate candidates")
}

fn disk_point<R: Rng>(rng: &mut R) -> Vector {
    loop {
        let x = rng.gen_range(-1.0..1.0);
        let y = rng.gen_range(-1.0..1.0);
        if x * x + y * y <= 1.0 {
            return Vector::new(vec![x, y]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{members_intersect, vec2};
    use crate::separability::check_depth_at_most_k;

    #[test]
    fn sharp_simplex_d2_n1_hand_checked() {
        let inst = gen_sharp_simplex(2, 1).unwrap();
        assert_eq!(inst.coordinates, vec![vec![0, 1], vec![1, 2], vec![2, 0]]);
        assert_eq!(inst.exact_ratio, rat(4, 3));
        let verts = inst.family.body().vertices().unwrap();
        assert!(verts.iter().any(|v| v.dist(&vec2(4.0, 0.0)) < 1e-12));
        for member in inst.family.members() {
            assert!((member.scale() - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn sharp_simplex_d2_n5_hand_checked() {
        let inst = gen_sharp_simplex(2, 5).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![0, 5],
            vec![1, 6],
            vec![2, 7],
            vec![3, 8],
            vec![4, 9],
            vec![5, 10],
            vec![6, 0],
            vec![7, 1],
            vec![8, 2],
            vec![9, 3],
            vec![10, 4],
        ];
        assert_eq!(inst.coordinates, expect);
        assert_eq!(inst.exact_ratio, rat(16, 11));
        assert_eq!(inst.family.members().len(), 11);
    }

    #[test]
    fn sharp_simplex_d3_n1_hand_checked() {
        let inst = gen_sharp_simplex(3, 1).unwrap();
        let expect: Vec<Vec<i64>> = vec![
            vec![0, 1, 2],
            vec![1, 2, 3],
            vec![2, 3, 0],
            vec![3, 0, 1],
        ];
        assert_eq!(inst.coordinates, expect);
        assert_eq!(inst.exact_ratio, rat(7, 4));
    }

    #[test]
    fn sharp_simplex_invariants_hold_on_a_grid_of_parameters() {
        for d in 2..=4 {
            for n in 1..=3 {
                let inst = gen_sharp_simplex(d, n).unwrap();
                assert_eq!(inst.family.members().len(), d * n + 1);
                assert_eq!(inst.family.dim(), d);
            }
        }
    }

    #[test]
    fn sharp_simplex_rejects_degenerate_parameters() {
        assert!(matches!(
            gen_sharp_simplex(1, 5),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            gen_sharp_simplex(2, 0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn disk_chain_places_consecutive_centers_at_radius_sums() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        let family = gen_touching_chain(&disk, 4, &[1.0, 1.0, 1.0, 1.0], 7).unwrap();
        for pair in family.members().windows(2) {
            let gap = pair[1].translation().dist(pair[0].translation());
            assert!((gap - 2.0).abs() < 1e-6, "consecutive centers {gap} apart");
        }
        for i in 0..3 {
            assert!(members_intersect(&family, i, i + 1).unwrap());
        }
    }

    #[test]
    fn mixed_scale_disk_chain_matches_radius_sum() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        let family = gen_touching_chain(&disk, 2, &[1.0, 2.5], 3).unwrap();
        let gap = family.members()[1]
            .translation()
            .dist(family.members()[0].translation());
        assert!((gap - 3.5).abs() < 1e-6);
    }

    #[test]
    fn triangle_chain_members_barely_overlap() {
        let t = ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(2.0, 0.0), vec2(0.0, 2.0)])
            .unwrap();
        let gamma = interior_point(&t);
        let family = gen_touching_chain(&t, 3, &[1.0, 1.5, 0.7], 42).unwrap();
        let members = family.members();
        for i in 0..2 {
            let a = &members[i];
            let b = &members[i + 1];
            assert!(homothets_intersect(&t, a, b, 1e-9).unwrap());
            // Recover the placement direction from the scaled reference
            // points and push the later member a little farther out: the
            // pair must come apart, i.e. the bisection found a touch, not
            // a deep overlap.
            let ga = a.translation().add(&gamma.scale(a.scale()));
            let gb = b.translation().add(&gamma.scale(b.scale()));
            let u = gb.sub(&ga).normalized().unwrap();
            let pushed = Homothet::new(
                b.translation().add(&u.scale(5e-9)),
                b.scale(),
            )
            .unwrap();
            assert!(!homothets_intersect(&t, a, &pushed, 1e-9).unwrap());
        }
    }

    #[test]
    fn chain_is_deterministic_per_seed() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        let a = gen_touching_chain(&disk, 5, &[1.0; 5], 11).unwrap();
        let b = gen_touching_chain(&disk, 5, &[1.0; 5], 11).unwrap();
        let c = gen_touching_chain(&disk, 5, &[1.0; 5], 12).unwrap();
        for (x, y) in a.members().iter().zip(b.members()) {
            assert_eq!(x.translation().coords(), y.translation().coords());
        }
        let differs = a
            .members()
            .iter()
            .zip(c.members())
            .any(|(x, y)| x.translation().coords() != y.translation().coords());
        assert!(differs);
    }

    #[test]
    fn chain_rejects_bad_arguments() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        assert!(matches!(
            gen_touching_chain(&disk, 0, &[], 1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            gen_touching_chain(&disk, 2, &[1.0], 1),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            gen_touching_chain(&disk, 2, &[1.0, 0.0], 1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn depth_grid_disk_layout_and_depth_are_exact() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        let family = gen_depth_k_grid(&disk, 2, 2, 40.0).unwrap();
        let expect = [
            vec2(0.0, 0.0),
            vec2(6.0, 0.0),
            vec2(0.0, 40.0),
            vec2(6.0, 40.0),
        ];
        assert_eq!(family.members().len(), 4);
        for (member, want) in family.members().iter().zip(&expect) {
            assert!(member.translation().dist(want) < 1e-12);
            assert_eq!(member.scale(), 1.0);
        }
        let ok = check_depth_at_most_k(&family, 2, &CheckMode::Exact2d).unwrap();
        assert_eq!(ok.status, VerdictStatus::Satisfied);
        let tight = check_depth_at_most_k(&family, 1, &CheckMode::Exact2d).unwrap();
        assert_eq!(tight.status, VerdictStatus::Violated);
    }

    #[test]
    fn depth_grid_single_column_attains_depth_k() {
        let square =
            ConvexBody::polytope(vec![
                vec2(1.0, 1.0),
                vec2(-1.0, 1.0),
                vec2(-1.0, -1.0),
                vec2(1.0, -1.0),
            ])
            .unwrap();
        let family = gen_depth_k_grid(&square, 3, 1, 30.0).unwrap();
        assert_eq!(family.members().len(), 3);
        let ok = check_depth_at_most_k(&family, 3, &CheckMode::Exact2d).unwrap();
        assert_eq!(ok.status, VerdictStatus::Satisfied);
        let tight = check_depth_at_most_k(&family, 2, &CheckMode::Exact2d).unwrap();
        assert_eq!(tight.status, VerdictStatus::Violated);
    }

    #[test]
    fn depth_grid_rejects_bad_arguments() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        match gen_depth_k_grid(&disk, 2, 2, 5.0) {
            Err(Error::RowGapTooSmall { required, got }) => {
                assert!((required - 40.0).abs() < 1e-12);
                assert_eq!(got, 5.0);
            }
            other => panic!("expected RowGapTooSmall, got {other:?}"),
        }
        assert!(matches!(
            gen_depth_k_grid(&disk, 2, 3, 100.0),
            Err(Error::InvalidArgument(_))
        ));
        let triangle =
            ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(1.0, 0.0), vec2(0.0, 1.0)]).unwrap();
        assert!(matches!(
            gen_depth_k_grid(&triangle, 2, 1, 100.0),
            Err(Error::InvalidArgument(_))
        ));
        let ball3 = ConvexBody::ball(Vector::zeros(3), 1.0).unwrap();
        assert!(matches!(
            gen_depth_k_grid(&ball3, 2, 1, 100.0),
            Err(Error::UnsupportedDimension { expected: 2, .. })
        ));
    }

    #[test]
    fn random_bodies_are_non_degenerate_and_deterministic() {
        for seed in 0..5 {
            let t = random_triangle(seed);
            assert!(t.is_simplex());
            assert_eq!(t.dim(), 2);

            let tet = random_tetrahedron(seed);
            assert!(tet.is_simplex());
            assert_eq!(tet.dim(), 3);

            let poly = random_polygon(seed, 12).unwrap();
            assert!(poly.vertices().unwrap().len() >= 3);

            let sym = random_symmetric_polygon(seed, 6).unwrap();
            let center = sym.symmetry_center().expect("symmetric by construction");
            assert!(center.norm() < 1e-9);

            let cross = random_cross_polytope_3d(seed);
            assert_eq!(cross.vertices().unwrap().len(), 6);
            let center3 = cross.symmetry_center().expect("symmetric by construction");
            assert!(center3.norm() < 1e-9);
        }
        let a = random_triangle(99);
        let b = random_triangle(99);
        assert_eq!(
            a.vertices().unwrap()[0].coords(),
            b.vertices().unwrap()[0].coords()
        );
    }
}
