//! Separability and stabbing-depth checks for families of homothets.
//!
//! A hyperplane with unit normal `u` and offset `c` meets a convex set iff
//! `c` lies in the set's projection onto `u`, so both hypotheses reduce to
//! one-dimensional statements about the projected intervals: the family is
//! *non-separable* iff every direction's projections form a contiguous
//! union, and it has *depth at most k* iff no point of any direction's
//! projection lies in more than `k` open interiors.
//!
//! Projections are computed in floating point, snapped to the 1e-12
//! rational grid, and then swept exactly. Because a float endpoint can
//! land on either side of a grid boundary, verdicts additionally get half
//! a grid cell of slack in the safe direction: contiguity tolerates gaps
//! of one cell, and depth ignores overlaps of one cell. Geometric features
//! smaller than two grid cells (2e-12) are below the resolution of these
//! checks.
//!
//! In the plane the all-directions quantifiers are decided exactly: the
//! combinatorial structure of the projections only changes at finitely
//! many critical angles, so testing every event angle plus one sample
//! inside each arc between consecutive events covers all directions.

use num::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::sampling::unit_vector;

use crate::error::{Error, Result};
use crate::geometry::{project_interval, Family, Vector};
use crate::intervals::{
    max_open_depth, rat, rational_from_f64_grid, union_is_contiguous, Rat, WeightedInterval,
};

/// Outcome of a hypothesis check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    /// Holds over every direction the mode is answerable for.
    Satisfied,
    /// Fails, with a witness hyperplane.
    Violated,
    /// Held over every sampled direction; sampling cannot certify the rest.
    SatisfiedProbabilistic,
}

/// Which checking strategy produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeTag {
    Exact2d,
    Restricted,
    Sampled,
}

/// Result of [`check_nonseparable`] or [`check_depth_at_most_k`].
#[derive(Debug, Clone)]
pub struct SeparationVerdict {
    pub status: VerdictStatus,
    /// For violated verdicts: a unit normal and offset such that the
    /// hyperplane `{x : <x, u> = c}` witnesses the failure. Re-checkable
    /// against the members' projections.
    pub witness: Option<(Vector, f64)>,
    pub directions_tested: usize,
    pub mode: ModeTag,
}

/// How a [`DirectionSet`] was produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    /// Outward normals of a simplex body's facets.
    FacetNormals,
    /// Critical angles plus arc samples in the plane.
    Critical2d,
    /// Pseudo-random well-spread unit vectors.
    Sampled { seed: u64, count: usize },
}

/// A nonempty set of unit directions together with its provenance.
#[derive(Debug, Clone)]
pub struct DirectionSet {
    directions: Vec<Vector>,
    provenance: Provenance,
}

impl DirectionSet {
    /// Normalizes the given vectors; rejects empty lists and zero vectors.
    pub fn new(directions: Vec<Vector>, provenance: Provenance) -> Result<Self> {
        if directions.is_empty() {
            return Err(Error::InvalidArgument(
                "direction set must be nonempty".into(),
            ));
        }
        let directions = directions
            .into_iter()
            .map(|u| u.normalized())
            .collect::<Result<Vec<_>>>()?;
        Ok(DirectionSet {
            directions,
            provenance,
        })
    }

    /// Outward facet normals of a simplex body.
    pub fn facet_normals(body: &crate::geometry::ConvexBody) -> Result<Self> {
        let normals = crate::geometry::simplex_facet_normals(body)?;
        DirectionSet::new(normals, Provenance::FacetNormals)
    }

    pub fn directions(&self) -> &[Vector] {
        &self.directions
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// Strategy for deciding an all-directions hypothesis.
#[derive(Debug, Clone)]
pub enum CheckMode {
    /// Complete decision in the plane via critical angles.
    Exact2d,
    /// Only the given directions (e.g. facet normals).
    Restricted(DirectionSet),
    /// `count` seeded pseudo-random directions.
    Sampled { count: usize, seed: u64 },
}

/// Half of one rational grid cell; the slack used in both safe directions.
fn half_cell() -> Rat {
    Rat::new(1.into(), 2_000_000_000_000i64.into())
}

/// Projected member intervals on the grid, expanded or shrunk by half a
/// cell per side: `slack = +1` tolerates one-cell gaps (contiguity),
/// `slack = -1` ignores one-cell overlaps (depth).
fn projected_on_grid(family: &Family, u: &Vector, slack: i32) -> Result<Vec<WeightedInterval>> {
    let half = half_cell();
    let mut out = Vec::with_capacity(family.members().len());
    for member in family.members() {
        let iv = project_interval(member, family.body(), u)?;
        let mut lo = rational_from_f64_grid(iv.lo);
        let mut hi = rational_from_f64_grid(iv.hi);
        match slack {
            1 => {
                lo -= &half;
                hi += &half;
            }
            -1 => {
                // Keep degenerate projections intact rather than inverted.
                if &hi - &lo > rat(2, 1) * &half {
                    lo += &half;
                    hi -= &half;
                }
            }
            _ => {}
        }
        if lo >= hi {
            // A projection this thin is below grid resolution; give it one
            // cell so the exact sweep still sees every member.
            hi = &lo + rat(2, 1) * &half;
        }
        out.push(WeightedInterval::new(lo, hi)?);
    }
    Ok(out)
}

/// True iff the projections of all members onto `u` form a contiguous
/// union (touching endpoints connect). `u` must be unit length.
pub fn nonseparable_in_direction(family: &Family, u: &Vector) -> Result<bool> {
    Ok(direction_gap(family, u)?.is_none())
}

/// The leftmost maximal gap of the projections onto `u`, if any.
fn direction_gap(family: &Family, u: &Vector) -> Result<Option<(Rat, Rat)>> {
    let intervals = projected_on_grid(family, u, 1)?;
    Ok(union_is_contiguous(&intervals).1)
}

/// Maximum number of member interiors a hyperplane orthogonal to `u` can
/// meet. `u` must be unit length.
pub fn depth_in_direction(family: &Family, u: &Vector) -> Result<usize> {
    Ok(depth_with_witness(family, u)?.0)
}

fn depth_with_witness(family: &Family, u: &Vector) -> Result<(usize, Rat)> {
    let intervals = projected_on_grid(family, u, -1)?;
    Ok(max_open_depth(&intervals))
}

/// All plane directions where the combinatorial structure of the
/// projections can change, plus one sample inside each arc between
/// consecutive events. Testing exactly these decides any
/// projection-defined property for every direction.
pub fn critical_directions_2d(family: &Family) -> Result<DirectionSet> {
    if family.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            got: family.dim(),
        });
    }
    let mut angles: Vec<f64> = Vec::new();
    if family.body().is_ball() {
        // Endpoint coincidences of projected disks [<c,u> - rho, <c,u> + rho]
        // solve <c_i - c_j, u(theta)> = ±rho_i ± rho_j.
        let data: Vec<(Vector, f64)> = (0..family.members().len())
            .map(|i| family.member_ball(i).expect("checked: ball body"))
            .collect();
        for i in 0..data.len() {
            for j in 0..i {
                let diff = data[i].0.sub(&data[j].0);
                let (a, b) = (diff[0], diff[1]);
                let r = a.hypot(b);
                if r <= 1e-12 {
                    continue; // concentric: offsets never coincide transversally
                }
                let phi = b.atan2(a);
                for t in [
                    data[i].1 + data[j].1,
                    data[i].1 - data[j].1,
                    -data[i].1 + data[j].1,
                    -data[i].1 - data[j].1,
                ] {
                    let ratio = t / r;
                    if ratio.abs() <= 1.0 {
                        let delta = ratio.acos();
                        angles.push(normalize_angle(phi + delta));
                        angles.push(normalize_angle(phi - delta));
                    }
                }
            }
        }
    } else {
        // Projected endpoints are extrema over the member-vertex point
        // cloud; coincidences and kinks happen exactly where u is
        // orthogonal to a difference of two cloud points.
        let mut cloud: Vec<Vector> = Vec::new();
        for i in 0..family.members().len() {
            cloud.extend(family.member_vertices(i).expect("checked: polytope body"));
        }
        for i in 0..cloud.len() {
            for j in 0..i {
                let diff = cloud[i].sub(&cloud[j]);
                let (dx, dy) = (diff[0], diff[1]);
                if dx.hypot(dy) <= 1e-12 {
                    continue;
                }
                // u perpendicular to (dx, dy).
                angles.push(normalize_angle((-dx).atan2(dy)));
            }
        }
    }

    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    angles.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    // The first and last survivors can alias modulo pi.
    if angles.len() > 1
        && (angles[0] + std::f64::consts::PI - angles[angles.len() - 1]).abs() < 1e-9
    {
        angles.pop();
    }

    let mut dirs: Vec<Vector> = Vec::new();
    if angles.is_empty() {
        dirs.push(Vector::new(vec![1.0, 0.0]));
    } else {
        for (idx, &theta) in angles.iter().enumerate() {
            dirs.push(unit_at(theta));
            let next = if idx + 1 < angles.len() {
                angles[idx + 1]
            } else {
                angles[0] + std::f64::consts::PI
            };
            dirs.push(unit_at(normalize_angle(0.5 * (theta + next))));
        }
    }
    DirectionSet::new(dirs, Provenance::Critical2d)
}

fn normalize_angle(theta: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let mut t = theta % pi;
    if t < 0.0 {
        t += pi;
    }
    if t >= pi {
        t -= pi;
    }
    t
}

fn unit_at(theta: f64) -> Vector {
    Vector::new(vec![theta.cos(), theta.sin()])
}

/// Well-spread seeded unit vectors: stratified angles in the plane,
/// normalized Gaussians in higher dimension.
fn sampled_directions(dim: usize, count: usize, seed: u64) -> Vec<Vector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dirs = Vec::with_capacity(count);
    if dim == 2 {
        let pi = std::f64::consts::PI;
        for i in 0..count {
            let jitter: f64 = rng.gen();
            let theta = pi * (i as f64 + jitter) / count as f64;
            dirs.push(unit_at(theta));
        }
    } else {
        while dirs.len() < count {
            dirs.push(unit_vector(&mut rng, dim));
        }
    }
    dirs
}

fn resolve_directions(family: &Family, mode: &CheckMode) -> Result<(Vec<Vector>, ModeTag)> {
    match mode {
        CheckMode::Exact2d => {
            let set = critical_directions_2d(family)?;
            Ok((set.directions, ModeTag::Exact2d))
        }
        CheckMode::Restricted(set) => Ok((set.directions.clone(), ModeTag::Restricted)),
        CheckMode::Sampled { count, seed } => {
            if *count == 0 {
                return Err(Error::InvalidArgument(
                    "sampled mode needs at least one direction".into(),
                ));
            }
            Ok((sampled_directions(family.dim(), *count, *seed), ModeTag::Sampled))
        }
    }
}

fn satisfied_status(mode: ModeTag) -> VerdictStatus {
    match mode {
        ModeTag::Sampled => VerdictStatus::SatisfiedProbabilistic,
        _ => VerdictStatus::Satisfied,
    }
}

/// Decide non-separability: no hyperplane splits the family without
/// meeting a member.
pub fn check_nonseparable(family: &Family, mode: &CheckMode) -> Result<SeparationVerdict> {
    let (dirs, tag) = resolve_directions(family, mode)?;
    for (tested, u) in dirs.iter().enumerate() {
        if let Some((a, b)) = direction_gap(family, u)? {
            let offset = ((&a + &b) / rat(2, 1)).to_f64().ok_or_else(|| {
                Error::Internal("gap midpoint does not fit in a float".into())
            })?;
            return Ok(SeparationVerdict {
                status: VerdictStatus::Violated,
                witness: Some((u.clone(), offset)),
                directions_tested: tested + 1,
                mode: tag,
            });
        }
    }
    Ok(SeparationVerdict {
        status: satisfied_status(tag),
        witness: None,
        directions_tested: dirs.len(),
        mode: tag,
    })
}

/// Decide the depth hypothesis: no hyperplane meets more than `k` member
/// interiors.
pub fn check_depth_at_most_k(
    family: &Family,
    k: usize,
    mode: &CheckMode,
) -> Result<SeparationVerdict> {
    if k == 0 {
        return Err(Error::InvalidArgument("depth bound k must be >= 1".into()));
    }
    let (dirs, tag) = resolve_directions(family, mode)?;
    for (tested, u) in dirs.iter().enumerate() {
        let (depth, at) = depth_with_witness(family, u)?;
        if depth > k {
            let offset = at.to_f64().ok_or_else(|| {
                Error::Internal("depth witness does not fit in a float".into())
            })?;
            return Ok(SeparationVerdict {
                status: VerdictStatus::Violated,
                witness: Some((u.clone(), offset)),
                directions_tested: tested + 1,
                mode: tag,
            });
        }
    }
    Ok(SeparationVerdict {
        status: satisfied_status(tag),
        witness: None,
        directions_tested: dirs.len(),
        mode: tag,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{vec2, ConvexBody, Homothet};

    fn disk_family(centers: &[(f64, f64)], radii: &[f64]) -> Family {
        let body = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        let members = centers
            .iter()
            .zip(radii)
            .map(|(&(x, y), &r)| Homothet::new(vec2(x, y), r).unwrap())
            .collect();
        Family::new(body, members).unwrap()
    }

    #[test]
    fn touching_disks_are_nonseparable_along_and_across() {
        let fam = disk_family(&[(0.0, 0.0), (2.0, 0.0)], &[1.0, 1.0]);
        assert!(nonseparable_in_direction(&fam, &vec2(1.0, 0.0)).unwrap());
        assert!(nonseparable_in_direction(&fam, &vec2(0.0, 1.0)).unwrap());
    }

    #[test]
    fn distant_disks_separate_with_gap() {
        let fam = disk_family(&[(0.0, 0.0), (4.0, 0.0)], &[1.0, 1.0]);
        assert!(!nonseparable_in_direction(&fam, &vec2(1.0, 0.0)).unwrap());
        let verdict = check_nonseparable(&fam, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let (u, c) = verdict.witness.unwrap();
        // Gap (1, 3): witness plane near x = 2 with horizontal normal.
        assert!(u[0].abs() > 0.99);
        assert!((c.abs() - 2.0).abs() < 1e-6);
    }

    #[test]
    fn depth_of_disjoint_touching_and_coincident() {
        let fam = disk_family(&[(0.0, 0.0), (4.0, 0.0)], &[1.0, 1.0]);
        assert_eq!(depth_in_direction(&fam, &vec2(1.0, 0.0)).unwrap(), 1);
        let fam = disk_family(&[(0.0, 0.0), (2.0, 0.0)], &[1.0, 1.0]);
        assert_eq!(depth_in_direction(&fam, &vec2(1.0, 0.0)).unwrap(), 1);
        let fam = disk_family(&[(0.0, 0.0), (0.0, 0.0), (0.0, 0.0)], &[1.0, 1.0, 1.0]);
        assert_eq!(depth_in_direction(&fam, &vec2(1.0, 0.0)).unwrap(), 3);
    }

    #[test]
    fn two_row_grid_depth_with_vertical_normal_is_two() {
        let fam = disk_family(&[(0.0, 0.0), (2.0, 0.0), (0.0, 10.0), (2.0, 10.0)], &[1.0; 4]);
        assert_eq!(depth_in_direction(&fam, &vec2(0.0, 1.0)).unwrap(), 2);
    }

    #[test]
    fn two_row_touching_grid_exceeds_depth_two_off_axis() {
        // A slightly tilted line picks up both touching disks of one row
        // and still meets a disk of the other row: depth 3.
        let fam = disk_family(&[(0.0, 0.0), (2.0, 0.0), (0.0, 10.0), (2.0, 10.0)], &[1.0; 4]);
        let u = vec2(0.1f64.cos(), 0.1f64.sin());
        assert!(depth_in_direction(&fam, &u).unwrap() >= 3);
        let verdict = check_depth_at_most_k(&fam, 2, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        // Witness re-check: count interiors containing the offset.
        let (wu, wc) = verdict.witness.unwrap();
        let mut hit = 0;
        for member in fam.members() {
            let iv = project_interval(member, fam.body(), &wu).unwrap();
            if iv.lo < wc && wc < iv.hi {
                hit += 1;
            }
        }
        assert!(hit >= 3, "witness only meets {hit} interiors");
    }

    #[test]
    fn critical_directions_cover_tangencies() {
        let fam = disk_family(&[(0.0, 0.0), (2.0, 0.0)], &[1.0, 1.0]);
        let set = critical_directions_2d(&fam).unwrap();
        // The inner-tangent event <(2,0), u> = 2 happens at theta = 0,
        // i.e. u = (1, 0) — the vertical tangent line x = 1.
        assert!(set
            .directions()
            .iter()
            .any(|u| (u[0].abs() - 1.0).abs() < 1e-9 && u[1].abs() < 1e-9));
        assert_eq!(*set.provenance(), Provenance::Critical2d);
    }

    #[test]
    fn single_member_gets_a_sample_direction() {
        let fam = disk_family(&[(0.0, 0.0)], &[1.0]);
        let set = critical_directions_2d(&fam).unwrap();
        assert_eq!(set.directions().len(), 1);
        let verdict = check_nonseparable(&fam, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Satisfied);
    }

    #[test]
    fn chain_of_three_is_nonseparable_exactly() {
        let fam = disk_family(&[(0.0, 0.0), (2.0, 0.0), (4.0, 0.0)], &[1.0, 1.0, 1.0]);
        let verdict = check_nonseparable(&fam, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Satisfied);
        assert!(verdict.witness.is_none());
        assert!(verdict.directions_tested >= 2);
    }

    #[test]
    fn sampled_mode_reports_probabilistic() {
        let fam = disk_family(&[(0.0, 0.0), (2.0, 0.0)], &[1.0, 1.0]);
        let verdict =
            check_nonseparable(&fam, &CheckMode::Sampled { count: 64, seed: 7 }).unwrap();
        assert_eq!(verdict.status, VerdictStatus::SatisfiedProbabilistic);
        assert_eq!(verdict.directions_tested, 64);
        assert_eq!(verdict.mode, ModeTag::Sampled);
    }

    #[test]
    fn sampled_mode_still_finds_gaps() {
        let fam = disk_family(&[(0.0, 0.0), (4.0, 0.0)], &[1.0, 1.0]);
        let verdict =
            check_nonseparable(&fam, &CheckMode::Sampled { count: 128, seed: 3 }).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
    }

    #[test]
    fn restricted_mode_reports_over_given_set_only() {
        // Vertically separated disks look fine along x.
        let fam = disk_family(&[(0.0, 0.0), (0.0, 4.0)], &[1.0, 1.0]);
        let set = DirectionSet::new(vec![vec2(1.0, 0.0)], Provenance::FacetNormals).unwrap();
        let verdict = check_nonseparable(&fam, &CheckMode::Restricted(set)).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Satisfied);
        assert_eq!(verdict.mode, ModeTag::Restricted);
        assert_eq!(verdict.directions_tested, 1);
        // The full planar check sees the vertical gap.
        let verdict = check_nonseparable(&fam, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
    }

    #[test]
    fn polygon_members_get_polytope_events() {
        let body = ConvexBody::polytope(vec![
            vec2(0.0, 0.0),
            vec2(1.0, 0.0),
            vec2(0.0, 1.0),
        ])
        .unwrap();
        let members = vec![
            Homothet::new(vec2(0.0, 0.0), 1.0).unwrap(),
            Homothet::new(vec2(1.0, 0.0), 1.0).unwrap(),
        ];
        let fam = Family::new(body, members).unwrap();
        let verdict = check_nonseparable(&fam, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Satisfied);
        // Horizontal lines meet both interiors (the triangles sit side by
        // side), so depth 1 fails but depth 2 holds.
        let verdict = check_depth_at_most_k(&fam, 1, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Violated);
        let verdict = check_depth_at_most_k(&fam, 2, &CheckMode::Exact2d).unwrap();
        assert_eq!(verdict.status, VerdictStatus::Satisfied);
    }

    #[test]
    fn depth_zero_bound_rejected() {
        let fam = disk_family(&[(0.0, 0.0)], &[1.0]);
        assert!(check_depth_at_most_k(&fam, 0, &CheckMode::Exact2d).is_err());
    }
}
