//! The dual construction: inscribing a homothet into the convex hull of a
//! family of bounded stabbing depth.
//!
//! When the body is centrally symmetric and no hyperplane meets more than
//! `k` member interiors, the translate of `(1/k)(sum tau_i) K` centered at
//! the scale-weighted mean sits inside `conv(union of members)`. The fit
//! is sharp: for `k` collinear touching translates the inscribed homothet
//! touches the hull.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::covering::tau_weighted_center;
use crate::error::{Error, Result};
use crate::geometry::{
    homothet_support, hull_contains_point_with, ConvexBody, Family, Homothet, Vector,
    DEFAULT_TOLERANCE,
};
use crate::sampling::{circle_directions, sphere_directions, unit_vector};

/// How an inscribed homothet was verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InscribeMode {
    /// Every vertex of the inscribed polytope passed an exact (LP)
    /// membership test against the hull of all member vertices.
    ExactVertex,
    /// Support-function dominance was checked on this many well-spread
    /// directions; the hull of balls is not polyhedral, so the verdict is
    /// sampled rather than exact.
    SampledSupport { count: usize },
}

/// Result of [`inscribe_dual`].
#[derive(Debug, Clone)]
pub struct InscribeResult {
    pub inscribed: Homothet,
    pub k: usize,
    pub verified: bool,
    pub mode: InscribeMode,
}

/// Default direction count for sampled-support verification.
pub const DEFAULT_SUPPORT_DIRECTIONS: usize = 4096;

/// Tolerance for sampled support dominance.
const SUPPORT_TOL: f64 = 1e-7;

/// Place `(1/k)(sum tau_i) K` at the scale-weighted center of the family.
/// The body must be centrally symmetric; the depth hypothesis (no
/// hyperplane meets more than `k` interiors) is the caller's to check.
pub fn inscribe_dual(family: &Family, k: usize) -> Result<InscribeResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let body = family.body();
    let z = body.symmetry_center().ok_or_else(|| {
        Error::WrongTheorem(
            "inscribing requires a centrally symmetric body".into(),
        )
    })?;
    let scale = family.total_scale() / k as f64;
    let center = tau_weighted_center(family, &z);
    let inscribed = Homothet::new(center.sub(&z.scale(scale)), scale)?;
    let (verified, mode) = verify_inscribed_with(&inscribed, family, DEFAULT_SUPPORT_DIRECTIONS)?;
    Ok(InscribeResult {
        inscribed,
        k,
        verified,
        mode,
    })
}

/// Does the homothet `inscribed` (of the family's body) lie inside the
/// convex hull of the family's union? Polytope bodies are decided exactly
/// by vertex membership; ball bodies by support dominance over
/// [`DEFAULT_SUPPORT_DIRECTIONS`] sampled directions.
pub fn verify_inscribed(inscribed: &Homothet, family: &Family) -> Result<bool> {
    verify_inscribed_with(inscribed, family, DEFAULT_SUPPORT_DIRECTIONS)
        .map(|(ok, _)| ok)
}

/// [`verify_inscribed`] with an explicit direction budget for the sampled
/// path, also reporting which mode decided the verdict.
pub fn verify_inscribed_with(
    inscribed: &Homothet,
    family: &Family,
    directions: usize,
) -> Result<(bool, InscribeMode)> {
    let body = family.body();
    match body {
        ConvexBody::Polytope { vertices } => {
            // The hull of a union of polytopes is the hull of all their
            // vertices; containment of a polytope is containment of its
            // vertices.
            let mut cloud: Vec<Vector> = Vec::new();
            for i in 0..family.members().len() {
                cloud.extend(family.member_vertices(i).expect("checked: polytope body"));
            }
            for v in vertices {
                let p = inscribed.translation().add(&v.scale(inscribed.scale()));
                if !hull_contains_point_with(&p, &cloud, DEFAULT_TOLERANCE)? {
                    return Ok((false, InscribeMode::ExactVertex));
                }
            }
            Ok((true, InscribeMode::ExactVertex))
        }
        ConvexBody::Ball { .. } => {
            if directions == 0 {
                return Err(Error::InvalidArgument(
                    "sampled verification needs at least one direction".into(),
                ));
            }
            let dirs = support_directions(family.dim(), directions);
            for u in &dirs {
                let inner = homothet_support(body, inscribed, u)?;
                let mut hull = f64::NEG_INFINITY;
                for m in family.members() {
                    hull = hull.max(homothet_support(body, m, u)?);
                }
                if inner > hull + SUPPORT_TOL {
                    return Ok((false, InscribeMode::SampledSupport { count: directions }));
                }
            }
            Ok((true, InscribeMode::SampledSupport { count: directions }))
        }
    }
}

fn support_directions(dim: usize, count: usize) -> Vec<Vector> {
    match dim {
        2 => circle_directions(count),
        3 => sphere_directions(count),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x1d5c_81be);
            (0..count).map(|_| unit_vector(&mut rng, dim)).collect()
        }
    }
}
