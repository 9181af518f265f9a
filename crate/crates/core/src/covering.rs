//! Covering constructions: one translate of a scaled body that contains a
//! whole non-separable family, with the scale controlled by the sum of the
//! homothety coefficients.
//!
//! Four constructions are provided, one per symmetry regime: concrete
//! balls (cover radius = sum of radii), centrally symmetric bodies (factor
//! `sum tau_i`), arbitrary bodies (factor `(sigma+1)/2 * sum tau_i` with
//! `sigma` the Minkowski asymmetry), and simplices under facet-parallel
//! non-separability (factor `(d+1)/2 * sum tau_i`). Each returns the
//! specific translate the construction prescribes — the weighted centroid
//! — rather than an optimal one; [`minimal_cover`] measures tightness
//! separately.
//!
//! Every construction is checked by [`verify_cover`], which reduces
//! coverage to finitely many membership tests through the erosion
//! identity: `o + tau K ⊆ t + T K` iff `o - t ∈ (T - tau) K`, valid for
//! any convex `K` by comparing support functions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asymmetry::minkowski_sigma;
use crate::error::{Error, Result};
use crate::geometry::{
    centroid, convex_hull_2d, member_scaled_with, ConvexBody, Family, Homothet, Vector,
    DEFAULT_TOLERANCE,
};
use crate::lp::{LpSolution, StandardLp};
use crate::separability::{nonseparable_in_direction, DirectionSet};

/// Which covering construction produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremTag {
    Balls,
    Symmetric,
    GeneralSigma,
    /// The dimension-only relaxation of [`GeneralSigma`]: factor
    /// `(d+1)/2`, valid because the asymmetry never exceeds `d`.
    DimensionBound,
    SimplexFacetParallel,
}

/// A constructed cover `t + T K` (relative to the family's own body `K`),
/// with its verification status.
#[derive(Debug, Clone)]
pub struct CoverResult {
    /// The covering homothet of the original body.
    pub cover: Homothet,
    pub theorem: TheoremTag,
    /// The origin shift the construction normalized the body by (symmetry
    /// center, asymmetry center, or simplex centroid).
    pub normalization: Vector,
    /// Outcome of [`verify_cover`] on the constructed cover.
    pub verified: bool,
    /// Set when a cheap necessary condition for the construction's
    /// hypothesis fails; the cover is still returned so the failure is
    /// observable.
    pub warning: Option<String>,
}

/// The scale-weighted mean translation after shifting the body's origin to
/// `z`: members `o_i + tau_i K` re-read as `(o_i + tau_i z) + tau_i (K-z)`,
/// and the mean of the adjusted translations weights each by `tau_i`.
pub fn tau_weighted_center(family: &Family, z: &Vector) -> Vector {
    let total = family.total_scale();
    let mut acc = Vector::zeros(family.dim());
    for m in family.members() {
        acc = acc.add(&m.translation().add(&z.scale(m.scale())).scale(m.scale() / total));
    }
    acc
}

/// Cheap necessary check behind the `warning` field: a family separable
/// along a coordinate axis is separable outright.
fn axis_separation_warning(family: &Family) -> Option<String> {
    for r in 0..family.dim() {
        let axis = Vector::axis(family.dim(), r);
        match nonseparable_in_direction(family, &axis) {
            Ok(true) => {}
            Ok(false) => {
                return Some(format!(
                    "family is separable along coordinate axis {r}; the covering \
                     hypothesis fails and the factor is not guaranteed"
                ));
            }
            Err(_) => return Some("axis separation pre-check failed to run".into()),
        }
    }
    None
}

fn build_cover(
    family: &Family,
    factor: f64,
    z: &Vector,
    theorem: TheoremTag,
    warning: Option<String>,
) -> Result<CoverResult> {
    let total = family.total_scale();
    let scale = factor * total;
    let center = tau_weighted_center(family, z);
    // `center + scale (K - z)` expressed against the original body.
    let translation = center.sub(&z.scale(scale));
    let cover = Homothet::new(translation, scale)?;
    let verified = verify_cover(family, &cover)?;
    Ok(CoverResult {
        cover,
        theorem,
        normalization: z.clone(),
        verified,
        warning,
    })
}

/// Cover a non-separable family of balls by the ball of radius
/// `sum of member radii` centered at their radius-weighted center.
pub fn cover_balls(family: &Family) -> Result<CoverResult> {
    let z = match family.body() {
        ConvexBody::Ball { center, .. } => center.clone(),
        ConvexBody::Polytope { .. } => {
            return Err(Error::WrongTheorem(
                "ball cover requires a ball body; use the symmetric or general cover".into(),
            ));
        }
    };
    build_cover(
        family,
        1.0,
        &z,
        TheoremTag::Balls,
        axis_separation_warning(family),
    )
}

/// Cover a non-separable family over a centrally symmetric body by
/// `(sum tau_i) K` at the weighted center. `symmetry_center` must be the
/// body's actual center of symmetry.
pub fn cover_symmetric(family: &Family, symmetry_center: &Vector) -> Result<CoverResult> {
    let body = family.body();
    match body.symmetry_center() {
        Some(actual) => {
            let tol = DEFAULT_TOLERANCE * body.diameter().max(1.0);
            if actual.dist(symmetry_center) > tol {
                return Err(Error::InvalidArgument(format!(
                    "given symmetry center is off by {:.3e}",
                    actual.dist(symmetry_center)
                )));
            }
        }
        None => {
            return Err(Error::WrongTheorem(
                "body is not centrally symmetric; use the general cover".into(),
            ));
        }
    }
    build_cover(
        family,
        1.0,
        symmetry_center,
        TheoremTag::Symmetric,
        axis_separation_warning(family),
    )
}

/// Cover a non-separable family over an arbitrary body by
/// `((sigma+1)/2)(sum tau_i) K`, where `sigma` is the Minkowski asymmetry
/// and the body is re-centered at the asymmetry center.
///
/// The factor uses the certified upper end of the asymmetry bracket, so
/// the constructed cover is never undersized by bisection error.
pub fn cover_general(family: &Family) -> Result<CoverResult> {
    let asym = minkowski_sigma(family.body())?;
    let mu_certified = asym.sigma + asym.certified_gap / 2.0;
    build_cover(
        family,
        (mu_certified + 1.0) / 2.0,
        &asym.center,
        TheoremTag::GeneralSigma,
        axis_separation_warning(family),
    )
}

/// Cover a non-separable family by `((d+1)/2)(sum tau_i) K`: the
/// dimension-only weakening of [`cover_general`]. The asymmetry of a
/// `d`-dimensional convex body never exceeds `d`, and scaling about the
/// asymmetry center is monotone (the center is interior), so the same
/// construction at factor `(d+1)/2` always covers whenever the sharper
/// sigma-based one does.
pub fn cover_corollary(family: &Family) -> Result<CoverResult> {
    let asym = minkowski_sigma(family.body())?;
    let d = family.dim() as f64;
    build_cover(
        family,
        (d + 1.0) / 2.0,
        &asym.center,
        TheoremTag::DimensionBound,
        axis_separation_warning(family),
    )
}

/// Cover a family over a simplex body by `((d+1)/2)(sum tau_i) K` at the
/// weighted center, the body normalized about its centroid. The required
/// hypothesis is non-separability along the `d+1` facet normals only; its
/// failure is reported through the warning field.
pub fn cover_simplex_facet_parallel(family: &Family) -> Result<CoverResult> {
    let body = family.body();
    if !body.is_simplex() {
        return Err(Error::WrongTheorem(
            "facet-parallel cover requires a simplex body".into(),
        ));
    }
    let z = centroid(body)?;
    let d = family.dim() as f64;
    let mut warning = None;
    match DirectionSet::facet_normals(body) {
        Ok(set) => {
            for u in set.directions() {
                if !nonseparable_in_direction(family, u)? {
                    warning = Some(
                        "family is separable along a facet normal; the facet-parallel \
                         hypothesis fails and the factor is not guaranteed"
                            .into(),
                    );
                    break;
                }
            }
        }
        Err(e) => {
            warning = Some(format!("facet-normal pre-check failed to run: {e}"));
        }
    }
    build_cover(
        family,
        (d + 1.0) / 2.0,
        &z,
        TheoremTag::SimplexFacetParallel,
        warning,
    )
}

/// Does `cover = t + T K` contain every member of the family? Decided by
/// the erosion identity: member `i` is covered iff `o_i - t` lies in
/// `(T - tau_i) K`. Returns false immediately when `T` is smaller than
/// some member's scale.
pub fn verify_cover(family: &Family, cover: &Homothet) -> Result<bool> {
    verify_cover_with(family, cover, DEFAULT_TOLERANCE)
}

/// [`verify_cover`] with an explicit membership tolerance.
pub fn verify_cover_with(family: &Family, cover: &Homothet, tol: f64) -> Result<bool> {
    let body = family.body();
    let big_t = cover.scale();
    for m in family.members() {
        let shrink = big_t - m.scale();
        if shrink < -tol {
            return Ok(false);
        }
        let p = m.translation().sub(cover.translation());
        if !member_scaled_with(&p, shrink.max(0.0), body, tol)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For ball families: the least leftover margin of a covering ball, i.e.
/// `min_i (R - rho_i - |c_i - C|)` with `C`, `R` the cover's concrete
/// center and radius. Nonnegative (up to tolerance) iff the cover holds.
pub fn ball_cover_slack(family: &Family, cover: &Homothet) -> Result<f64> {
    let (z, r) = match family.body() {
        ConvexBody::Ball { center, radius } => (center, *radius),
        ConvexBody::Polytope { .. } => {
            return Err(Error::WrongTheorem(
                "cover slack is defined for ball families".into(),
            ));
        }
    };
    let big_c = cover.translation().add(&z.scale(cover.scale()));
    let big_r = cover.scale() * r;
    let mut slack = f64::INFINITY;
    for i in 0..family.members().len() {
        let (c, rho) = family.member_ball(i).expect("checked: ball body");
        slack = slack.min(big_r - rho - c.dist(&big_c));
    }
    Ok(slack)
}

/// The smallest `T` (with its translation `t`) such that `t + T K`
/// contains the whole family.
///
/// Polytope bodies reduce to a linear program over the member vertices
/// (in the plane, pre-filtered to their convex hull); ball bodies minimize
/// the concrete radius `max_i (|c_i - t| + rho_i)` by subgradient descent
/// with restarts (tolerance 1e-7).
pub fn minimal_cover(family: &Family) -> Result<(f64, Vector)> {
    match family.body() {
        ConvexBody::Ball { center, radius } => {
            let balls: Vec<(Vector, f64)> = (0..family.members().len())
                .map(|i| family.member_ball(i).expect("checked: ball body"))
                .collect();
            let (best_f, best_c) = minimal_enclosing_ball(&balls);
            // Convert the concrete ball (center, radius) back to a
            // homothet of K.
            let scale = best_f / radius;
            let translation = best_c.sub(&center.scale(scale));
            Ok((scale, translation))
        }
        ConvexBody::Polytope { vertices } => {
            let d = family.dim();
            let m = vertices.len();
            let mut cloud: Vec<Vector> = Vec::new();
            for i in 0..family.members().len() {
                cloud.extend(family.member_vertices(i).expect("checked: polytope body"));
            }
            if d == 2 && cloud.len() > 8 {
                cloud = convex_hull_2d(&cloud);
            }
            let p = cloud.len();
            // Columns: per cloud point a block of m weights (already
            // multiplied by T), then t split, then T.
            let t_pos = p * m;
            let t_neg = t_pos + d;
            let t_col = t_neg + d;
            let mut lp = StandardLp::new(t_col + 1);
            lp.set_objective(t_col, 1.0);
            for (pi, point) in cloud.iter().enumerate() {
                let block = pi * m;
                for r in 0..d {
                    let mut entries: Vec<(usize, f64)> =
                        (0..m).map(|j| (block + j, vertices[j][r])).collect();
                    entries.push((t_pos + r, 1.0));
                    entries.push((t_neg + r, -1.0));
                    lp.add_row(&entries, point[r]);
                }
                let mut sum_row: Vec<(usize, f64)> =
                    (0..m).map(|j| (block + j, 1.0)).collect();
                sum_row.push((t_col, -1.0));
                lp.add_row(&sum_row, 0.0);
            }
            match lp.solve(1e-9) {
                LpSolution::Optimal { x, .. } => {
                    let t: Vec<f64> = (0..d).map(|r| x[t_pos + r] - x[t_neg + r]).collect();
                    Ok((x[t_col], Vector::new(t)))
                }
                LpSolution::Infeasible { residual } => Err(Error::Internal(format!(
                    "minimal-cover system infeasible (residual {residual:.3e}); \
                     a large enough homothet always covers"
                ))),
                LpSolution::Unbounded => Err(Error::Internal(
                    "minimal-cover objective unbounded below zero".into(),
                )),
            }
        }
    }
}

/// Minimize `f(t) = max_i (|c_i - t| + rho_i)` over centers `t`. Convex
/// and piecewise smooth; descended along averaged subgradients of the
/// near-active members with step halving, from the radius-weighted center
/// and 20 seeded random restarts.
fn minimal_enclosing_ball(balls: &[(Vector, f64)]) -> (f64, Vector) {
    let d = balls[0].0.dim();
    let total: f64 = balls.iter().map(|b| b.1).sum();
    let mut start = Vector::zeros(d);
    for (c, rho) in balls {
        start = start.add(&c.scale(rho / total));
    }
    let spread = balls
        .iter()
        .map(|(c, rho)| c.dist(&start) + rho)
        .fold(0.0f64, f64::max)
        .max(1e-6);

    let mut best_c = start.clone();
    let mut best_f = eval_max_radius(balls, &best_c);
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d45_6231);
    for restart in 0..=20 {
        let t0 = if restart == 0 {
            start.clone()
        } else {
            let jitter: Vec<f64> = (0..d)
                .map(|_| (rng.gen::<f64>() - 0.5) * spread)
                .collect();
            start.add(&Vector::new(jitter))
        };
        let (f, c) = descend_max_radius(balls, t0, spread);
        if f < best_f {
            best_f = f;
            best_c = c;
        }
    }
    (best_f, best_c)
}

fn eval_max_radius(balls: &[(Vector, f64)], t: &Vector) -> f64 {
    balls
        .iter()
        .map(|(c, rho)| c.dist(t) + rho)
        .fold(f64::NEG_INFINITY, f64::max)
}

fn descend_max_radius(balls: &[(Vector, f64)], mut t: Vector, scale: f64) -> (f64, Vector) {
    let mut f = eval_max_radius(balls, &t);
    let mut step = scale;
    for _ in 0..500 {
        // Average the subgradients of members within a whisker of the max;
        // a vanishing average certifies (approximate) optimality.
        let window = 1e-9 * (1.0 + f.abs());
        let mut g = Vector::zeros(t.dim());
        let mut active = 0;
        for (c, rho) in balls {
            let dist = c.dist(&t);
            if dist + rho >= f - window && dist > 1e-15 {
                g = g.add(&t.sub(c).scale(1.0 / dist));
                active += 1;
            }
        }
        if active == 0 {
            break; // t sits on the deepest center; descent direction undefined
        }
        let g = g.scale(1.0 / active as f64);
        if g.norm() < 1e-10 {
            break;
        }
        let mut improved = false;
        while step > 1e-14 {
            let candidate = t.sub(&g.scale(step));
            let fc = eval_max_radius(balls, &candidate);
            if fc < f - 1e-15 {
                t = candidate;
                f = fc;
                step *= 1.5;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (f, t)
}
