//! Minkowski asymmetry: the least `mu` such that some interior center `q`
//! gives `(K - q) ⊆ -mu(K - q)`, written `sigma`.
//!
//! `sigma = 1` exactly for centrally symmetric bodies and `sigma <= d` for
//! every convex body in dimension `d`, with equality for simplices. The
//! search couples `mu` and `q` bilinearly, so we bisect on `mu` and decide
//! each level by a linear feasibility problem over `q` and the
//! convex-combination weights; feasibility is monotone in `mu`, which makes
//! the bisection sound.

use crate::error::{Error, Result};
use crate::geometry::{ConvexBody, Vector};
use crate::lp::{LpSolution, StandardLp};

/// Outcome of the asymmetry search.
#[derive(Debug, Clone)]
pub struct AsymmetryResult {
    /// The asymmetry value, reported as the midpoint of the final bracket.
    pub sigma: f64,
    /// A center realizing the reflection containment at the certified
    /// level `sigma + certified_gap / 2`.
    pub center: Vector,
    /// Number of feasibility solves performed.
    pub iterations: usize,
    /// Width of the final bisection bracket.
    pub certified_gap: f64,
}

/// Width at which the `mu` bisection stops.
const BRACKET_TOL: f64 = 1e-9;

/// Feasibility margins this far below zero still count as feasible. The
/// containment is tight (zero slack) at `mu = sigma` — for a simplex at
/// `mu = d` for instance — so a strictly positive threshold would reject
/// the exact optimum.
const MARGIN_TOL: f64 = 1e-9;

/// Largest `t >= 0` with `q + t * dir` in the body. `q` must be strictly
/// interior and `dir` nonzero; `dir` is not required to be unit length
/// (the result scales inversely with its norm).
pub fn radial_scale(body: &ConvexBody, q: &Vector, dir: &Vector) -> Result<f64> {
    if q.dim() != body.dim() || dir.dim() != body.dim() {
        return Err(Error::InvalidArgument(format!(
            "dimension mismatch: body is {}-dimensional, q is {}, dir is {}",
            body.dim(),
            q.dim(),
            dir.dim()
        )));
    }
    let norm = dir.norm();
    if !(norm > 0.0) {
        return Err(Error::InvalidArgument("direction must be nonzero".into()));
    }
    ensure_strictly_interior(body, q)?;
    match body {
        ConvexBody::Ball { center, radius } => {
            // |q + t dir - center|^2 = radius^2, positive root.
            let rel = q.sub(center);
            let a = norm * norm;
            let b = 2.0 * rel.dot(dir);
            let c = rel.dot(&rel) - radius * radius;
            let disc = b * b - 4.0 * a * c;
            debug_assert!(disc >= 0.0, "interior start must cross the sphere");
            Ok((-b + disc.sqrt()) / (2.0 * a))
        }
        ConvexBody::Polytope { vertices } => {
            let d = body.dim();
            let m = vertices.len();
            // maximize t subject to q + t dir = sum_j l_j v_j, sum l = 1,
            // l >= 0, t >= 0. Columns: l_0..l_{m-1}, t.
            let mut lp = StandardLp::new(m + 1);
            lp.set_objective(m, -1.0);
            for r in 0..d {
                let mut entries: Vec<(usize, f64)> =
                    (0..m).map(|j| (j, vertices[j][r])).collect();
                entries.push((m, -dir[r]));
                lp.add_row(&entries, q[r]);
            }
            let ones: Vec<(usize, f64)> = (0..m).map(|j| (j, 1.0)).collect();
            lp.add_row(&ones, 1.0);
            match lp.solve(1e-9) {
                LpSolution::Optimal { x, .. } => Ok(x[m]),
                LpSolution::Infeasible { residual } => Err(Error::Internal(format!(
                    "radial-scale system infeasible from an interior point (residual {residual:.3e})"
                ))),
                LpSolution::Unbounded => Err(Error::Internal(
                    "radial scale unbounded on a bounded body".into(),
                )),
            }
        }
    }
}

/// Least `mu` with `(K - q) ⊆ -mu(K - q)` for the given interior `q`.
///
/// For a polytope this is the largest, over vertices `v`, of the ratio of
/// `|v - q|` to the distance from `q` to the boundary along `q - v`; for a
/// ball centered at `z` with radius `r` it is `(r + |z-q|) / (r - |z-q|)`.
pub fn asymmetry_at_point(body: &ConvexBody, q: &Vector) -> Result<f64> {
    ensure_strictly_interior(body, q)?;
    match body {
        ConvexBody::Ball { center, radius } => {
            let dist = q.dist(center);
            Ok((radius + dist) / (radius - dist))
        }
        ConvexBody::Polytope { vertices } => {
            let mut mu: f64 = 1.0;
            for v in vertices {
                let toward = q.sub(v);
                let len = toward.norm();
                if len <= 1e-12 {
                    return Err(Error::InvalidArgument(
                        "q coincides with a vertex; not strictly interior".into(),
                    ));
                }
                let unit = toward.scale(1.0 / len);
                let reach = radial_scale(body, q, &unit)?;
                if reach <= 1e-12 {
                    return Err(Error::Internal(
                        "zero radial reach from an interior point".into(),
                    ));
                }
                mu = mu.max(len / reach);
            }
            Ok(mu)
        }
    }
}

/// Decide whether some center `q` achieves `(K - q) ⊆ -mu(K - q)` at the
/// given level, returning such a `q` when one exists.
///
/// Feasibility is decided with a maximized uniform weight margin; the level
/// counts as feasible when the margin is no worse than a small negative
/// tolerance, so exactly-tight levels are accepted. The feasible levels
/// form an upward-closed interval, which tests assert directly.
pub fn reflection_feasible_at(body: &ConvexBody, mu: f64) -> Result<Option<Vector>> {
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "reflection level must be positive and finite (got {mu})"
        )));
    }
    match body {
        ConvexBody::Ball { center, .. } => Ok(if mu >= 1.0 {
            Some(center.clone())
        } else {
            None
        }),
        ConvexBody::Polytope { vertices } => {
            Ok(sigma_margin_lp(vertices, body.dim(), mu).map(|(q, _)| q))
        }
    }
}

/// Asymmetry of the body, its optimizing center, and the certification
/// data of the bisection.
pub fn minkowski_sigma(body: &ConvexBody) -> Result<AsymmetryResult> {
    let d = body.dim();
    let vertices = match body {
        ConvexBody::Ball { center, .. } => {
            return Ok(AsymmetryResult {
                sigma: 1.0,
                center: center.clone(),
                iterations: 0,
                certified_gap: 0.0,
            });
        }
        ConvexBody::Polytope { vertices } => vertices,
    };

    let mut iterations = 0usize;

    // Symmetric bodies close the search immediately at mu = 1.
    iterations += 1;
    if let Some((q, _)) = sigma_margin_lp(vertices, d, 1.0) {
        return Ok(AsymmetryResult {
            sigma: 1.0,
            center: q,
            iterations,
            certified_gap: 0.0,
        });
    }

    let mut lo = 1.0f64;
    let mut hi = d as f64;
    iterations += 1;
    let mut best = match sigma_margin_lp(vertices, d, hi) {
        Some((q, _)) => q,
        None => {
            return Err(Error::Internal(format!(
                "reflection containment infeasible at mu = {hi}; the asymmetry of a \
                 convex body never exceeds its dimension, so this is a numerical failure"
            )));
        }
    };

    while hi - lo > BRACKET_TOL {
        let mid = 0.5 * (lo + hi);
        iterations += 1;
        match sigma_margin_lp(vertices, d, mid) {
            Some((q, _)) => {
                hi = mid;
                best = q;
            }
            None => lo = mid,
        }
    }

    Ok(AsymmetryResult {
        sigma: 0.5 * (lo + hi),
        center: best,
        iterations,
        certified_gap: hi - lo,
    })
}

/// Margin LP at a fixed level `mu`.
///
/// A center `q` works iff `((1+mu) q - v_i) / mu` lies in the body for
/// every vertex `v_i`. Writing each membership with weights
/// `l_j = l'_j + s` (all weights at least `s`) and maximizing the shared
/// margin `s` turns the search for `q` into one LP:
///
/// for every vertex i:
///   mu * sum_j l'_ij v_j + mu * s * V - (1+mu) q = -v_i,
///   sum_j l'_ij + m s = 1,
/// with `V = sum_j v_j`, `l' >= 0`, `q` and `s` free. The margin is
/// bounded by `1/m`, and the system is feasible for any `mu > 0` once `s`
/// may go negative, so the solve always returns an optimum.
fn sigma_margin_lp(vertices: &[Vector], d: usize, mu: f64) -> Option<(Vector, f64)> {
    let m = vertices.len();
    // Columns: l' blocks (m per vertex), then q split, then s split.
    let q_pos = m * m;
    let q_neg = q_pos + d;
    let s_pos = q_neg + d;
    let s_neg = s_pos + 1;
    let mut lp = StandardLp::new(s_neg + 1);
    lp.set_objective(s_pos, -1.0);
    lp.set_objective(s_neg, 1.0);

    let vertex_sum: Vec<f64> = (0..d).map(|r| vertices.iter().map(|v| v[r]).sum()).collect();

    for (i, vi) in vertices.iter().enumerate() {
        let block = i * m;
        for r in 0..d {
            let mut entries: Vec<(usize, f64)> = (0..m)
                .map(|j| (block + j, mu * vertices[j][r]))
                .collect();
            entries.push((s_pos, mu * vertex_sum[r]));
            entries.push((s_neg, -mu * vertex_sum[r]));
            entries.push((q_pos + r, -(1.0 + mu)));
            entries.push((q_neg + r, 1.0 + mu));
            lp.add_row(&entries, -vi[r]);
        }
        let mut sum_row: Vec<(usize, f64)> = (0..m).map(|j| (block + j, 1.0)).collect();
        sum_row.push((s_pos, m as f64));
        sum_row.push((s_neg, -(m as f64)));
        lp.add_row(&sum_row, 1.0);
    }

    match lp.solve(1e-9) {
        LpSolution::Optimal { x, .. } => {
            let margin = x[s_pos] - x[s_neg];
            if margin >= -MARGIN_TOL {
                let q: Vec<f64> = (0..d).map(|r| x[q_pos + r] - x[q_neg + r]).collect();
                Some((Vector::new(q), margin))
            } else {
                None
            }
        }
        // The margin LP is always feasible and bounded; either failure
        // mode means the solver lost its footing, and the level is
        // conservatively reported infeasible so bisection keeps a sound
        // upper bracket.
        LpSolution::Infeasible { .. } | LpSolution::Unbounded => None,
    }
}

fn ensure_strictly_interior(body: &ConvexBody, q: &Vector) -> Result<()> {
    if q.dim() != body.dim() {
        return Err(Error::InvalidArgument(format!(
            "dimension mismatch: body is {}-dimensional, q is {}",
            body.dim(),
            q.dim()
        )));
    }
    let interior = match body {
        ConvexBody::Ball { center, radius } => q.dist(center) < *radius,
        ConvexBody::Polytope { vertices } => {
            // Maximize the least convex-combination weight; q is strictly
            // interior iff the optimum is positive.
            let m = vertices.len();
            let d = body.dim();
            let mut lp = StandardLp::new(m + 1);
            lp.set_objective(m, -1.0);
            let vertex_sum: Vec<f64> =
                (0..d).map(|r| vertices.iter().map(|v| v[r]).sum()).collect();
            for r in 0..d {
                let mut entries: Vec<(usize, f64)> =
                    (0..m).map(|j| (j, vertices[j][r])).collect();
                entries.push((m, vertex_sum[r]));
                lp.add_row(&entries, q[r]);
            }
            let mut sum_row: Vec<(usize, f64)> = (0..m).map(|j| (j, 1.0)).collect();
            sum_row.push((m, m as f64));
            lp.add_row(&sum_row, 1.0);
            match lp.solve(1e-9) {
                LpSolution::Optimal { x, .. } => x[m] > 1e-10,
                _ => false,
            }
        }
    };
    if interior {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "point must be strictly interior to the body".into(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{vec2, vec3};

    fn unit_disk() -> ConvexBody {
        ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap()
    }

    fn corner_triangle() -> ConvexBody {
        ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(1.0, 0.0), vec2(0.0, 1.0)]).unwrap()
    }

    #[test]
    fn radial_scale_of_disk() {
        let disk = unit_disk();
        let t = radial_scale(&disk, &vec2(0.0, 0.0), &vec2(0.0, 1.0)).unwrap();
        assert!((t - 1.0).abs() < 1e-12);
        let t = radial_scale(&disk, &vec2(0.5, 0.0), &vec2(1.0, 0.0)).unwrap();
        assert!((t - 0.5).abs() < 1e-12);
    }

    #[test]
    fn radial_scale_of_triangle_hits_hypotenuse() {
        let tri = corner_triangle();
        let s = 0.5f64.sqrt();
        let t = radial_scale(&tri, &vec2(0.25, 0.25), &vec2(s, s)).unwrap();
        // Exits through x + y = 1 at (1/2, 1/2): length sqrt(2)/4.
        assert!((t - 2.0f64.sqrt() / 4.0).abs() < 1e-9);
    }

    #[test]
    fn radial_scale_rejects_exterior_and_zero_direction() {
        let disk = unit_disk();
        assert!(radial_scale(&disk, &vec2(2.0, 0.0), &vec2(1.0, 0.0)).is_err());
        assert!(radial_scale(&disk, &vec2(0.0, 0.0), &vec2(0.0, 0.0)).is_err());
        let tri = corner_triangle();
        assert!(radial_scale(&tri, &vec2(1.0, 1.0), &vec2(1.0, 0.0)).is_err());
    }

    #[test]
    fn pointwise_asymmetry_closed_forms() {
        let disk = unit_disk();
        assert!((asymmetry_at_point(&disk, &vec2(0.0, 0.0)).unwrap() - 1.0).abs() < 1e-12);
        assert!((asymmetry_at_point(&disk, &vec2(0.5, 0.0)).unwrap() - 3.0).abs() < 1e-12);

        let square = ConvexBody::polytope(vec![
            vec2(1.0, 1.0),
            vec2(-1.0, 1.0),
            vec2(-1.0, -1.0),
            vec2(1.0, -1.0),
        ])
        .unwrap();
        assert!((asymmetry_at_point(&square, &vec2(0.0, 0.0)).unwrap() - 1.0).abs() < 1e-9);

        let tri = corner_triangle();
        let at_centroid = asymmetry_at_point(&tri, &vec2(1.0 / 3.0, 1.0 / 3.0)).unwrap();
        assert!((at_centroid - 2.0).abs() < 1e-9);
    }

    #[test]
    fn sigma_of_symmetric_bodies_is_one() {
        let res = minkowski_sigma(&unit_disk()).unwrap();
        assert_eq!(res.sigma, 1.0);
        assert_eq!(res.certified_gap, 0.0);

        let square = ConvexBody::polytope(vec![
            vec2(1.0, 1.0),
            vec2(-1.0, 1.0),
            vec2(-1.0, -1.0),
            vec2(1.0, -1.0),
        ])
        .unwrap();
        let res = minkowski_sigma(&square).unwrap();
        assert_eq!(res.sigma, 1.0);
        assert!(res.center.dist(&vec2(0.0, 0.0)) < 1e-7);
    }

    #[test]
    fn sigma_of_triangle_is_two() {
        let res = minkowski_sigma(&corner_triangle()).unwrap();
        assert!((res.sigma - 2.0).abs() < 1e-6, "sigma = {}", res.sigma);
        assert!(res.certified_gap < 2e-9);
        // The reported center realizes (close to) the optimal ratio.
        let at_center = asymmetry_at_point(&corner_triangle(), &res.center).unwrap();
        assert!(at_center <= 2.0 + 1e-5, "mu(q*) = {at_center}");
    }

    #[test]
    fn sigma_of_tetrahedron_is_three() {
        let tet = ConvexBody::polytope(vec![
            vec3(0.0, 0.0, 0.0),
            vec3(1.0, 0.0, 0.0),
            vec3(0.0, 1.0, 0.0),
            vec3(0.0, 0.0, 1.0),
        ])
        .unwrap();
        let res = minkowski_sigma(&tet).unwrap();
        assert!((res.sigma - 3.0).abs() < 1e-6, "sigma = {}", res.sigma);
        let at_center = asymmetry_at_point(&tet, &res.center).unwrap();
        assert!(at_center <= 3.0 + 1e-5);
    }

    #[test]
    fn feasibility_is_monotone_for_triangle() {
        let tri = corner_triangle();
        assert!(reflection_feasible_at(&tri, 1.0).unwrap().is_none());
        assert!(reflection_feasible_at(&tri, 1.5).unwrap().is_none());
        assert!(reflection_feasible_at(&tri, 2.0 - 1e-4).unwrap().is_none());
        assert!(reflection_feasible_at(&tri, 2.0).unwrap().is_some());
        assert!(reflection_feasible_at(&tri, 2.5).unwrap().is_some());
        assert!(reflection_feasible_at(&tri, 10.0).unwrap().is_some());
    }
}
