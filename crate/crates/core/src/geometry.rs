//! Convex bodies, homothets, families, and the geometric primitives the
//! rest of the crate is built on.
//!
//! Bodies are closed. Polytopes are vertex-represented only; membership
//! and hull queries go through small LP feasibility problems over
//! convex-combination weights, never through half-space lists. Predicates
//! use an absolute slack of [`DEFAULT_TOLERANCE`] (boundary counts as
//! inside); rows with large coefficients are equilibrated, so for data far
//! from unit scale the slack is relative to that scale.

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{LpSolution, StandardLp};

/// Geometric predicate slack. Points within this distance of a boundary
/// count as inside.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Tolerance for the unit-norm precondition on direction arguments.
pub(crate) const UNIT_NORM_TOL: f64 = 1e-9;

// ---------------------------------------------------------------------------
// Vector

/// A point or direction in R^d, d >= 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector(Vec<f64>);

impl Vector {
    pub fn new(coords: Vec<f64>) -> Self {
        debug_assert!(!coords.is_empty() && coords.iter().all(|c| c.is_finite()));
        Vector(coords)
    }

    pub fn zeros(d: usize) -> Self {
        Vector(vec![0.0; d])
    }

    /// Standard basis vector `e_axis` in dimension `d`.
    pub fn axis(d: usize, axis: usize) -> Self {
        let mut v = vec![0.0; d];
        v[axis] = 1.0;
        Vector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dist(&self, other: &Vector) -> f64 {
        self.sub(other).norm()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: f64) -> Vector {
        Vector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Vector {
        self.scale(-1.0)
    }

    /// Unit vector in the same direction; errors on the zero vector.
    pub fn normalized(&self) -> Result<Vector> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::InvalidArgument("zero direction".into()));
        }
        Ok(self.scale(1.0 / n))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl From<Vec<f64>> for Vector {
    fn from(v: Vec<f64>) -> Self {
        Vector::new(v)
    }
}

/// Convenience constructor for 2-D vectors.
pub fn vec2(x: f64, y: f64) -> Vector {
    Vector::new(vec![x, y])
}

/// Convenience constructor for 3-D vectors.
pub fn vec3(x: f64, y: f64, z: f64) -> Vector {
    Vector::new(vec![x, y, z])
}

// ---------------------------------------------------------------------------
// Interval (floating-point)

/// A closed interval [lo, hi] on the real line, lo <= hi.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::InvalidArgument(format!(
                "invalid interval [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }
}

// ---------------------------------------------------------------------------
// ConvexBody

/// A full-dimensional closed convex body: a ball or a vertex-represented
/// polytope.
#[derive(Debug, Clone, PartialEq)]
pub enum ConvexBody {
    Ball { center: Vector, radius: f64 },
    Polytope { vertices: Vec<Vector> },
}

impl ConvexBody {
    pub fn ball(center: Vector, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "ball requires finite center and positive radius (got {radius})"
            )));
        }
        Ok(ConvexBody::Ball { center, radius })
    }

    /// Build a polytope from its vertex list. The list must be
    /// full-dimensional (at least d+1 affinely independent points) and
    /// minimal: no vertex may lie in the hull of the others.
    pub fn polytope(vertices: Vec<Vector>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("polytope needs vertices".into()));
        }
        let d = vertices[0].dim();
        if vertices.iter().any(|v| v.dim() != d || !v.is_finite()) {
            return Err(Error::InvalidArgument(
                "polytope vertices must share a dimension and be finite".into(),
            ));
        }
        if vertices.len() < d + 1 {
            return Err(Error::InvalidArgument(format!(
                "full-dimensional polytope in R^{d} needs at least {} vertices, got {}",
                d + 1,
                vertices.len()
            )));
        }
        let diffs: Vec<Vec<f64>> = vertices[1..]
            .iter()
            .map(|v| v.sub(&vertices[0]).coords().to_vec())
            .collect();
        if linalg::rank(&diffs, 1e-9) < d {
            return Err(Error::InvalidArgument(
                "polytope vertices are not full-dimensional".into(),
            ));
        }
        for i in 0..vertices.len() {
            let others: Vec<Vector> = vertices
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v.clone())
                .collect();
            if hull_contains_point(&vertices[i], &others)? {
                return Err(Error::InvalidArgument(format!(
                    "vertex {i} is redundant (inside the hull of the others)"
                )));
            }
        }
        Ok(ConvexBody::Polytope { vertices })
    }

    pub fn dim(&self) -> usize {
        match self {
            ConvexBody::Ball { center, .. } => center.dim(),
            ConvexBody::Polytope { vertices } => vertices[0].dim(),
        }
    }

    pub fn is_ball(&self) -> bool {
        matches!(self, ConvexBody::Ball { .. })
    }

    /// A simplex is a polytope on exactly d+1 vertices.
    pub fn is_simplex(&self) -> bool {
        match self {
            ConvexBody::Polytope { vertices } => vertices.len() == self.dim() + 1,
            ConvexBody::Ball { .. } => false,
        }
    }

    pub fn vertices(&self) -> Option<&[Vector]> {
        match self {
            ConvexBody::Polytope { vertices } => Some(vertices),
            ConvexBody::Ball { .. } => None,
        }
    }

    pub fn diameter(&self) -> f64 {
        match self {
            ConvexBody::Ball { radius, .. } => 2.0 * radius,
            ConvexBody::Polytope { vertices } => {
                let mut best = 0.0f64;
                for i in 0..vertices.len() {
                    for j in i + 1..vertices.len() {
                        best = best.max(vertices[i].dist(&vertices[j]));
                    }
                }
                best
            }
        }
    }

    /// Translate the body by `by` (no re-validation needed).
    pub fn translate(&self, by: &Vector) -> ConvexBody {
        match self {
            ConvexBody::Ball { center, radius } => ConvexBody::Ball {
                center: center.add(by),
                radius: *radius,
            },
            ConvexBody::Polytope { vertices } => ConvexBody::Polytope {
                vertices: vertices.iter().map(|v| v.add(by)).collect(),
            },
        }
    }

    /// Center of central symmetry, if the body has one (within
    /// [`DEFAULT_TOLERANCE`]): the center of a ball, or the vertex mean of
    /// a polytope whose vertex set is symmetric about it.
    pub fn symmetry_center(&self) -> Option<Vector> {
        match self {
            ConvexBody::Ball { center, .. } => Some(center.clone()),
            ConvexBody::Polytope { vertices } => {
                let z = vertex_mean(vertices);
                let tol = DEFAULT_TOLERANCE * self.diameter().max(1.0);
                for v in vertices {
                    let mirror = z.scale(2.0).sub(v);
                    if !vertices.iter().any(|w| w.dist(&mirror) <= tol) {
                        return None;
                    }
                }
                Some(z)
            }
        }
    }
}

pub(crate) fn vertex_mean(vertices: &[Vector]) -> Vector {
    let d = vertices[0].dim();
    let mut acc = Vector::zeros(d);
    for v in vertices {
        acc = acc.add(v);
    }
    acc.scale(1.0 / vertices.len() as f64)
}

/// A deterministic interior point: ball center or vertex mean.
pub(crate) fn interior_point(body: &ConvexBody) -> Vector {
    match body {
        ConvexBody::Ball { center, .. } => center.clone(),
        ConvexBody::Polytope { vertices } => vertex_mean(vertices),
    }
}

// ---------------------------------------------------------------------------
// Homothet and Family

/// A positive homothet `o + tau K` of a reference body K.
#[derive(Debug, Clone, PartialEq)]
pub struct Homothet {
    translation: Vector,
    scale: f64,
}

impl Homothet {
    pub fn new(translation: Vector, scale: f64) -> Result<Self> {
        if !translation.is_finite() || !scale.is_finite() || scale <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "homothet requires a positive scale (got {scale})"
            )));
        }
        Ok(Homothet { translation, scale })
    }

    pub fn translation(&self) -> &Vector {
        &self.translation
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }
}

/// A finite family of positive homothets of one reference body.
#[derive(Debug, Clone)]
pub struct Family {
    body: ConvexBody,
    members: Vec<Homothet>,
}

impl Family {
    pub fn new(body: ConvexBody, members: Vec<Homothet>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::InvalidArgument("family needs members".into()));
        }
        let d = body.dim();
        if members.iter().any(|m| m.translation().dim() != d) {
            return Err(Error::InvalidArgument(
                "member translation dimension does not match the body".into(),
            ));
        }
        Ok(Family { body, members })
    }

    pub fn body(&self) -> &ConvexBody {
        &self.body
    }

    pub fn members(&self) -> &[Homothet] {
        &self.members
    }

    pub fn dim(&self) -> usize {
        self.body.dim()
    }

    /// Sum of the homothety coefficients.
    pub fn total_scale(&self) -> f64 {
        self.members.iter().map(|m| m.scale()).sum()
    }

    /// For ball bodies: member `i` as a concrete ball (center, radius).
    pub fn member_ball(&self, i: usize) -> Option<(Vector, f64)> {
        match &self.body {
            ConvexBody::Ball { center, radius } => {
                let m = &self.members[i];
                Some((
                    m.translation().add(&center.scale(m.scale())),
                    m.scale() * radius,
                ))
            }
            ConvexBody::Polytope { .. } => None,
        }
    }

    /// Vertices of member `i` for polytope bodies.
    pub fn member_vertices(&self, i: usize) -> Option<Vec<Vector>> {
        self.body.vertices().map(|verts| {
            let m = &self.members[i];
            verts
                .iter()
                .map(|v| m.translation().add(&v.scale(m.scale())))
                .collect()
        })
    }
}

// ---------------------------------------------------------------------------
// Support and projection

/// Support function h_K(u) = max over K of <x, u>. `u` need not be a unit
/// vector but must be nonzero.
pub fn support(body: &ConvexBody, u: &Vector) -> Result<f64> {
    if u.dim() != body.dim() {
        return Err(Error::UnsupportedDimension {
            expected: body.dim(),
            got: u.dim(),
        });
    }
    let n = u.norm();
    if n == 0.0 {
        return Err(Error::InvalidArgument("zero direction".into()));
    }
    Ok(match body {
        ConvexBody::Ball { center, radius } => center.dot(u) + radius * n,
        ConvexBody::Polytope { vertices } => vertices
            .iter()
            .map(|v| v.dot(u))
            .fold(f64::NEG_INFINITY, f64::max),
    })
}

/// Support function of the homothet `o + tau K` in direction `u`.
pub fn homothet_support(body: &ConvexBody, member: &Homothet, u: &Vector) -> Result<f64> {
    Ok(member.translation().dot(u) + member.scale() * support(body, u)?)
}

/// Orthogonal projection of the homothet `o + tau K` onto the line spanned
/// by the unit vector `u`: the interval
/// `[<o,u> - tau h_K(-u), <o,u> + tau h_K(u)]`.
pub fn project_interval(member: &Homothet, body: &ConvexBody, u: &Vector) -> Result<Interval> {
    if (u.norm() - 1.0).abs() > UNIT_NORM_TOL {
        return Err(Error::InvalidArgument(
            "projection direction must be a unit vector".into(),
        ));
    }
    let c = member.translation().dot(u);
    let hi = c + member.scale() * support(body, u)?;
    let lo = c - member.scale() * support(body, &u.neg())?;
    Interval::new(lo, hi)
}

// ---------------------------------------------------------------------------
// Membership

/// Is `p` a member of the scaled body `c K`, `c >= 0`? Boundary points
/// count as inside, with slack [`DEFAULT_TOLERANCE`]. For `c = 0` the
/// scaled body degenerates to the origin.
pub fn member_scaled(p: &Vector, c: f64, body: &ConvexBody) -> Result<bool> {
    member_scaled_with(p, c, body, DEFAULT_TOLERANCE)
}

/// [`member_scaled`] with an explicit tolerance.
pub fn member_scaled_with(p: &Vector, c: f64, body: &ConvexBody, tol: f64) -> Result<bool> {
    if p.dim() != body.dim() {
        return Err(Error::UnsupportedDimension {
            expected: body.dim(),
            got: p.dim(),
        });
    }
    if !c.is_finite() || c < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "scale must be non-negative (got {c})"
        )));
    }
    match body {
        ConvexBody::Ball { center, radius } => {
            Ok(p.dist(&center.scale(c)) <= c * radius + tol)
        }
        ConvexBody::Polytope { vertices } => {
            if c == 0.0 {
                return Ok(p.norm() <= tol);
            }
            let scaled: Vec<Vector> = vertices.iter().map(|v| v.scale(c)).collect();
            convex_combination_feasible(p, &scaled, tol)
        }
    }
}

/// Is `p` in the convex hull of `points`? Boundary counts as inside.
pub fn hull_contains_point(p: &Vector, points: &[Vector]) -> Result<bool> {
    hull_contains_point_with(p, points, DEFAULT_TOLERANCE)
}

/// [`hull_contains_point`] with an explicit tolerance.
pub fn hull_contains_point_with(p: &Vector, points: &[Vector], tol: f64) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::InvalidArgument("empty point set".into()));
    }
    if points.iter().any(|q| q.dim() != p.dim()) {
        return Err(Error::UnsupportedDimension {
            expected: p.dim(),
            got: points.iter().map(|q| q.dim()).find(|&d| d != p.dim()).unwrap(),
        });
    }
    convex_combination_feasible(p, points, tol)
}

/// LP feasibility of `p = sum_j w_j q_j, sum w_j = 1, w >= 0`.
fn convex_combination_feasible(p: &Vector, points: &[Vector], tol: f64) -> Result<bool> {
    let d = p.dim();
    let m = points.len();
    let mut lp = StandardLp::new(m);
    for coord in 0..d {
        let entries: Vec<(usize, f64)> =
            (0..m).map(|j| (j, points[j][coord])).collect();
        lp.add_row(&entries, p[coord]);
    }
    let ones: Vec<(usize, f64)> = (0..m).map(|j| (j, 1.0)).collect();
    lp.add_row(&ones, 1.0);
    Ok(matches!(lp.solve(tol), LpSolution::Optimal { .. }))
}

/// Do two homothets of the same body intersect? Boundary contact counts
/// as intersecting, with slack `tol`.
///
/// For balls this is a distance comparison. For polytopes it is an LP
/// feasibility question: the members `a + s_a K` and `b + s_b K` meet
/// exactly when `b - a` lies in the difference body `s_a K + s_b (-K)`,
/// i.e. when `b - a = s_a sum_j w_j v_j - s_b sum_j x_j v_j` has a
/// solution with both weight vectors convex.
pub fn homothets_intersect(
    body: &ConvexBody,
    a: &Homothet,
    b: &Homothet,
    tol: f64,
) -> Result<bool> {
    if a.translation().dim() != body.dim() || b.translation().dim() != body.dim() {
        return Err(Error::UnsupportedDimension {
            expected: body.dim(),
            got: a.translation().dim(),
        });
    }
    let diff = b.translation().sub(a.translation());
    match body {
        ConvexBody::Ball { center, radius } => {
            let ca = center.scale(a.scale());
            let cb = diff.add(&center.scale(b.scale()));
            Ok(ca.dist(&cb) <= (a.scale() + b.scale()) * radius + tol)
        }
        ConvexBody::Polytope { vertices } => {
            let d = body.dim();
            let m = vertices.len();
            // Columns: m weights for the first member, m for the second.
            let mut lp = StandardLp::new(2 * m);
            for coord in 0..d {
                let mut entries = Vec::with_capacity(2 * m);
                for (j, v) in vertices.iter().enumerate() {
                    entries.push((j, a.scale() * v[coord]));
                    entries.push((m + j, -b.scale() * v[coord]));
                }
                lp.add_row(&entries, diff[coord]);
            }
            let first: Vec<(usize, f64)> = (0..m).map(|j| (j, 1.0)).collect();
            lp.add_row(&first, 1.0);
            let second: Vec<(usize, f64)> = (0..m).map(|j| (m + j, 1.0)).collect();
            lp.add_row(&second, 1.0);
            Ok(matches!(lp.solve(tol), LpSolution::Optimal { .. }))
        }
    }
}

/// [`homothets_intersect`] for two members of a family, by index.
pub fn members_intersect(family: &Family, i: usize, j: usize) -> Result<bool> {
    let members = family.members();
    let get = |idx: usize| {
        members.get(idx).ok_or_else(|| {
            Error::InvalidArgument(format!(
                "member index {idx} out of range (family has {})",
                members.len()
            ))
        })
    };
    homothets_intersect(family.body(), get(i)?, get(j)?, DEFAULT_TOLERANCE)
}

// ---------------------------------------------------------------------------
// Centroid

/// Centroid of the body. Supported shapes: balls (center), simplices
/// (vertex mean), and 2-D polygons (exact area-weighted centroid via a
/// triangle fan). Anything else is an unsupported shape.
pub fn centroid(body: &ConvexBody) -> Result<Vector> {
    match body {
        ConvexBody::Ball { center, .. } => Ok(center.clone()),
        ConvexBody::Polytope { vertices } => {
            let d = body.dim();
            if vertices.len() == d + 1 {
                return Ok(vertex_mean(vertices));
            }
            if d == 2 {
                let ordered = sort_ccw(vertices);
                let mut area2 = 0.0;
                let mut cx = 0.0;
                let mut cy = 0.0;
                for i in 1..ordered.len() - 1 {
                    let a = &ordered[0];
                    let b = &ordered[i];
                    let c = &ordered[i + 1];
                    let cross = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
                    area2 += cross;
                    cx += cross * (a[0] + b[0] + c[0]) / 3.0;
                    cy += cross * (a[1] + b[1] + c[1]) / 3.0;
                }
                return Ok(vec2(cx / area2, cy / area2));
            }
            Err(Error::UnsupportedShape(format!(
                "centroid supports balls, simplices, and 2-D polygons; got a {}-vertex polytope in R^{d}",
                vertices.len()
            )))
        }
    }
}

/// Sort the vertices of a convex polygon counter-clockwise around their
/// mean. Valid because every vertex of a minimal polytope is extreme, so
/// angles around an interior point are distinct.
pub(crate) fn sort_ccw(vertices: &[Vector]) -> Vec<Vector> {
    let z = vertex_mean(vertices);
    let mut out: Vec<Vector> = vertices.to_vec();
    out.sort_by(|a, b| {
        let aa = (a[1] - z[1]).atan2(a[0] - z[0]);
        let bb = (b[1] - z[1]).atan2(b[0] - z[0]);
        aa.partial_cmp(&bb).unwrap()
    });
    out
}

// ---------------------------------------------------------------------------
// Polar polygon

/// Polar body of a 2-D polygon with the origin strictly interior. Each
/// edge `{x : <n, x> = c}` (outward normal n, offset c > 0) maps to the
/// polar vertex `n / c`; the result is again a convex polygon.
pub fn polar_polygon_2d(body: &ConvexBody) -> Result<ConvexBody> {
    let ConvexBody::Polytope { vertices } = body else {
        return Err(Error::UnsupportedShape("polar requires a polygon".into()));
    };
    if body.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            got: body.dim(),
        });
    }
    let ordered = sort_ccw(vertices);
    let m = ordered.len();
    let mut polar = Vec::with_capacity(m);
    for i in 0..m {
        let a = &ordered[i];
        let b = &ordered[(i + 1) % m];
        let e = b.sub(a);
        // Outward normal of a CCW edge.
        let n = vec2(e[1], -e[0]);
        let c = n.dot(a);
        if c <= 1e-12 {
            return Err(Error::InvalidArgument(
                "polar requires the origin strictly interior".into(),
            ));
        }
        polar.push(n.scale(1.0 / c));
    }
    ConvexBody::polytope(polar)
}

// ---------------------------------------------------------------------------
// Simplex facets

/// Outward unit facet normals of a simplex, indexed by the opposite
/// vertex.
pub fn simplex_facet_normals(body: &ConvexBody) -> Result<Vec<Vector>> {
    if !body.is_simplex() {
        return Err(Error::UnsupportedShape(
            "facet normals require a simplex".into(),
        ));
    }
    let vertices = body.vertices().unwrap();
    let d = body.dim();
    let mut normals = Vec::with_capacity(d + 1);
    for i in 0..=d {
        // Affine functional f(x) = <a, x> + beta with f = 0 on the facet
        // opposite vertex i and f(v_i) = 1; the outward normal is -a.
        let mut rows = Vec::with_capacity(d + 1);
        let mut rhs = Vec::with_capacity(d + 1);
        for (j, v) in vertices.iter().enumerate() {
            let mut row = v.coords().to_vec();
            row.push(1.0);
            rows.push(row);
            rhs.push(if j == i { 1.0 } else { 0.0 });
        }
        let sol = linalg::solve_system(&rows, &rhs)
            .ok_or_else(|| Error::Internal("degenerate simplex facet system".into()))?;
        let a = Vector::new(sol[..d].to_vec());
        normals.push(a.neg().normalized()?);
    }
    Ok(normals)
}

// ---------------------------------------------------------------------------
// 2-D convex hull (internal)

/// Andrew's monotone chain; returns hull vertices in CCW order with
/// collinear points dropped.
pub(crate) fn convex_hull_2d(points: &[Vector]) -> Vec<Vector> {
    let mut pts: Vec<Vector> = points.to_vec();
    pts.sort_by(|a, b| {
        (a[0], a[1])
            .partial_cmp(&(b[0], b[1]))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    pts.dedup_by(|a, b| a.dist(b) < 1e-12);
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: &Vector, a: &Vector, b: &Vector| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<Vector> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 1e-12
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vector> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 1e-12
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_disk() -> ConvexBody {
        ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap()
    }

    fn square() -> ConvexBody {
        ConvexBody::polytope(vec![
            vec2(1.0, 1.0),
            vec2(-1.0, 1.0),
            vec2(-1.0, -1.0),
            vec2(1.0, -1.0),
        ])
        .unwrap()
    }

    #[test]
    fn support_of_ball_and_square() {
        let b = ConvexBody::ball(vec2(1.0, 0.0), 2.0).unwrap();
        assert!((support(&b, &vec2(0.0, 1.0)).unwrap() - 2.0).abs() < 1e-12);
        assert!((support(&b, &vec2(1.0, 0.0)).unwrap() - 3.0).abs() < 1e-12);
        let s = square();
        assert!((support(&s, &vec2(1.0, 0.0)).unwrap() - 1.0).abs() < 1e-12);
        assert!((support(&s, &vec2(1.0, 1.0)).unwrap() - 2.0).abs() < 1e-12);
        assert!(matches!(
            support(&s, &vec2(0.0, 0.0)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn projection_of_scaled_disk() {
        let m = Homothet::new(vec2(3.0, 0.0), 2.0).unwrap();
        let iv = project_interval(&m, &unit_disk(), &vec2(1.0, 0.0)).unwrap();
        assert!((iv.lo - 1.0).abs() < 1e-12);
        assert!((iv.hi - 5.0).abs() < 1e-12);
        assert!(project_interval(&m, &unit_disk(), &vec2(2.0, 0.0)).is_err());
    }

    #[test]
    fn membership_of_scaled_triangle() {
        let t = ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(1.0, 0.0), vec2(0.0, 1.0)]).unwrap();
        assert!(member_scaled(&vec2(0.5, 0.5), 1.0, &t).unwrap()); // boundary
        assert!(member_scaled(&vec2(1.0, 1.0), 2.0, &t).unwrap());
        assert!(!member_scaled(&vec2(0.6, 0.6), 1.0, &t).unwrap());
        assert!(member_scaled(&vec2(0.0, 0.0), 0.0, &t).unwrap());
        assert!(!member_scaled(&vec2(0.1, 0.0), 0.0, &t).unwrap());
        assert!(member_scaled(&vec2(0.5, 0.5 + 0.5e-9), 1.0, &t).unwrap()); // inside slack
        assert!(matches!(
            member_scaled(&vec2(0.0, 0.0), -1.0, &t),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn hull_membership() {
        let pts = vec![vec2(0.0, 0.0), vec2(2.0, 0.0), vec2(0.0, 2.0), vec2(2.0, 2.0)];
        assert!(hull_contains_point(&vec2(1.0, 1.0), &pts).unwrap());
        assert!(hull_contains_point(&vec2(2.0, 2.0), &pts).unwrap());
        assert!(!hull_contains_point(&vec2(2.1, 1.0), &pts).unwrap());
        assert!(hull_contains_point(&vec2(1.0, 1.0), &pts[..1]).is_ok());
        assert!(!hull_contains_point(&vec2(1.0, 1.0), &pts[..1]).unwrap());
    }

    #[test]
    fn centroids() {
        let b = ConvexBody::ball(vec2(3.0, -1.0), 2.0).unwrap();
        assert_eq!(centroid(&b).unwrap(), vec2(3.0, -1.0));
        let t = ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(3.0, 0.0), vec2(0.0, 3.0)]).unwrap();
        assert_eq!(centroid(&t).unwrap(), vec2(1.0, 1.0));
        let c = centroid(&square()).unwrap();
        assert!(c.norm() < 1e-12);
        // Non-simplex polytopes above dimension 2 are unsupported.
        let oct = ConvexBody::polytope(vec![
            vec3(1.0, 0.0, 0.0),
            vec3(-1.0, 0.0, 0.0),
            vec3(0.0, 1.0, 0.0),
            vec3(0.0, -1.0, 0.0),
            vec3(0.0, 0.0, 1.0),
            vec3(0.0, 0.0, -1.0),
        ])
        .unwrap();
        assert!(matches!(
            centroid(&oct),
            Err(Error::UnsupportedShape(_))
        ));
    }

    #[test]
    fn polar_square_is_cross_polytope() {
        let p = polar_polygon_2d(&square()).unwrap();
        let verts = p.vertices().unwrap();
        assert_eq!(verts.len(), 4);
        for expect in [vec2(1.0, 0.0), vec2(0.0, 1.0), vec2(-1.0, 0.0), vec2(0.0, -1.0)] {
            assert!(verts.iter().any(|v| v.dist(&expect) < 1e-9));
        }
    }

    #[test]
    fn polar_round_trip() {
        let tri =
            ConvexBody::polytope(vec![vec2(2.0, -1.0), vec2(-1.0, 2.0), vec2(-1.0, -1.0)]).unwrap();
        let back = polar_polygon_2d(&polar_polygon_2d(&tri).unwrap()).unwrap();
        let verts = back.vertices().unwrap();
        for v in tri.vertices().unwrap() {
            assert!(verts.iter().any(|w| w.dist(v) < 1e-9));
        }
    }

    #[test]
    fn polar_requires_interior_origin() {
        let tri =
            ConvexBody::polytope(vec![vec2(1.0, 1.0), vec2(2.0, 1.0), vec2(1.0, 2.0)]).unwrap();
        assert!(matches!(
            polar_polygon_2d(&tri),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn degenerate_polytopes_rejected() {
        // A segment in the plane is not full-dimensional.
        assert!(ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(1.0, 0.0)]).is_err());
        assert!(ConvexBody::polytope(vec![
            vec2(0.0, 0.0),
            vec2(1.0, 0.0),
            vec2(2.0, 0.0)
        ])
        .is_err());
        // Redundant vertex inside the hull.
        assert!(ConvexBody::polytope(vec![
            vec2(0.0, 0.0),
            vec2(4.0, 0.0),
            vec2(0.0, 4.0),
            vec2(1.0, 1.0)
        ])
        .is_err());
    }

    #[test]
    fn facet_normals_of_corner_simplex() {
        let t = ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(4.0, 0.0), vec2(0.0, 4.0)]).unwrap();
        let normals = simplex_facet_normals(&t).unwrap();
        let s = 0.5f64.sqrt();
        let expect = [vec2(s, s), vec2(-1.0, 0.0), vec2(0.0, -1.0)];
        for (n, e) in normals.iter().zip(&expect) {
            assert!(n.dist(e) < 1e-9, "normal {n:?} vs {e:?}");
        }
    }

    #[test]
    fn symmetry_centers() {
        assert_eq!(square().symmetry_center().unwrap(), vec2(0.0, 0.0));
        let t = ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(1.0, 0.0), vec2(0.0, 1.0)]).unwrap();
        assert!(t.symmetry_center().is_none());
        let shifted = square().translate(&vec2(5.0, 5.0));
        assert!(shifted.symmetry_center().unwrap().dist(&vec2(5.0, 5.0)) < 1e-9);
    }

    #[test]
    fn hull_2d_drops_interior_and_collinear() {
        let pts = vec![
            vec2(0.0, 0.0),
            vec2(2.0, 0.0),
            vec2(1.0, 0.0),
            vec2(2.0, 2.0),
            vec2(0.0, 2.0),
            vec2(1.0, 1.0),
        ];
        let hull = convex_hull_2d(&pts);
        assert_eq!(hull.len(), 4);
    }

    #[test]
    fn disk_homothets_touch_and_separate() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        let a = Homothet::new(vec2(0.0, 0.0), 1.0).unwrap();
        let touching = Homothet::new(vec2(3.0, 0.0), 2.0).unwrap();
        let apart = Homothet::new(vec2(3.1, 0.0), 2.0).unwrap();
        assert!(homothets_intersect(&disk, &a, &touching, 1e-9).unwrap());
        assert!(!homothets_intersect(&disk, &a, &apart, 1e-9).unwrap());
    }

    #[test]
    fn triangle_homothets_touch_and_separate() {
        let t =
            ConvexBody::polytope(vec![vec2(0.0, 0.0), vec2(2.0, 0.0), vec2(0.0, 2.0)]).unwrap();
        let a = Homothet::new(vec2(0.0, 0.0), 1.0).unwrap();
        // Second copy shifted right by exactly the first one's width: the
        // left edge of b meets the bottom-right vertex of a.
        let touching = Homothet::new(vec2(2.0, 0.0), 1.0).unwrap();
        let apart = Homothet::new(vec2(2.0 + 1e-6, 0.0), 1.0).unwrap();
        let overlapping = Homothet::new(vec2(1.0, 0.5), 1.0).unwrap();
        assert!(homothets_intersect(&t, &a, &touching, 1e-9).unwrap());
        assert!(!homothets_intersect(&t, &a, &apart, 1e-9).unwrap());
        assert!(homothets_intersect(&t, &a, &overlapping, 1e-9).unwrap());
    }

    #[test]
    fn member_intersection_by_index() {
        let disk = ConvexBody::ball(vec2(0.0, 0.0), 1.0).unwrap();
        let family = Family::new(
            disk,
            vec![
                Homothet::new(vec2(0.0, 0.0), 1.0).unwrap(),
                Homothet::new(vec2(1.5, 0.0), 1.0).unwrap(),
                Homothet::new(vec2(10.0, 0.0), 1.0).unwrap(),
            ],
        )
        .unwrap();
        assert!(members_intersect(&family, 0, 1).unwrap());
        assert!(!members_intersect(&family, 1, 2).unwrap());
        assert!(members_intersect(&family, 2, 2).unwrap());
        assert!(matches!(
            members_intersect(&family, 0, 3),
            Err(Error::InvalidArgument(_))
        ));
    }
}
