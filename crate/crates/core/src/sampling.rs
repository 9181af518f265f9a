//! Seeded direction sampling shared by the checkers, the verifiers, and
//! the generators.

use rand::Rng;

use crate::geometry::Vector;

/// One standard normal draw (Box-Muller; the log argument is kept in
/// (0, 1]).
pub(crate) fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// A uniform random unit vector in dimension `d`.
pub(crate) fn unit_vector<R: Rng>(rng: &mut R, d: usize) -> Vector {
    loop {
        let coords: Vec<f64> = (0..d).map(|_| gaussian(rng)).collect();
        let v = Vector::new(coords);
        if let Ok(u) = v.normalized() {
            return u;
        }
    }
}

/// `count` evenly spaced directions around the full circle.
pub(crate) fn circle_directions(count: usize) -> Vec<Vector> {
    (0..count)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / count as f64;
            Vector::new(vec![theta.cos(), theta.sin()])
        })
        .collect()
}

/// `count` well-spread directions on the 2-sphere (Fibonacci lattice).
pub(crate) fn sphere_directions(count: usize) -> Vec<Vector> {
    let golden = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
    (0..count)
        .map(|j| {
            let z = 1.0 - 2.0 * (j as f64 + 0.5) / count as f64;
            let r = (1.0 - z * z).sqrt();
            let phi = golden * j as f64;
            Vector::new(vec![r * phi.cos(), r * phi.sin(), z])
        })
        .collect()
}
