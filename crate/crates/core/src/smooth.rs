//! The smooth trigroup model over the reals and its Leibniz 3-algebra.
//!
//! The carrier is `R^n x R^x` with the scalar action:
//!
//! ```text
//! (u,p) |-  (v,k) = (p v, p k)
//! (u,p) -|  (v,k) = (u,   p k)
//! (u,p) _|_ (v,k) = (0,   p k)
//! (u,p)^-1        = (0,  1/p)
//! ```
//!
//! Conjugation `[x,y,z]` is composed from those operations exactly as in
//! the finite case. The tangent space at the unit `1 = (0,1)` is charted
//! by `(w, l-1)`, so it is literally `R^n x R`, and the bracket on it is
//! extracted numerically: first the Jacobian of `z -> [x,y,z]` at `1`
//! (central differences, column per chart direction), then the mixed
//! second central difference of that Jacobian applied to `Z` along the
//! curves `γ_V(s) = (sU, 1 + sP)`:
//!
//! ```text
//! [X,Y,Z] = d²/ds dt |₀  J(γ_X(s), γ_Y(t)) · Z
//! ```
//!
//! For this model the construction has the closed form
//! `[X,Y,Z] = (P_X P_Y W_Z, 0)`, which the tests pin as an independent
//! oracle; the residual checks here only ever compare the *numeric*
//! pipeline against itself (trilinearity, the Leibniz identity) or
//! against that closed form.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use crate::table::Op;

/// A point `(w, l)` of the model; `l != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SmoothPoint {
    pub w: Vec<f64>,
    pub l: f64,
}

impl SmoothPoint {
    pub fn new(w: Vec<f64>, l: f64) -> Result<Self> {
        if l == 0.0 {
            return Err(Error::Usage(
                "scalar part of a smooth point must be nonzero".into(),
            ));
        }
        if !(l.is_finite() && w.iter().all(|v| v.is_finite())) {
            return Err(Error::Usage("smooth point entries must be finite".into()));
        }
        Ok(SmoothPoint { w, l })
    }

    /// The unit `(0, 1)`.
    pub fn unit(dim: usize) -> Self {
        SmoothPoint {
            w: vec![0.0; dim],
            l: 1.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.w.len()
    }
}

/// A tangent vector `(U, P)` at the unit, in chart coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVector {
    pub u: Vec<f64>,
    pub p: f64,
}

impl TangentVector {
    pub fn new(u: Vec<f64>, p: f64) -> Self {
        TangentVector { u, p }
    }

    pub fn zero(dim: usize) -> Self {
        TangentVector {
            u: vec![0.0; dim],
            p: 0.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.u.len()
    }

    pub fn scale(&self, a: f64) -> TangentVector {
        TangentVector {
            u: self.u.iter().map(|v| a * v).collect(),
            p: a * self.p,
        }
    }

    pub fn add(&self, other: &TangentVector) -> TangentVector {
        TangentVector {
            u: self.u.iter().zip(&other.u).map(|(a, b)| a + b).collect(),
            p: self.p + other.p,
        }
    }

    pub fn sub(&self, other: &TangentVector) -> TangentVector {
        self.add(&other.scale(-1.0))
    }

    pub fn norm_inf(&self) -> f64 {
        self.u.iter().map(|v| v.abs()).fold(self.p.abs(), f64::max)
    }
}

/// Step, tolerance, and sampling parameters for the numeric checks.
#[derive(Clone, Copy, Debug)]
pub struct NumericConfig {
    pub step: f64,
    pub tol: f64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            step: 1e-4,
            tol: 1e-5,
            samples: 100,
            seed: 42,
        }
    }
}

impl NumericConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.step > 0.0 && self.tol > 0.0) {
            return Err(Error::Usage("step and tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// One of the three smooth operations.
pub fn smooth_apply(op: Op, x: &SmoothPoint, y: &SmoothPoint) -> SmoothPoint {
    debug_assert_eq!(x.dim(), y.dim());
    let p = x.l;
    match op {
        Op::Left => SmoothPoint {
            w: y.w.iter().map(|v| p * v).collect(),
            l: p * y.l,
        },
        Op::Middle => SmoothPoint {
            w: vec![0.0; x.dim()],
            l: p * y.l,
        },
        Op::Right => SmoothPoint {
            w: x.w.clone(),
            l: p * y.l,
        },
    }
}

/// `(u,p)^-1 = (0, 1/p)`.
pub fn smooth_inverse(x: &SmoothPoint) -> SmoothPoint {
    SmoothPoint {
        w: vec![0.0; x.dim()],
        l: 1.0 / x.l,
    }
}

/// `[x,y,z] = ((x _|_ y) |- z) -| (y^-1 _|_ x^-1)`, composed from the
/// smooth operations exactly as written.
pub fn smooth_conjugation(x: &SmoothPoint, y: &SmoothPoint, z: &SmoothPoint) -> SmoothPoint {
    let theta = smooth_apply(Op::Middle, x, y);
    let tail = smooth_apply(Op::Middle, &smooth_inverse(y), &smooth_inverse(x));
    smooth_apply(Op::Right, &smooth_apply(Op::Left, &theta, z), &tail)
}

/// Chart at the unit: `point(c) = (c[..n], 1 + c[n])`.
fn chart_point(coords: &[f64]) -> SmoothPoint {
    let n = coords.len() - 1;
    SmoothPoint {
        w: coords[..n].to_vec(),
        l: 1.0 + coords[n],
    }
}

/// Chart coordinates `(w, l - 1)` of a point.
fn chart_coords(p: &SmoothPoint) -> Vec<f64> {
    let mut c = p.w.clone();
    c.push(p.l - 1.0);
    c
}

/// Central-difference Jacobian of `z -> [x,y,z]` at `z = 1`, an
/// `(n+1) x (n+1)` matrix in chart coordinates (rows index outputs).
pub fn rack_linearization(x: &SmoothPoint, y: &SmoothPoint, cfg: &NumericConfig) -> Vec<Vec<f64>> {
    let n = x.dim();
    let h = cfg.step;
    let mut jac = vec![vec![0.0; n + 1]; n + 1];
    let mut coords = vec![0.0; n + 1];
    for k in 0..=n {
        coords[k] = h;
        let plus = chart_coords(&smooth_conjugation(x, y, &chart_point(&coords)));
        coords[k] = -h;
        let minus = chart_coords(&smooth_conjugation(x, y, &chart_point(&coords)));
        coords[k] = 0.0;
        for i in 0..=n {
            jac[i][k] = (plus[i] - minus[i]) / (2.0 * h);
        }
    }
    jac
}

fn apply_matrix(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// The curve `γ_V(s) = (s U, 1 + s P)` through the unit with velocity `V`.
fn curve(v: &TangentVector, s: f64) -> SmoothPoint {
    SmoothPoint {
        w: v.u.iter().map(|c| s * c).collect(),
        l: 1.0 + s * v.p,
    }
}

/// The numeric Leibniz bracket: mixed second central difference of the
/// rack linearization along curves, applied to `Z`.
///
/// The Jacobian is itself a central-difference estimate, so its entries
/// carry rounding noise of order `eps / step`. Differencing a function
/// whose evaluations have noise `δ` only converges for steps around
/// `δ^(1/4)`, so the outer `(s,t)` difference uses
/// `(eps / step)^(1/4)` rather than `step` itself; with the default
/// `step = 1e-4` that is about `1.2e-3` and leaves the bracket with
/// residuals near `1e-6`. Reusing `step` for both levels would amplify
/// the inner noise to `eps / step^3`, around `1e-4`.
pub fn leibniz_bracket(
    x: &TangentVector,
    y: &TangentVector,
    z: &TangentVector,
    cfg: &NumericConfig,
) -> TangentVector {
    debug_assert!(x.dim() == y.dim() && y.dim() == z.dim());
    let h = (f64::EPSILON / cfg.step).powf(0.25);
    let mut z_coords = z.u.clone();
    z_coords.push(z.p);
    let eval = |s: f64, t: f64| -> Vec<f64> {
        let jac = rack_linearization(&curve(x, s), &curve(y, t), cfg);
        apply_matrix(&jac, &z_coords)
    };
    let pp = eval(h, h);
    let pm = eval(h, -h);
    let mp = eval(-h, h);
    let mm = eval(-h, -h);
    let scale = 4.0 * h * h;
    let n = z.dim();
    let mut out = vec![0.0; n + 1];
    for i in 0..=n {
        out[i] = (pp[i] - pm[i] - mp[i] + mm[i]) / scale;
    }
    let p = out.pop().expect("coords nonempty");
    TangentVector { u: out, p }
}

/// Reference model for the bracket, obtained by differentiating the
/// closed form of the conjugation symbolically; kept separate from the
/// finite-difference pipeline so each can check the other.
pub fn bracket_closed_form(
    x: &TangentVector,
    y: &TangentVector,
    z: &TangentVector,
) -> TangentVector {
    TangentVector {
        u: z.u.iter().map(|w| x.p * y.p * w).collect(),
        p: 0.0,
    }
}

/// One labeled residual measurement.
#[derive(Clone, Debug)]
pub struct ResidualCheck {
    pub label: &'static str,
    pub max_residual: f64,
}

/// Residuals from a numeric check run, with the tolerance they are
/// measured against.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub tol: f64,
    pub checks: Vec<ResidualCheck>,
}

impl ResidualReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.max_residual < self.tol)
    }

    /// Stable `<label> max_residual=<value>` lines.
    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{} max_residual={:e}", c.label, c.max_residual))
            .collect()
    }
}

fn ensure_dim(dim: usize) -> Result<()> {
    if !(1..=3).contains(&dim) {
        return Err(Error::Usage(format!(
            "smooth checks support dimensions 1..=3, got {dim}"
        )));
    }
    Ok(())
}

fn random_tangent(rng: &mut SplitMix64, dim: usize) -> TangentVector {
    TangentVector {
        u: (0..dim).map(|_| rng.next_unit_f64()).collect(),
        p: rng.next_unit_f64(),
    }
}

/// Checks the Leibniz 3-algebra identity on random tangent 5-tuples,
/// reporting the largest residual:
///
/// ```text
/// [x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3]
///                    + [y1,[x1,x2,y2],y3]
///                    + [y1,y2,[x1,x2,y3]]
/// ```
pub fn check_leibniz_identity(dim: usize, cfg: &NumericConfig) -> Result<ResidualReport> {
    ensure_dim(dim)?;
    cfg.validate()?;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut max_residual: f64 = 0.0;
    for _ in 0..cfg.samples {
        let x1 = random_tangent(&mut rng, dim);
        let x2 = random_tangent(&mut rng, dim);
        let y1 = random_tangent(&mut rng, dim);
        let y2 = random_tangent(&mut rng, dim);
        let y3 = random_tangent(&mut rng, dim);
        let lhs = leibniz_bracket(&x1, &x2, &leibniz_bracket(&y1, &y2, &y3, cfg), cfg);
        let rhs = leibniz_bracket(&leibniz_bracket(&x1, &x2, &y1, cfg), &y2, &y3, cfg)
            .add(&leibniz_bracket(
                &y1,
                &leibniz_bracket(&x1, &x2, &y2, cfg),
                &y3,
                cfg,
            ))
            .add(&leibniz_bracket(
                &y1,
                &y2,
                &leibniz_bracket(&x1, &x2, &y3, cfg),
                cfg,
            ));
        max_residual = max_residual.max(lhs.sub(&rhs).norm_inf());
    }
    Ok(ResidualReport {
        tol: cfg.tol,
        checks: vec![ResidualCheck {
            label: "leibniz-identity",
            max_residual,
        }],
    })
}

/// Checks linearity of the bracket in each slot on random vectors and
/// scalars.
pub fn check_trilinearity(dim: usize, cfg: &NumericConfig) -> Result<ResidualReport> {
    ensure_dim(dim)?;
    cfg.validate()?;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut residuals = [0.0f64; 3];
    for _ in 0..cfg.samples {
        let v = random_tangent(&mut rng, dim);
        let v2 = random_tangent(&mut rng, dim);
        let y = random_tangent(&mut rng, dim);
        let z = random_tangent(&mut rng, dim);
        let a = rng.next_unit_f64();
        let b = rng.next_unit_f64();
        let combo = v.scale(a).add(&v2.scale(b));
        for (slot, residual) in residuals.iter_mut().enumerate() {
            let args = |first: &TangentVector| -> [TangentVector; 3] {
                match slot {
                    0 => [first.clone(), y.clone(), z.clone()],
                    1 => [y.clone(), first.clone(), z.clone()],
                    _ => [y.clone(), z.clone(), first.clone()],
                }
            };
            let [c0, c1, c2] = args(&combo);
            let lhs = leibniz_bracket(&c0, &c1, &c2, cfg);
            let [p0, p1, p2] = args(&v);
            let [q0, q1, q2] = args(&v2);
            let rhs = leibniz_bracket(&p0, &p1, &p2, cfg)
                .scale(a)
                .add(&leibniz_bracket(&q0, &q1, &q2, cfg).scale(b));
            *residual = residual.max(lhs.sub(&rhs).norm_inf());
        }
    }
    Ok(ResidualReport {
        tol: cfg.tol,
        checks: vec![
            ResidualCheck {
                label: "trilinearity-slot1",
                max_residual: residuals[0],
            },
            ResidualCheck {
                label: "trilinearity-slot2",
                max_residual: residuals[1],
            },
            ResidualCheck {
                label: "trilinearity-slot3",
                max_residual: residuals[2],
            },
        ],
    })
}

/// Compares the numeric bracket against the closed-form reference on
/// random tangent triples.
pub fn check_bracket_oracle(dim: usize, cfg: &NumericConfig) -> Result<ResidualReport> {
    ensure_dim(dim)?;
    cfg.validate()?;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut max_residual: f64 = 0.0;
    for _ in 0..cfg.samples {
        let x = random_tangent(&mut rng, dim);
        let y = random_tangent(&mut rng, dim);
        let z = random_tangent(&mut rng, dim);
        let numeric = leibniz_bracket(&x, &y, &z, cfg);
        let exact = bracket_closed_form(&x, &y, &z);
        max_residual = max_residual.max(numeric.sub(&exact).norm_inf());
    }
    Ok(ResidualReport {
        tol: cfg.tol,
        checks: vec![ResidualCheck {
            label: "bracket-oracle",
            max_residual,
        }],
    })
}

fn random_point(rng: &mut SplitMix64, dim: usize) -> SmoothPoint {
    let w = (0..dim).map(|_| rng.next_unit_f64()).collect();
    // Scalar part bounded away from zero.
    let magnitude = 0.5 + 0.5 * (rng.next_unit_f64() + 1.0);
    let sign = if rng.next_u64() & 1 == 0 { 1.0 } else { -1.0 };
    SmoothPoint {
        w,
        l: sign * magnitude,
    }
}

/// Largest deviation of the numeric Jacobian from the exact Jacobian
/// `diag(pq I_n, 1)` at the given step.
pub fn jacobian_deviation(x: &SmoothPoint, y: &SmoothPoint, step: f64) -> f64 {
    let n = x.dim();
    let cfg = NumericConfig {
        step,
        ..NumericConfig::default()
    };
    let jac = rack_linearization(x, y, &cfg);
    let pq = x.l * y.l;
    let mut dev: f64 = 0.0;
    for (i, row) in jac.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            let exact = if i == k {
                if i < n {
                    pq
                } else {
                    1.0
                }
            } else {
                0.0
            };
            dev = dev.max((v - exact).abs());
        }
    }
    dev
}

/// Deviation of the Jacobian at `step` and `step/2`, maximized over
/// seeded random point pairs, and their ratio.
#[derive(Clone, Debug)]
pub struct HalvingReport {
    pub dev_coarse: f64,
    pub dev_fine: f64,
    /// `dev_coarse / dev_fine`.
    pub ratio: f64,
}

pub fn jacobian_halving(dim: usize, cfg: &NumericConfig, pairs: usize) -> Result<HalvingReport> {
    ensure_dim(dim)?;
    cfg.validate()?;
    let mut rng = SplitMix64::new(cfg.seed);
    let mut dev_coarse: f64 = 0.0;
    let mut dev_fine: f64 = 0.0;
    for _ in 0..pairs {
        let x = random_point(&mut rng, dim);
        let y = random_point(&mut rng, dim);
        dev_coarse = dev_coarse.max(jacobian_deviation(&x, &y, cfg.step));
        dev_fine = dev_fine.max(jacobian_deviation(&x, &y, cfg.step / 2.0));
    }
    Ok(HalvingReport {
        dev_coarse,
        dev_fine,
        ratio: dev_coarse / dev_fine,
    })
}

/// Largest componentwise residual of the eleven trioid axioms over
/// random point triples. The operations are polynomial identities, so
/// this should sit at rounding level.
pub fn smooth_axioms_max_residual(dim: usize, samples: usize, seed: u64) -> f64 {
    let mut rng = SplitMix64::new(seed);
    let mut max_residual: f64 = 0.0;
    let diff = |a: &SmoothPoint, b: &SmoothPoint| -> f64 {
        let l = (a.l - b.l).abs();
        a.w.iter()
            .zip(&b.w)
            .map(|(p, q)| (p - q).abs())
            .fold(l, f64::max)
    };
    for _ in 0..samples {
        let x = random_point(&mut rng, dim);
        let y = random_point(&mut rng, dim);
        let z = random_point(&mut rng, dim);
        let ap = |op: Op, a: &SmoothPoint, b: &SmoothPoint| smooth_apply(op, a, b);
        use Op::*;
        let pairs = [
            // Associativity of each operation.
            (
                ap(Left, &ap(Left, &x, &y), &z),
                ap(Left, &x, &ap(Left, &y, &z)),
            ),
            (
                ap(Middle, &ap(Middle, &x, &y), &z),
                ap(Middle, &x, &ap(Middle, &y, &z)),
            ),
            (
                ap(Right, &ap(Right, &x, &y), &z),
                ap(Right, &x, &ap(Right, &y, &z)),
            ),
            // Disemigroup on (|-, -|).
            (
                ap(Left, &x, &ap(Left, &y, &z)),
                ap(Left, &ap(Right, &x, &y), &z),
            ),
            (
                ap(Left, &x, &ap(Right, &y, &z)),
                ap(Right, &ap(Left, &x, &y), &z),
            ),
            (
                ap(Right, &x, &ap(Right, &y, &z)),
                ap(Right, &x, &ap(Left, &y, &z)),
            ),
            // Left disemigroup on (|-, _|_).
            (
                ap(Left, &x, &ap(Left, &y, &z)),
                ap(Left, &ap(Middle, &x, &y), &z),
            ),
            (
                ap(Left, &x, &ap(Middle, &y, &z)),
                ap(Middle, &ap(Left, &x, &y), &z),
            ),
            // Right disemigroup on (_|_, -|).
            (
                ap(Right, &x, &ap(Right, &y, &z)),
                ap(Right, &x, &ap(Middle, &y, &z)),
            ),
            (
                ap(Right, &ap(Middle, &x, &y), &z),
                ap(Middle, &x, &ap(Right, &y, &z)),
            ),
            // T4.
            (
                ap(Middle, &ap(Right, &x, &y), &z),
                ap(Middle, &x, &ap(Left, &y, &z)),
            ),
        ];
        for (lhs, rhs) in &pairs {
            max_residual = max_residual.max(diff(lhs, rhs));
        }
    }
    max_residual
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(w: &[f64], l: f64) -> SmoothPoint {
        SmoothPoint::new(w.to_vec(), l).unwrap()
    }

    #[test]
    fn operations_match_hand_values() {
        // ((3),2) _|_ ((5),4) = ((0),8)
        let r = smooth_apply(Op::Middle, &pt(&[3.0], 2.0), &pt(&[5.0], 4.0));
        assert_eq!(r, pt(&[0.0], 8.0));
        // inverse((7),2) = ((0),0.5), and x _|_ x^-1 = (0,1)
        let x = pt(&[7.0], 2.0);
        let xi = smooth_inverse(&x);
        assert_eq!(xi, pt(&[0.0], 0.5));
        assert_eq!(smooth_apply(Op::Middle, &x, &xi), SmoothPoint::unit(1));
        // (0,1) |- (v,k) = (v,k)
        let y = pt(&[5.0], 4.0);
        assert_eq!(smooth_apply(Op::Left, &SmoothPoint::unit(1), &y), y);
    }

    #[test]
    fn conjugation_matches_the_scalar_closed_form() {
        // x=((9),2), y=((4),3), z=((5),7) -> ((30),7)
        let r = smooth_conjugation(&pt(&[9.0], 2.0), &pt(&[4.0], 3.0), &pt(&[5.0], 7.0));
        assert!((r.w[0] - 30.0).abs() < 1e-12);
        assert!((r.l - 7.0).abs() < 1e-12);
        // [1,1,z] = z and [x,y,1] = 1.
        let one = SmoothPoint::unit(1);
        let z = pt(&[5.0], 7.0);
        assert_eq!(smooth_conjugation(&one, &one, &z), z);
        let mut rng = SplitMix64::new(5);
        for _ in 0..20 {
            let x = random_point(&mut rng, 1);
            let y = random_point(&mut rng, 1);
            let r = smooth_conjugation(&x, &y, &one);
            assert!((r.w[0]).abs() < 1e-12 && (r.l - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn linearization_recovers_the_scalar_jacobian() {
        let cfg = NumericConfig::default();
        // x=y=1 gives the identity matrix.
        let one = SmoothPoint::unit(1);
        let jac = rack_linearization(&one, &one, &cfg);
        for (i, row) in jac.iter().enumerate() {
            for (k, &entry) in row.iter().enumerate() {
                let expect = if i == k { 1.0 } else { 0.0 };
                assert!((entry - expect).abs() < cfg.tol);
            }
        }
        // x=((0),2), y=((0),3) gives diag(6, 1).
        let jac = rack_linearization(&pt(&[0.0], 2.0), &pt(&[0.0], 3.0), &cfg);
        assert!((jac[0][0] - 6.0).abs() < cfg.tol);
        assert!((jac[1][1] - 1.0).abs() < cfg.tol);
        assert!(jac[0][1].abs() < cfg.tol && jac[1][0].abs() < cfg.tol);
    }

    #[test]
    fn bottom_right_jacobian_entry_is_one_for_random_pairs() {
        let cfg = NumericConfig::default();
        let mut rng = SplitMix64::new(17);
        for _ in 0..10 {
            let x = random_point(&mut rng, 2);
            let y = random_point(&mut rng, 2);
            let jac = rack_linearization(&x, &y, &cfg);
            assert!((jac[2][2] - 1.0).abs() < cfg.tol);
        }
    }

    #[test]
    fn bracket_matches_hand_value() {
        let cfg = NumericConfig::default();
        // X=(0,2), Y=(0,3), Z=(5,0) -> (30, 0)
        let x = TangentVector::new(vec![0.0], 2.0);
        let y = TangentVector::new(vec![0.0], 3.0);
        let z = TangentVector::new(vec![5.0], 0.0);
        let b = leibniz_bracket(&x, &y, &z, &cfg);
        assert!((b.u[0] - 30.0).abs() < cfg.tol);
        assert!(b.p.abs() < cfg.tol);
    }

    #[test]
    fn bracket_vanishes_where_the_closed_form_does() {
        let cfg = NumericConfig::default();
        let mut rng = SplitMix64::new(23);
        for _ in 0..10 {
            let x = random_tangent(&mut rng, 2);
            let y = random_tangent(&mut rng, 2);
            // W_Z = 0 kills the bracket.
            let z = TangentVector::new(vec![0.0, 0.0], rng.next_unit_f64());
            assert!(leibniz_bracket(&x, &y, &z, &cfg).norm_inf() < cfg.tol);
            // P_X = 0 kills it too.
            let x0 = TangentVector::new(x.u.clone(), 0.0);
            let z = random_tangent(&mut rng, 2);
            assert!(leibniz_bracket(&x0, &y, &z, &cfg).norm_inf() < cfg.tol);
        }
    }

    #[test]
    fn bracket_is_not_antisymmetric() {
        // [X,X,Z] = (P_X^2 W_Z, 0) != 0: Leibniz, not Lie.
        let cfg = NumericConfig::default();
        let x = TangentVector::new(vec![0.0], 1.0);
        let z = TangentVector::new(vec![1.0], 0.0);
        let b = leibniz_bracket(&x, &x, &z, &cfg);
        assert!((b.u[0] - 1.0).abs() < cfg.tol);
        assert!(b.norm_inf() > 0.5);
    }

    #[test]
    fn residual_checks_pass_at_defaults_in_dim_one() {
        let cfg = NumericConfig::default();
        assert!(check_leibniz_identity(1, &cfg).unwrap().passed());
        assert!(check_trilinearity(1, &cfg).unwrap().passed());
        assert!(check_bracket_oracle(1, &cfg).unwrap().passed());
    }

    #[test]
    fn zero_vectors_give_exactly_zero_identity_residual() {
        let cfg = NumericConfig::default();
        let z = TangentVector::zero(2);
        let lhs = leibniz_bracket(&z, &z, &leibniz_bracket(&z, &z, &z, &cfg), &cfg);
        assert_eq!(lhs.norm_inf(), 0.0);
    }

    #[test]
    fn smooth_axioms_hold_to_rounding() {
        for dim in 1..=3 {
            let residual = smooth_axioms_max_residual(dim, 10_000, 31);
            assert!(residual < 1e-12, "dim {dim}: residual {residual}");
        }
    }

    #[test]
    fn dimension_guard() {
        let cfg = NumericConfig::default();
        assert!(check_leibniz_identity(0, &cfg).is_err());
        assert!(check_leibniz_identity(4, &cfg).is_err());
    }
}
