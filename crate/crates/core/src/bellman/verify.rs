//! Grid certification of the candidate: the supersolution inequalities
//! D g ≤ 0 and D̃ g ≤ 0, the direction quadratic form over |k| ≤ |h|, the
//! tangent-line separation, majorization, and the failure of every smaller
//! constant.
//!
//! All "≤ 0" checks accept values up to `num_tol · scale` with
//! scale = 1 + |g| + |g′| + |g″| at the point: floating-point slack, not a
//! weakening of the inequalities. Within 1e−3 of the endpoints the
//! coefficients with 1/(1∓s) factors are replaced by their sign-equivalent
//! cleared-denominator forms.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::real::Real;
use crate::roots::{bisect, Bracket};
use crate::sharp::{lemma_suite, LemmaCheck, SharpConstants};
use crate::specfun::Jet;

use super::candidate::{BellmanCandidate, Side};
use super::obstacle::Obstacle;
use super::operators::{d_op, dtilde_op, k_op, QuadFormCoeffs};

/// One certification check: max scaled residual over a grid and where it
/// occurred. Residuals ≤ `num_tol` pass.
#[derive(Clone, Debug, Serialize)]
pub struct BellmanCheck {
    pub name: String,
    pub p: f64,
    pub grid: usize,
    pub max_residual: f64,
    pub location_of_max: f64,
    pub pass: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyParams {
    pub grid_n: usize,
    /// Direction samples for u = cos(angle gap) and b = |k|/|h|.
    pub dir_u: usize,
    pub dir_b: usize,
    pub num_tol: f64,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self {
            grid_n: 2000,
            dir_u: 33,
            dir_b: 32,
            num_tol: 1e-8,
        }
    }
}

/// Distance from ±1 below which cleared-denominator forms are used.
const ENDPOINT_SWITCH: f64 = 1e-3;
/// Offset of the one-sided evaluation points at the gluing point.
const KINK_OFFSET: f64 = 1e-9;
/// Grids stop this far from the singular endpoints.
const ENDPOINT_GUARD: f64 = 1e-6;

struct MaxTracker {
    value: f64,
    location: f64,
}

impl MaxTracker {
    fn new() -> Self {
        Self {
            value: f64::NEG_INFINITY,
            location: f64::NAN,
        }
    }

    fn update(&mut self, value: f64, location: f64) {
        if value > self.value {
            self.value = value;
            self.location = location;
        }
    }

    fn into_check(self, name: &str, p: f64, grid: usize, num_tol: f64) -> BellmanCheck {
        BellmanCheck {
            name: name.to_string(),
            p,
            grid,
            max_residual: self.value,
            location_of_max: self.location,
            pass: self.value <= num_tol,
        }
    }
}

fn scale_of<R: Real>(g: &Jet<R>) -> R {
    R::one() + g.value.abs() + g.d1.abs() + g.d2.abs()
}

/// Verification grid on [−1+guard, 1−guard], the gluing point replaced by
/// one-sided points z_p ± 1e−9.
fn certification_grid<R: Real>(z: R, n: usize) -> Vec<(R, Side)> {
    let lo = -R::one() + R::of(ENDPOINT_GUARD);
    let hi = R::one() - R::of(ENDPOINT_GUARD);
    let off = R::of(KINK_OFFSET);
    let mut points = Vec::with_capacity(n + 2);
    for i in 0..n {
        let s = lo + (hi - lo) * R::from_index(i) / R::from_index(n - 1);
        if (s - z).abs() < off {
            continue;
        }
        let side = if s > z { Side::Right } else { Side::Left };
        points.push((s, side));
    }
    points.push((z - off, Side::Left));
    points.push((z + off, Side::Right));
    points.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    points
}

/// D g_p ≤ 0 and D̃ g_p ≤ 0 over the grid.
pub fn verify_supersolution<R: Real>(
    cand: &BellmanCandidate<R>,
    params: &VerifyParams,
) -> Result<Vec<BellmanCheck>> {
    let p = cand.p();
    let z = cand.constants().largest_zero();
    let grid = certification_grid(z, params.grid_n);
    let mut d_max = MaxTracker::new();
    let mut dt_max = MaxTracker::new();
    for &(s, side) in &grid {
        let g = cand.jet_side(s, side)?;
        let scale = scale_of(&g);
        let d = d_op(p, s, &g);
        d_max.update((d / scale).as_f64(), s.as_f64());
        let near_edge = R::one() - s.abs() < R::of(ENDPOINT_SWITCH);
        let dt = if near_edge {
            // (1−s²) D̃ g = D g + (1−s²) K g, same sign, no 1/(1−s²) blow-up.
            d + (R::one() - s * s) * k_op(p, s, &g)
        } else {
            dtilde_op(p, s, &g)?
        };
        dt_max.update((dt / scale).as_f64(), s.as_f64());
    }
    let p64 = p.as_f64();
    Ok(vec![
        d_max.into_check("supersolution_D", p64, grid.len(), params.num_tol),
        dt_max.into_check("supersolution_Dtilde", p64, grid.len(), params.num_tol),
    ])
}

/// The full direction check: A|h|² + 2B(h·k) + C|k|² ≤ 0 over sampled
/// directions plus the analytic endpoint/root conditions that make the
/// sampling exhaustive.
pub fn verify_quadratic_form<R: Real>(
    cand: &BellmanCandidate<R>,
    params: &VerifyParams,
) -> Result<Vec<BellmanCheck>> {
    let p = cand.p();
    let z = cand.constants().largest_zero();
    let grid = certification_grid(z, params.grid_n);
    // u at Chebyshev points of [−1, 1]; b uniform on [0, 1]. The form is
    // quadratic in (u·b, b), so these samples plus the analytic conditions
    // decide the sign everywhere.
    let u_nodes: Vec<R> = (0..params.dir_u)
        .map(|j| {
            (R::PI() * R::from_index(j) / R::from_index(params.dir_u - 1)).cos()
        })
        .collect();
    let b_nodes: Vec<R> = (0..params.dir_b)
        .map(|i| R::from_index(i) / R::from_index(params.dir_b - 1))
        .collect();

    let mut sampled = MaxTracker::new();
    let mut minus = MaxTracker::new();
    let mut plus = MaxTracker::new();
    let mut leading = MaxTracker::new();
    let mut root_loc = MaxTracker::new();
    for &(s, side) in &grid {
        let g = cand.jet_side(s, side)?;
        let scale = scale_of(&g);
        let near_edge = R::one() - s.abs() < R::of(ENDPOINT_SWITCH);
        let q = if near_edge {
            QuadFormCoeffs::at_simplex_cleared(p, s, &g)?
        } else {
            QuadFormCoeffs::at_simplex(p, s, &g)?
        };
        let s64 = s.as_f64();
        for &u in &u_nodes {
            for &b in &b_nodes {
                sampled.update((q.eval(u, b) / scale).as_f64(), s64);
            }
        }
        let two = R::of(2.0);
        minus.update(((q.a_eff - two * q.b + q.c_eff) / scale).as_f64(), s64);
        plus.update(((q.a_eff + two * q.b + q.c_eff) / scale).as_f64(), s64);
        leading.update((q.a_eff / scale).as_f64(), s64);
        root_loc.update((q.middle_residual() / scale).as_f64(), s64);
    }
    let p64 = p.as_f64();
    let n = grid.len();
    Ok(vec![
        sampled.into_check("quadform_sampled", p64, n, params.num_tol),
        minus.into_check("quadform_minus", p64, n, params.num_tol),
        plus.into_check("quadform_plus", p64, n, params.num_tol),
        leading.into_check("quadform_leading_coeff", p64, n, params.num_tol),
        root_loc.into_check("quadform_root_location", p64, n, params.num_tol),
    ])
}

/// The common tangent line at z_p separates the two branches on (z_p, 1) and
/// clears height 1 at s = 1.
pub fn verify_tangent_separation<R: Real>(
    cand: &BellmanCandidate<R>,
    params: &VerifyParams,
) -> Result<Vec<BellmanCheck>> {
    let p = cand.p();
    let one = R::one();
    let z = cand.constants().largest_zero();
    let h = cand.obstacle();
    // Slope of the common tangent: p ((1+z)/2)^{p-1} / (1-z).
    let slope = p * ((one + z).half()).powf(p - one) / (one - z);
    let h_jet = h.jet(z);
    let line = |s: R| h_jet.value + slope * (s - z);

    let p64 = p.as_f64();
    let mut slope_check = MaxTracker::new();
    slope_check.update(
        ((slope - h_jet.d1).abs() / (one + slope.abs())).as_f64(),
        z.as_f64(),
    );
    let mut above = MaxTracker::new();
    let mut below = MaxTracker::new();
    let hi = one - R::of(ENDPOINT_GUARD);
    let n = params.grid_n.max(2);
    for i in 0..n {
        let s = z + (hi - z) * R::from_index(i) / R::from_index(n - 1);
        let g = cand.jet_side(s, Side::Right)?;
        let scale = scale_of(&g);
        let l = line(s);
        above.update(((l - g.value) / scale).as_f64(), s.as_f64());
        below.update(((h.value(s) - l) / scale).as_f64(), s.as_f64());
    }
    let mut endpoint = MaxTracker::new();
    endpoint.update((one - line(one)).as_f64(), 1.0);
    let mut checks = vec![
        slope_check.into_check("tangent_slope_formula", p64, 1, params.num_tol),
        above.into_check("tangent_below_certificate", p64, n, params.num_tol),
        below.into_check("tangent_above_obstacle", p64, n, params.num_tol),
        endpoint.into_check("tangent_clears_one", p64, 1, params.num_tol),
    ];
    // h(i_p) < line(i_p): the concave stretch stays strictly under the line.
    if let Some(i_p) = cand.constants().inflection() {
        let mut at_inflection = MaxTracker::new();
        at_inflection.update((h.value(i_p) - line(i_p)).as_f64(), i_p.as_f64());
        checks.push(at_inflection.into_check(
            "tangent_above_obstacle_at_inflection",
            p64,
            1,
            params.num_tol,
        ));
    }
    Ok(checks)
}

/// g_p ≥ h_{c_p} everywhere, with equality on the obstacle side and a
/// nonnegative one-sided curvature jump at the gluing point.
pub fn verify_majorization<R: Real>(
    cand: &BellmanCandidate<R>,
    params: &VerifyParams,
) -> Result<Vec<BellmanCheck>> {
    let p64 = cand.p().as_f64();
    let z = cand.constants().largest_zero();
    let h = cand.obstacle();
    let grid = certification_grid(z, params.grid_n);
    let mut majorize = MaxTracker::new();
    let mut equal_left = MaxTracker::new();
    for &(s, side) in &grid {
        let g = cand.jet_side(s, side)?;
        let scale = scale_of(&g);
        let gap = g.value - h.value(s);
        majorize.update((-gap / scale).as_f64(), s.as_f64());
        if side == Side::Left {
            equal_left.update((gap.abs() / scale).as_f64(), s.as_f64());
        }
    }
    let left = cand.jet_side(z, Side::Left)?;
    let right = cand.jet_side(z, Side::Right)?;
    let mut jump = MaxTracker::new();
    jump.update((left.d2 - right.d2).as_f64() / (1.0 + left.d2.as_f64().abs()), z.as_f64());
    Ok(vec![
        majorize.into_check("majorization", p64, grid.len(), params.num_tol),
        equal_left.into_check("majorization_equality_left", p64, grid.len(), params.num_tol),
        jump.into_check("curvature_jump_at_zp", p64, 1, 1e-9),
    ])
}

/// Homogeneity and majorization of the reconstructed φ(x, y).
pub fn verify_phi<R: Real>(
    cand: &BellmanCandidate<R>,
    params: &VerifyParams,
) -> Result<Vec<BellmanCheck>> {
    let p = cand.p();
    let p64 = p.as_f64();
    let c_pow_p = cand.obstacle().c_pow_p();
    let mut homog = MaxTracker::new();
    let samples = [
        (0.3, 1.7),
        (1.2, 0.4),
        (0.9, 0.9),
        (2.0, 0.1),
        (1e-3, 1.5),
        (0.0, 1.0),
        (1.0, 0.0),
    ];
    for &(x, y) in &samples {
        let (x, y) = (R::of(x), R::of(y));
        let base = cand.phi(x, y)?;
        for &t in &[0.5, 2.0, 3.0] {
            let t = R::of(t);
            let lhs = cand.phi(t * x, t * y)?;
            let rhs = t.powf(p) * base;
            let rel = ((lhs - rhs).abs() / (R::one() + rhs.abs())).as_f64();
            homog.update(rel - 1e-10, x.as_f64());
        }
    }
    let mut major = MaxTracker::new();
    let n = 50;
    for i in 0..=n {
        for j in 0..=n {
            if i == 0 && j == 0 {
                continue;
            }
            let x = R::of(2.0) * R::from_index(i) / R::from_index(n);
            let y = R::of(2.0) * R::from_index(j) / R::from_index(n);
            let phi = cand.phi(x, y)?;
            let floor = y.powf(p) - c_pow_p * x.powf(p);
            let scale = R::one() + phi.abs() + floor.abs();
            major.update(((floor - phi) / scale).as_f64(), x.as_f64());
        }
    }
    Ok(vec![
        homog.into_check("phi_homogeneity", p64, samples.len() * 3, params.num_tol),
        major.into_check("phi_majorization", p64, (n + 1) * (n + 1) - 1, params.num_tol),
    ])
}

/// What goes wrong with a constant c below c_p: no touching point exists on
/// [z_p, 1), and no member of the family a·f₁ + b·f₂ (a > 0, b ≥ 0) majorises
/// h_c there — the b = 0 members fail at z_p, the b > 0 members vanish inside
/// (z_p, 1) where h_c is already positive (and blow up at 1 anyway).
pub fn verify_constant_override<R: Real>(
    consts: &SharpConstants<R>,
    c: R,
    params: &VerifyParams,
) -> Result<Vec<BellmanCheck>> {
    if !(c > R::zero()) {
        return Err(Error::InvalidConfig("override constant must be positive".into()));
    }
    let p = consts.p();
    let p64 = p.as_f64();
    let one = R::one();
    let z = consts.largest_zero();
    let c_pow_p = c.powf(p);
    let cp_pow_p = consts.constant().powf(p);
    let h = Obstacle::new(p, c)?;

    // Touching point on [z_p, 1): exists iff c^p >= beta(z_p) = c_p^p.
    let mut touching = MaxTracker::new();
    touching.update(((cp_pow_p - c_pow_p) / cp_pow_p).as_f64(), z.as_f64());
    let touching_check = touching.into_check("override_touching_exists", p64, 1, params.num_tol);

    // Majorization over the family a f1 + b f2.
    let sol = consts.solution();
    let f2 = consts.second_solution()?;
    let hi = one - R::of(ENDPOINT_GUARD);
    let n = params.grid_n;
    let points: Vec<R> = (0..n)
        .map(|i| z + (hi - z) * R::from_index(i) / R::from_index(n - 1))
        .collect();
    let f1_vals: Vec<R> = points.iter().map(|&s| sol.f1(s)).collect::<Result<_>>()?;
    let f2_vals: Vec<R> = f2.jets_on_grid(&points)?.iter().map(|&(v, _)| v).collect();
    let a_p = consts.amplitude();
    let amplitudes = [a_p.half(), one.max(a_p * R::of(0.9)), a_p, a_p * R::of(2.0)];
    let slopes_b = [R::zero(), R::of(0.5), R::of(5.0)];
    let mut family_best = f64::INFINITY;
    let mut family_loc = z.as_f64();
    for &a in &amplitudes {
        for &b in &slopes_b {
            let mut member_worst = f64::NEG_INFINITY;
            let mut member_loc = z.as_f64();
            for (i, &s) in points.iter().enumerate() {
                let member = a * f1_vals[i] + b * f2_vals[i];
                let hv = h.value(s);
                let viol = ((hv - member) / (one + hv.abs())).as_f64();
                if viol > member_worst {
                    member_worst = viol;
                    member_loc = s.as_f64();
                }
            }
            if member_worst < family_best {
                family_best = member_worst;
                family_loc = member_loc;
            }
        }
    }
    let mut family = MaxTracker::new();
    family.update(family_best, family_loc);
    let family_check = family.into_check("override_majorization_family", p64, n, params.num_tol);

    // For b > 0 the member must vanish strictly inside (z_p, 1): locate the
    // zero and confirm the obstacle is positive there.
    let mut zero_inside = MaxTracker::new();
    {
        let (a, b) = (a_p, R::of(0.5));
        let combo = |s: R| -> Result<R> { Ok(a * sol.f1(s)? + b * f2.value(s)?) };
        let mut bracket = None;
        let mut prev_s = points[0];
        let mut prev_v = a * f1_vals[0] + b * f2_vals[0];
        for (i, &s) in points.iter().enumerate().skip(1) {
            let v = a * f1_vals[i] + b * f2_vals[i];
            if prev_v * v <= R::zero() && prev_v != R::zero() {
                bracket = Some(Bracket::new(prev_s, s, prev_v, v)?);
                break;
            }
            prev_s = s;
            prev_v = v;
        }
        match bracket {
            Some(br) => {
                let root = bisect(br, R::of(1e-10), combo)?;
                // h_c must already be positive at the member's zero, and for
                // c < c_p the zero sits right of z_p.
                zero_inside.update((-h.value(root)).as_f64(), root.as_f64());
            }
            None => zero_inside.update(1.0, z.as_f64()),
        }
    }
    let zero_check = zero_inside.into_check(
        "override_family_zero_hits_positive_obstacle",
        p64,
        n,
        params.num_tol,
    );

    Ok(vec![touching_check, family_check, zero_check])
}

/// The full verification bundle emitted by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyBundle {
    pub p: f64,
    pub z_p: f64,
    pub c_p: f64,
    pub a_p: f64,
    pub i_p: Option<f64>,
    pub override_c: Option<f64>,
    pub checks: Vec<LemmaCheck>,
    pub bellman_checks: Vec<BellmanCheck>,
    pub all_pass: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct BundleParams {
    pub verify: VerifyParams,
    pub zero_tol: f64,
    pub seed: u64,
    pub override_c: Option<f64>,
}

impl Default for BundleParams {
    fn default() -> Self {
        Self {
            verify: VerifyParams::default(),
            zero_tol: 1e-13,
            seed: 0x5EED,
            override_c: None,
        }
    }
}

pub fn verify_bundle(p: f64, params: &BundleParams) -> Result<VerifyBundle> {
    let consts = SharpConstants::compute_with_tol(p, params.zero_tol)?;
    let checks = lemma_suite(&consts, params.seed)?;
    let cand = BellmanCandidate::new(consts.clone())?;
    let vp = &params.verify;
    let mut bellman_checks = verify_supersolution(&cand, vp)?;
    bellman_checks.extend(verify_quadratic_form(&cand, vp)?);
    if p > 2.0 {
        bellman_checks.extend(verify_tangent_separation(&cand, vp)?);
    }
    bellman_checks.extend(verify_majorization(&cand, vp)?);
    bellman_checks.extend(verify_phi(&cand, vp)?);
    if let Some(c) = params.override_c {
        bellman_checks.extend(verify_constant_override(&consts, c, vp)?);
    }
    let all_pass =
        checks.iter().all(|c| c.pass) && bellman_checks.iter().all(|c| c.pass);
    Ok(VerifyBundle {
        p,
        z_p: consts.largest_zero(),
        c_p: consts.constant(),
        a_p: consts.amplitude(),
        i_p: consts.inflection(),
        override_c: params.override_c,
        checks,
        bellman_checks,
        all_pass,
    })
}

/// CSV dump of (s, g, g′, g″, Dg, D̃g) for plotting.
pub fn dump_profile<R: Real, W: Write>(
    cand: &BellmanCandidate<R>,
    n: usize,
    out: &mut W,
) -> Result<()> {
    let p = cand.p();
    writeln!(out, "s,g,g_prime,g_double_prime,Dg,Dtilde_g")
        .map_err(|e| Error::NonFinite(format!("write failed: {e}")))?;
    for (s, side) in certification_grid(cand.constants().largest_zero(), n) {
        let g = cand.jet_side(s, side)?;
        let d = d_op(p, s, &g);
        let dt = dtilde_op(p, s, &g)?;
        writeln!(
            out,
            "{:.15e},{:.15e},{:.15e},{:.15e},{:.15e},{:.15e}",
            s.as_f64(),
            g.value.as_f64(),
            g.d1.as_f64(),
            g.d2.as_f64(),
            d.as_f64(),
            dt.as_f64()
        )
        .map_err(|e| Error::NonFinite(format!("write failed: {e}")))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_params() -> VerifyParams {
        VerifyParams {
            grid_n: 400,
            dir_u: 17,
            dir_b: 16,
            num_tol: 1e-8,
        }
    }

    #[test]
    fn supersolution_holds_for_p6() {
        let cand = BellmanCandidate::for_p(6.0f64).unwrap();
        for check in verify_supersolution(&cand, &quick_params()).unwrap() {
            assert!(check.pass, "{}: {}", check.name, check.max_residual);
        }
    }

    #[test]
    fn quadratic_form_holds_for_non_integer_p() {
        let cand = BellmanCandidate::for_p(7.5f64).unwrap();
        for check in verify_quadratic_form(&cand, &quick_params()).unwrap() {
            assert!(check.pass, "{}: {}", check.name, check.max_residual);
        }
    }

    #[test]
    fn triangle_inequality_form_on_legendre_branch() {
        // With Dg = 0 the root condition reduces to
        // ||-2sg'+pg| - 2|g'|| <= |-2(1+s)g'+pg| exactly.
        let cand = BellmanCandidate::for_p(6.0f64).unwrap();
        let z = cand.constants().largest_zero();
        for i in 0..50 {
            let s = z + (0.999 - z) * i as f64 / 49.0;
            let g = cand.jet_side(s, Side::Right).unwrap();
            let q = QuadFormCoeffs::at_simplex(6.0, s, &g).unwrap();
            let disc = q.discriminant();
            let expect = 4.0 * 36.0 * g.d1 * g.d1;
            assert!(
                (disc - expect).abs() <= 1e-7 * (1.0 + expect.abs()),
                "s={s}: disc {disc} vs 4p^2 g'^2 {expect}"
            );
            let lhs = ((-2.0 * s * g.d1 + 6.0 * g.value).abs() - 2.0 * g.d1.abs()).abs();
            let rhs = (-2.0 * (1.0 + s) * g.d1 + 6.0 * g.value).abs();
            assert!(lhs <= rhs + 1e-9 * (1.0 + rhs));
        }
    }

    #[test]
    fn obstacle_branch_middle_reduces_to_power_inequality() {
        // On the obstacle side B = 0 and the root condition is
        // (1+s)^{p-2} <= c_p^p (1-s)^{p-2}.
        let cand = BellmanCandidate::for_p(6.0f64).unwrap();
        let z = cand.constants().largest_zero();
        let cp = cand.constants().constant().powi(6);
        for i in 1..40 {
            let s = -1.0 + (z + 1.0) * i as f64 / 40.0;
            let g = cand.jet_side(s, Side::Left).unwrap();
            let q = QuadFormCoeffs::at_simplex(6.0, s, &g).unwrap();
            assert!(q.b.abs() < 1e-7 * (1.0 + g.value.abs()), "B != 0 at s={s}");
            assert!((1.0 + s).powi(4) <= cp * (1.0 - s).powi(4) + 1e-9);
            assert!(q.middle_residual() <= 1e-7 * (1.0 + q.a_eff.abs()));
        }
    }

    #[test]
    fn tangent_separation_p6() {
        let cand = BellmanCandidate::for_p(6.0f64).unwrap();
        for check in verify_tangent_separation(&cand, &quick_params()).unwrap() {
            assert!(check.pass, "{}: {}", check.name, check.max_residual);
        }
    }

    #[test]
    fn override_below_cp_fails_the_right_checks() {
        let consts = SharpConstants::compute(6.0f64).unwrap();
        let checks = verify_constant_override(&consts, 3.5, &quick_params()).unwrap();
        let by_name = |n: &str| checks.iter().find(|c| c.name == n).unwrap();
        assert!(!by_name("override_touching_exists").pass);
        assert!(!by_name("override_majorization_family").pass);
        assert!(by_name("override_family_zero_hits_positive_obstacle").pass);
    }

    #[test]
    fn override_at_cp_passes() {
        let consts = SharpConstants::compute(6.0f64).unwrap();
        let c = consts.constant();
        let checks = verify_constant_override(&consts, c, &quick_params()).unwrap();
        for check in checks {
            assert!(check.pass, "{}: {}", check.name, check.max_residual);
        }
    }

    #[test]
    fn bundle_passes_at_p6_and_fails_with_small_override() {
        let mut params = BundleParams {
            verify: quick_params(),
            ..Default::default()
        };
        let bundle = verify_bundle(6.0, &params).unwrap();
        assert!(bundle.all_pass, "{:?}", bundle);
        params.override_c = Some(0.99 * bundle.c_p);
        let bundle = verify_bundle(6.0, &params).unwrap();
        assert!(!bundle.all_pass);
    }

    #[test]
    fn profile_dump_has_header_and_rows() {
        let cand = BellmanCandidate::for_p(6.0f64).unwrap();
        let mut buf = Vec::new();
        dump_profile(&cand, 50, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "s,g,g_prime,g_double_prime,Dg,Dtilde_g"
        );
        assert!(lines.count() >= 50);
    }
}
