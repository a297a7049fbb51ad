//! Strategies: non-anticipatory rules producing constraint-satisfying
//! increment frames. A rule may look at the step index, the elapsed time and
//! the current state of the pair, never at the driving noise.

use std::f64::consts::PI;

use crate::bellman::{k_op, BellmanCandidate};
use crate::error::Result;

use super::frame::{ab_transform, IncrementFrame};

/// Current position of the pair: Z = (x, y), W = (u, v).
#[derive(Clone, Copy, Debug, Default)]
pub struct PairState {
    pub x: f64,
    pub y: f64,
    pub u: f64,
    pub v: f64,
}

#[derive(Clone, Copy, Debug)]
pub struct StepContext {
    pub step: usize,
    pub t: f64,
    pub state: PairState,
}

pub trait Strategy: Send + Sync {
    fn name(&self) -> &str;

    /// Initial W given the initial Z.
    fn initial_w(&self, z0: [f64; 2]) -> [f64; 2];

    fn frame(&self, ctx: &StepContext) -> Result<IncrementFrame>;

    /// Whether the frames satisfy the full constraint set (both
    /// orthogonalities and |k| ≤ |h|). The raw transform strategy does not.
    fn constrained(&self) -> bool {
        true
    }

    /// Pathwise bound factor: d⟨W,W⟩ ≤ factor · d⟨Z,Z⟩ per step.
    fn subordination_factor(&self) -> f64 {
        1.0
    }
}

fn rot(r: f64, angle: f64) -> [f64; 2] {
    [r * angle.cos(), r * angle.sin()]
}

/// Orthogonal companion row: the exact quarter-turn of `v` (so the frame
/// constraints hold to the last bit), or its reflection branch.
fn companion(v: [f64; 2], reflect: bool) -> [f64; 2] {
    if reflect {
        [v[1], -v[0]]
    } else {
        [-v[1], v[0]]
    }
}

/// How a rotation strategy seeds W: from rotating Z by the fixed angle gap
/// (so constant-rule strategies are pathwise exact), or from zero.
#[derive(Clone, Copy, Debug)]
enum InitialW {
    Zero,
    ComplexScale { re: f64, im: f64 },
}

type AngleRule = Box<dyn Fn(&StepContext) -> f64 + Send + Sync>;
type RatioRule = Box<dyn Fn(&StepContext) -> f64 + Send + Sync>;

/// The general element of the constraint set: h = r(cos θ, sin θ),
/// h′ = r(−sin θ, cos θ), k = b·r(cos ψ, sin ψ), k′ = b·r(−sin ψ, cos ψ),
/// with path-functional rules for θ, ψ and b ∈ [0, 1], plus optional
/// reflection of either companion row.
pub struct RotationStrategy {
    name: String,
    theta: AngleRule,
    psi: AngleRule,
    b: RatioRule,
    reflect_z: bool,
    reflect_w: bool,
    scale: f64,
    initial: InitialW,
}

impl RotationStrategy {
    pub fn new(
        name: impl Into<String>,
        theta: AngleRule,
        psi: AngleRule,
        b: RatioRule,
    ) -> Self {
        Self {
            name: name.into(),
            theta,
            psi,
            b,
            reflect_z: false,
            reflect_w: false,
            scale: 1.0,
            initial: InitialW::Zero,
        }
    }

    pub fn reflected(mut self, reflect_z: bool, reflect_w: bool) -> Self {
        self.reflect_z = reflect_z;
        self.reflect_w = reflect_w;
        self
    }
}

impl Strategy for RotationStrategy {
    fn name(&self) -> &str {
        &self.name
    }

    fn initial_w(&self, z0: [f64; 2]) -> [f64; 2] {
        match self.initial {
            InitialW::Zero => [0.0, 0.0],
            InitialW::ComplexScale { re, im } => {
                [re * z0[0] - im * z0[1], im * z0[0] + re * z0[1]]
            }
        }
    }

    fn frame(&self, ctx: &StepContext) -> Result<IncrementFrame> {
        let theta = (self.theta)(ctx);
        let psi = (self.psi)(ctx);
        let b = (self.b)(ctx);
        if !(0.0..=1.0).contains(&b) {
            return Err(crate::error::Error::InvalidFrame(format!(
                "b = {b} outside [0, 1] at step {}",
                ctx.step
            )));
        }
        let r = self.scale;
        let h = rot(r, theta);
        let k = rot(b * r, psi);
        Ok(IncrementFrame {
            h,
            hp: companion(h, self.reflect_z),
            k,
            kp: companion(k, self.reflect_w),
        })
    }
}

/// k ≡ h, k′ ≡ h′: W replays Z exactly; the moment ratio is 1.
pub fn identity() -> Box<dyn Strategy> {
    let mut s = RotationStrategy::new(
        "identity",
        Box::new(|_| 0.0),
        Box::new(|_| 0.0),
        Box::new(|_| 1.0),
    );
    s.initial = InitialW::ComplexScale { re: 1.0, im: 0.0 };
    Box::new(s)
}

/// Constant angle gap `delta` and amplitude `b`. The complex increments obey
/// dW = b e^{−i(ψ−θ)} dZ, so with ψ − θ = δ and W seeded at b e^{−iδ} Z(0)
/// the whole path satisfies W = b e^{−iδ} Z and the ratio is exactly b.
pub fn fixed_rotation(delta: f64, b: f64) -> Box<dyn Strategy> {
    let mut s = RotationStrategy::new(
        format!("rotation(delta={delta:.3},b={b:.3})"),
        Box::new(|_| 0.0),
        Box::new(move |_| delta),
        Box::new(move |_| b),
    );
    s.initial = InitialW::ComplexScale {
        re: b * delta.cos(),
        im: -b * delta.sin(),
    };
    Box::new(s)
}

/// Deterministically time-varying angles: θ = ω t, ψ = ω t / 2.
pub fn spiral(omega: f64) -> Box<dyn Strategy> {
    Box::new(RotationStrategy::new(
        "spiral",
        Box::new(move |ctx| omega * ctx.t),
        Box::new(move |ctx| 0.5 * omega * ctx.t),
        Box::new(|_| 1.0),
    ))
}

/// State-driven rule on the reflection branch of the constraint set; the Z
/// angle follows the current argument of Z.
pub fn reflected_drift() -> Box<dyn Strategy> {
    Box::new(
        RotationStrategy::new(
            "reflected-drift",
            Box::new(|ctx| ctx.state.y.atan2(ctx.state.x.max(1e-9))),
            Box::new(|ctx| 0.7 * ctx.state.v.atan2(ctx.state.u.abs().max(1e-9))),
            Box::new(|_| 1.0),
        )
        .reflected(true, true),
    )
}

/// Greedy rule: align or anti-align the W rows with the Z rows according to
/// the sign of the mixed derivative φ_xy of the certificate at the current
/// (|Z|, |W|); the quadratic form is extremal at u = ±1, so chasing
/// sign(φ_xy) maximises the admissible push of E|W|^p.
pub struct GreedyStrategy {
    candidate: BellmanCandidate<f64>,
}

impl GreedyStrategy {
    pub fn new(p: f64) -> Result<Self> {
        Ok(Self {
            candidate: BellmanCandidate::for_p(p)?,
        })
    }
}

impl Strategy for GreedyStrategy {
    fn name(&self) -> &str {
        "greedy"
    }

    fn initial_w(&self, _z0: [f64; 2]) -> [f64; 2] {
        [0.0, 0.0]
    }

    fn frame(&self, ctx: &StepContext) -> Result<IncrementFrame> {
        let z_norm = (ctx.state.x * ctx.state.x + ctx.state.y * ctx.state.y).sqrt();
        let w_norm = (ctx.state.u * ctx.state.u + ctx.state.v * ctx.state.v).sqrt();
        let sum = z_norm + w_norm;
        let sign = if sum > 0.0 {
            let s = ((w_norm - z_norm) / sum).clamp(-1.0 + 1e-9, 1.0 - 1e-9);
            let g = self.candidate.jet(s)?;
            let b_coeff = k_op(self.candidate.p(), s, &g);
            if b_coeff >= 0.0 {
                1.0
            } else {
                -1.0
            }
        } else {
            1.0
        };
        let h = [1.0, 0.0];
        let hp = [0.0, 1.0];
        Ok(IncrementFrame {
            h,
            hp,
            k: [sign * h[0], sign * h[1]],
            kp: [sign * hp[0], sign * hp[1]],
        })
    }
}

pub fn greedy(p: f64) -> Result<Box<dyn Strategy>> {
    Ok(Box::new(GreedyStrategy::new(p)?))
}

/// The martingale-transform strategy: Z rows rotate uniformly (an orthogonal
/// martingale), W rows are the transform of the Z rows scaled by `scale`.
/// At scale 1/2 the pair satisfies the full constraint set; at scale 1 the
/// subordination factor is 4.
pub struct AbTransformStrategy {
    name: &'static str,
    scale: f64,
    omega: f64,
}

impl Strategy for AbTransformStrategy {
    fn name(&self) -> &str {
        self.name
    }

    fn initial_w(&self, _z0: [f64; 2]) -> [f64; 2] {
        [0.0, 0.0]
    }

    fn frame(&self, ctx: &StepContext) -> Result<IncrementFrame> {
        let theta = self.omega * ctx.t;
        let x = rot(1.0, theta);
        let y = companion(x, false);
        let (u, v) = ab_transform(x, y);
        Ok(IncrementFrame {
            h: x,
            hp: y,
            k: [self.scale * u[0], self.scale * u[1]],
            kp: [self.scale * v[0], self.scale * v[1]],
        })
    }

    fn constrained(&self) -> bool {
        // |k| = 2·scale·|h|; constrained only when scaled down by 2.
        2.0 * self.scale <= 1.0 + 1e-15
    }

    fn subordination_factor(&self) -> f64 {
        let f = 2.0 * self.scale;
        f * f
    }
}

/// Transform strategy scaled by 1/2, inside the constraint set.
pub fn ab_half(omega: f64) -> Box<dyn Strategy> {
    Box::new(AbTransformStrategy {
        name: "abz-half",
        scale: 0.5,
        omega,
    })
}

/// Unscaled transform strategy: W-orthogonal but with d⟨W,W⟩ = 4 d⟨Z,Z⟩.
pub fn ab_raw(omega: f64) -> Box<dyn Strategy> {
    Box::new(AbTransformStrategy {
        name: "abz-raw",
        scale: 1.0,
        omega,
    })
}

/// The shipped strategies that satisfy the full constraint set; every one of
/// them must respect the sharp bound.
pub fn constrained_library(p: f64) -> Result<Vec<Box<dyn Strategy>>> {
    Ok(vec![
        identity(),
        fixed_rotation(PI / 3.0, 0.7),
        spiral(8.0),
        ab_half(3.0),
        greedy(p)?,
    ])
}

pub const STRATEGY_NAMES: &[&str] = &[
    "identity",
    "rotation",
    "spiral",
    "abz-half",
    "abz-raw",
    "greedy",
    "reflected-drift",
];

/// CLI lookup; `rotation` uses δ = π/3, b = 0.7.
pub fn by_name(name: &str, p: f64) -> Result<Box<dyn Strategy>> {
    match name {
        "identity" => Ok(identity()),
        "rotation" => Ok(fixed_rotation(PI / 3.0, 0.7)),
        "spiral" => Ok(spiral(8.0)),
        "abz-half" => Ok(ab_half(3.0)),
        "abz-raw" => Ok(ab_raw(3.0)),
        "greedy" => greedy(p),
        "reflected-drift" => Ok(reflected_drift()),
        other => Err(crate::error::Error::InvalidConfig(format!(
            "unknown strategy '{other}'"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(t: f64, state: PairState) -> StepContext {
        StepContext { step: 0, t, state }
    }

    #[test]
    fn constrained_library_frames_validate() {
        let state = PairState {
            x: 0.4,
            y: -1.2,
            u: 0.3,
            v: 0.9,
        };
        for strategy in constrained_library(6.0).unwrap() {
            for &t in &[0.0, 0.37, 0.93] {
                let frame = strategy.frame(&ctx(t, state)).unwrap();
                frame
                    .validate()
                    .unwrap_or_else(|e| panic!("{}: {e}", strategy.name()));
            }
        }
    }

    #[test]
    fn reflection_branch_also_validates() {
        let s = reflected_drift();
        let frame = s
            .frame(&ctx(0.5, PairState { x: 1.0, y: 0.2, u: -0.3, v: 0.8 }))
            .unwrap();
        frame.validate().unwrap();
    }

    #[test]
    fn raw_transform_is_w_orthogonal_but_unconstrained() {
        let s = ab_raw(3.0);
        let frame = s.frame(&ctx(0.25, PairState::default())).unwrap();
        assert!(frame.w_orthogonality_error() < 1e-14);
        assert!(frame.z_orthogonality_error() < 1e-14);
        // |k|^2 = 4 |h|^2.
        assert!((frame.dww() - 4.0 * frame.dzz()).abs() < 1e-12);
        assert!(!s.constrained());
        assert_eq!(s.subordination_factor(), 4.0);
    }

    #[test]
    fn fixed_rotation_initial_w_is_rotated_z() {
        let s = fixed_rotation(PI / 2.0, 1.0);
        let w0 = s.initial_w([1.0, 0.0]);
        // e^{-i pi/2} * 1 = -i.
        assert!((w0[0] - 0.0).abs() < 1e-15);
        assert!((w0[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_range_amplitude() {
        let s = RotationStrategy::new(
            "bad",
            Box::new(|_| 0.0),
            Box::new(|_| 0.0),
            Box::new(|_| 1.5),
        );
        assert!(s.frame(&ctx(0.0, PairState::default())).is_err());
    }

    #[test]
    fn name_lookup() {
        assert!(by_name("identity", 6.0).is_ok());
        assert!(by_name("nope", 6.0).is_err());
    }
}
