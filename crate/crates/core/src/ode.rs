//! Adaptive Dormand–Prince 5(4) integrator for small first-order systems.
//!
//! This is the one-step scheme used for continuing Legendre solutions away
//! from the series trust region and as an independent oracle for the series
//! evaluator. The state dimension is a const generic; everything here is
//! allocation-free.

use crate::error::{Error, Result};
use crate::real::Real;

#[derive(Clone, Copy, Debug)]
pub struct OdeOptions<R: Real> {
    pub rtol: R,
    pub atol: R,
    pub max_steps: usize,
    /// Initial step size guess; defaults to 1/50 of the interval.
    pub first_step: Option<R>,
}

impl<R: Real> Default for OdeOptions<R> {
    fn default() -> Self {
        Self {
            rtol: R::of(1e-12).max(R::epsilon() * R::of(32.0)),
            atol: R::of(1e-14).max(R::epsilon() * R::of(4.0)),
            max_steps: 1_000_000,
            first_step: None,
        }
    }
}

/// Integrate `y' = f(t, y)` from `(t0, y0)` to `t_end`.
///
/// Stage abscissae never leave the closed interval between `t0` and `t_end`,
/// so right-hand sides singular just outside it are safe.
pub fn integrate<R, const N: usize, F>(
    mut f: F,
    t0: R,
    y0: [R; N],
    t_end: R,
    opts: &OdeOptions<R>,
) -> Result<[R; N]>
where
    R: Real,
    F: FnMut(R, &[R; N]) -> [R; N],
{
    if t_end == t0 {
        return Ok(y0);
    }
    let span = t_end - t0;
    let dir = span.signum();
    let mut t = t0;
    let mut y = y0;
    let mut h = opts
        .first_step
        .map(|h| h.abs())
        .unwrap_or(span.abs() / R::of(50.0))
        .min(span.abs())
        * dir;
    let mut k1 = f(t, &y);

    let done_tol = (t0.abs() + t_end.abs() + R::one()) * R::epsilon() * R::of(2.0);
    for _ in 0..opts.max_steps {
        if (t_end - t) * dir <= done_tol {
            return Ok(y);
        }
        if h.abs() > (t_end - t).abs() {
            h = t_end - t;
        }
        let (y_new, err_ratio, k_last) = dp_step(&mut f, t, &y, &k1, h, opts);

        if err_ratio <= R::one() && y_new.iter().all(|v| v.is_finite()) {
            t = t + h;
            y = y_new;
            // FSAL: stage 7 of the accepted step is stage 1 of the next.
            k1 = k_last;
            if t == t_end || (t_end - t) * dir <= R::zero() {
                return Ok(y);
            }
        }
        let factor = if err_ratio > R::zero() {
            (R::one() / err_ratio).powf(R::of(0.2)) * R::of(0.9)
        } else {
            R::of(5.0)
        };
        h = h * factor.max(R::of(0.2)).min(R::of(5.0));
        if h.abs() < (t.abs() + R::one()) * R::epsilon() * R::of(8.0) {
            return Err(Error::OdeStepUnderflow(t.as_f64()));
        }
    }
    Err(Error::OdeTooManySteps(opts.max_steps))
}

/// One Dormand–Prince step; returns the 5th-order solution, the scaled error
/// norm (accept when <= 1) and the last stage derivative.
#[allow(clippy::too_many_arguments)]
fn dp_step<R, const N: usize, F>(
    f: &mut F,
    t: R,
    y: &[R; N],
    k1: &[R; N],
    h: R,
    opts: &OdeOptions<R>,
) -> ([R; N], R, [R; N])
where
    R: Real,
    F: FnMut(R, &[R; N]) -> [R; N],
{
    let c = |x: f64| R::of(x);
    let axpy = |y: &[R; N], coeffs: &[(R, &[R; N])]| {
        let mut out = *y;
        for i in 0..N {
            let mut acc = R::zero();
            for (a, k) in coeffs {
                acc = acc + *a * k[i];
            }
            out[i] = out[i] + h * acc;
        }
        out
    };

    let y2 = axpy(y, &[(c(1.0 / 5.0), k1)]);
    let k2 = f(t + h * c(1.0 / 5.0), &y2);
    let y3 = axpy(y, &[(c(3.0 / 40.0), k1), (c(9.0 / 40.0), &k2)]);
    let k3 = f(t + h * c(3.0 / 10.0), &y3);
    let y4 = axpy(
        y,
        &[(c(44.0 / 45.0), k1), (c(-56.0 / 15.0), &k2), (c(32.0 / 9.0), &k3)],
    );
    let k4 = f(t + h * c(4.0 / 5.0), &y4);
    let y5 = axpy(
        y,
        &[
            (c(19372.0 / 6561.0), k1),
            (c(-25360.0 / 2187.0), &k2),
            (c(64448.0 / 6561.0), &k3),
            (c(-212.0 / 729.0), &k4),
        ],
    );
    let k5 = f(t + h * c(8.0 / 9.0), &y5);
    let y6 = axpy(
        y,
        &[
            (c(9017.0 / 3168.0), k1),
            (c(-355.0 / 33.0), &k2),
            (c(46732.0 / 5247.0), &k3),
            (c(49.0 / 176.0), &k4),
            (c(-5103.0 / 18656.0), &k5),
        ],
    );
    let k6 = f(t + h, &y6);
    let y_new = axpy(
        y,
        &[
            (c(35.0 / 384.0), k1),
            (c(500.0 / 1113.0), &k3),
            (c(125.0 / 192.0), &k4),
            (c(-2187.0 / 6784.0), &k5),
            (c(11.0 / 84.0), &k6),
        ],
    );
    let k7 = f(t + h, &y_new);

    // Difference between the embedded 4th-order solution and y_new.
    let e = [
        c(71.0 / 57600.0),
        R::zero(),
        c(-71.0 / 16695.0),
        c(71.0 / 1920.0),
        c(-17253.0 / 339200.0),
        c(22.0 / 525.0),
        c(-1.0 / 40.0),
    ];
    let mut err_sq = R::zero();
    for i in 0..N {
        let err_i = h
            * (e[0] * k1[i]
                + e[2] * k3[i]
                + e[3] * k4[i]
                + e[4] * k5[i]
                + e[5] * k6[i]
                + e[6] * k7[i]);
        let scale = opts.atol + opts.rtol * y[i].abs().max(y_new[i].abs());
        let r = err_i / scale;
        err_sq = err_sq + r * r;
    }
    let err_ratio = (err_sq / R::from_index(N)).sqrt();
    (y_new, err_ratio, k7)
}
