//! The Monte-Carlo engine: simulate the pair (Z, W) under a strategy on the
//! 2-D Brownian filtration and estimate the moment ratio ‖W(T)‖_p/‖Z(T)‖_p.
//!
//! Reproducibility contract: every path draws from its own counter-derived
//! stream (base seed + path index), paths are generated in parallel into
//! indexed slots, and all reductions run sequentially in path order — so the
//! output is byte-identical for a fixed seed regardless of worker count.
//!
//! Frames are constant within a step, so the Euler update is the exact
//! stochastic integral of the step; no higher-order scheme is needed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

use super::frame::FRAME_TOL;
use super::strategy::{PairState, StepContext, Strategy};

/// Batches for the batch-means standard errors.
const N_BATCHES: usize = 50;
/// Kurtosis proxy above which the moment estimate is flagged heavy-tailed.
const HEAVY_TAIL_KURTOSIS: f64 = 100.0;

#[derive(Clone, Copy, Debug)]
pub struct McConfig {
    pub p: f64,
    pub n_paths: usize,
    pub n_steps: usize,
    pub t_final: f64,
    pub seed: u64,
    /// Initial Z; the strategy decides the matching initial W.
    pub z0: [f64; 2],
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            p: 2.0,
            n_paths: 100_000,
            n_steps: 256,
            t_final: 1.0,
            seed: 1,
            z0: [1.0, 0.0],
        }
    }
}

impl McConfig {
    fn validate(&self) -> Result<()> {
        if !(self.p >= 2.0) {
            return Err(Error::ExponentOutOfRange(self.p));
        }
        if self.n_paths < 1_000 {
            return Err(Error::InvalidConfig(
                "n_paths must be at least 1000 for a reported ratio".into(),
            ));
        }
        if self.n_steps == 0 || !(self.t_final > 0.0) {
            return Err(Error::InvalidConfig(
                "n_steps and t_final must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Moment estimates with batch-means standard errors.
#[derive(Clone, Debug, Serialize)]
pub struct PathEstimate {
    pub strategy: String,
    pub p: f64,
    pub n_paths: usize,
    pub n_steps: usize,
    pub t_final: f64,
    pub seed: u64,
    /// Estimate of E|Z(T)|^p.
    pub est_zp: f64,
    /// Estimate of E|W(T)|^p.
    pub est_wp: f64,
    pub se_zp: f64,
    pub se_wp: f64,
    /// (est_wp / est_zp)^(1/p).
    pub ratio: f64,
    pub se_ratio: f64,
    /// Path means of (X, Y, U, V) at T, for martingale-property checks.
    pub mean_final: [f64; 4],
    pub se_final: [f64; 4],
    /// Max over steps and paths of d⟨W,W⟩ − factor·d⟨Z,Z⟩ (≤ 0 required).
    pub max_subordination_excess: f64,
    /// Max relative violation of the W-orthogonality frame conditions.
    pub max_w_orthogonality_error: f64,
    /// Max over paths of |Σ k·k′ Δt| (the ⟨U,V⟩ accumulation; 0 for
    /// orthogonal W).
    pub max_uv_covariation: f64,
    /// Kurtosis proxy of |Z|^p exceeded the threshold; the standard errors
    /// are then unreliable.
    pub heavy_tail_warning: bool,
}

struct PathOutcome {
    zp: f64,
    wp: f64,
    finals: [f64; 4],
    max_sub_excess: f64,
    max_w_orth: f64,
    uv_covariation: f64,
}

fn simulate_path(
    strategy: &dyn Strategy,
    cfg: &McConfig,
    w0: [f64; 2],
    path_index: usize,
) -> Result<PathOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(path_index as u64 + 1);
    let dt = cfg.t_final / cfg.n_steps as f64;
    let sq_dt = dt.sqrt();
    let mut state = PairState {
        x: cfg.z0[0],
        y: cfg.z0[1],
        u: w0[0],
        v: w0[1],
    };
    let factor = strategy.subordination_factor();
    let constrained = strategy.constrained();
    let mut max_sub_excess = f64::NEG_INFINITY;
    let mut max_w_orth: f64 = 0.0;
    let mut uv_cov = 0.0;
    for step in 0..cfg.n_steps {
        let ctx = StepContext {
            step,
            t: step as f64 * dt,
            state,
        };
        let frame = strategy.frame(&ctx)?;
        let w_orth = frame.w_orthogonality_error();
        max_w_orth = max_w_orth.max(w_orth);
        if w_orth > FRAME_TOL {
            return Err(Error::InvalidFrame(format!(
                "strategy {} produced non-orthogonal W rows at step {step}",
                strategy.name()
            )));
        }
        if constrained {
            if frame.z_orthogonality_error() > FRAME_TOL {
                return Err(Error::InvalidFrame(format!(
                    "strategy {} produced non-orthogonal Z rows at step {step}",
                    strategy.name()
                )));
            }
            if frame.subordination_excess() > FRAME_TOL {
                return Err(Error::InvalidFrame(format!(
                    "strategy {} violated subordination at step {step}",
                    strategy.name()
                )));
            }
        }
        max_sub_excess = max_sub_excess.max(frame.dww() - factor * frame.dzz());
        uv_cov += (frame.k[0] * frame.kp[0] + frame.k[1] * frame.kp[1]) * dt;
        let db = [
            sq_dt * rng.sample::<f64, _>(StandardNormal),
            sq_dt * rng.sample::<f64, _>(StandardNormal),
        ];
        state.x += frame.h[0] * db[0] + frame.h[1] * db[1];
        state.y += frame.hp[0] * db[0] + frame.hp[1] * db[1];
        state.u += frame.k[0] * db[0] + frame.k[1] * db[1];
        state.v += frame.kp[0] * db[0] + frame.kp[1] * db[1];
    }
    let z_sq = state.x * state.x + state.y * state.y;
    let w_sq = state.u * state.u + state.v * state.v;
    let zp = z_sq.powf(cfg.p / 2.0);
    let wp = w_sq.powf(cfg.p / 2.0);
    if !zp.is_finite() || !wp.is_finite() {
        return Err(Error::NonFinite(format!(
            "path {path_index}: |Z|^p = {zp}, |W|^p = {wp}"
        )));
    }
    Ok(PathOutcome {
        zp,
        wp,
        finals: [state.x, state.y, state.u, state.v],
        max_sub_excess,
        max_w_orth,
        uv_covariation: uv_cov.abs(),
    })
}

pub fn run_mc(strategy: &dyn Strategy, cfg: &McConfig) -> Result<PathEstimate> {
    cfg.validate()?;
    let w0 = strategy.initial_w(cfg.z0);
    let outcomes: Vec<Result<PathOutcome>> = (0..cfg.n_paths)
        .into_par_iter()
        .map(|i| simulate_path(strategy, cfg, w0, i))
        .collect();
    let mut paths = Vec::with_capacity(cfg.n_paths);
    for outcome in outcomes {
        paths.push(outcome?);
    }

    // Sequential reductions in path order: worker-count independent.
    let n = cfg.n_paths as f64;
    let mut sum_zp = 0.0;
    let mut sum_wp = 0.0;
    let mut sum_zp_sq = 0.0;
    let mut sum_zp_4 = 0.0;
    let mut sum_finals = [0.0f64; 4];
    let mut sum_finals_sq = [0.0f64; 4];
    let mut max_sub = f64::NEG_INFINITY;
    let mut max_orth: f64 = 0.0;
    let mut max_uv: f64 = 0.0;
    for path in &paths {
        sum_zp += path.zp;
        sum_wp += path.wp;
        sum_zp_sq += path.zp * path.zp;
        sum_zp_4 += (path.zp * path.zp) * (path.zp * path.zp);
        for (i, &v) in path.finals.iter().enumerate() {
            sum_finals[i] += v;
            sum_finals_sq[i] += v * v;
        }
        max_sub = max_sub.max(path.max_sub_excess);
        max_orth = max_orth.max(path.max_w_orth);
        max_uv = max_uv.max(path.uv_covariation);
    }
    let est_zp = sum_zp / n;
    let est_wp = sum_wp / n;

    // Batch means over contiguous path-index ranges.
    let b = N_BATCHES.min(cfg.n_paths);
    let mut batch_z = Vec::with_capacity(b);
    let mut batch_w = Vec::with_capacity(b);
    let mut batch_ratio = Vec::with_capacity(b);
    for batch in 0..b {
        let lo = batch * cfg.n_paths / b;
        let hi = (batch + 1) * cfg.n_paths / b;
        let m = (hi - lo) as f64;
        let (mut z, mut w) = (0.0, 0.0);
        for path in &paths[lo..hi] {
            z += path.zp;
            w += path.wp;
        }
        z /= m;
        w /= m;
        batch_z.push(z);
        batch_w.push(w);
        batch_ratio.push(if z > 0.0 { (w / z).powf(1.0 / cfg.p) } else { 0.0 });
    }
    let se_of = |samples: &[f64], center: f64| -> f64 {
        let b = samples.len() as f64;
        let var = samples.iter().map(|s| (s - center) * (s - center)).sum::<f64>() / (b - 1.0);
        (var / b).sqrt()
    };
    let ratio = if est_zp > 0.0 {
        (est_wp / est_zp).powf(1.0 / cfg.p)
    } else {
        0.0
    };
    let mean_ratio = batch_ratio.iter().sum::<f64>() / b as f64;
    let se_ratio = se_of(&batch_ratio, mean_ratio);
    let se_zp = se_of(&batch_z, batch_z.iter().sum::<f64>() / b as f64);
    let se_wp = se_of(&batch_w, batch_w.iter().sum::<f64>() / b as f64);

    let mut mean_final = [0.0f64; 4];
    let mut se_final = [0.0f64; 4];
    for i in 0..4 {
        mean_final[i] = sum_finals[i] / n;
        let var = (sum_finals_sq[i] / n - mean_final[i] * mean_final[i]).max(0.0);
        se_final[i] = (var / n).sqrt();
    }

    let m2 = (sum_zp_sq / n - est_zp * est_zp).max(f64::MIN_POSITIVE);
    let centered_m4 = (sum_zp_4 / n).max(f64::MIN_POSITIVE); // raw proxy, upper bound
    let kurtosis_proxy = centered_m4 / (m2 * m2);

    Ok(PathEstimate {
        strategy: strategy.name().to_string(),
        p: cfg.p,
        n_paths: cfg.n_paths,
        n_steps: cfg.n_steps,
        t_final: cfg.t_final,
        seed: cfg.seed,
        est_zp,
        est_wp,
        se_zp,
        se_wp,
        ratio,
        se_ratio,
        mean_final,
        se_final,
        max_subordination_excess: max_sub,
        max_w_orthogonality_error: max_orth,
        max_uv_covariation: max_uv,
        heavy_tail_warning: kurtosis_proxy > HEAVY_TAIL_KURTOSIS,
    })
}

impl PathEstimate {
    pub fn csv_header() -> &'static str {
        "strategy,p,n_paths,n_steps,t_final,seed,est_Zp,est_Wp,se_Zp,se_Wp,ratio,se_ratio"
    }

    /// One CSV row; floats carry 15 significant digits, locale-independent.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e},{:.14e}",
            self.strategy,
            fmt_g(self.p),
            self.n_paths,
            self.n_steps,
            fmt_g(self.t_final),
            self.seed,
            self.est_zp,
            self.est_wp,
            self.se_zp,
            self.se_wp,
            self.ratio,
            self.se_ratio
        )
    }
}

fn fmt_g(x: f64) -> String {
    if x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x)
    } else {
        format!("{x:.14e}")
    }
}
