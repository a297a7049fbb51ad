fn main() {
    use sharp_mtg_core::ode::{integrate, OdeOptions};
    // Legendre alpha=2: f1 = (3s^2-1)/2 exact; integrate from -0.25 to -0.9.
    let p = 6.0f64;
    let s0 = -0.25f64;
    let y0 = [(3.0 * s0 * s0 - 1.0) / 2.0, 3.0 * s0];
    let rhs = move |s: f64, y: &[f64; 2]| [y[1], (2.0 * s * y[1] - p * y[0]) / (1.0 - s * s)];
    for rtol in [1e-10f64, 1e-13] {
        let opts = OdeOptions { rtol, atol: rtol * 1e-2, max_steps: 2_000_000, first_step: None };
        let y = integrate(rhs, s0, y0, -0.9, &opts).unwrap();
        let exact = (3.0 * 0.81 - 1.0) / 2.0;
        println!("rtol={rtol:e}: y={:.16e} exact={exact:.16e} err={:.3e}", y[0], (y[0] - exact).abs());
    }
    // Also harmonic oscillator over long range with tight tol
    let y = integrate(|_t, y: &[f64;2]| [y[1], -y[0]], 0.0, [1.0, 0.0], 20.0 * std::f64::consts::PI,
        &OdeOptions { rtol: 1e-13, atol: 1e-15, max_steps: 10_000_000, first_step: None }).unwrap();
    println!("osc err: {:.3e}", (y[0] - 1.0).abs());
}
