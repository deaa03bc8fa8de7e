use crate::{Error, Result};

/// Classical fourth-order Runge-Kutta with `steps` uniform steps.
///
/// `rhs(t, y, dy)` writes the derivative into `dy`.
pub fn rk4<F>(rhs: F, y0: &[f64], t0: f64, t1: f64, steps: usize) -> Result<Vec<f64>>
where
    F: FnMut(f64, &[f64], &mut [f64]),
{
    rk4_observed(rhs, y0, t0, t1, steps, |_, _, _| Ok(()))
}

/// [`rk4`] with an observer called after every step as `observe(step, t, y)`
/// (and once for the initial state with `step = 0`). An observer error
/// aborts the integration and is returned unchanged.
pub fn rk4_observed<F, O>(
    mut rhs: F,
    y0: &[f64],
    t0: f64,
    t1: f64,
    steps: usize,
    mut observe: O,
) -> Result<Vec<f64>>
where
    F: FnMut(f64, &[f64], &mut [f64]),
    O: FnMut(usize, f64, &[f64]) -> Result<()>,
{
    if steps == 0 {
        return Err(Error::InvalidArgument("rk4: steps must be at least 1".into()));
    }
    let n = y0.len();
    let dt = (t1 - t0) / steps as f64;
    let mut y = y0.to_vec();
    let mut k1 = vec![0.0; n];
    let mut k2 = vec![0.0; n];
    let mut k3 = vec![0.0; n];
    let mut k4 = vec![0.0; n];
    let mut tmp = vec![0.0; n];
    observe(0, t0, &y)?;
    for step in 0..steps {
        let t = t0 + step as f64 * dt;
        rhs(t, &y, &mut k1);
        for i in 0..n {
            tmp[i] = y[i] + 0.5 * dt * k1[i];
        }
        rhs(t + 0.5 * dt, &tmp, &mut k2);
        for i in 0..n {
            tmp[i] = y[i] + 0.5 * dt * k2[i];
        }
        rhs(t + 0.5 * dt, &tmp, &mut k3);
        for i in 0..n {
            tmp[i] = y[i] + dt * k3[i];
        }
        rhs(t + dt, &tmp, &mut k4);
        for i in 0..n {
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        let t_next = if step + 1 == steps { t1 } else { t0 + (step + 1) as f64 * dt };
        if let Some(index) = y.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { t: t_next, index });
        }
        observe(step + 1, t_next, &y)?;
    }
    Ok(y)
}
