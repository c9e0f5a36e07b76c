//! First-order low-pass used for comparison filtering and loop averaging.

/// Exponential first-order low-pass, `tau` seconds time constant.
///
/// The first sample initializes the state so there is no startup ramp.
#[derive(Debug, Clone)]
pub struct FirstOrder {
    tau: f64,
    state: Option<f64>,
}

impl FirstOrder {
    pub fn new(tau: f64) -> Self {
        assert!(tau > 0.0, "low-pass time constant must be positive");
        Self { tau, state: None }
    }

    pub fn step(&mut self, x: f64, dt: f64) -> f64 {
        match self.state {
            None => {
                self.state = Some(x);
                x
            }
            Some(y) => {
                // Exact ZOH discretization; stable for any dt/tau.
                let a = 1.0 - (-dt / self.tau).exp();
                let y2 = y + a * (x - y);
                self.state = Some(y2);
                y2
            }
        }
    }

    pub fn value(&self) -> Option<f64> {
        self.state
    }

    pub fn reset(&mut self) {
        self.state = None;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn settles_to_dc() {
        let mut lp = FirstOrder::new(0.5);
        let mut y = 0.0;
        for _ in 0..10_000 {
            y = lp.step(2.0, 0.001);
        }
        assert_abs_diff_eq!(y, 2.0, epsilon = 1e-6);
    }

    #[test]
    fn first_sample_passes_through() {
        let mut lp = FirstOrder::new(0.5);
        assert_eq!(lp.step(3.25, 0.001), 3.25);
    }

    #[test]
    fn step_response_time_constant() {
        let mut lp = FirstOrder::new(0.5);
        lp.step(0.0, 0.001);
        let mut y = 0.0;
        for _ in 0..500 {
            y = lp.step(1.0, 0.001);
        }
        // One time constant: 1 - e^-1.
        assert_abs_diff_eq!(y, 1.0 - (-1.0f64).exp(), epsilon = 1e-3);
    }
}
