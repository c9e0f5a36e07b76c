//! Induction motor, V/f law and gearbox math shared by the simulator and
//! the estimators.
//!
//! The electrical model lives in the stator-voltage d-q frame (d axis fixed
//! to the voltage vector, so `u_sd = |u_s|`, `u_sq = 0`) with the state
//! `[i_sd, i_sq, psi'_rd, psi'_rq]`, rotor flux scaled by `1/L_m`.

use nalgebra::{Matrix4, Vector4};
use serde::Deserialize;

use crate::error::{Error, Result};

/// Electrical and mechanical constants of the induction machine.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MotorParams {
    /// Stator resistance (ohm).
    pub r_s: f64,
    /// Rotor resistance (ohm).
    pub r_r: f64,
    /// Stator inductance (H).
    pub l_s: f64,
    /// Rotor inductance (H).
    pub l_r: f64,
    /// Mutual inductance (H).
    pub l_m: f64,
    /// Pole-pair count.
    pub z_p: u32,
    /// Shaft moment of inertia (kg m^2).
    pub j: f64,
    /// Viscous friction coefficient (N m s/rad).
    pub f: f64,
    /// Optional leakage coefficient override; when set it replaces the
    /// value derived from the inductances.
    #[serde(default)]
    pub sigma_override: Option<f64>,
}

impl MotorParams {
    pub fn validate(&self) -> Result<()> {
        let positive: [(&'static str, f64); 6] = [
            ("r_s", self.r_s),
            ("r_r", self.r_r),
            ("l_s", self.l_s),
            ("l_r", self.l_r),
            ("l_m", self.l_m),
            ("j", self.j),
        ];
        for (field, v) in positive {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::invalid(field, format!("must be > 0, got {v}")));
            }
        }
        if self.z_p < 1 {
            return Err(Error::invalid("z_p", "pole-pair count must be >= 1"));
        }
        if !(self.f.is_finite() && self.f >= 0.0) {
            return Err(Error::invalid("f", format!("must be >= 0, got {}", self.f)));
        }
        if let Some(s) = self.sigma_override {
            if !(s.is_finite() && s > 0.0 && s < 1.0) {
                return Err(Error::invalid(
                    "sigma_override",
                    format!("must lie in (0, 1), got {s}"),
                ));
            }
        }
        let derived = 1.0 - self.l_m * self.l_m / (self.l_s * self.l_r);
        if !(derived > 0.0 && derived < 1.0) {
            return Err(Error::invalid(
                "sigma",
                format!(
                    "1 - L_m^2/(L_s*L_r) = {derived} must lie in (0, 1); check the inductances"
                ),
            ));
        }
        Ok(())
    }

    /// Leakage coefficient: the override when set, else from the inductances.
    pub fn sigma(&self) -> f64 {
        self.sigma_override
            .unwrap_or(1.0 - self.l_m * self.l_m / (self.l_s * self.l_r))
    }

    /// Stator time constant L_s/R_s (s).
    pub fn t_s(&self) -> f64 {
        self.l_s / self.r_s
    }

    /// Rotor time constant L_r/R_r (s).
    pub fn t_r(&self) -> f64 {
        self.l_r / self.r_r
    }
}

/// Model coefficients derived from the motor parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gammas {
    /// 1/(sigma T_s) + (1-sigma)/(sigma T_r)  (1/s).
    pub gamma1: f64,
    /// (1-sigma)/(sigma T_r)  (1/s).
    pub gamma2: f64,
    /// (1-sigma)/sigma  (dimensionless).
    pub gamma3: f64,
    /// 1/(sigma L_s)  (1/H).
    pub gamma4: f64,
}

/// Evaluate the four model coefficients.
pub fn derive_coefficients(p: &MotorParams) -> Result<Gammas> {
    p.validate()?;
    let sigma = p.sigma();
    let (t_s, t_r) = (p.t_s(), p.t_r());
    let gamma2 = (1.0 - sigma) / (sigma * t_r);
    let g = Gammas {
        gamma1: 1.0 / (sigma * t_s) + gamma2,
        gamma2,
        gamma3: (1.0 - sigma) / sigma,
        gamma4: 1.0 / (sigma * p.l_s),
    };
    debug_assert!(g.gamma1 > g.gamma2 && g.gamma2 > 0.0 && g.gamma3 > 0.0 && g.gamma4 > 0.0);
    Ok(g)
}

/// System matrix A(t) of the voltage-frame model.
///
/// `omega_s` is the synchronous (supply) speed and `omega_e` the electrical
/// rotor speed, both in rad/s.
pub fn system_matrix(g: &Gammas, t_r: f64, omega_s: f64, omega_e: f64) -> Matrix4<f64> {
    let slip = omega_s - omega_e;
    let inv_tr = 1.0 / t_r;
    Matrix4::new(
        -g.gamma1,
        omega_s,
        g.gamma2,
        g.gamma3 * omega_e,
        -omega_s,
        -g.gamma1,
        -g.gamma3 * omega_e,
        g.gamma2,
        inv_tr,
        0.0,
        -inv_tr,
        slip,
        0.0,
        inv_tr,
        -slip,
        -inv_tr,
    )
}

/// Input vector B; the voltage magnitude enters on the d-axis current only.
pub fn input_vector(g: &Gammas) -> Vector4<f64> {
    Vector4::new(g.gamma4, 0.0, 0.0, 0.0)
}

/// Motor electrical state `[i_sd, i_sq, psi'_rd, psi'_rq]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MotorState {
    pub i_sd: f64,
    pub i_sq: f64,
    pub psi_rd: f64,
    pub psi_rq: f64,
}

impl MotorState {
    pub fn from_vector(x: &Vector4<f64>) -> Self {
        Self {
            i_sd: x[0],
            i_sq: x[1],
            psi_rd: x[2],
            psi_rq: x[3],
        }
    }

    pub fn as_vector(&self) -> Vector4<f64> {
        Vector4::new(self.i_sd, self.i_sq, self.psi_rd, self.psi_rq)
    }

    /// Squared effective current `y = (x1^2 + x2^2)/2` (A^2).
    pub fn output(&self) -> f64 {
        0.5 * (self.i_sd * self.i_sd + self.i_sq * self.i_sq)
    }
}

/// Electromagnetic torque `(3/2) z_p (1-sigma) L_s (x2 x3 - x1 x4)` (N m).
pub fn electromagnetic_torque(p: &MotorParams, x: &MotorState) -> f64 {
    1.5 * f64::from(p.z_p) * (1.0 - p.sigma()) * p.l_s * (x.i_sq * x.psi_rd - x.i_sd * x.psi_rq)
}

/// Gearbox between motor and pump shaft.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GearboxParams {
    /// Transmission ratio (motor turns per pump turn).
    pub nu: f64,
    /// Efficiency in (0, 1].
    pub eta: f64,
}

impl GearboxParams {
    /// Direct coupling, used when the spec's simplified frame applies.
    pub fn direct() -> Self {
        Self { nu: 1.0, eta: 1.0 }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.nu.is_finite() && self.nu > 0.0) {
            return Err(Error::invalid("nu", format!("must be > 0, got {}", self.nu)));
        }
        if !(self.eta.is_finite() && self.eta > 0.0 && self.eta <= 1.0) {
            return Err(Error::invalid(
                "eta",
                format!("must lie in (0, 1], got {}", self.eta),
            ));
        }
        Ok(())
    }
}

/// Map motor-side speed and load torque to the pump shaft:
/// `omega_p = omega_m/nu`, `T_p = eta nu T_L`.
pub fn gearbox_map(omega_m: f64, t_load: f64, g: &GearboxParams) -> (f64, f64) {
    (omega_m / g.nu, g.eta * g.nu * t_load)
}

/// Constant volts-per-hertz law of the inverter.
#[derive(Debug, Clone, Copy)]
pub struct VfLaw {
    /// Voltage-vector magnitude at rated synchronous speed (V, peak).
    pub rated_magnitude: f64,
    /// Rated synchronous speed (rad/s).
    pub rated_omega_s: f64,
    /// Optional low-speed boost floor (V).
    pub boost_voltage: Option<f64>,
}

impl VfLaw {
    /// Build from nameplate data: phase RMS voltage, rated frequency in Hz
    /// and the peak scale factor (sqrt(2) for a sinusoidal space vector).
    pub fn from_nameplate(phase_rms: f64, rated_hz: f64, scale: f64) -> Self {
        Self {
            rated_magnitude: phase_rms * scale,
            rated_omega_s: std::f64::consts::TAU * rated_hz,
            boost_voltage: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rated_magnitude.is_finite() && self.rated_magnitude > 0.0) {
            return Err(Error::invalid("rated_magnitude", "must be > 0"));
        }
        if !(self.rated_omega_s.is_finite() && self.rated_omega_s > 0.0) {
            return Err(Error::invalid("rated_omega_s", "must be > 0"));
        }
        if let Some(b) = self.boost_voltage {
            if !(b.is_finite() && b >= 0.0) {
                return Err(Error::invalid("boost_voltage", "must be >= 0"));
            }
        }
        Ok(())
    }
}

/// Voltage-vector magnitude commanded at synchronous speed `omega_s`.
pub fn vf_voltage(law: &VfLaw, omega_s: f64) -> Result<f64> {
    if !(omega_s.is_finite() && omega_s >= 0.0) {
        return Err(Error::invalid(
            "omega_s",
            format!("one rotation direction assumed; omega_s must be >= 0, got {omega_s}"),
        ));
    }
    let u = law.rated_magnitude * omega_s / law.rated_omega_s;
    Ok(match law.boost_voltage {
        Some(boost) => u.max(boost),
        None => u,
    })
}

/// Steady state of the open-loop model at zero slip (`omega_e = omega_s`),
/// solving `A x = -B u`.
///
/// In the voltage frame this lands at `i_sd > 0`, `i_sq < 0`, the sign
/// pattern required for observer convergence.
pub fn zero_slip_steady_state(g: &Gammas, t_r: f64, omega_s: f64, u: f64) -> Result<Vector4<f64>> {
    let a = system_matrix(g, t_r, omega_s, omega_s);
    let rhs = -input_vector(g) * u;
    a.lu()
        .solve(&rhs)
        .ok_or_else(|| Error::invalid("omega_s", "open-loop model is singular at this speed"))
}
