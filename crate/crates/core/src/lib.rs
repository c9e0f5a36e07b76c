//! Soft sensor for progressive-cavity-pump drives.
//!
//! Estimates pump rotor position, speed and shaft torque of an induction
//! motor + PCP unit under V/f open-loop control, using only the discharge
//! pressure signal and the effective stator current reported by the
//! inverter. A phase-locked loop tracks the second pressure harmonic for
//! position and speed; an extended Kalman filter reconstructs the motor
//! electrical state from `y = i_eff^2` and yields the torque estimate.
//!
//! The crate also ships a ground-truth plant simulator (motor, gearbox,
//! pump load, pressure generator) used as the oracle for every estimator
//! claim, plus CSV telemetry formats, TOML configuration and the pipeline
//! orchestration behind the `pumpsense` CLI.

pub mod angle;
pub mod config;
pub mod ekf;
pub mod error;
pub mod lowpass;
pub mod motor;
pub mod pipeline;
pub mod plant;
pub mod pll;
pub mod telemetry;
pub mod verify;

pub use error::{Error, Result};
