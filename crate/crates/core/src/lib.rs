//! Exact Smith normal form over principal ideal domains.
//!
//! The main route runs the gcd-Toda lattice, the `(×, /, gcd)` analogue of
//! the ultradiscrete Toda lattice, on a lower-bidiagonal seed until its
//! diagonal forms a divisibility chain. Around it sit:
//!
//! - [`ring`]: the PID abstraction with integer and `F_p[x]` instances,
//! - [`ud_toda`]: the min-plus lattice and its box-ball realization,
//! - [`gcd_toda`]: the ring-valued recurrence, termination test and runner,
//! - [`bidiagonalize`]: unimodular reduction of a dense matrix to a seed,
//! - [`snf`]: the end-to-end pipeline plus two independent oracles.

pub mod bidiagonalize;
pub mod error;
pub mod gcd_toda;
pub mod matrix;
mod nonadjacent;
pub mod ring;
pub mod snf;
pub mod ud_toda;

pub use bidiagonalize::{bidiagonalize, gcd_rotation, seed_state, Bidiagonalization, BidiagonalForm};
pub use error::{Error, Result};
pub use gcd_toda::{default_iteration_cap, run, GcdTodaState, TodaRun};
pub use matrix::DenseMatrix;
pub use num_bigint::BigInt;
pub use ring::{Pid, PolyModP, RingError};
pub use snf::{classical_snf, minors_gcd, smith_normal_form, verify, Method, SnfOptions, SnfResult};
pub use ud_toda::{BbsState, UdTodaState};
