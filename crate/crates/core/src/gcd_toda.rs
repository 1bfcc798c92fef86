//! The gcd-Toda lattice.
//!
//! Replacing `(+, −, min)` in the ultradiscrete Toda lattice by
//! `(×, /, gcd)` gives a recurrence on the diagonal `q` and subdiagonal `e`
//! of a lower-bidiagonal matrix over a PID:
//!
//! ```text
//! q'_n = gcd(e_n, Π_{j≤n} q_j / Π_{j<n} q'_j)
//! e'_n = e_n q_{n+1} / q'_n
//! ```
//!
//! with `e_{N−1} = 0`. For every irreducible `p` the `p`-adic exponents
//! evolve by the min-plus lattice, so the determinantal divisors are
//! conserved and the diagonal sorts itself into the invariant factors.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::nonadjacent::nonadjacent_fold;
use crate::ring::{divides, exact_div, Pid, RingError};
use crate::ud_toda::{interleave, UdTodaState};

/// Diagonal `q_0..q_{N−1}` and subdiagonal `e_0..e_{N−2}` of `X^(t)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GcdTodaState<R> {
    q: Vec<R>,
    e: Vec<R>,
}

impl<R: Pid> GcdTodaState<R> {
    pub fn new(q: Vec<R>, e: Vec<R>) -> Result<Self> {
        if q.is_empty() || e.len() + 1 != q.len() {
            return Err(Error::InvalidState(format!(
                "diagonal of length {} needs {} subdiagonal entries, got {}",
                q.len(),
                q.len().saturating_sub(1),
                e.len()
            )));
        }
        if q.iter().chain(&e).any(|v| !v.same_ring(&q[0])) {
            return Err(RingError::Mismatch.into());
        }
        Ok(Self { q, e })
    }

    /// Reads the diagonal and subdiagonal of a square lower-bidiagonal matrix.
    pub fn from_matrix(m: &DenseMatrix<R>) -> Result<Self> {
        if !m.is_square() || !m.is_lower_bidiagonal() {
            return Err(Error::InvalidMatrix("expected a square lower-bidiagonal matrix".into()));
        }
        let n = m.rows();
        let q = (0..n).map(|i| m.get(i, i).clone()).collect();
        let e = (0..n - 1).map(|i| m.get(i + 1, i).clone()).collect();
        Self::new(q, e)
    }

    pub fn to_matrix(&self) -> DenseMatrix<R> {
        let n = self.q.len();
        let mut m = DenseMatrix::zeros(n, n, &self.q[0]);
        for (i, v) in self.q.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        for (i, v) in self.e.iter().enumerate() {
            m.set(i + 1, i, v.clone());
        }
        m
    }

    pub fn q(&self) -> &[R] {
        &self.q
    }

    pub fn e(&self) -> &[R] {
        &self.e
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `q_0, e_0, q_1, …, e_{N−2}, q_{N−1}`
    pub fn interleaved(&self) -> Vec<R> {
        interleave(&self.q, &self.e)
    }

    /// Every entry replaced by its canonical associate.
    pub fn canonical(&self) -> Self {
        Self {
            q: self.q.iter().map(Pid::canonical).collect(),
            e: self.e.iter().map(Pid::canonical).collect(),
        }
    }

    /// Seeds must keep `q_0..q_{N−2}` nonzero; only the last diagonal entry
    /// may vanish (the padded-corner form).
    pub fn check_seed(&self) -> Result<()> {
        let interior = &self.q[..self.q.len() - 1];
        match interior.iter().position(Pid::is_zero) {
            Some(i) => Err(Error::InvalidState(format!("interior diagonal entry q_{i} is zero"))),
            None => Ok(()),
        }
    }

    /// One time step. Outputs are canonical.
    ///
    /// The ratio `Π_{j≤n} q_j / Π_{j<n} q'_j` is carried incrementally; a
    /// failed exact division means the state was not reachable from a valid
    /// seed and is reported as an error.
    pub fn step(&self) -> Result<Self> {
        let n = self.q.len();
        let mut q = Vec::with_capacity(n);
        let mut ratio = self.q[0].clone();
        for i in 0..n {
            let next = match self.e.get(i) {
                Some(gap) => gap.gcd(&ratio),
                None => ratio.canonical(),
            };
            if i + 1 < n {
                ratio = exact_div(&(ratio * self.q[i + 1].clone()), &next)?;
            }
            q.push(next);
        }
        let e = (0..n - 1)
            .map(|i| exact_div(&(self.e[i].clone() * self.q[i + 1].clone()), &q[i]).map(|v| v.canonical()))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Self { q, e })
    }

    /// `q_i | q_{i+1}` and `q_i | e_i` for every `i`.
    pub fn terminated(&self) -> bool {
        (0..self.q.len() - 1)
            .all(|i| divides(&self.q[i], &self.q[i + 1]) && divides(&self.q[i], &self.e[i]))
    }

    /// Determinantal divisors `d_1, …, d_N` of `X^(t)`: for each `k`, the
    /// gcd over all products of `k` pairwise non-adjacent entries of the
    /// interleaved sequence.
    pub fn determinantal_divisors(&self) -> Vec<R> {
        let w = self.interleaved();
        let one = self.q[0].one_like();
        nonadjacent_fold(&w, self.q.len(), one, |a, b| a.clone() * b.clone(), |a, b| a.gcd(b))
            .into_iter()
            .map(|v| v.expect("N non-adjacent picks always exist among 2N-1 entries").canonical())
            .collect()
    }

    /// The `prime`-adic exponents of every entry, as a min-plus state.
    /// Each entry must be a unit times a power of `prime`.
    pub fn exponent_lift(&self, prime: &R) -> Result<UdTodaState> {
        if prime.is_zero() || prime.is_unit() {
            return Err(Error::InvalidState(format!("{prime} is not a prime element")));
        }
        let exponent = |v: &R| -> Result<u64> {
            let not_power = || Error::NotPrimePower { value: v.to_string(), prime: prime.to_string() };
            if v.is_zero() {
                return Err(not_power());
            }
            let mut rest = v.clone();
            let mut k = 0;
            while divides(prime, &rest) {
                rest = exact_div(&rest, prime)?;
                k += 1;
            }
            if rest.is_unit() {
                Ok(k)
            } else {
                Err(not_power())
            }
        };
        let q = self.q.iter().map(exponent).collect::<Result<_>>()?;
        let e = self.e.iter().map(exponent).collect::<Result<_>>()?;
        UdTodaState::new(q, e)
    }
}

/// `q: 2 6 9 | e: 4 3`
impl<R: Pid> fmt::Display for GcdTodaState<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("q:")?;
        for v in &self.q {
            write!(f, " {v}")?;
        }
        f.write_str(" | e:")?;
        for v in &self.e {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Default iteration cap: `max(64, N·S)` where `S` sums the sizes (bit
/// lengths or degrees) of all seed entries.
pub fn default_iteration_cap<R: Pid>(seed: &GcdTodaState<R>) -> usize {
    let total: u64 = seed.q.iter().chain(&seed.e).map(Pid::size).sum();
    (seed.len() as u64).saturating_mul(total).clamp(64, usize::MAX as u64) as usize
}

#[derive(Clone, Debug)]
pub struct TodaRun<R> {
    /// Canonical diagonal of the terminating state: the invariant factors,
    /// including a trailing zero for padded seeds.
    pub factors: Vec<R>,
    /// Number of steps taken; at least one.
    pub iterations: usize,
    pub final_state: GcdTodaState<R>,
    /// `X^(0), …, X^(t)` when requested, otherwise empty.
    pub trace: Vec<GcdTodaState<R>>,
}

/// Steps the lattice until the termination test holds.
///
/// The test is applied after each step, so at least one step is always taken.
/// `max_iters` defaults to [`default_iteration_cap`].
pub fn run<R: Pid>(
    seed: &GcdTodaState<R>,
    max_iters: Option<usize>,
    record_trace: bool,
) -> Result<TodaRun<R>> {
    seed.check_seed()?;
    let cap = max_iters.unwrap_or_else(|| default_iteration_cap(seed));
    let mut trace = vec![seed.clone()];
    let mut state = seed.clone();
    for t in 1..=cap {
        state = state.step()?;
        if record_trace {
            trace.push(state.clone());
        }
        if state.terminated() {
            return Ok(TodaRun {
                factors: state.q.clone(),
                iterations: t,
                final_state: state,
                trace: if record_trace { trace } else { Vec::new() },
            });
        }
    }
    if !record_trace {
        trace.push(state);
    }
    Err(Error::CapExceeded { cap, trace: trace.iter().map(ToString::to_string).collect() })
}
