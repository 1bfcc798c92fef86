//! The ultradiscrete Toda lattice and the box-ball system it drives.
//!
//! A state holds `N` block lengths `Q` and `N - 1` gap lengths `E`. One time
//! step is
//!
//! ```text
//! Q'_n = min(E_n, Σ_{j≤n} Q_j − Σ_{j<n} Q'_j)
//! E'_n = E_n + Q_{n+1} − Q'_n
//! ```
//!
//! with `E_{N−1} = +∞`, so the last block takes the whole running remainder.
//! Reading `Q` as runs of balls and `E` as runs of empty boxes identifies the
//! lattice with one step of the box-ball system.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::nonadjacent::nonadjacent_fold;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UdTodaState {
    q: Vec<u64>,
    e: Vec<u64>,
}

impl UdTodaState {
    pub fn new(q: Vec<u64>, e: Vec<u64>) -> Result<Self> {
        if q.is_empty() || e.len() + 1 != q.len() {
            return Err(Error::InvalidState(format!(
                "{} blocks need {} gaps, got {}",
                q.len(),
                q.len().saturating_sub(1),
                e.len()
            )));
        }
        Ok(Self { q, e })
    }

    pub fn q(&self) -> &[u64] {
        &self.q
    }

    pub fn e(&self) -> &[u64] {
        &self.e
    }

    /// Number of solitons.
    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Q_0, E_0, Q_1, …, E_{N−2}, Q_{N−1}`
    pub fn interleaved(&self) -> Vec<u64> {
        interleave(&self.q, &self.e)
    }

    pub fn total_balls(&self) -> u64 {
        self.q.iter().sum()
    }

    pub fn step(&self) -> Self {
        let n = self.q.len();
        let mut q = Vec::with_capacity(n);
        // running Σ_{j≤i} Q_j − Σ_{j<i} Q'_j
        let mut carry = self.q[0];
        for i in 0..n {
            let next = match self.e.get(i) {
                Some(&gap) => gap.min(carry),
                None => carry,
            };
            q.push(next);
            if i + 1 < n {
                carry = carry - next + self.q[i + 1];
            }
        }
        let e = (0..n - 1).map(|i| self.e[i] + self.q[i + 1] - q[i]).collect();
        Self { q, e }
    }

    /// `uC_1, …, uC_N`: for each `l`, the minimum sum over `l` pairwise
    /// non-adjacent entries of the interleaved sequence.
    pub fn conserved_quantities(&self) -> Vec<u64> {
        let n = self.q.len();
        nonadjacent_fold(&self.interleaved(), n, 0u64, |a, b| a + b, |a, b| *a.min(b))
            .into_iter()
            .map(|v| v.expect("N non-adjacent picks always exist among 2N-1 entries"))
            .collect()
    }

    /// Blocks non-decreasing and each block no longer than the gap after it.
    pub fn is_sorted(&self) -> bool {
        self.q.windows(2).all(|w| w[0] <= w[1]) && self.q.iter().zip(&self.e).all(|(q, e)| q <= e)
    }

    /// Balls for each block, empty boxes for each gap, starting at cell 0.
    pub fn to_bbs(&self) -> Result<BbsState> {
        if let Some(i) = self.q.iter().position(|&v| v == 0) {
            return Err(Error::NotRepresentable(format!("block {i} is empty")));
        }
        if let Some(i) = self.e.iter().position(|&v| v == 0) {
            return Err(Error::NotRepresentable(format!("gap {i} is empty")));
        }
        let mut cells = Vec::new();
        for (i, &len) in self.q.iter().enumerate() {
            cells.extend(std::iter::repeat_n(true, len as usize));
            if let Some(&gap) = self.e.get(i) {
                cells.extend(std::iter::repeat_n(false, gap as usize));
            }
        }
        Ok(BbsState { offset: 0, cells })
    }

    pub fn from_bbs(bbs: &BbsState) -> Result<Self> {
        if bbs.cells.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        let mut q = Vec::new();
        let mut e = Vec::new();
        let mut run = 0u64;
        let mut in_block = true;
        for &cell in &bbs.cells {
            if cell != in_block {
                if in_block {
                    q.push(run);
                } else {
                    e.push(run);
                }
                in_block = cell;
                run = 0;
            }
            run += 1;
        }
        q.push(run);
        Ok(Self { q, e })
    }
}

pub(crate) fn interleave<T: Clone>(q: &[T], e: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(q.len() + e.len());
    for (i, v) in q.iter().enumerate() {
        out.push(v.clone());
        if let Some(g) = e.get(i) {
            out.push(g.clone());
        }
    }
    out
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// `Q:4,3,1;E:3,2`
impl fmt::Display for UdTodaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q:{};E:{}", join(&self.q), join(&self.e))
    }
}

impl FromStr for UdTodaState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (q_part, e_part) = compact.split_once(';').ok_or_else(|| fail("expected `Q:…;E:…`"))?;
        let q_list = q_part.strip_prefix("Q:").ok_or_else(|| fail("missing `Q:`"))?;
        let e_list = e_part.strip_prefix("E:").ok_or_else(|| fail("missing `E:`"))?;
        let parse_list = |list: &str| -> Result<Vec<u64>> {
            if list.is_empty() {
                return Ok(Vec::new());
            }
            list.split(',')
                .map(|v| v.parse::<u64>().map_err(|_| fail(&format!("bad entry {v:?}"))))
                .collect()
        };
        Self::new(parse_list(q_list)?, parse_list(e_list)?)
    }
}

/// A finite box-ball configuration on the integer line.
///
/// Only the span from the first to the last ball is stored; `offset` is the
/// absolute index of the first stored cell.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BbsState {
    offset: i64,
    cells: Vec<bool>,
}

impl BbsState {
    pub fn new(offset: i64, cells: Vec<bool>) -> Self {
        let mut state = Self { offset, cells };
        state.trim();
        state
    }

    fn trim(&mut self) {
        while self.cells.last() == Some(&false) {
            self.cells.pop();
        }
        let lead = self.cells.iter().take_while(|&&c| !c).count();
        self.cells.drain(..lead);
        self.offset += lead as i64;
        if self.cells.is_empty() {
            self.offset = 0;
        }
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    /// One past the last ball.
    pub fn end(&self) -> i64 {
        self.offset + self.cells.len() as i64
    }

    pub fn balls(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn get(&self, n: i64) -> bool {
        n >= self.offset && n < self.end() && self.cells[(n - self.offset) as usize]
    }

    /// `(Tu)_n = min(1 − u_n, Σ_{m<n} (u_m − (Tu)_m))`, swept left to right
    /// with the sum kept as a carrier count.
    pub fn step(&self) -> Self {
        let horizon = self.cells.len() + self.balls();
        let mut carried = 0usize;
        let mut next = Vec::with_capacity(horizon);
        for i in 0..horizon {
            let ball = self.cells.get(i).copied().unwrap_or(false);
            let drop = !ball && carried > 0;
            if ball {
                carried += 1;
            }
            if drop {
                carried -= 1;
            }
            next.push(drop);
        }
        Self::new(self.offset, next)
    }

    /// 01 string for cells `from..to`.
    pub fn render(&self, from: i64, to: i64) -> String {
        (from..to).map(|n| if self.get(n) { '1' } else { '0' }).collect()
    }
}

/// Parses a 01 string; cell 0 is the first character.
impl FromStr for BbsState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cells = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    input: s.to_string(),
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(0, cells))
    }
}

impl fmt::Display for BbsState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(self.offset, self.end()))
    }
}
