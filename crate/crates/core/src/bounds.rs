//! Quantum Hamming bounds and the pattern counts behind them.
//!
//! The symmetric bound asks `2^(n-k) >= sum_{j<=t} C(n,j) 3^j`. The
//! generalized bound replaces `3^j` by `g(j; eg)`, the number of ways to
//! place Pauli errors on `j` fixed positions with at most `eg` of them
//! drawn from `{X, Y}` and the rest equal to Z. All arithmetic here is
//! exact.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliOperator};
use crate::stabilizer::ErrorProfile;

/// Upper limit for the linear `min_n` scan.
pub const MIN_N_CAP: usize = 256;

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

fn pow(base: u32, exp: usize) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// `sum_{j=0}^{t} C(n,j) 3^j`.
pub fn qhb_rhs(n: usize, t: usize) -> BigUint {
    (0..=t.min(n)).map(|j| binomial(n, j) * pow(3, j)).sum()
}

pub fn qhb_satisfied(n: usize, k: usize, t: usize) -> bool {
    n > k && pow(2, n - k) >= qhb_rhs(n, t)
}

/// `g(j; eg) = sum_{i=0}^{eg} C(j,i) 2^i`: correctable patterns on `j`
/// fixed positions.
pub fn g_count(j: usize, eg: usize) -> BigUint {
    (0..=eg.min(j)).map(|i| binomial(j, i) * pow(2, i)).sum()
}

/// `f(j; eg) = sum_{i=0}^{j-eg-1} C(j,i) 2^(j-i)`: patterns on `j` positions
/// with more than `eg` symbols from `{X, Y}`. Zero when `j <= eg`.
pub fn f_count(j: usize, eg: usize) -> BigUint {
    if j <= eg {
        return BigUint::zero();
    }
    (0..j - eg).map(|i| binomial(j, i) * pow(2, j - i)).sum()
}

/// `sum_{j=0}^{eg+ez} C(n,j) g(j; eg)`.
pub fn gqhb_rhs(n: usize, profile: ErrorProfile) -> BigUint {
    (0..=profile.t_tilde().min(n))
        .map(|j| binomial(n, j) * g_count(j, profile.eg))
        .sum()
}

pub fn gqhb_satisfied(n: usize, k: usize, profile: ErrorProfile) -> bool {
    n > k && pow(2, n - k) >= gqhb_rhs(n, profile)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// Symmetric bound with `t = eg + ez`.
    Qhb,
    Gqhb,
    /// `n >= 1 + 4 (eg + ez)`, required by the syndrome-assignment design.
    Construction,
}

/// Smallest `n > k` that satisfies the chosen bound.
pub fn min_n(k: usize, profile: ErrorProfile, kind: BoundKind) -> Result<usize> {
    if kind == BoundKind::Construction {
        return Ok((1 + 4 * profile.t_tilde()).max(k + 1));
    }
    (k + 1..=MIN_N_CAP)
        .find(|&n| match kind {
            BoundKind::Qhb => qhb_satisfied(n, k, profile.t_tilde()),
            BoundKind::Gqhb => gqhb_satisfied(n, k, profile),
            BoundKind::Construction => unreachable!(),
        })
        .ok_or(Error::BoundCap { cap: MIN_N_CAP })
}

/// Lexicographic `k`-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // Rightmost index that can still move right.
        if let Some(i) = (0..k).rev().find(|&i| next[i] < self.n - k + i) {
            next[i] += 1;
            for j in i + 1..k {
                next[j] = next[j - 1] + 1;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All operators on `n` qubits with weight `j <= eg + ez` and at most `eg`
/// factors from `{X, Y}` (the rest Z), identity first, ordered by weight.
///
/// The number of items equals [`gqhb_rhs`].
pub fn enumerate_correctable(n: usize, profile: ErrorProfile) -> impl Iterator<Item = PauliOperator> + Clone {
    let eg = profile.eg;
    (0..=profile.t_tilde().min(n)).flat_map(move |j| {
        combinations(n, j).flat_map(move |support| {
            (0..=eg.min(j)).flat_map(move |g| {
                let support = support.clone();
                combinations(j, g).flat_map(move |generic| {
                    let support = support.clone();
                    (0u64..1 << g).map(move |mask| {
                        let mut p = PauliOperator::from_sparse(n, support.iter().map(|&q| (q, Pauli::Z)));
                        for (bit, &pos) in generic.iter().enumerate() {
                            let kind = if (mask >> bit) & 1 == 0 { Pauli::X } else { Pauli::Y };
                            p.set(support[pos], kind);
                        }
                        p
                    })
                })
            })
        })
    })
}

impl Clone for Combinations {
    fn clone(&self) -> Self {
        Combinations {
            n: self.n,
            current: self.current.clone(),
        }
    }
}

/// One cell of the minimum-length comparison grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LengthCell {
    pub k: usize,
    pub t: usize,
    pub n_min_qhb: usize,
    /// GQHB with `eg = 1`, `ez = t - 1`.
    pub n_min_gqhb: usize,
}

/// Minimum lengths for `k` in `ks` and `t` in `ts`, with `eg = 1` for the
/// generalized bound.
pub fn length_grid(ks: &[usize], ts: &[usize]) -> Result<Vec<LengthCell>> {
    let mut cells = Vec::new();
    for &k in ks {
        for &t in ts {
            if t == 0 {
                return Err(Error::Config("t must be at least 1".into()));
            }
            cells.push(LengthCell {
                k,
                t,
                n_min_qhb: min_n(k, ErrorProfile::symmetric(t), BoundKind::Qhb)?,
                n_min_gqhb: min_n(k, ErrorProfile::new(1, t - 1), BoundKind::Gqhb)?,
            });
        }
    }
    Ok(cells)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionCell {
    pub t_tilde: usize,
    pub n_min_gqhb: usize,
    pub n_min_construction: usize,
}

/// GQHB versus construction bound for `eg = 1`, `k = 1`.
pub fn construction_grid(t_tildes: &[usize]) -> Result<Vec<ConstructionCell>> {
    t_tildes
        .iter()
        .map(|&t| {
            if t == 0 {
                return Err(Error::Config("t~ must be at least 1".into()));
            }
            let profile = ErrorProfile::new(1, t - 1);
            Ok(ConstructionCell {
                t_tilde: t,
                n_min_gqhb: min_n(1, profile, BoundKind::Gqhb)?,
                n_min_construction: min_n(1, profile, BoundKind::Construction)?,
            })
        })
        .collect()
}

/// Aligned text grid: one row per `k`, one column per `t`, cells
/// `"n_qhb,n_gqhb"`.
pub fn render_length_grid(cells: &[LengthCell]) -> String {
    let mut ks: Vec<usize> = cells.iter().map(|c| c.k).collect();
    ks.dedup();
    let mut ts: Vec<usize> = cells.iter().map(|c| c.t).collect();
    ts.sort_unstable();
    ts.dedup();
    let mut out = format!("{:<8}", "");
    for t in &ts {
        let _ = write!(out, "{:>9}", format!("t = {t}"));
    }
    out.push('\n');
    for k in ks {
        let _ = write!(out, "{:<8}", format!("k = {k}"));
        for t in &ts {
            let cell = cells.iter().find(|c| c.k == k && c.t == *t);
            let text = cell.map_or_else(String::new, |c| format!("{},{}", c.n_min_qhb, c.n_min_gqhb));
            let _ = write!(out, "{text:>9}");
        }
        out.push('\n');
    }
    out
}

pub fn render_length_grid_csv(cells: &[LengthCell]) -> String {
    let mut out = String::from("k,t,n_min_qhb,n_min_gqhb\n");
    for c in cells {
        let _ = writeln!(out, "{},{},{},{}", c.k, c.t, c.n_min_qhb, c.n_min_gqhb);
    }
    out
}

pub fn render_construction_grid(cells: &[ConstructionCell]) -> String {
    let join =
        |f: &dyn Fn(&ConstructionCell) -> usize| cells.iter().map(|c| f(c).to_string()).collect::<Vec<_>>().join(" ");
    format!(
        "t~: {}\nGQHB: {}\n1+4t~: {}\n",
        join(&|c| c.t_tilde),
        join(&|c| c.n_min_gqhb),
        join(&|c| c.n_min_construction)
    )
}

pub fn render_construction_grid_csv(cells: &[ConstructionCell]) -> String {
    let mut out = String::from("t_tilde,n_min_gqhb,n_min_construction\n");
    for c in cells {
        let _ = writeln!(out, "{},{},{}", c.t_tilde, c.n_min_gqhb, c.n_min_construction);
    }
    out
}
