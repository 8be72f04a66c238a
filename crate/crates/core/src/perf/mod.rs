//! Codeword error probability over Pauli channels.
//!
//! The analytic routines return `P_e = 1 - P(correctable pattern)`. They
//! are evaluated as the probability mass of the *uncorrectable* patterns,
//! which is algebraically the same quantity but avoids subtracting two
//! numbers close to one when `rho` is small.

mod montecarlo;

pub use montecarlo::{simulate, simulate_with_jobs, wilson_interval, SimulationResult, SHARD_TRIALS};

use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::stabilizer::ErrorProfile;

/// Memoryless Pauli channel: each qubit independently suffers X, Y or Z
/// with probabilities `px`, `py`, `pz`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChannelParams {
    pub px: f64,
    pub py: f64,
    pub pz: f64,
}

impl ChannelParams {
    pub fn new(px: f64, py: f64, pz: f64) -> Result<Self> {
        let ok = |p: f64| p.is_finite() && p >= 0.0;
        if !(ok(px) && ok(py) && ok(pz)) || px + py + pz > 1.0 + 1e-15 {
            return Err(Error::Config(format!("invalid channel px={px}, py={py}, pz={pz}")));
        }
        Ok(ChannelParams { px, py, pz })
    }

    /// `px = py = rho / (A + 2)`, `pz = A rho / (A + 2)`.
    pub fn from_rho_asymmetry(rho: f64, a: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&rho) || !a.is_finite() || a < 0.0 {
            return Err(Error::Config(format!("invalid rho={rho} or A={a}")));
        }
        let px = rho / (a + 2.0);
        Self::new(px, px, a * px)
    }

    /// The `A -> infinity` limit: Z errors only.
    pub fn z_only(rho: f64) -> Result<Self> {
        Self::new(0.0, 0.0, rho)
    }

    pub fn depolarizing(rho: f64) -> Result<Self> {
        Self::from_rho_asymmetry(rho, 1.0)
    }

    pub fn rho(&self) -> f64 {
        self.px + self.py + self.pz
    }

    /// `pz / px`; infinite for a Z-only channel.
    pub fn asymmetry(&self) -> f64 {
        self.pz / self.px
    }
}

fn binom_f64(n: usize, k: usize) -> f64 {
    binomial(n, k).to_f64().expect("binomial fits in f64")
}

/// Mass of all patterns of weight `j > t` on `n` qubits.
fn tail_mass(n: usize, t: usize, rho: f64) -> f64 {
    (t + 1..=n)
        .map(|j| binom_f64(n, j) * (1.0 - rho).powi((n - j) as i32) * rho.powi(j as i32))
        .sum()
}

/// CWEP of a code correcting any `t` errors:
/// `1 - sum_{j<=t} C(n,j) (1-rho)^(n-j) rho^j`.
pub fn cwep_symmetric(n: usize, t: usize, rho: f64) -> f64 {
    tail_mass(n, t.min(n), rho)
}

/// Probability weight of the correctable patterns on `j` fixed positions:
/// `rho^j` if `j <= eg`, otherwise the patterns with at least `j - eg` Z
/// factors,
/// `sum_{i=j-eg}^{j} C(j,i) pz^i sum_l C(j-i,l) px^l py^(j-i-l)`.
pub fn xi(j: usize, eg: usize, ch: &ChannelParams) -> f64 {
    if j <= eg {
        return ch.rho().powi(j as i32);
    }
    (j - eg..=j)
        .map(|i| {
            let rest = j - i;
            let inner: f64 = (0..=rest)
                .map(|l| binom_f64(rest, l) * ch.px.powi(l as i32) * ch.py.powi((rest - l) as i32))
                .sum();
            binom_f64(j, i) * ch.pz.powi(i as i32) * inner
        })
        .sum()
}

/// `rho^j - xi(j; eg)`: weight of the patterns on `j` positions with more
/// than `eg` factors from `{X, Y}`.
pub fn xi_complement(j: usize, eg: usize, ch: &ChannelParams) -> f64 {
    if j <= eg {
        return 0.0;
    }
    let pxy = ch.px + ch.py;
    (0..j - eg)
        .map(|i| binom_f64(j, i) * ch.pz.powi(i as i32) * pxy.powi((j - i) as i32))
        .sum()
}

/// CWEP of a code correcting `eg` generic plus `ez` Z errors:
/// `1 - sum_{j<=eg+ez} C(n,j) (1-rho)^(n-j) xi(j; eg)`.
pub fn cwep_asymmetric(n: usize, profile: ErrorProfile, ch: &ChannelParams) -> f64 {
    let rho = ch.rho();
    let t = profile.t_tilde().min(n);
    let head: f64 = (0..=t)
        .map(|j| binom_f64(n, j) * (1.0 - rho).powi((n - j) as i32) * xi_complement(j, profile.eg, ch))
        .sum();
    head + tail_mass(n, t, rho)
}

/// Closed form for `px = py = rho/(A+2)`, `pz = A rho/(A+2)`:
///
/// `1 - sum_{j<=eg+ez} C(n,j) (1-rho)^(n-j) rho^j
///      (1 - 2^(j+1) ((A/2)^(j-eg) - 1) / ((A-2)(A+2)^j) u_{j-eg-1})`
///
/// Kept as a cross-check of [`cwep_asymmetric`]. The bracket only agrees
/// with `xi(j; eg) / rho^j` for `j - eg <= 1`; beyond that it omits the
/// binomial weights `C(j, i)` of the missing patterns. Undefined at `A = 2`.
pub fn cwep_asymmetric_closed_form(n: usize, profile: ErrorProfile, rho: f64, a: f64) -> Result<f64> {
    let t = profile.t_tilde().min(n);
    let head = (0..=t)
        .map(|j| {
            Ok(binom_f64(n, j)
                * (1.0 - rho).powi((n - j) as i32)
                * rho.powi(j as i32)
                * closed_form_missing(j, profile.eg, a)?)
        })
        .sum::<Result<f64>>()?;
    Ok(head + tail_mass(n, t, rho))
}

/// `1 - bracket` of the closed form, i.e. the claimed uncorrectable share
/// of weight-`j` patterns.
pub fn closed_form_missing(j: usize, eg: usize, a: f64) -> Result<f64> {
    if j <= eg {
        return Ok(0.0);
    }
    if a == 2.0 {
        return Err(Error::Config("closed form is undefined at A = 2".into()));
    }
    let p = (j - eg) as i32;
    Ok(2f64.powi(j as i32 + 1) * ((a / 2.0).powi(p) - 1.0) / ((a - 2.0) * (a + 2.0).powi(j as i32)))
}

/// CWEP of the `[[15,1]]` CSS code with `t_X = 1`, `t_Z = 3`: every pattern
/// with up to one generic error plus two Z errors, plus the patterns with
/// one X and three Z errors.
pub fn cwep_css_15(ch: &ChannelParams) -> f64 {
    const N: usize = 15;
    let rho = ch.rho();
    let head: f64 = (0..=3)
        .map(|j| binom_f64(N, j) * (1.0 - rho).powi((N - j) as i32) * xi_complement(j, 1, ch))
        .sum();
    let extra = 15.0 * binom_f64(14, 3) * ch.px * ch.pz.powi(3) * (1.0 - rho).powi(11);
    head + tail_mass(N, 3, rho) - extra
}

/// `1 - sum_{E in set} px^#X py^#Y pz^#Z (1-rho)^(n - wt E)`.
///
/// Duplicates in `patterns` are ignored. Evaluated by counting, for each
/// `(#X, #Y, #Z)` type, how many patterns of that type are missing from the
/// set, so the result carries no cancellation error.
pub fn cwep_from_pattern_set<'a, I>(n: usize, patterns: I, ch: &ChannelParams) -> Result<f64>
where
    I: IntoIterator<Item = &'a PauliOperator>,
{
    let mut seen = HashSet::new();
    let mut present: HashMap<(usize, usize, usize), u128> = HashMap::new();
    for p in patterns {
        if p.n() != n {
            return Err(Error::Dimension { left: n, right: p.n() });
        }
        if seen.insert(p) {
            *present.entry(p.type_counts()).or_default() += 1;
        }
    }
    let rho = ch.rho();
    let max_w = present.keys().map(|&(a, b, c)| a + b + c).max().unwrap_or(0);
    let mut pe = tail_mass(n, max_w, rho);
    for w in 0..=max_w {
        let positions = binomial(n, w).to_u128().expect("C(n, w) fits in u128");
        let mut missing_mass = 0.0;
        for a in 0..=w {
            for b in 0..=w - a {
                let c = w - a - b;
                let total = positions * multinomial(w, a, b);
                let have = present.get(&(a, b, c)).copied().unwrap_or(0);
                debug_assert!(have <= total);
                let missing = total - have;
                if missing > 0 {
                    missing_mass += missing as f64 * ch.px.powi(a as i32) * ch.py.powi(b as i32) * ch.pz.powi(c as i32);
                }
            }
        }
        pe += missing_mass * (1.0 - rho).powi((n - w) as i32);
    }
    Ok(pe)
}

/// `w! / (a! b! (w-a-b)!)`.
fn multinomial(w: usize, a: usize, b: usize) -> u128 {
    (binomial(w, a) * binomial(w - a, b))
        .to_u128()
        .expect("multinomial fits in u128")
}

/// `count` points from `start` to `stop` with geometric spacing.
pub fn log_grid(start: f64, stop: f64, count: usize) -> Result<Vec<f64>> {
    if !(start > 0.0 && stop > 0.0) || count == 0 {
        return Err(Error::Config(format!("invalid log grid {start}:{stop}:{count}")));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let (l0, l1) = (start.log10(), stop.log10());
    Ok((0..count)
        .map(|i| {
            if i == 0 {
                start
            } else if i + 1 == count {
                stop
            } else {
                10f64.powf(l0 + (l1 - l0) * i as f64 / (count - 1) as f64)
            }
        })
        .collect())
}

/// Parses `start:stop:count`.
pub fn parse_log_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Config(format!("expected start:stop:count, got {spec:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let stop: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let count: usize = parts[2].trim().parse().map_err(|_| bad())?;
    log_grid(start, stop, count)
}

/// Sampled `(rho, P_e)` curve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CwepCurve {
    pub label: String,
    pub asymmetry: Option<f64>,
    pub points: Vec<(f64, f64)>,
}

impl CwepCurve {
    pub fn evaluate<F>(label: impl Into<String>, asymmetry: Option<f64>, rhos: &[f64], mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let points = rhos.iter().map(|&rho| Ok((rho, f(rho)?))).collect::<Result<Vec<_>>>()?;
        Ok(CwepCurve {
            label: label.into(),
            asymmetry,
            points,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("rho,pe\n");
        for &(rho, pe) in &self.points {
            out.push_str(&format!("{rho},{}\n", format_probability(pe)));
        }
        out
    }
}

/// Nine significant digits; positional for values down to `1e-4`,
/// scientific below.
pub fn format_probability(p: f64) -> String {
    if p == 0.0 {
        return "0".into();
    }
    let exp = p.abs().log10().floor() as i32;
    if exp >= -4 {
        let decimals = (8 - exp).max(0) as usize;
        format!("{p:.decimals$}")
    } else {
        format!("{p:.8e}")
    }
}
