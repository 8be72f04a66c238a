use std::collections::HashMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::ChannelParams;
use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliOperator, RowSpace};
use crate::rng::{self, StreamRng};
use crate::stabilizer::StabilizerCode;
use crate::verifier::DecodeTable;

/// Trials per independently seeded shard.
pub const SHARD_TRIALS: u64 = 1 << 16;

const WILSON_Z95: f64 = 1.959_963_984_540_054;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationResult {
    pub channel: ChannelParams,
    pub trials: u64,
    pub failures: u64,
    pub seed: u64,
    pub pe_hat: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

impl SimulationResult {
    pub fn rho(&self) -> f64 {
        self.channel.rho()
    }

    /// Whether `p` lies within `z` binomial standard errors of the estimate,
    /// using the Wilson score interval.
    pub fn consistent_with(&self, p: f64, z: f64) -> bool {
        let (lo, hi) = wilson_interval(self.failures, self.trials, z);
        lo <= p && p <= hi
    }
}

/// Wilson score interval for `failures` out of `trials` at normal quantile `z`.
pub fn wilson_interval(failures: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = failures as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt();
    let lo = if failures == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if failures == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo, hi)
}

/// Monte Carlo estimate of the CWEP of `table` on `code`, on one thread.
pub fn simulate(
    code: &StabilizerCode,
    table: &DecodeTable,
    channel: &ChannelParams,
    trials: u64,
    seed: u64,
) -> Result<SimulationResult> {
    simulate_with_jobs(code, table, channel, trials, seed, 1)
}

/// As [`simulate`], spread over `jobs` threads. Trials are split into
/// shards of [`SHARD_TRIALS`], shard `s` drawing from `rng::stream(seed, s)`,
/// so the estimate does not depend on `jobs`.
pub fn simulate_with_jobs(
    code: &StabilizerCode,
    table: &DecodeTable,
    channel: &ChannelParams,
    trials: u64,
    seed: u64,
    jobs: usize,
) -> Result<SimulationResult> {
    if table.n() != code.n() || table.syndrome_len() != code.r() {
        return Err(Error::Dimension {
            left: code.n(),
            right: table.n(),
        });
    }
    if trials == 0 || jobs == 0 {
        return Err(Error::Config("trials and jobs must be positive".into()));
    }
    let decoder = Decoder::new(code, table);
    let shards = trials.div_ceil(SHARD_TRIALS);
    let run = |s: u64| {
        let len = SHARD_TRIALS.min(trials - s * SHARD_TRIALS);
        decoder.run_shard(channel, &mut rng::stream(seed, s), len)
    };
    let failures: u64 = if jobs == 1 {
        (0..shards).map(run).sum()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Config(e.to_string()))?
            .install(|| (0..shards).into_par_iter().map(run).sum())
    };
    let (ci_lo, ci_hi) = wilson_interval(failures, trials, WILSON_Z95);
    Ok(SimulationResult {
        channel: *channel,
        trials,
        failures,
        seed,
        pe_hat: failures as f64 / trials as f64,
        ci_lo,
        ci_hi,
    })
}

struct Decoder<'a> {
    code: &'a StabilizerCode,
    table: &'a DecodeTable,
    words: Option<HashMap<u64, PauliOperator>>,
    stabilizers: RowSpace,
}

impl<'a> Decoder<'a> {
    fn new(code: &'a StabilizerCode, table: &'a DecodeTable) -> Self {
        Decoder {
            code,
            table,
            words: (code.r() <= 64).then(|| table.word_map()),
            stabilizers: code.stabilizer_space(),
        }
    }

    fn lookup(&self, e: &PauliOperator) -> Option<PauliOperator> {
        match &self.words {
            Some(words) => words.get(&self.code.syndrome_word(e)).cloned(),
            None => {
                let s = self.code.syndrome(e).ok()?;
                self.table.decode(&s).cloned()
            }
        }
    }

    fn corrects(&self, e: &PauliOperator) -> bool {
        match self.lookup(e) {
            Some(mut d) => {
                d.compose_assign_unchecked(e);
                self.stabilizers.contains(&d).unwrap_or(false)
            }
            None => false,
        }
    }

    fn run_shard(&self, ch: &ChannelParams, rng: &mut StreamRng, trials: u64) -> u64 {
        let n = self.code.n();
        let (cx, cy, cz) = (ch.px, ch.px + ch.py, ch.rho());
        // Outcomes are memoized per error pattern; at realistic noise levels
        // the same low-weight patterns recur constantly.
        if n <= 64 {
            let mut memo: HashMap<(u64, u64), bool> = HashMap::new();
            let mut failures = 0;
            for _ in 0..trials {
                let (mut x, mut z) = (0u64, 0u64);
                for q in 0..n {
                    let u: f64 = rng.random();
                    if u < cz {
                        let bit = 1u64 << q;
                        if u < cx {
                            x |= bit;
                        } else if u < cy {
                            x |= bit;
                            z |= bit;
                        } else {
                            z |= bit;
                        }
                    }
                }
                if x | z == 0 {
                    continue;
                }
                let ok = *memo.entry((x, z)).or_insert_with(|| {
                    let e = PauliOperator::from_bits(BitVector::from_u64(n, x), BitVector::from_u64(n, z))
                        .expect("equal widths");
                    self.corrects(&e)
                });
                failures += u64::from(!ok);
            }
            return failures;
        }

        let mut memo: HashMap<PauliOperator, bool> = HashMap::new();
        let mut failures = 0;
        for _ in 0..trials {
            let mut e = PauliOperator::identity(n);
            for q in 0..n {
                let u: f64 = rng.random();
                if u < cz {
                    let kind = if u < cx {
                        Pauli::X
                    } else if u < cy {
                        Pauli::Y
                    } else {
                        Pauli::Z
                    };
                    e.set(q, kind);
                }
            }
            if e.is_identity() {
                continue;
            }
            let ok = match memo.get(&e) {
                Some(&ok) => ok,
                None => {
                    let ok = self.corrects(&e);
                    memo.insert(e, ok);
                    ok
                }
            };
            failures += u64::from(!ok);
        }
        failures
    }
}
