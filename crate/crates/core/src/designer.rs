//! Randomized syndrome assignment for `[[n,1]]` codes with `eg = 1`.
//!
//! The Z syndromes are fixed: `Z_l` gets the unit vector `e_l` for
//! `l < n - 1` (0-based) and the last qubit gets the all-ones syndrome. Every
//! pure-Z pattern of weight at most `t~ = eg + ez` then has a distinct
//! syndrome of weight in `[0, t~]` or `[n - t~, n - 1]`.
//!
//! The X syndromes are drawn at random, last qubit first, and accepted only
//! when the new single error together with every combination of up to `ez`
//! extra Z errors lands on syndromes that are still free. Running out of
//! candidates for a qubit restarts the trial. A completed assignment fixes
//! the stabilizer matrix entry by entry; the trial succeeds if the resulting
//! generators commute and the code passes the brute-force verifier.

use std::collections::HashSet;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::combinations;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliOperator};
use crate::rng::{self, StreamRng};
use crate::stabilizer::{ErrorProfile, StabilizerCode, Syndrome};
use crate::verifier;

/// Largest code length supported by the search. The table of used syndromes
/// is a dense bitmap of `2^(n-1)` bits.
pub const MAX_SEARCH_N: usize = 25;

/// Syndromes of the single X and Z errors of an `[[n, k]]` code with
/// `r = n - k` generators. `Y` syndromes are the XOR of the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyndromeAssignment {
    n: usize,
    r: usize,
    z: Vec<u64>,
    x: Vec<Option<u64>>,
}

impl SyndromeAssignment {
    pub fn from_tables(z: Vec<Syndrome>, x: Vec<Syndrome>) -> Result<Self> {
        let n = z.len();
        if x.len() != n {
            return Err(Error::Dimension {
                left: n,
                right: x.len(),
            });
        }
        let r = z.first().map_or(0, Syndrome::len);
        if r == 0 || r >= n || r > 64 {
            return Err(Error::Config(format!(
                "need 0 < n - k < n and n - k <= 64, got n={n}, n-k={r}"
            )));
        }
        if let Some(bad) = z.iter().chain(&x).find(|s| s.len() != r) {
            return Err(Error::Dimension {
                left: r,
                right: bad.len(),
            });
        }
        Ok(SyndromeAssignment {
            n,
            r,
            z: z.iter().map(Syndrome::to_u64).collect(),
            x: x.iter().map(|s| Some(s.to_u64())).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn syndrome_len(&self) -> usize {
        self.r
    }

    pub fn z_syndrome(&self, qubit: usize) -> Syndrome {
        Syndrome::from_u64(self.r, self.z[qubit])
    }

    pub fn x_syndrome(&self, qubit: usize) -> Option<Syndrome> {
        self.x[qubit].map(|w| Syndrome::from_u64(self.r, w))
    }

    pub fn y_syndrome(&self, qubit: usize) -> Option<Syndrome> {
        self.x[qubit].map(|w| Syndrome::from_u64(self.r, w ^ self.z[qubit]))
    }

    pub fn set_x(&mut self, qubit: usize, s: &Syndrome) -> Result<()> {
        if s.len() != self.r {
            return Err(Error::Dimension {
                left: self.r,
                right: s.len(),
            });
        }
        self.x[qubit] = Some(s.to_u64());
        Ok(())
    }

    pub fn is_complete(&self) -> bool {
        self.x.iter().all(Option::is_some)
    }
}

/// The fixed Z syndromes for an `[[n, 1]]` code; X syndromes left unset.
pub fn assign_z_syndromes(n: usize) -> Result<SyndromeAssignment> {
    if !(2..=65).contains(&n) {
        return Err(Error::Config(format!("n must be in 2..=65, got {n}")));
    }
    let r = n - 1;
    let all_ones = crate::bits::low_mask(r);
    let z = (0..n).map(|i| if i + 1 < n { 1u64 << i } else { all_ones }).collect();
    Ok(SyndromeAssignment {
        n,
        r,
        z,
        x: vec![None; n],
    })
}

/// Fills the stabilizer matrix from the single-error syndromes: entry
/// `(j, i)` is the unique Pauli whose commutation with `X_i` and `Z_i`
/// reproduces bits `s_j(X_i)` and `s_j(Z_i)`.
pub fn stabilizer_from_syndromes(a: &SyndromeAssignment) -> Result<StabilizerCode> {
    if !a.is_complete() {
        let missing = a.x.iter().position(Option::is_none).unwrap_or(0);
        return Err(Error::State(format!(
            "X syndrome of qubit {} is unassigned",
            missing + 1
        )));
    }
    let generators = (0..a.r)
        .map(|j| {
            PauliOperator::from_sparse(
                a.n,
                (0..a.n).map(|i| {
                    let sx = (a.x[i].unwrap() >> j) & 1 == 1;
                    let sz = (a.z[i] >> j) & 1 == 1;
                    let kind = match (sx, sz) {
                        (false, false) => Pauli::I,
                        (true, false) => Pauli::Z,
                        (false, true) => Pauli::X,
                        (true, true) => Pauli::Y,
                    };
                    (i, kind)
                }),
            )
        })
        .collect();
    StabilizerCode::new(a.n, a.n - a.r, generators, None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub profile: ErrorProfile,
    pub seed: u64,
    pub max_restarts: u64,
    /// Number of trials evaluated concurrently. Does not affect the result.
    pub jobs: usize,
}

impl SearchConfig {
    pub fn new(n: usize, profile: ErrorProfile, seed: u64) -> Self {
        SearchConfig {
            n,
            profile,
            seed,
            max_restarts: 100_000,
            jobs: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.profile.eg != 1 {
            return Err(Error::Config(format!(
                "eg = {} is not supported by this construction (requires eg = 1)",
                self.profile.eg
            )));
        }
        let t = self.profile.t_tilde();
        if self.n < 1 + 4 * t {
            return Err(Error::Config(format!(
                "n = {} violates the construction bound n >= 1 + 4 t~ = {}",
                self.n,
                1 + 4 * t
            )));
        }
        if self.n > MAX_SEARCH_N {
            return Err(Error::Config(format!(
                "n = {} exceeds the supported maximum {MAX_SEARCH_N}",
                self.n
            )));
        }
        if self.jobs == 0 {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Why a trial did not produce a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RestartReason {
    /// No admissible X syndrome left for this (0-based) qubit.
    Exhausted {
        qubit: usize,
    },
    NonCommuting,
    /// Commuting code that still failed capability verification.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pick {
    Assigned(SyndromeAssignment),
    Restart(RestartReason),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Trials evaluated up to and including the successful one.
    pub trials: u64,
    /// Failed trials before success.
    pub restarts: u64,
    pub exhausted: u64,
    pub non_commuting: u64,
    pub unverified: u64,
    pub elapsed_ms: u128,
    /// Index of the successful trial, if any.
    pub winning_trial: Option<u64>,
}

impl SearchStats {
    fn record(&mut self, reason: RestartReason) {
        self.restarts += 1;
        match reason {
            RestartReason::Exhausted { .. } => self.exhausted += 1,
            RestartReason::NonCommuting => self.non_commuting += 1,
            RestartReason::Unverified => self.unverified += 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub code: StabilizerCode,
    pub assignment: SyndromeAssignment,
    pub stats: SearchStats,
}

/// Precomputed, read-only state shared by all trials of one search.
pub struct Designer {
    config: SearchConfig,
    base: SyndromeAssignment,
    /// Syndromes of all pure-Z patterns of weight <= t~.
    z_patterns: Vec<u64>,
    /// Per qubit: syndromes of `Z_S` over `S` not containing the qubit,
    /// `|S| <= ez`, including the empty set.
    z_companions: Vec<Vec<u64>>,
    last_weight: u32,
    weight_range: (u32, u32),
}

struct UsedSet(Vec<u64>);

impl UsedSet {
    fn new(r: usize) -> Self {
        UsedSet(vec![0; (1usize << r).div_ceil(64)])
    }

    #[inline]
    fn contains(&self, s: u64) -> bool {
        (self.0[(s >> 6) as usize] >> (s & 63)) & 1 == 1
    }

    #[inline]
    fn insert(&mut self, s: u64) -> bool {
        let fresh = !self.contains(s);
        self.0[(s >> 6) as usize] |= 1 << (s & 63);
        fresh
    }
}

fn z_syndrome_of(base: &SyndromeAssignment, qubits: &[usize]) -> u64 {
    qubits.iter().fold(0, |acc, &q| acc ^ base.z[q])
}

impl Designer {
    pub fn new(config: SearchConfig) -> Result<Self> {
        config.validate()?;
        let n = config.n;
        let t = config.profile.t_tilde();
        let ez = config.profile.ez;
        let base = assign_z_syndromes(n)?;

        let z_patterns = (0..=t)
            .flat_map(|w| combinations(n, w))
            .map(|s| z_syndrome_of(&base, &s))
            .collect();

        let z_companions = (0..n)
            .map(|q| {
                let others: Vec<usize> = (0..n).filter(|&i| i != q).collect();
                (0..=ez)
                    .flat_map(|w| combinations(n - 1, w))
                    .map(|idx| idx.iter().fold(0, |acc, &i| acc ^ base.z[others[i]]))
                    .collect()
            })
            .collect();

        Ok(Designer {
            last_weight: ((n - 1) / 2) as u32,
            weight_range: ((2 * t) as u32, (n - 2 * t - 1) as u32),
            config,
            base,
            z_patterns,
            z_companions,
        })
    }

    pub fn config(&self) -> &SearchConfig {
        &self.config
    }

    fn r(&self) -> usize {
        self.config.n - 1
    }

    fn fresh_used_set(&self) -> UsedSet {
        let mut used = UsedSet::new(self.r());
        for &s in &self.z_patterns {
            let fresh = used.insert(s);
            debug_assert!(fresh, "pure-Z syndromes collide; construction bound violated");
        }
        used
    }

    /// Checks that `X_q Z_S` and `Y_q Z_S` are all free for candidate `x`.
    fn admissible(&self, used: &UsedSet, qubit: usize, x: u64) -> bool {
        let y = x ^ self.base.z[qubit];
        self.z_companions[qubit]
            .iter()
            .all(|&s| !used.contains(x ^ s) && !used.contains(y ^ s))
    }

    fn commit(&self, used: &mut UsedSet, qubit: usize, x: u64) {
        let y = x ^ self.base.z[qubit];
        for &s in &self.z_companions[qubit] {
            used.insert(x ^ s);
            used.insert(y ^ s);
        }
    }

    /// Draws candidates uniformly without replacement until one is admissible
    /// or the pool is exhausted.
    fn pick_for_qubit(&self, rng: &mut StreamRng, used: &UsedSet, qubit: usize) -> Option<u64> {
        let r = self.r();
        let last = qubit + 1 == self.config.n;
        // Free positions: all bits for the last qubit, otherwise bit `qubit`
        // is forced to zero.
        let free = if last { r } else { r - 1 };
        let (lo, hi) = if last {
            (self.last_weight, self.last_weight)
        } else {
            self.weight_range
        };
        let counts: Vec<(u32, u64)> = (lo..=hi)
            .map(|w| (w, binomial_u64(free, w as usize)))
            .filter(|&(_, c)| c > 0)
            .collect();
        let pool: u64 = counts.iter().map(|&(_, c)| c).sum();
        let mut seen = HashSet::new();
        while (seen.len() as u64) < pool {
            let mut ticket = rng.random_range(0..pool);
            let weight = counts
                .iter()
                .find(|&&(_, c)| {
                    if ticket < c {
                        true
                    } else {
                        ticket -= c;
                        false
                    }
                })
                .map(|&(w, _)| w)
                .expect("ticket below pool size");
            let mut x = 0u64;
            for i in rand::seq::index::sample(rng, free, weight as usize) {
                let bit = if !last && i >= qubit { i + 1 } else { i };
                x |= 1 << bit;
            }
            if !seen.insert(x) {
                continue;
            }
            if self.admissible(used, qubit, x) {
                return Some(x);
            }
        }
        None
    }

    /// One attempt at a complete, collision-free assignment.
    pub fn pick_x_syndromes(&self, rng: &mut StreamRng) -> Pick {
        let n = self.config.n;
        let mut used = self.fresh_used_set();
        let mut a = self.base.clone();
        for qubit in std::iter::once(n - 1).chain(0..n - 1) {
            match self.pick_for_qubit(rng, &used, qubit) {
                Some(x) => {
                    self.commit(&mut used, qubit, x);
                    a.x[qubit] = Some(x);
                }
                None => return Pick::Restart(RestartReason::Exhausted { qubit }),
            }
        }
        Pick::Assigned(a)
    }

    /// Replays a given assignment through the same collision checks. Returns
    /// the first (0-based) qubit whose syndromes collide, in search order.
    pub fn first_collision(&self, a: &SyndromeAssignment) -> Result<Option<usize>> {
        if a.n != self.config.n || a.z != self.base.z {
            return Err(Error::Config("assignment does not use the fixed Z syndromes".into()));
        }
        let n = self.config.n;
        let mut used = self.fresh_used_set();
        for qubit in std::iter::once(n - 1).chain(0..n - 1) {
            let x =
                a.x[qubit].ok_or_else(|| Error::State(format!("X syndrome of qubit {} is unassigned", qubit + 1)))?;
            if !self.admissible(&used, qubit, x) {
                return Ok(Some(qubit));
            }
            self.commit(&mut used, qubit, x);
        }
        Ok(None)
    }

    fn run_trial(&self, index: u64) -> std::result::Result<(StabilizerCode, SyndromeAssignment), RestartReason> {
        let mut rng = rng::stream(self.config.seed, index);
        let a = match self.pick_x_syndromes(&mut rng) {
            Pick::Assigned(a) => a,
            Pick::Restart(reason) => return Err(reason),
        };
        let code = stabilizer_from_syndromes(&a).map_err(|_| RestartReason::Unverified)?;
        let report = code.validate();
        if !report.non_commuting.is_empty() {
            return Err(RestartReason::NonCommuting);
        }
        if !report.is_valid() || !verifier::verify_capability(&code, self.config.profile).distinct {
            return Err(RestartReason::Unverified);
        }
        Ok((code, a))
    }

    /// Runs trials `0, 1, 2, ...` until one succeeds. The lowest successful
    /// trial index wins regardless of `jobs`, so the result is a function of
    /// the configuration alone.
    pub fn search(&self) -> Result<SearchOutcome> {
        let start = Instant::now();
        let cfg = &self.config;
        let total = cfg.max_restarts.saturating_add(1);
        let mut stats = SearchStats::default();

        let pool = if cfg.jobs > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(cfg.jobs)
                    .build()
                    .map_err(|e| Error::Config(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };

        let batch = cfg.jobs as u64;
        let mut next = 0u64;
        while next < total {
            let end = (next + batch).min(total);
            let outcomes: Vec<_> = match &pool {
                Some(pool) => pool.install(|| (next..end).into_par_iter().map(|i| self.run_trial(i)).collect()),
                None => (next..end).map(|i| self.run_trial(i)).collect(),
            };
            for (offset, outcome) in outcomes.into_iter().enumerate() {
                stats.trials += 1;
                match outcome {
                    Ok((code, assignment)) => {
                        stats.winning_trial = Some(next + offset as u64);
                        stats.elapsed_ms = start.elapsed().as_millis();
                        let code = code.with_name(format!(
                            "ASYM_{}_1 eg={} ez={} seed={}",
                            cfg.n, cfg.profile.eg, cfg.profile.ez, cfg.seed
                        ));
                        return Ok(SearchOutcome {
                            code,
                            assignment,
                            stats,
                        });
                    }
                    Err(reason) => stats.record(reason),
                }
            }
            next = end;
        }
        stats.elapsed_ms = start.elapsed().as_millis();
        Err(Error::SearchFailed(stats))
    }
}

fn binomial_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Convenience wrapper: validate, precompute and search.
pub fn search(config: SearchConfig) -> Result<SearchOutcome> {
    Designer::new(config)?.search()
}

/// One randomized assignment attempt with a caller-supplied stream.
pub fn pick_x_syndromes(config: &SearchConfig, rng: &mut StreamRng) -> Result<Pick> {
    Ok(Designer::new(config.clone())?.pick_x_syndromes(rng))
}
