//! Brute-force certification of error-correction capability, syndrome
//! lookup tables, and the two-error extension analysis.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use serde::Serialize;

use crate::bounds::enumerate_correctable;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliOperator, RowSpace};
use crate::stabilizer::{ErrorProfile, StabilizerCode, Syndrome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityReport {
    pub profile: ErrorProfile,
    pub pattern_count: usize,
    pub distinct: bool,
    /// The earliest enumerated pattern sharing a syndrome with a previous
    /// one, as `(previous, later)`.
    pub first_collision: Option<(PauliOperator, PauliOperator)>,
}

/// Enumerates every pattern of the profile and checks that their syndromes
/// are pairwise distinct, which certifies non-degenerate correction.
pub fn verify_capability(code: &StabilizerCode, profile: ErrorProfile) -> CapabilityReport {
    let mut owner: HashMap<Syndrome, PauliOperator> = HashMap::new();
    let mut pattern_count = 0;
    let mut first_collision = None;
    for e in enumerate_correctable(code.n(), profile) {
        pattern_count += 1;
        let s = code.syndrome(&e).expect("enumerated at code width");
        match owner.entry(s) {
            Entry::Vacant(v) => {
                v.insert(e);
            }
            Entry::Occupied(o) => {
                if first_collision.is_none() {
                    first_collision = Some((o.get().clone(), e));
                }
            }
        }
    }
    CapabilityReport {
        profile,
        pattern_count,
        distinct: first_collision.is_none(),
        first_collision,
    }
}

/// Every colliding pair `(first owner, later pattern)` for the profile.
pub fn collisions(code: &StabilizerCode, profile: ErrorProfile) -> Vec<(PauliOperator, PauliOperator)> {
    let mut owner: HashMap<Syndrome, PauliOperator> = HashMap::new();
    let mut out = Vec::new();
    for e in enumerate_correctable(code.n(), profile) {
        let s = code.syndrome(&e).expect("enumerated at code width");
        match owner.entry(s) {
            Entry::Vacant(v) => {
                v.insert(e);
            }
            Entry::Occupied(o) => out.push((o.get().clone(), e)),
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Base,
    Extended,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeEntry {
    pub error: PauliOperator,
    pub coverage: Coverage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionPolicy {
    #[default]
    None,
    /// Fill unused syndromes with two-error patterns `Z_iZ_j`, then
    /// `X_iZ_j`, then `Y_iZ_j`.
    TwoError,
}

/// Syndrome lookup decoder.
#[derive(Debug, Clone)]
pub struct DecodeTable {
    n: usize,
    r: usize,
    entries: HashMap<Syndrome, DecodeEntry>,
}

impl DecodeTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn syndrome_len(&self) -> usize {
        self.r
    }

    pub fn decode(&self, s: &Syndrome) -> Option<&PauliOperator> {
        self.entries.get(s).map(|e| &e.error)
    }

    pub fn entry(&self, s: &Syndrome) -> Option<&DecodeEntry> {
        self.entries.get(s)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Syndrome, &DecodeEntry)> {
        self.entries.iter()
    }

    pub fn count(&self, coverage: Coverage) -> usize {
        self.entries.values().filter(|e| e.coverage == coverage).count()
    }

    /// Whether decoding `e` leaves a residual inside the stabilizer group.
    pub fn corrects(&self, code: &StabilizerCode, stabilizers: &RowSpace, e: &PauliOperator) -> Result<bool> {
        let s = code.syndrome(e)?;
        match self.decode(&s) {
            Some(d) => stabilizers.contains(&d.compose(e)?),
            None => Ok(false),
        }
    }

    /// Word-keyed copy of the table for codes with at most 64 generators.
    pub(crate) fn word_map(&self) -> HashMap<u64, PauliOperator> {
        self.entries
            .iter()
            .map(|(s, e)| (s.to_u64(), e.error.clone()))
            .collect()
    }
}

/// Single errors in canonical order `X_1..X_n, Y_1..Y_n, Z_1..Z_n`,
/// restricted to those the profile admits.
fn canonical_singles(n: usize, profile: ErrorProfile) -> Vec<PauliOperator> {
    let mut out = Vec::new();
    if profile.eg >= 1 {
        for kind in [Pauli::X, Pauli::Y] {
            out.extend((0..n).map(|q| PauliOperator::single(n, q, kind)));
        }
    }
    if profile.t_tilde() >= 1 {
        out.extend((0..n).map(|q| PauliOperator::single(n, q, Pauli::Z)));
    }
    out
}

/// Builds the lookup table. Base entries cover the identity, the single
/// errors in canonical order, and then the remaining patterns of the
/// profile. Two base patterns may share a syndrome only if they differ by a
/// stabilizer; any other clash is a capability error.
pub fn build_decode_table(
    code: &StabilizerCode,
    profile: ErrorProfile,
    policy: ExtensionPolicy,
) -> Result<DecodeTable> {
    let n = code.n();
    let stabilizers = code.stabilizer_space();
    let mut entries: HashMap<Syndrome, DecodeEntry> = HashMap::new();

    let base = std::iter::once(PauliOperator::identity(n))
        .chain(canonical_singles(n, profile))
        .chain(enumerate_correctable(n, profile).filter(|e| e.weight() >= 2));
    for e in base {
        let s = code.syndrome(&e)?;
        match entries.entry(s) {
            Entry::Vacant(v) => {
                v.insert(DecodeEntry {
                    error: e,
                    coverage: Coverage::Base,
                });
            }
            Entry::Occupied(o) => {
                let existing = &o.get().error;
                if !stabilizers.contains(&existing.compose(&e)?)? {
                    return Err(Error::Capability(format!(
                        "{existing} and {e} share syndrome {} but are not stabilizer-equivalent",
                        o.key()
                    )));
                }
            }
        }
    }

    if policy == ExtensionPolicy::TwoError {
        for class in TwoErrorClass::ALL {
            for e in class.patterns(n) {
                let s = code.syndrome(&e)?;
                entries.entry(s).or_insert(DecodeEntry {
                    error: e,
                    coverage: Coverage::Extended,
                });
            }
        }
    }

    Ok(DecodeTable {
        n,
        r: code.r(),
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TwoErrorClass {
    ZZ,
    XZ,
    YZ,
}

impl TwoErrorClass {
    pub const ALL: [TwoErrorClass; 3] = [TwoErrorClass::ZZ, TwoErrorClass::XZ, TwoErrorClass::YZ];

    /// `Z_iZ_j` over `i < j`; `X_iZ_j` and `Y_iZ_j` over ordered `i != j`.
    /// Lexicographic in `(i, j)`.
    pub fn patterns(self, n: usize) -> Vec<PauliOperator> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let keep = match self {
                    TwoErrorClass::ZZ => i < j,
                    _ => i != j,
                };
                if !keep {
                    continue;
                }
                let first = match self {
                    TwoErrorClass::ZZ => Pauli::Z,
                    TwoErrorClass::XZ => Pauli::X,
                    TwoErrorClass::YZ => Pauli::Y,
                };
                out.push(PauliOperator::from_sparse(n, [(i, first), (j, Pauli::Z)]));
            }
        }
        out
    }

    pub fn label(self) -> &'static str {
        match self {
            TwoErrorClass::ZZ => "Z_iZ_j",
            TwoErrorClass::XZ => "X_iZ_j",
            TwoErrorClass::YZ => "Y_iZ_j",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassCount {
    pub class: TwoErrorClass,
    pub total: usize,
    /// Decoded up to a stabilizer.
    pub correctable: usize,
    /// Decoded to exactly the same operator.
    pub raw: usize,
}

#[derive(Debug, Clone)]
pub struct ExtendedAnalysis {
    pub classes: Vec<ClassCount>,
    /// Two-error patterns that decode successfully, in class order.
    pub correctable_patterns: Vec<PauliOperator>,
    /// Identity and single errors that decode successfully.
    pub correctable_singles: Vec<PauliOperator>,
}

impl ExtendedAnalysis {
    pub fn class(&self, class: TwoErrorClass) -> ClassCount {
        *self
            .classes
            .iter()
            .find(|c| c.class == class)
            .expect("every class is analysed")
    }

    /// Identity, single errors and two-error patterns corrected by the
    /// extended table.
    pub fn pattern_set(&self) -> Vec<PauliOperator> {
        self.correctable_singles
            .iter()
            .chain(&self.correctable_patterns)
            .cloned()
            .collect()
    }
}

/// Decodes every `Z_iZ_j`, `X_iZ_j`, `Y_iZ_j` pattern with the single-error
/// table extended by [`ExtensionPolicy::TwoError`] and counts successes.
pub fn analyze_extended(code: &StabilizerCode) -> Result<ExtendedAnalysis> {
    let n = code.n();
    let table = build_decode_table(code, ErrorProfile::new(1, 0), ExtensionPolicy::TwoError)?;
    let stabilizers = code.stabilizer_space();

    let mut correctable_singles = Vec::new();
    for e in std::iter::once(PauliOperator::identity(n)).chain(canonical_singles(n, ErrorProfile::new(1, 0))) {
        if table.corrects(code, &stabilizers, &e)? {
            correctable_singles.push(e);
        }
    }

    let mut classes = Vec::new();
    let mut correctable_patterns = Vec::new();
    for class in TwoErrorClass::ALL {
        let patterns = class.patterns(n);
        let mut count = ClassCount {
            class,
            total: patterns.len(),
            correctable: 0,
            raw: 0,
        };
        for e in patterns {
            let s = code.syndrome(&e)?;
            let Some(decoded) = table.decode(&s) else {
                continue;
            };
            if *decoded == e {
                count.raw += 1;
            }
            if stabilizers.contains(&decoded.compose(&e)?)? {
                count.correctable += 1;
                correctable_patterns.push(e);
            }
        }
        classes.push(count);
    }
    Ok(ExtendedAnalysis {
        classes,
        correctable_patterns,
        correctable_singles,
    })
}

/// Largest code length accepted by [`corrected_patterns`].
pub const EXHAUSTIVE_MAX_N: usize = 12;

/// Every one of the `4^n` Pauli patterns that `table` decodes up to a
/// stabilizer, including degenerate corrections of patterns the table was
/// not built for. Patterns are ordered by their base-4 index, qubit 0 least
/// significant with `I, X, Y, Z` as digits `0..4`.
pub fn corrected_patterns(code: &StabilizerCode, table: &DecodeTable) -> Result<Vec<PauliOperator>> {
    let n = code.n();
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::Config(format!(
            "exhaustive enumeration needs n <= {EXHAUSTIVE_MAX_N}, got {n}"
        )));
    }
    if table.n() != n || table.syndrome_len() != code.r() {
        return Err(Error::Dimension {
            left: n,
            right: table.n(),
        });
    }
    let words = table.word_map();
    let stabilizers = code.stabilizer_space();
    let mut out = Vec::new();
    for index in 0..1u64 << (2 * n) {
        let e = PauliOperator::from_sparse(
            n,
            (0..n).map(|q| {
                (
                    q,
                    [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][(index >> (2 * q)) as usize & 3],
                )
            }),
        );
        if let Some(d) = words.get(&code.syndrome_word(&e)) {
            let mut residual = d.clone();
            residual.compose_assign_unchecked(&e);
            if stabilizers.contains(&residual)? {
                out.push(e);
            }
        }
    }
    Ok(out)
}
