//! Stabilizer codes, syndromes and the `.stab` text format.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::pauli::{PauliOperator, RowSpace, SymplecticMatrix};

/// Number of generic Pauli errors (`eg`) plus number of additional Z errors
/// (`ez`) a code is meant to correct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ErrorProfile {
    pub eg: usize,
    pub ez: usize,
}

impl ErrorProfile {
    pub const fn new(eg: usize, ez: usize) -> Self {
        ErrorProfile { eg, ez }
    }

    /// Symmetric profile: `t` generic errors, no extra Z errors.
    pub const fn symmetric(t: usize) -> Self {
        ErrorProfile { eg: t, ez: 0 }
    }

    /// Total number of errors, `eg + ez`.
    pub const fn t_tilde(&self) -> usize {
        self.eg + self.ez
    }
}

impl fmt::Display for ErrorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(eg={}, ez={})", self.eg, self.ez)
    }
}

/// Measurement outcome of an error against the generators. Bit `j` is the
/// outcome for generator `j` (0-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome(BitVector);

impl Syndrome {
    pub fn zeros(len: usize) -> Self {
        Syndrome(BitVector::zeros(len))
    }

    pub fn from_bits(bits: BitVector) -> Self {
        Syndrome(bits)
    }

    pub fn from_u64(len: usize, word: u64) -> Self {
        Syndrome(BitVector::from_u64(len, word))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, j: usize) -> bool {
        self.0.get(j)
    }

    pub fn bits(&self) -> &BitVector {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Low 64 bits; exact for codes with at most 64 generators.
    pub fn to_u64(&self) -> u64 {
        self.0.low_word()
    }

    pub fn xor(&self, other: &Syndrome) -> Result<Syndrome> {
        if self.len() != other.len() {
            return Err(Error::Dimension {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Syndrome(self.0.xor(&other.0)))
    }
}

/// Rendered most-significant bit first, `s_m ... s_1`.
impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in (0..self.len()).rev() {
            f.write_str(if self.bit(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({self})")
    }
}

/// An `[[n, k]]` stabilizer code given by `n - k` generators.
///
/// Construction only checks the shape. Commutation and independence are
/// reported by [`StabilizerCode::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCode {
    n: usize,
    k: usize,
    generators: Vec<PauliOperator>,
    name: Option<String>,
}

/// Outcome of [`StabilizerCode::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Index pairs `(i, j)`, `i < j`, of anticommuting generators.
    pub non_commuting: Vec<(usize, usize)>,
    pub rank: usize,
    pub expected_rank: usize,
}

impl ValidationReport {
    pub fn rank_deficiency(&self) -> usize {
        self.expected_rank - self.rank
    }

    pub fn is_valid(&self) -> bool {
        self.non_commuting.is_empty() && self.rank == self.expected_rank
    }
}

impl StabilizerCode {
    pub fn new(n: usize, k: usize, generators: Vec<PauliOperator>, name: Option<String>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Config("k must be at least 1".into()));
        }
        if n <= k {
            return Err(Error::Config(format!("need n > k, got n={n}, k={k}")));
        }
        if generators.len() != n - k {
            return Err(Error::Config(format!(
                "expected {} generators for [[{n},{k}]], got {}",
                n - k,
                generators.len()
            )));
        }
        if let Some(g) = generators.iter().find(|g| g.n() != n) {
            return Err(Error::Dimension { left: n, right: g.n() });
        }
        Ok(StabilizerCode { n, k, generators, name })
    }

    /// Builds a code from generator strings, one per row.
    pub fn from_rows(k: usize, rows: &[&str], name: Option<&str>) -> Result<Self> {
        let generators = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.parse::<PauliOperator>().map_err(|e| match e {
                    Error::Parse { column, message, .. } => Error::Parse {
                        line: i + 1,
                        column,
                        message,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let n = generators.first().map_or(0, PauliOperator::n);
        Self::new(n, k, generators, name.map(str::to_owned))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of generators, `n - k`.
    pub fn r(&self) -> usize {
        self.n - self.k
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn label(&self) -> String {
        match &self.name {
            Some(name) => name.clone(),
            None => format!("[[{},{}]]", self.n, self.k),
        }
    }

    pub fn generator_matrix(&self) -> SymplecticMatrix {
        SymplecticMatrix::new(self.n, self.generators.clone()).expect("generator widths are checked on construction")
    }

    /// Row-echelon basis of the stabilizer group (modulo phase).
    pub fn stabilizer_space(&self) -> RowSpace {
        self.generator_matrix().row_space()
    }

    pub fn syndrome(&self, e: &PauliOperator) -> Result<Syndrome> {
        if e.n() != self.n {
            return Err(Error::Dimension {
                left: self.n,
                right: e.n(),
            });
        }
        Ok(Syndrome(BitVector::from_bools(
            self.generators.iter().map(|g| e.symplectic_form_unchecked(g)),
        )))
    }

    /// Syndrome packed into a word, bit `j` for generator `j`. Requires
    /// `n - k <= 64` and matching widths; used by the hot loops.
    #[inline]
    pub(crate) fn syndrome_word(&self, e: &PauliOperator) -> u64 {
        debug_assert!(self.r() <= 64 && e.n() == self.n);
        self.generators
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, g)| acc | ((e.symplectic_form_unchecked(g) as u64) << j))
    }

    /// Checks `syndrome(e1 e2) == syndrome(e1) xor syndrome(e2)`.
    pub fn syndrome_additivity_check(&self, e1: &PauliOperator, e2: &PauliOperator) -> Result<bool> {
        let lhs = self.syndrome(&e1.compose(e2)?)?;
        let rhs = self.syndrome(e1)?.xor(&self.syndrome(e2)?)?;
        Ok(lhs == rhs)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut non_commuting = Vec::new();
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                if self.generators[i].symplectic_form_unchecked(&self.generators[j]) {
                    non_commuting.push((i, j));
                }
            }
        }
        ValidationReport {
            non_commuting,
            rank: self.generator_matrix().rank(),
            expected_rank: self.r(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}

/// Parses the `.stab` format: an optional header line `n k [name]` followed
/// by one generator per line. Blank lines and trailing whitespace are
/// ignored. Without a header, `n` is the row width and `k = n - rows`.
pub fn parse_code(text: &str) -> Result<StabilizerCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();

    let mut header: Option<(usize, usize, usize, Option<String>)> = None;
    if let Some(&(line_no, line)) = lines.peek() {
        if line.starts_with(|c: char| c.is_ascii_digit()) {
            lines.next();
            let mut parts = line.splitn(3, char::is_whitespace);
            let mut field = |what: &str| -> Result<usize> {
                let tok = parts
                    .next()
                    .filter(|t| !t.is_empty())
                    .ok_or_else(|| Error::parse(line_no, 1, format!("header is missing {what}")))?;
                let column = tok.as_ptr() as usize - line.as_ptr() as usize + 1;
                tok.parse()
                    .map_err(|_| Error::parse(line_no, column, format!("invalid {what} {tok:?}")))
            };
            let n = field("n")?;
            let k = field("k")?;
            let name = parts.next().map(str::trim).filter(|s| !s.is_empty()).map(str::to_owned);
            header = Some((line_no, n, k, name));
        }
    }

    let mut generators = Vec::new();
    let mut width: Option<usize> = header.as_ref().map(|h| h.1);
    for (line_no, line) in lines {
        let row: PauliOperator = line.parse().map_err(|e| match e {
            Error::Parse { column, message, .. } => Error::parse(line_no, column, message),
            other => other,
        })?;
        match width {
            Some(w) if w != row.n() => {
                return Err(Error::parse(
                    line_no,
                    row.n().min(w) + 1,
                    format!("row has {} qubits, expected {w}", row.n()),
                ))
            }
            Some(_) => {}
            None => width = Some(row.n()),
        }
        generators.push(row);
    }

    match header {
        Some((line_no, n, k, name)) => {
            if k == 0 || n <= k {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("header needs n > k >= 1, got n={n} k={k}"),
                ));
            }
            if generators.len() != n - k {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("header declares {} generators, found {}", n - k, generators.len()),
                ));
            }
            StabilizerCode::new(n, k, generators, name)
        }
        None => {
            let n = width.ok_or_else(|| Error::parse(1, 1, "no generators"))?;
            if generators.len() >= n {
                return Err(Error::parse(
                    1,
                    1,
                    format!("{} generators on {n} qubits leaves k < 1", generators.len()),
                ));
            }
            let k = n - generators.len();
            StabilizerCode::new(n, k, generators, None)
        }
    }
}

/// Writes the `.stab` format with a header line.
pub fn serialize_code(code: &StabilizerCode) -> String {
    let mut out = format!("{} {}", code.n, code.k);
    if let Some(name) = &code.name {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for g in &code.generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
