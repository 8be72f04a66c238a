//! n-qubit Pauli operators in the binary symplectic representation.
//!
//! An operator is stored as two packed bit vectors: `x` has a one where the
//! tensor factor contains an X component (X or Y) and `z` where it contains a
//! Z component (Z or Y). Global phase is not tracked, so composition is the
//! bitwise XOR of both halves.
//!
//! Qubits are indexed from 0 in the API. The textual form lists qubit 0
//! first, e.g. `"XZZII"` has X on qubit 0.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVector;
use crate::error::{Error, Result};

/// Single-qubit Pauli operator, modulo phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// Decodes the `(x, z)` bit pair.
    #[inline]
    pub fn from_bits(x: bool, z: bool) -> Pauli {
        match (x, z) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (false, true) => Pauli::Z,
            (true, true) => Pauli::Y,
        }
    }

    #[inline]
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Z => (false, true),
            Pauli::Y => (true, true),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }

    pub fn from_symbol(c: char) -> Option<Pauli> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    x: BitVector,
    z: BitVector,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitVector::zeros(n),
            z: BitVector::zeros(n),
        }
    }

    /// `kind` acting on `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, kind: Pauli) -> Self {
        let mut p = PauliOperator::identity(n);
        p.set(qubit, kind);
        p
    }

    pub fn from_bits(x: BitVector, z: BitVector) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::Dimension {
                left: x.len(),
                right: z.len(),
            });
        }
        Ok(PauliOperator { x, z })
    }

    /// Builds an operator from `(qubit, kind)` pairs. Later pairs overwrite
    /// earlier ones on the same qubit.
    pub fn from_sparse<I>(n: usize, factors: I) -> Self
    where
        I: IntoIterator<Item = (usize, Pauli)>,
    {
        let mut p = PauliOperator::identity(n);
        for (q, kind) in factors {
            p.set(q, kind);
        }
        p
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x_bits(&self) -> &BitVector {
        &self.x
    }

    pub fn z_bits(&self) -> &BitVector {
        &self.z
    }

    #[inline]
    pub fn get(&self, qubit: usize) -> Pauli {
        Pauli::from_bits(self.x.get(qubit), self.z.get(qubit))
    }

    #[inline]
    pub fn set(&mut self, qubit: usize, kind: Pauli) {
        let (x, z) = kind.bits();
        self.x.set(qubit, x);
        self.z.set(qubit, z);
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        self.x.or(&self.z).count_ones()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Counts of `(X, Y, Z)` factors.
    pub fn type_counts(&self) -> (usize, usize, usize) {
        let (mut nx, mut ny, mut nz) = (0, 0, 0);
        for (wx, wz) in self.x.words().iter().zip(self.z.words()) {
            ny += (wx & wz).count_ones() as usize;
            nx += (wx & !wz).count_ones() as usize;
            nz += (!wx & wz).count_ones() as usize;
        }
        (nx, ny, nz)
    }

    fn check_width(&self, other: &PauliOperator) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::Dimension {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// Symplectic inner product `<x, z'> + <z, x'>` over GF(2).
    /// `true` means the operators anticommute.
    pub fn symplectic_form(&self, other: &PauliOperator) -> Result<bool> {
        self.check_width(other)?;
        Ok(self.symplectic_form_unchecked(other))
    }

    #[inline]
    pub(crate) fn symplectic_form_unchecked(&self, other: &PauliOperator) -> bool {
        let mut acc = 0u32;
        for i in 0..self.x.words().len() {
            acc ^= (self.x.words()[i] & other.z.words()[i]).count_ones();
            acc ^= (self.z.words()[i] & other.x.words()[i]).count_ones();
        }
        acc & 1 == 1
    }

    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        Ok(!self.symplectic_form(other)?)
    }

    /// Product modulo phase.
    pub fn compose(&self, other: &PauliOperator) -> Result<PauliOperator> {
        self.check_width(other)?;
        Ok(PauliOperator {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
        })
    }

    pub(crate) fn compose_assign_unchecked(&mut self, other: &PauliOperator) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    /// Concatenated `(x | z)` vector of length `2n`.
    pub fn to_symplectic_vector(&self) -> BitVector {
        BitVector::from_bools(self.x.iter().chain(self.z.iter()))
    }

    pub fn iter(&self) -> impl Iterator<Item = Pauli> + '_ {
        (0..self.n()).map(move |q| self.get(q))
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    /// Parses a string over `{I, X, Y, Z}`; column numbers in errors are 1-based.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::with_capacity(s.len());
        for (i, c) in s.chars().enumerate() {
            match Pauli::from_symbol(c) {
                Some(p) => factors.push(p),
                None => {
                    return Err(Error::parse(
                        1,
                        i + 1,
                        format!("unexpected character {c:?}, expected one of I, X, Y, Z"),
                    ))
                }
            }
        }
        let n = factors.len();
        Ok(PauliOperator::from_sparse(n, factors.into_iter().enumerate()))
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in self.iter() {
            write!(f, "{}", p.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliOperator({self})")
    }
}

/// Rows of Pauli operators of a common width, viewed as a matrix over GF(2)
/// with `2n` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticMatrix {
    n: usize,
    rows: Vec<PauliOperator>,
}

impl SymplecticMatrix {
    pub fn new(n: usize, rows: Vec<PauliOperator>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.n() != n) {
            return Err(Error::Dimension {
                left: n,
                right: bad.n(),
            });
        }
        Ok(SymplecticMatrix { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[PauliOperator] {
        &self.rows
    }

    pub fn push(&mut self, row: PauliOperator) -> Result<()> {
        if row.n() != self.n {
            return Err(Error::Dimension {
                left: self.n,
                right: row.n(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    pub fn in_row_space(&self, p: &PauliOperator) -> Result<bool> {
        self.row_space().contains(p)
    }

    /// Row-echelon basis of the row span, reusable for repeated membership
    /// queries.
    pub fn row_space(&self) -> RowSpace {
        RowSpace::from_rows(self.n, self.rows.iter().map(|r| r.to_symplectic_vector()))
    }
}

/// GF(2) rank of the rows, as length-`2n` vectors.
pub fn gf2_rank(m: &SymplecticMatrix) -> usize {
    m.rank()
}

/// Reduced row-echelon basis of a subspace of GF(2)^{2n}.
#[derive(Clone, Debug)]
pub struct RowSpace {
    n: usize,
    // (pivot column, row); pivots strictly increasing and each pivot column is
    // zero in every other row.
    basis: Vec<(usize, BitVector)>,
}

impl RowSpace {
    fn from_rows<I: IntoIterator<Item = BitVector>>(n: usize, rows: I) -> Self {
        let mut space = RowSpace { n, basis: Vec::new() };
        for row in rows {
            space.insert(row);
        }
        space
    }

    /// Adds a vector; returns `true` if it enlarged the space.
    fn insert(&mut self, mut v: BitVector) -> bool {
        self.reduce(&mut v);
        let Some(pivot) = v.ones().next() else {
            return false;
        };
        for (_, row) in self.basis.iter_mut() {
            if row.get(pivot) {
                row.xor_assign(&v);
            }
        }
        let at = self.basis.partition_point(|(c, _)| *c < pivot);
        self.basis.insert(at, (pivot, v));
        true
    }

    fn reduce(&self, v: &mut BitVector) {
        for (pivot, row) in &self.basis {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, p: &PauliOperator) -> Result<bool> {
        if p.n() != self.n {
            return Err(Error::Dimension {
                left: self.n,
                right: p.n(),
            });
        }
        let mut v = p.to_symplectic_vector();
        self.reduce(&mut v);
        Ok(v.is_zero())
    }
}
